#include "sgon/errors.hpp"
#include "sgon/sparse.hpp"

namespace sgon {

namespace {

void supports(std::size_t n, std::size_t s, std::size_t start, std::vector<std::size_t>& cur,
              std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == s) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (s - cur.size()) <= n; ++i) {
        cur.push_back(i);
        supports(n, s, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

SparsityLevels sparsity_levels(const LatticeBasis& A, std::size_t cap) {
    const std::size_t n = A.n();
    if (n > cap)
        fail(ErrorKind::DimensionCapExceeded, "n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    RowDecomposition dec = row_decompose(A);
    SparsityLevels out;
    RatMatrix span;
    for (std::size_t s = 1; s <= n && out.witnesses.size() < n; ++s) {
        std::vector<std::vector<std::size_t>> all;
        std::vector<std::size_t> cur;
        supports(n, s, 0, cur, all);
        for (const auto& S : all) {
            if (out.witnesses.size() == n)
                break;
            // vectors supported in S are the kernel of F restricted to the other rows
            std::vector<std::size_t> T;
            for (std::size_t i = 0, p = 0; i < n; ++i) {
                if (p < S.size() && S[p] == i)
                    ++p;
                else
                    T.push_back(i);
            }
            KernelBasis K;
            if (T.empty()) {
                K.cols = n;
                for (std::size_t j = 0; j < n; ++j) {
                    IntVector e(n);
                    e[j] = 1;
                    K.vectors.push_back(std::move(e));
                }
            } else {
                K = integer_kernel(dec.F_rows(T));
            }
            if (K.vectors.empty())
                continue;
            for (auto& y : reduce_kernel_basis(K).basis.vectors) {
                RatMatrix trial = span;
                trial.emplace_back(y.begin(), y.end());
                if (rank_q(trial) != trial.size())
                    continue;
                span = std::move(trial);
                SymVector x = A.apply(y);
                out.witnesses.push_back({s, y, std::move(x)});
                out.s.push_back(s);
                if (out.witnesses.size() == n)
                    break;
            }
        }
    }
    if (out.s.size() != n)
        fail(ErrorKind::Internal, "sparse vectors do not span the lattice");
    return out;
}

}  // namespace sgon
