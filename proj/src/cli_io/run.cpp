#include "sgon/cli.hpp"
#include "sgon/errors.hpp"
#include "sgon/sparse.hpp"
#include "sgon/verify.hpp"

#include <cstdlib>
#include <ostream>

namespace sgon {

namespace {

std::string num(const BigFloat& x, int precision) { return x.to_string(precision); }

Json index_set(const std::vector<std::size_t>& I) {
    Json a = Json::array();
    for (auto i : I)
        a.push_back(i + 1);
    return a;
}

Json int_vector(const IntVector& v) {
    Json a = Json::array();
    for (const auto& z : v)
        a.push_back(z.get_str());
    return a;
}

Json sym_vector(const SymVector& x) {
    Json a = Json::array();
    for (const auto& e : x)
        a.push_back(to_json(e));
    return a;
}

Json sym_text(const SymVector& x) {
    Json a = Json::array();
    for (const auto& e : x)
        a.push_back(e.to_string());
    return a;
}

Json quad_text(const QuadNum& x) { return {{"value", to_json(x)}, {"text", x.to_string()}}; }

const std::string& require_input(const AnalysisRequest& req) {
    if (!req.input)
        fail(ErrorKind::InvalidArgument, req.command + " needs an input file");
    return *req.input;
}

std::size_t k_option(const AnalysisRequest& req, std::size_t lo, std::size_t hi) {
    std::size_t k = req.options.k.value_or(1);
    if (k < lo || k > hi)
        fail(ErrorKind::InvalidArgument,
             "--k must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " + std::to_string(k));
    return k;
}

Json lattice_analyze(const LatticeBasis& A, int p) {
    RowDecomposition dec = row_decompose(A);
    Json rows = Json::array();
    for (std::size_t i = 0; i < A.n(); ++i) {
        Json terms = Json::array();
        for (const auto& t : dec.rows[i])
            terms.push_back({{"alpha", to_json(t.alpha)}, {"alpha_text", t.alpha.to_string()}, {"f", int_vector(t.f)}});
        rows.push_back({{"row", i + 1}, {"d", dec.d(i)}, {"terms", std::move(terms)}});
    }
    Json per_row = Json::array();
    for (std::size_t i = 0; i < A.n(); ++i)
        per_row.push_back(dec.d(i));
    NuResult v = nu(A, p);
    Json alphas = Json::array();
    for (const auto& a : v.alphas)
        alphas.push_back(a.to_string());
    MuEstimate mu = mu_estimate(A, p);
    Json mu_alpha = Json::array();
    for (const auto& a : mu.alpha)
        mu_alpha.push_back(a.to_string());
    Json symbols = Json::array();
    for (const auto& s : A.basis()->symbols())
        symbols.push_back(s.name);
    const BigFloat h = height(A, p);
    const BigFloat f_height = BigFloat::from_integer(dec.height(), p);
    return {
        {"n", A.n()},
        {"symbols", std::move(symbols)},
        {"rational_dimension", {{"per_row", std::move(per_row)}, {"total", dec.total()}}},
        {"decomposition", std::move(rows)},
        {"F", to_json(dec.F)},
        {"nu", {{"is_zero", v.is_zero}, {"alphas", std::move(alphas)}, {"value", num(v.value, p)}}},
        {"mu", {{"alpha", std::move(mu_alpha)}, {"rank", mu.rank}, {"value", num(mu.value, p)}}},
        {"height", num(h, p)},
        {"F_height", dec.height().get_str()},
        {"F_height_within_mu_bound", f_height <= mu.value * h * (BigFloat::from_long(1, p) + pow10(-10, p))},
        {"determinant", num(numeric_determinant(numeric_matrix(A, p)), p)},
    };
}

Json lattice_sparse(const LatticeBasis& A, std::size_t k, int p) {
    Json reports = Json::array();
    for (const auto& r : find_sparse(A, k, p)) {
        Json ys = Json::array(), xs = Json::array(), texts = Json::array(), norms = Json::array();
        for (std::size_t t = 0; t < r.ell; ++t) {
            ys.push_back(int_vector(r.y[t]));
            xs.push_back(sym_vector(r.x[t]));
            texts.push_back(sym_text(r.x[t]));
            norms.push_back(num(r.x_norms[t], p));
        }
        reports.push_back({{"I", index_set(r.I)},
                           {"d_I", r.d_I},
                           {"ell", r.ell},
                           {"y", std::move(ys)},
                           {"x", std::move(xs)},
                           {"x_text", std::move(texts)},
                           {"x_norms", std::move(norms)},
                           {"lhs", num(r.lhs, p)},
                           {"bound", num(r.bound, p)},
                           {"bound_satisfied", r.bound_satisfied},
                           {"verified", verify_sparse_report(A, r, p)}});
    }
    return {{"k", k}, {"reports", std::move(reports)}};
}

Json lattice_rect(const LatticeBasis& A, int p) {
    RectangularSublattice r = rectangular_sublattice(A, p);
    Json diag = Json::array(), text = Json::array();
    bool members = true;
    for (std::size_t j = 0; j < A.n(); ++j) {
        diag.push_back(to_json(r.B[j][j]));
        text.push_back(r.B[j][j].to_string());
        SymVector column;
        for (std::size_t i = 0; i < A.n(); ++i)
            column.push_back(r.B[i][j]);
        std::optional<RatVector> y = A.coordinates(column);
        members = members && y && std::all_of(y->begin(), y->end(), [](const Rational& q) { return q.get_den() == 1; });
    }
    return {{"det_F", r.det_F.get_str()},
            {"index", r.index.get_str()},
            {"adj_F", to_json(r.adj)},
            {"B_diagonal", std::move(diag)},
            {"B_diagonal_text", std::move(text)},
            {"numeric_index", num(r.numeric_index, p)},
            {"index_cross_check", r.cross_check},
            {"columns_in_lattice", members}};
}

Json lattice_slevels(const LatticeBasis& A) {
    SparsityLevels s = sparsity_levels(A);
    Json w = Json::array();
    for (const auto& x : s.witnesses)
        w.push_back({{"level", x.level}, {"y", int_vector(x.y)}, {"x_text", sym_text(x.x)}, {"zero_norm", zero_norm(x.x)}});
    return {{"s", s.s}, {"witnesses", std::move(w)}};
}

Json lattice_minima(const LatticeBasis& A, std::size_t k, const std::string& radius_text, int p) {
    BigFloat radius = BigFloat::from_string(radius_text, p);
    SparseMinima m = sparse_minima_oracle(A, k, radius, kDefaultNodeBudget, p);
    Json minima = Json::array();
    for (const auto& x : m.minima)
        minima.push_back({{"value", num(x.value, p)}, {"y", int_vector(x.y)}, {"x_text", sym_text(x.x)}});
    return {{"k", k},
            {"radius", radius_text},
            {"box", m.box.get_str()},
            {"minima", std::move(minima)},
            {"sparse_rank", m.sparse_rank},
            {"incomplete", m.incomplete}};
}

Json region_json(const RegionInfo& r) {
    return {{"segment", to_string(r.segment)}, {"left_edge", r.left_edge}, {"unit_arc", r.unit_arc},
            {"imaginary_axis", r.imaginary_axis}, {"wr", r.wr}, {"rectangular", r.rectangular},
            {"j_real", r.j_real}};
}

Json certificate_json(const VRCertificate& c) {
    Json j = {{"kind", to_string(c.kind)}};
    switch (c.kind) {
    case VRKind::RationalA:
        j["q"] = c.q.get_str();
        j["delta"] = to_json(c.delta);
        break;
    case VRKind::IrrationalA:
        j["r"] = to_json(c.r);
        j["t"] = quad_text(c.t);
        j["s"] = to_json(c.s);
        j["v"] = c.v.get_str();
        j["w"] = c.w.get_str();
        j["delta"] = to_json(c.delta);
        j["discriminant"] = to_json(c.discriminant);
        if (c.t_other) {
            j["r_other"] = to_json(*c.r_other);
            j["t_other"] = quad_text(*c.t_other);
        }
        break;
    case VRKind::NotVR:
        j["discriminant"] = to_json(c.discriminant);
        break;
    }
    return j;
}

Json geodesic_json(const GeodesicClass& g) {
    Json j = {{"shape", g.shape == GeodesicShape::Vertical ? "Vertical" : "Semicircle"},
              {"closed_at_infinity", g.closed_at_infinity}};
    if (g.shape == GeodesicShape::Vertical) {
        j["x"] = quad_text(g.x);
    } else {
        j["p"] = to_json(g.p);
        j["q"] = to_json(g.q);
        j["discriminant"] = to_json(g.discriminant);
    }
    Json ends = Json::array();
    for (const auto& e : g.endpoints)
        ends.push_back(to_json(e));
    j["endpoints"] = std::move(ends);
    return j;
}

Json cm_json(const CMReport& r) {
    Json fam = Json::array();
    for (const auto& s : r.t_family)
        fam.push_back({{"q", to_json(s.q)},
                       {"t", quad_text(s.t)},
                       {"a_minus_bt", quad_text(s.a_minus_bt)},
                       {"a_plus_b_over_t", quad_text(s.a_plus_b_over_t)},
                       {"verified", s.verified}});
    Json j = {{"is_cm", r.is_cm}, {"t_family", std::move(fam)}};
    if (r.root_product) {
        j["root_product"] = quad_text(*r.root_product);
        j["uniqueness_verified"] = *r.uniqueness_verified;
    }
    return j;
}

Json battery_json(const BatteryResult& b) {
    Json counters = Json::object();
    for (const auto& [k, v] : b.counters)
        counters[k] = v;
    return {{"name", b.name},
            {"trials", b.trials},
            {"violations", b.violations},
            {"counters", std::move(counters)},
            {"failures", b.failures},
            {"ok", b.ok()}};
}

}  // namespace

int default_precision() {
    if (const char* env = std::getenv("SGON_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 16 && v <= 10000)
            return static_cast<int>(v);
        fail(ErrorKind::InvalidArgument, "SGON_PRECISION must be an integer >= 16");
    }
    return BigFloat::kDefaultDigits;
}

Report analyze(const AnalysisRequest& req) {
    const Options& o = req.options;
    const int p = o.precision;
    if (p < 16)
        fail(ErrorKind::InvalidArgument, "--precision must be at least 16");
    if (o.terms < 1)
        fail(ErrorKind::InvalidArgument, "--terms must be at least 1");
    if (o.terms > kJTableTerms)
        fail(ErrorKind::TooFewTermsForPrecision, "--terms is capped at " + std::to_string(kJTableTerms));

    Report r;
    r.command = req.command;
    const std::string& c = req.command;
    if (c.rfind("lattice-", 0) == 0) {
        LatticeBasis A = parse_lattice_file(require_input(req), p);
        const std::size_t n = A.n();
        if (c == "lattice-analyze") {
            r.result = lattice_analyze(A, p);
            r.provenance = {{"rational_dimension", "rational dimension of each basis row"},
                            {"decomposition", "row decomposition a_i = sum alpha_ij f_ij"},
                            {"nu", "product of |alpha_i| over one-dimensional rows"},
                            {"mu", "operator norm of the coefficient map Phi_alpha"},
                            {"F_height_within_mu_bound", "|F(A)| <= mu(alpha) |A|"}};
        } else if (c == "lattice-sparse") {
            if (n < 2)
                fail(ErrorKind::InvalidArgument, "sparse vectors need n >= 2");
            r.result = lattice_sparse(A, k_option(req, 1, n - 1), p);
            r.provenance = {{"reports", "k-sparse lattice vectors from integer kernels of F(A)_I"},
                            {"bound", "n^(n - d_I/2) |A|^n mu^d_I sparse Siegel bound"}};
        } else if (c == "lattice-rect") {
            r.result = lattice_rect(A, p);
            r.provenance = {{"B_diagonal", "B = A adj(F(A)) = det(F(A)) diag(alpha)"},
                            {"index", "|det F(A)|^(n-1) = (det L / nu(L))^(n-1)"}};
        } else if (c == "lattice-slevels") {
            r.result = lattice_slevels(A);
            r.provenance = {{"s", "successive sparsity levels by support enumeration"}};
        } else if (c == "lattice-minima") {
            r.result = lattice_minima(A, k_option(req, 1, n), o.radius.value_or("10"), p);
            r.provenance = {{"minima", "k-sparse successive minima in the sup-norm, by box enumeration"}};
        } else {
            fail(ErrorKind::InvalidArgument, "unknown command " + c);
        }
        return r;
    }
    if (c.rfind("tau-", 0) == 0) {
        Tau tau = parse_tau_file(require_input(req));
        Json input = to_json(tau);
        if (c == "tau-reduce") {
            ReductionResult red = reduce_to_fundamental(tau);
            const Sl2& g = red.transform;
            r.result = {{"input", input},
                        {"reduced", to_json(red.tau)},
                        {"transform", Json::array({Json::array({g.a.get_str(), g.b.get_str()}), Json::array({g.c.get_str(), g.d.get_str()})})},
                        {"steps", red.steps},
                        {"region", region_json(region_classify(red.tau))}};
            r.provenance = {{"reduced", "SL2(Z) reduction into the standard fundamental domain"},
                            {"region", "boundary pieces where j is real; well-rounded on the unit arc"}};
        } else if (c == "tau-vr") {
            r.result = {{"input", input}, {"certificate", certificate_json(vr_decide(tau))}};
            r.provenance = {{"certificate", "virtual rectangularity: a rational, or a - bt and a + b/t rational"}};
        } else if (c == "tau-isogeny") {
            VRCertificate cert = vr_decide(tau);
            if (!cert.is_vr())
                fail(ErrorKind::CertificateInvalid, "tau is not virtually rectangular (discriminant " +
                                                        to_string(cert.discriminant) + ")");
            IsogenyDegree d = isogeny_degree(tau, cert);
            r.result = {{"input", input},
                        {"certificate", certificate_json(cert)},
                        {"delta", to_json(d.delta)},
                        {"constructive_index", to_json(d.constructive_index)},
                        {"match", d.match},
                        {"det_lattice", quad_text(d.det_lattice)},
                        {"det_sublattice", quad_text(d.det_sublattice)}};
            r.provenance = {{"delta", "isogeny degree |b| v w (t^2 + 1) / |t|"},
                            {"constructive_index", "index of the orthogonal sublattice of the rotated lattice"}};
        } else if (c == "tau-geodesic") {
            r.result = {{"input", input}, {"geodesic", geodesic_json(geodesic_classify(tau))}};
            r.provenance = {{"geodesic", "geodesic through tau closed at infinity on the modular curve"}};
        } else if (c == "tau-cm") {
            r.result = {{"input", input}, {"cm", cm_json(cm_analyze(tau))}};
            r.provenance = {{"cm", "CM criterion a, b^2 rational and the t = q b family"}};
        } else if (c == "tau-jinv") {
            JInvariant j = j_invariant(tau, o.terms, p);
            r.result = {{"input", input},
                        {"reduced", to_json(j.reduced)},
                        {"re", num(j.re, p)},
                        {"im", num(j.im, p)},
                        {"error_bound", num(j.error_bound, 6)},
                        {"terms", j.terms},
                        {"precision", p}};
            r.provenance = {{"j", "q-expansion 1/Q + 744 + sum c_k Q^k"}};
        } else {
            fail(ErrorKind::InvalidArgument, "unknown command " + c);
        }
        return r;
    }
    if (c == "verify-suite") {
        if (req.input)
            (void)read_json_file(*req.input);
        Json batteries = Json::array();
        for (const auto& b : verify_suite(o.seed)) {
            r.violations = r.violations || !b.ok();
            batteries.push_back(battery_json(b));
        }
        r.result = {{"seed", o.seed}, {"batteries", std::move(batteries)}, {"ok", !r.violations}};
        r.provenance = {{"vr_vs_geodesic", "virtual rectangularity agrees with closed geodesics"},
                        {"siegel", "Siegel bound on reduced integer kernels"},
                        {"virtual_rectangularity", "d(L) = n, nu(L) != 0 and all s_i = 1 are equivalent"},
                        {"cm", "t families of CM points and uniqueness up to t' = -1/t"}};
        return r;
    }
    fail(ErrorKind::InvalidArgument, "unknown command " + c);
}

int run(const AnalysisRequest& request, std::ostream& out, std::ostream& err) {
    try {
        Report r = analyze(request);
        out << (request.options.format == Format::Json ? render_json(r) : render_text(r));
        if (r.violations) {
            err << "verify-suite: violations found\n";
            return 3;
        }
        return 0;
    } catch (const Error& e) {
        err << "sgon: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const Json::exception& e) {
        err << "sgon: SchemaError: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "sgon: InternalInvariantViolation: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace sgon
