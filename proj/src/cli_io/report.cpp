#include "sgon/cli.hpp"

#include <algorithm>
#include <sstream>

namespace sgon {

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat_array(const Json& j) {
    if (!j.is_array())
        return false;
    for (const auto& e : j)
        if (!is_scalar(e) && !(e.is_array() && std::all_of(e.begin(), e.end(), is_scalar)))
            return false;
    return true;
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string inline_array(const Json& j) {
    std::string s = "[";
    bool first = true;
    for (const auto& e : j) {
        s += first ? "" : ", ";
        s += e.is_array() ? inline_array(e) : scalar(e);
        first = false;
    }
    return s + "]";
}

void render(std::ostringstream& out, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_scalar(value))
                out << pad << key << ": " << scalar(value) << '\n';
            else if (is_flat_array(value))
                out << pad << key << ": " << inline_array(value) << '\n';
            else {
                out << pad << key << ":\n";
                render(out, value, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (is_scalar(e) || is_flat_array(e)) {
                out << pad << "- " << (e.is_array() ? inline_array(e) : scalar(e)) << '\n';
            } else {
                out << pad << "-\n";
                render(out, e, indent + 2);
            }
        }
    } else {
        out << pad << scalar(j) << '\n';
    }
}

}  // namespace

Json Report::to_json() const { return {{"command", command}, {"result", result}, {"provenance", provenance}}; }

std::string render_json(const Report& report) { return report.to_json().dump(2) + "\n"; }

std::string render_text(const Report& report) {
    std::ostringstream out;
    render(out, report.to_json(), 0);
    return out.str();
}

}  // namespace sgon
