#include "rees/exports.hpp"

#include "rees/text.hpp"

#include "json.hpp"

#include <map>
#include <sstream>

namespace rees {

const char* const tool_version = "1.0.0";

using ordered_json = nlohmann::ordered_json;

namespace {

// Macaulay2 subscripted names: T-variables become T_(j,k) with k the 1-based
// position of the generator in block j's ascending generator list.
std::map<TVariable, std::string> m2_names(const Instance& inst, const TermOrder& ord) {
    std::map<TVariable, std::string> names;
    for (int l = 1; l <= inst.r(); ++l) {
        int k = 1;
        for (const XMonomial& m : generators(inst.block(l), inst.n, ord)) {
            names[TVariable(l, m)] =
                "T_(" + std::to_string(l) + "," + std::to_string(k) + ")";
            ++k;
        }
    }
    return names;
}

std::string m2_monomial(const SMonomial& u,
                        const std::map<TVariable, std::string>& names) {
    std::vector<std::string> factors;
    for (int i = 0; i < u.xpart.n(); ++i) {
        int e = u.xpart.exponents[i];
        if (e == 0) continue;
        std::string f = "x_" + std::to_string(i + 1);
        if (e > 1) f += "^" + std::to_string(e);
        factors.push_back(f);
    }
    for (const TVariable& t : u.tpart) factors.push_back(names.at(t));
    if (factors.empty()) return "1";
    std::string out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out += "*" + factors[i];
    return out;
}

} // namespace

std::string export_m2(const std::vector<Binomial>& G, const Instance& inst,
                      const TermOrder& ord) {
    const auto names = m2_names(inst, ord);
    // An x-free basis presents the multi-fiber ring: its ambient ring drops the
    // x-variables and the kernel comparison targets the fiber map instead.
    bool t_only = !G.empty();
    for (const Binomial& b : G)
        t_only = t_only && b.plus.xpart.is_unit() && b.minus.xpart.is_unit();
    std::ostringstream os;
    os << "-- Auto-generated cross-check script.\n";
    os << "-- The ambient ring lists T-variables before x-variables (after "
          "x-variables\n-- under the x-first order variant); its monomial order "
          "is Macaulay2's default,\n-- so use ideal-level checks, which are "
          "order-independent.\n";
    for (const auto& [t, name] : names)
        os << "-- " << name << " stands for " << to_string(t) << "\n";

    std::vector<std::string> tnames, xnames;
    for (const TVariable& t : t_variables(inst, ord)) tnames.push_back(names.at(t));
    for (int i = 1; i <= inst.n; ++i) xnames.push_back("x_" + std::to_string(i));
    std::vector<std::string> ring_vars;
    if (t_only) {
        ring_vars = tnames;
    } else if (ord.variant == OrderVariant::t_above_x) {
        ring_vars = tnames;
        ring_vars.insert(ring_vars.end(), xnames.begin(), xnames.end());
    } else {
        ring_vars = xnames;
        ring_vars.insert(ring_vars.end(), tnames.begin(), tnames.end());
    }
    os << "S = QQ[";
    for (std::size_t i = 0; i < ring_vars.size(); ++i)
        os << (i ? ", " : "") << ring_vars[i];
    os << "];\n";
    os << "R = QQ[";
    for (int i = 1; i <= inst.n; ++i) os << "x_" << i << ", ";
    for (int j = 1; j <= inst.r(); ++j) os << (j > 1 ? ", " : "") << "t_" << j;
    os << "];\n";

    // The presentation map sends T_(j,k) to m*t_j and fixes the x-variables.
    os << "presentation = map(R, S, {";
    bool first = true;
    auto emit_image = [&](const std::string& img) {
        os << (first ? "" : ", ") << img;
        first = false;
    };
    auto x_image = [&](int i) { return "x_" + std::to_string(i); };
    auto t_image = [&](const TVariable& t) {
        std::string img;
        for (int i = 0; i < t.gen.n(); ++i) {
            int e = t.gen.exponents[i];
            if (e == 0) continue;
            if (!img.empty()) img += "*";
            img += "x_" + std::to_string(i + 1);
            if (e > 1) img += "^" + std::to_string(e);
        }
        std::string tj = "t_" + std::to_string(t.block);
        return img.empty() ? tj : img + "*" + tj;
    };
    if (t_only) {
        for (const TVariable& t : t_variables(inst, ord)) emit_image(t_image(t));
    } else if (ord.variant == OrderVariant::t_above_x) {
        for (const TVariable& t : t_variables(inst, ord)) emit_image(t_image(t));
        for (int i = 1; i <= inst.n; ++i) emit_image(x_image(i));
    } else {
        for (int i = 1; i <= inst.n; ++i) emit_image(x_image(i));
        for (const TVariable& t : t_variables(inst, ord)) emit_image(t_image(t));
    }
    os << "});\n";

    os << "G = ideal(";
    if (G.empty()) {
        os << "0_S";
    } else {
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (i) os << ",\n          ";
            os << m2_monomial(G[i].plus, names) << " - "
               << m2_monomial(G[i].minus, names);
        }
    }
    os << ");\n";
    os << "print transpose gens gb G;\n";
    os << "print(G == ker presentation);\n";
    return os.str();
}

std::string basis_to_json(const std::vector<Binomial>& G, const Instance& inst,
                          const TermOrder& ord) {
    ordered_json j;
    j["schema"] = "basis/1";
    j["instance"] = ordered_json::parse(instance_to_json(inst));
    j["order"] = to_string(ord);
    j["count"] = G.size();
    j["basis"] = ordered_json::array();
    for (const Binomial& b : G)
        j["basis"].push_back({{"lead", to_string(b.plus, ord)},
                              {"trail", to_string(b.minus, ord)},
                              {"degree", b.degree()}});
    return j.dump(2);
}

std::string matrix_to_json(const QuasiMatrix& C, const Instance& inst) {
    ordered_json j;
    j["schema"] = "quasi-matrix/1";
    j["instance"] = ordered_json::parse(instance_to_json(inst));
    j["rows"] = C.n;
    j["columns"] = ordered_json::array();
    for (const QuasiColumn& col : C.columns)
        j["columns"].push_back({{"block", col.block}, {"label", col.label}});
    j["cells"] = ordered_json::array();
    for (int row = 0; row < C.n; ++row)
        for (int col = 0; col < C.cols(); ++col) {
            const auto& cell = C.at(row, col);
            if (!cell) continue;
            std::string entry = entry_is_x(*cell)
                                    ? "x" + std::to_string(std::get<int>(*cell))
                                    : to_string(std::get<TVariable>(*cell));
            j["cells"].push_back(
                {{"row", row + 1}, {"column", col + 1}, {"entry", entry}});
        }
    return j.dump(2);
}

std::string report_envelope(const Instance& inst, const std::string& results_json) {
    ordered_json j;
    j["schema"] = "report/1";
    j["tool_version"] = tool_version;
    j["instance_hash"] = instance_hash(inst);
    j["results"] = ordered_json::parse(results_json);
    return j.dump(2);
}

} // namespace rees
