#include "rees/instance.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rees {

using nlohmann::ordered_json;

void validate(const Instance& inst) {
    if (inst.n < 1) throw InputError("n must be at least 1");
    if (inst.ideals.empty()) throw InputError("at least one ideal is required");
    for (std::size_t l = 0; l < inst.ideals.size(); ++l) {
        const IdealSpec& spec = inst.ideals[l];
        std::string where = "ideals[" + std::to_string(l) + "]";
        if (spec.support.empty()) throw InputError(where + ": empty support");
        if (spec.power < 1) throw InputError(where + ": power must be at least 1");
        std::set<int> seen;
        for (int v : spec.support) {
            if (v < 1 || v > inst.n)
                throw InputError(where + ": variable index " + std::to_string(v) +
                                 " out of range 1.." + std::to_string(inst.n));
            if (!seen.insert(v).second)
                throw InputError(where + ": duplicate variable index " + std::to_string(v));
        }
    }
}

std::pair<Instance, InstanceOptions> parse_instance_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    try {
        Instance inst;
        inst.n = j.at("n").get<int>();
        for (const auto& ij : j.at("ideals")) {
            IdealSpec spec;
            spec.support = ij.at("vars").get<std::vector<int>>();
            spec.power = ij.value("power", 1);
            std::sort(spec.support.begin(), spec.support.end());
            inst.ideals.push_back(std::move(spec));
        }
        validate(inst);

        InstanceOptions opts;
        if (j.contains("options")) {
            const auto& oj = j.at("options");
            if (oj.contains("degcap")) opts.degcap = oj.at("degcap").get<int>();
            if (oj.contains("xorder"))
                opts.xorder = oj.at("xorder").get<std::vector<int>>();
            if (oj.contains("order-variant")) {
                std::string v = oj.at("order-variant").get<std::string>();
                if (v == "convention")
                    opts.variant = OrderVariant::t_above_x;
                else if (v == "x-above-T")
                    opts.variant = OrderVariant::x_above_t;
                else
                    throw InputError("unknown order-variant: " + v);
            }
        }
        return {inst, opts};
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("instance schema error: ") + e.what());
    }
}

std::string instance_to_json(const Instance& inst) {
    ordered_json j;
    j["n"] = inst.n;
    j["ideals"] = ordered_json::array();
    for (const IdealSpec& spec : inst.ideals)
        j["ideals"].push_back({{"vars", spec.support}, {"power", spec.power}});
    return j.dump();
}

namespace {
void monomials_of_degree(const std::vector<int>& support, std::size_t pos, int remaining,
                         XMonomial& acc, std::vector<XMonomial>& out) {
    if (pos + 1 == support.size()) {
        XMonomial m = acc;
        m.exponents[support[pos] - 1] += remaining;
        out.push_back(std::move(m));
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        XMonomial m = acc;
        m.exponents[support[pos] - 1] += e;
        monomials_of_degree(support, pos + 1, remaining - e, m, out);
    }
}
} // namespace

std::vector<XMonomial> generators(const IdealSpec& spec, int n, const TermOrder& ord) {
    std::vector<XMonomial> out;
    XMonomial acc = XMonomial::unit(n);
    monomials_of_degree(spec.support, 0, spec.power, acc, out);
    std::sort(out.begin(), out.end(), [&](const XMonomial& a, const XMonomial& b) {
        return grevlex_compare(a, b, ord) < 0;
    });
    return out;
}

std::vector<TVariable> t_variables(const Instance& inst, const TermOrder& ord) {
    std::vector<TVariable> out;
    for (int l = 1; l <= inst.r(); ++l)
        for (const XMonomial& g : generators(inst.block(l), inst.n, ord))
            out.push_back(TVariable(l, g));
    std::sort(out.begin(), out.end(), [&](const TVariable& a, const TVariable& b) {
        return compare_T(a, b, ord) > 0;
    });
    return out;
}

bool is_instance_tvariable(const TVariable& tv, const Instance& inst) {
    if (tv.block < 1 || tv.block > inst.r()) return false;
    const IdealSpec& spec = inst.block(tv.block);
    if (tv.gen.n() != inst.n || tv.gen.degree() != spec.power) return false;
    for (int i = 0; i < inst.n; ++i) {
        if (tv.gen.exponents[i] > 0 &&
            !std::binary_search(spec.support.begin(), spec.support.end(), i + 1))
            return false;
    }
    return true;
}

std::string instance_hash(const Instance& inst) {
    const std::string s = instance_to_json(inst);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace rees
