// Problem instances: a list of coordinate-subspace ideals J_i (generated by
// subsets of the variables) with powers a_i, describing the family
// I_i = J_i^{a_i} whose multi-Rees algebra and multi-fiber ring are studied.
#pragma once

#include "rees/monomial.hpp"
#include "rees/order.hpp"
#include "rees/text.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rees {

struct IdealSpec {
    std::vector<int> support; // 1-based x-indices generating J, sorted ascending
    int power = 1;            // the exponent a with I = J^a

    bool operator==(const IdealSpec&) const = default;
    auto operator<=>(const IdealSpec&) const = default;
};

struct Instance {
    int n = 0;                     // ambient number of x-variables
    std::vector<IdealSpec> ideals; // blocks 1..r in order

    int r() const { return static_cast<int>(ideals.size()); }
    const IdealSpec& block(int l) const { return ideals[l - 1]; } // 1-based

    bool operator==(const Instance&) const = default;
};

// Options that may ride along in an instance/config file and be overridden by
// CLI flags.
struct InstanceOptions {
    std::optional<int> degcap;
    std::optional<std::vector<int>> xorder;
    std::optional<OrderVariant> variant;
};

// Throws InputError when a field is out of range (support empty or out of
// 1..n, duplicate support indices, power < 1, no ideals).
void validate(const Instance& inst);

// Parse `{"n": 3, "ideals": [{"vars": [1,2], "power": 2}, ...]}` (1-based
// indices) plus an optional "options" object with degcap / xorder /
// "order-variant" ("convention" or "x-above-T").  Throws InputError with
// parser positions on malformed JSON.
std::pair<Instance, InstanceOptions> parse_instance_json(const std::string& text);
std::string instance_to_json(const Instance& inst);

// All minimal generators of I = J^power: the degree-`power` monomials in the
// support variables, sorted ascending by grevlex.
std::vector<XMonomial> generators(const IdealSpec& spec, int n, const TermOrder& ord);

// Every T-variable of the instance (block by block), sorted descending under
// compare_T.
std::vector<TVariable> t_variables(const Instance& inst, const TermOrder& ord);

// True when tv.block is in range and tv.gen is a minimal generator of that
// block's ideal power.
bool is_instance_tvariable(const TVariable& tv, const Instance& inst);

// FNV hash of the canonical instance JSON; stamped into CLI reports.
std::string instance_hash(const Instance& inst);

} // namespace rees
