#include "rees/order.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rees {

TermOrder TermOrder::standard(int n) {
    TermOrder ord;
    ord.xorder.resize(n);
    std::iota(ord.xorder.begin(), ord.xorder.end(), 1);
    return ord;
}

TermOrder TermOrder::with_xorder(std::vector<int> xorder, OrderVariant variant) {
    std::vector<int> sorted = xorder;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        if (sorted[i] != i + 1)
            throw std::invalid_argument("xorder must be a permutation of 1..n");
    TermOrder ord;
    ord.xorder = std::move(xorder);
    ord.variant = variant;
    return ord;
}

int grevlex_compare(const XMonomial& a, const XMonomial& b, const TermOrder& ord) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    // Scan positions from least precedence upward; at the first difference the
    // smaller exponent belongs to the larger monomial.
    for (auto it = ord.xorder.rbegin(); it != ord.xorder.rend(); ++it) {
        int i = *it - 1;
        if (a.exponents[i] != b.exponents[i])
            return a.exponents[i] < b.exponents[i] ? 1 : -1;
    }
    return 0;
}

int lex_compare_x(const XMonomial& a, const XMonomial& b, const TermOrder& ord) {
    for (int idx : ord.xorder) {
        int i = idx - 1;
        if (a.exponents[i] != b.exponents[i])
            return a.exponents[i] > b.exponents[i] ? 1 : -1;
    }
    return 0;
}

int compare_T(const TVariable& a, const TVariable& b, const TermOrder& ord) {
    if (a.block != b.block) return a.block > b.block ? 1 : -1;
    return grevlex_compare(a.gen, b.gen, ord);
}

std::vector<TVariable> tpart_descending(const SMonomial& u, const TermOrder& ord) {
    std::vector<TVariable> t = u.tpart;
    std::stable_sort(t.begin(), t.end(), [&](const TVariable& a, const TVariable& b) {
        return compare_T(a, b, ord) > 0;
    });
    return t;
}

namespace {

// Lexicographic comparison of the T-exponent sequences alone: walk the distinct
// T-variables of u and v descending under compare_T and compare multiplicities.
int compare_tparts(const SMonomial& u, const SMonomial& v, const TermOrder& ord) {
    // The structural TVariable order groups equal variables, so multiplicities
    // can be read off the sorted tparts directly.
    std::vector<std::pair<TVariable, std::pair<int, int>>> counts;
    auto tally = [&](const std::vector<TVariable>& tp, bool first) {
        for (const TVariable& t : tp) {
            auto it = std::find_if(counts.begin(), counts.end(),
                                   [&](const auto& e) { return e.first == t; });
            if (it == counts.end()) it = counts.insert(counts.end(), {t, {0, 0}});
            (first ? it->second.first : it->second.second) += 1;
        }
    };
    tally(u.tpart, true);
    tally(v.tpart, false);
    std::sort(counts.begin(), counts.end(), [&](const auto& a, const auto& b) {
        return compare_T(a.first, b.first, ord) > 0;
    });
    for (const auto& [t, c] : counts) {
        (void)t;
        if (c.first != c.second) return c.first > c.second ? 1 : -1;
    }
    return 0;
}

} // namespace

int compare_S(const SMonomial& u, const SMonomial& v, const TermOrder& ord) {
    int t_cmp = 0, x_cmp = 0;
    if (ord.variant == OrderVariant::t_above_x) {
        t_cmp = compare_tparts(u, v, ord);
        if (t_cmp != 0) return t_cmp;
        return lex_compare_x(u.xpart, v.xpart, ord);
    }
    x_cmp = lex_compare_x(u.xpart, v.xpart, ord);
    if (x_cmp != 0) return x_cmp;
    return compare_tparts(u, v, ord);
}

std::string to_string(const TermOrder& ord) {
    std::ostringstream os;
    os << (ord.variant == OrderVariant::t_above_x ? "convention" : "x-above-T");
    os << " xorder=[";
    for (std::size_t i = 0; i < ord.xorder.size(); ++i)
        os << (i ? "," : "") << ord.xorder[i];
    os << "]";
    return os.str();
}

} // namespace rees
