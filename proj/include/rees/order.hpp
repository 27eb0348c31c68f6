// The monomial orders.
//
// T-variables are compared by block first (higher block wins), then by graded
// reverse lexicographic order on their generator monomials.  S-monomials are
// compared lexicographically over the infinite variable sequence
//
//     all T-variables descending, then x-variables descending   (default), or
//     all x-variables descending, then T-variables descending   (x_above_t)
//
// where x-precedence is a configurable permutation (default x1 > x2 > ... > xn).
// The x_above_t variant is the alternative order discussed alongside the
// reduced-basis counterexample; everything else is unchanged.
#pragma once

#include "rees/monomial.hpp"

#include <string>
#include <vector>

namespace rees {

enum class OrderVariant {
    t_above_x, // default: every T-variable beats every x-variable
    x_above_t, // variant: every x-variable beats every T-variable
};

struct TermOrder {
    // xorder[k] is the 1-based x-index with precedence rank k (rank 0 highest).
    std::vector<int> xorder;
    OrderVariant variant = OrderVariant::t_above_x;

    static TermOrder standard(int n);
    // Throws std::invalid_argument unless xorder is a permutation of 1..n.
    static TermOrder with_xorder(std::vector<int> xorder,
                                 OrderVariant variant = OrderVariant::t_above_x);

    int n() const { return static_cast<int>(xorder.size()); }
};

// All comparators return +1 when the first argument is larger, -1 when smaller,
// 0 on equality.

// Graded reverse lexicographic order on x-monomials with respect to ord.xorder:
// higher total degree wins; on equal degrees the monomial with the smaller
// exponent at the least-precedence position where they differ wins.
int grevlex_compare(const XMonomial& a, const XMonomial& b, const TermOrder& ord);

// Plain lexicographic order on x-monomials with respect to ord.xorder.
int lex_compare_x(const XMonomial& a, const XMonomial& b, const TermOrder& ord);

// T_{m t_i} beats T_{m' t_j} when i > j, or i == j and m >_grevlex m'.
int compare_T(const TVariable& a, const TVariable& b, const TermOrder& ord);

// The lexicographic order on S described above.
int compare_S(const SMonomial& u, const SMonomial& v, const TermOrder& ord);

// The multiset of T-variables of u sorted descending under compare_T; used by
// compare_S and by the canonical text rendering.
std::vector<TVariable> tpart_descending(const SMonomial& u, const TermOrder& ord);

std::string to_string(const TermOrder& ord);

} // namespace rees
