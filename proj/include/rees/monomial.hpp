// Monomial types for the two polynomial rings in play:
//   S      = k[x_1..x_n, T-variables]   (presentation ring of the multi-Rees algebra)
//   k[x,t] = target of the presentation map phi, phi(T_{m t_j}) = m * t_j.
//
// An XMonomial is a plain exponent vector over x_1..x_n.  A TVariable is the
// indeterminate T_{m t_j} attached to generator m of the j-th ideal power.  An
// SMonomial is a monomial of S (x-part times a multiset of T-variables), and an
// ImageMonomial is a monomial of k[x,t] (x-part times t-degrees per block).
#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace rees {

struct XMonomial {
    // exponents[i] is the exponent of x_{i+1}; the vector length is the ambient n.
    std::vector<int> exponents;

    XMonomial() = default;
    explicit XMonomial(std::vector<int> e) : exponents(std::move(e)) {}
    static XMonomial unit(int n) { return XMonomial(std::vector<int>(n, 0)); }
    // x_i as a monomial (1-based i).
    static XMonomial variable(int i, int n);

    int n() const { return static_cast<int>(exponents.size()); }
    int degree() const;
    bool is_unit() const { return degree() == 0; }
    // 1-based indices of variables with positive exponent, ascending.
    std::vector<int> support() const;

    XMonomial operator*(const XMonomial& o) const;
    bool divides(const XMonomial& o) const;        // this | o
    XMonomial divide_into(const XMonomial& o) const; // o / this; requires divides(o)

    bool operator==(const XMonomial&) const = default;
    // Structural order (plain lexicographic on the exponent vector); used for
    // canonical storage and map keys, not as the monomial order.
    auto operator<=>(const XMonomial&) const = default;
};

struct TVariable {
    int block = 0;   // 1-based ideal index j in T_{m t_j}
    XMonomial gen;   // the generator monomial m

    TVariable() = default;
    TVariable(int b, XMonomial g) : block(b), gen(std::move(g)) {}

    bool operator==(const TVariable&) const = default;
    auto operator<=>(const TVariable&) const = default; // structural, for canonical storage
};

struct SMonomial {
    XMonomial xpart;
    // Multiset of T-variables, kept sorted by the structural TVariable order so
    // equal monomials compare equal as vectors.
    std::vector<TVariable> tpart;

    SMonomial() = default;
    SMonomial(XMonomial x, std::vector<TVariable> t);
    static SMonomial unit(int n) { return SMonomial(XMonomial::unit(n), {}); }

    // Total degree in S, counting every T-variable with degree 1.
    int degree() const { return xpart.degree() + static_cast<int>(tpart.size()); }
    bool is_unit() const { return xpart.is_unit() && tpart.empty(); }

    SMonomial operator*(const SMonomial& o) const;
    bool divides(const SMonomial& o) const;          // this | o
    SMonomial divide_into(const SMonomial& o) const; // o / this; requires divides(o)
    // True when the two monomials share no variable (x or T).
    bool coprime_with(const SMonomial& o) const;

    bool operator==(const SMonomial&) const = default;
    auto operator<=>(const SMonomial&) const = default; // structural, for maps/dedup
};

struct ImageMonomial {
    XMonomial xpart;
    std::vector<int> tdeg; // tdeg[j-1] = degree in t_j; length r

    bool operator==(const ImageMonomial&) const = default;
    auto operator<=>(const ImageMonomial&) const = default;
};

// The presentation map phi on monomials: x-part times the product of all
// T-generators, with t-degrees counted per block.  r is the number of blocks.
ImageMonomial phi_eval(const SMonomial& u, int r);

// FNV-style hash helpers so fibers (groups of S-monomials with equal image) can
// be collected in hash maps.
std::size_t hash_value(const XMonomial& m);
std::size_t hash_value(const SMonomial& m);
std::size_t hash_value(const ImageMonomial& m);

struct SMonomialHash {
    std::size_t operator()(const SMonomial& m) const { return hash_value(m); }
};
struct ImageMonomialHash {
    std::size_t operator()(const ImageMonomial& m) const { return hash_value(m); }
};

} // namespace rees
