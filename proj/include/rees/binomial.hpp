// Binomials (the elements of toric ideals), integer-coefficient polynomials as
// formal term combinations, the division algorithm, and S-polynomials.
#pragma once

#include "rees/monomial.hpp"
#include "rees/order.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace rees {

using Coeff = boost::multiprecision::cpp_int;

// A difference of two distinct monomials, stored leading-term-first under the
// order it was canonicalized with.  All toric kernel generators have
// coefficients +1/-1, so the pair encodes plus - minus.
struct Binomial {
    SMonomial plus;  // leading term
    SMonomial minus; // trailing term

    bool operator==(const Binomial&) const = default;
    auto operator<=>(const Binomial&) const = default; // structural, for dedup
    int degree() const { return std::max(plus.degree(), minus.degree()); }
};

// Orders a - b into a canonical Binomial (leading term first); empty when the
// difference is zero.
std::optional<Binomial> make_binomial(const SMonomial& a, const SMonomial& b,
                                      const TermOrder& ord);

// True when no variable of the monomial's leading or trailing term is squared;
// the structural theorems here only ever assert it of leading terms.
bool squarefree(const SMonomial& u);

// A formal integer combination of S-monomials, kept sorted descending under a
// TermOrder with nonzero coefficients; the polynomial workhorse behind
// reduction.  Intermediate coefficients can exceed +-1, hence big integers.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial from_binomial(const Binomial& b, const TermOrder& ord);
    static Polynomial from_monomial(const SMonomial& m, Coeff c, const TermOrder& ord);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::pair<SMonomial, Coeff>& term(std::size_t i) const { return terms_[i]; }
    const SMonomial& leading_monomial() const { return terms_.front().first; }
    const Coeff& leading_coeff() const { return terms_.front().second; }

    // this += c * m * b, maintaining sorted order.
    void add_scaled(const SMonomial& m, const Coeff& c, const Binomial& b,
                    const TermOrder& ord);
    void add_term(const SMonomial& m, const Coeff& c, const TermOrder& ord);

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<std::pair<SMonomial, Coeff>> terms_;
};

// Division algorithm: the normal form of f modulo G.  Deterministic: the
// highest reducible term is rewritten first, by the first g in G whose leading
// term divides it.  Every g must be canonical under ord.  The quotient
// accumulation (which g was applied with which cofactor) is returned so callers
// can verify f - r = sum cofactor_i * g_i exactly.
struct ReductionStep {
    std::size_t divisor_index;
    SMonomial cofactor;
    Coeff coeff;
};
struct ReductionResult {
    Polynomial normal_form;
    std::vector<ReductionStep> steps;
};
ReductionResult reduce(const Polynomial& f, const std::vector<Binomial>& G,
                       const TermOrder& ord);

// Convenience: normal form of a binomial.
Polynomial reduce_binomial(const Binomial& f, const std::vector<Binomial>& G,
                           const TermOrder& ord);

// The S-polynomial lcm/lt(g) * g - lcm/lt(h) * h, plus the product-criterion
// flag (leading terms coprime => the pair reduces to zero automatically).
struct SPolynomial {
    Polynomial poly;
    bool coprime_leads;
};
SPolynomial s_polynomial(const Binomial& g, const Binomial& h, const TermOrder& ord);

SMonomial lcm(const SMonomial& a, const SMonomial& b);

// Sort + dedup under (degree asc, leading term descending, trail descending);
// the canonical output order for basis listings.
void sort_basis(std::vector<Binomial>& G, const TermOrder& ord);

} // namespace rees
