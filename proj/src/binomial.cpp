#include "rees/binomial.hpp"

#include <algorithm>
#include <cassert>

namespace rees {

std::optional<Binomial> make_binomial(const SMonomial& a, const SMonomial& b,
                                      const TermOrder& ord) {
    int c = compare_S(a, b, ord);
    if (c == 0) return std::nullopt;
    Binomial out;
    out.plus = c > 0 ? a : b;
    out.minus = c > 0 ? b : a;
    return out;
}

bool squarefree(const SMonomial& u) {
    for (int e : u.xpart.exponents)
        if (e >= 2) return false;
    for (std::size_t i = 1; i < u.tpart.size(); ++i)
        if (u.tpart[i] == u.tpart[i - 1]) return false;
    return true;
}

Polynomial Polynomial::from_binomial(const Binomial& b, const TermOrder& ord) {
    Polynomial p;
    p.add_term(b.plus, 1, ord);
    p.add_term(b.minus, -1, ord);
    return p;
}

Polynomial Polynomial::from_monomial(const SMonomial& m, Coeff c, const TermOrder& ord) {
    Polynomial p;
    p.add_term(m, c, ord);
    return p;
}

void Polynomial::add_term(const SMonomial& m, const Coeff& c, const TermOrder& ord) {
    if (c == 0) return;
    // Binary search for the insertion point in the strictly descending list.
    auto lo = terms_.begin();
    auto hi = terms_.end();
    while (lo != hi) {
        auto mid = lo + (hi - lo) / 2;
        int cmp = compare_S(mid->first, m, ord);
        if (cmp == 0) {
            mid->second += c;
            if (mid->second == 0) terms_.erase(mid);
            return;
        }
        if (cmp > 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    terms_.insert(lo, {m, c});
}

void Polynomial::add_scaled(const SMonomial& m, const Coeff& c, const Binomial& b,
                            const TermOrder& ord) {
    add_term(m * b.plus, c, ord);
    add_term(m * b.minus, -c, ord);
}

ReductionResult reduce(const Polynomial& f, const std::vector<Binomial>& G,
                       const TermOrder& ord) {
    ReductionResult res;
    Polynomial work = f;
    // `frozen` counts leading terms already known irreducible; they are final
    // because every rewrite replaces a term with strictly smaller ones.
    std::size_t frozen = 0;
    while (frozen < work.size()) {
        const SMonomial& target = work.term(frozen).first;
        const Coeff coeff = work.term(frozen).second;
        bool rewritten = false;
        for (std::size_t gi = 0; gi < G.size(); ++gi) {
            if (!G[gi].plus.divides(target)) continue;
            SMonomial cof = G[gi].plus.divide_into(target);
            // target = cof * g.plus, so subtracting coeff * cof * g replaces the
            // term with coeff * cof * g.minus.
            work.add_scaled(cof, -coeff, G[gi], ord);
            res.steps.push_back({gi, cof, coeff});
            rewritten = true;
            break;
        }
        if (!rewritten) ++frozen;
    }
    res.normal_form = std::move(work);
    return res;
}

Polynomial reduce_binomial(const Binomial& f, const std::vector<Binomial>& G,
                           const TermOrder& ord) {
    return reduce(Polynomial::from_binomial(f, ord), G, ord).normal_form;
}

SMonomial lcm(const SMonomial& a, const SMonomial& b) {
    SMonomial out;
    out.xpart = a.xpart;
    for (int i = 0; i < out.xpart.n(); ++i)
        out.xpart.exponents[i] = std::max(a.xpart.exponents[i], b.xpart.exponents[i]);
    // Multiset max over the structurally sorted T-parts.
    auto ia = a.tpart.begin();
    auto ib = b.tpart.begin();
    while (ia != a.tpart.end() || ib != b.tpart.end()) {
        if (ib == b.tpart.end() || (ia != a.tpart.end() && *ia < *ib)) {
            out.tpart.push_back(*ia++);
        } else if (ia == a.tpart.end() || *ib < *ia) {
            out.tpart.push_back(*ib++);
        } else {
            out.tpart.push_back(*ia++);
            ++ib;
        }
    }
    return out;
}

SPolynomial s_polynomial(const Binomial& g, const Binomial& h, const TermOrder& ord) {
    SPolynomial out;
    out.coprime_leads = g.plus.coprime_with(h.plus);
    SMonomial l = lcm(g.plus, h.plus);
    Polynomial p;
    p.add_scaled(g.plus.divide_into(l), 1, g, ord);
    p.add_scaled(h.plus.divide_into(l), -1, h, ord);
    out.poly = std::move(p);
    return out;
}

void sort_basis(std::vector<Binomial>& G, const TermOrder& ord) {
    std::sort(G.begin(), G.end(), [&](const Binomial& a, const Binomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        int c = compare_S(a.plus, b.plus, ord);
        if (c != 0) return c > 0;
        return compare_S(a.minus, b.minus, ord) > 0;
    });
    G.erase(std::unique(G.begin(), G.end()), G.end());
}

} // namespace rees
