#include "rees/oracle.hpp"

#include "rees/text.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace rees {

namespace {

std::string render_polynomial(const Polynomial& p, const TermOrder& ord) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& [m, c] = p.term(i);
        Coeff abs = c < 0 ? Coeff(-c) : c;
        if (i == 0) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs != 1) os << abs.str() << "*";
        os << to_string(m, ord);
    }
    return os.str();
}

// Per-block generator-multiset search filling in the preimages of mu.
void fiber_block(const Instance& inst, const TermOrder& ord,
                 const std::vector<std::vector<XMonomial>>& gens,
                 const std::vector<int>& tdeg, int block, std::size_t start,
                 int remaining, const XMonomial& residual,
                 std::vector<TVariable>& ts, MapKind kind,
                 std::vector<SMonomial>& out) {
    if (remaining == 0) {
        if (block == inst.r()) {
            if (kind == MapKind::fiber && !residual.is_unit()) return;
            out.emplace_back(residual, ts);
            return;
        }
        int next = block + 1;
        fiber_block(inst, ord, gens, tdeg, next, 0, tdeg[next - 1], residual, ts,
                    kind, out);
        return;
    }
    const auto& g = gens[block - 1];
    // Generators are taken with non-decreasing index so each multiset of
    // T-variables appears exactly once.
    for (std::size_t i = start; i < g.size(); ++i) {
        if (!g[i].divides(residual)) continue;
        ts.push_back(TVariable(block, g[i]));
        fiber_block(inst, ord, gens, tdeg, block, i, remaining - 1,
                    g[i].divide_into(residual), ts, kind, out);
        ts.pop_back();
    }
}

} // namespace

std::vector<SMonomial> fiber(const ImageMonomial& mu, const Instance& inst,
                             MapKind kind, const TermOrder& ord) {
    assert(static_cast<int>(mu.tdeg.size()) == inst.r());
    std::vector<std::vector<XMonomial>> gens;
    for (int l = 1; l <= inst.r(); ++l)
        gens.push_back(generators(inst.block(l), inst.n, ord));
    std::vector<SMonomial> out;
    std::vector<TVariable> ts;
    fiber_block(inst, ord, gens, mu.tdeg, 1, 0, inst.r() >= 1 ? mu.tdeg[0] : 0,
                mu.xpart, ts, kind, out);
    std::sort(out.begin(), out.end(), [&](const SMonomial& a, const SMonomial& b) {
        return compare_S(a, b, ord) > 0;
    });
    return out;
}

FiberGraph build_fiber_graph(const ImageMonomial& mu, const Instance& inst,
                             const std::vector<Binomial>& B, MapKind kind,
                             const TermOrder& ord) {
    FiberGraph g;
    g.mu = mu;
    g.vertices = fiber(mu, inst, kind, ord);
    std::map<SMonomial, int> index;
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
        index.emplace(g.vertices[i], i);
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) {
        const SMonomial& u = g.vertices[i];
        for (const Binomial& b : B) {
            if (!b.plus.divides(u)) continue;
            SMonomial v = b.plus.divide_into(u) * b.minus;
            auto it = index.find(v);
            if (it != index.end()) edges.insert({i, it->second});
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    std::vector<char> has_out(g.vertices.size(), 0);
    for (const auto& [from, to] : g.edges) has_out[from] = 1;
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
        if (!has_out[i]) g.sinks.push_back(i);
    return g;
}

namespace {

// All S-monomials of total degree <= degcap over the instance's variables
// (x-variables excluded under MapKind::fiber), grouped into complete fibers.
// Completeness holds degree by degree: every preimage of a fixed image has the
// same total S-degree, so a fiber met below the cap is captured whole.
std::map<ImageMonomial, std::vector<SMonomial>>
fibers_up_to(const Instance& inst, int degcap, MapKind kind, const TermOrder& ord) {
    std::vector<SMonomial> vars;
    if (kind == MapKind::rees)
        for (int i = 1; i <= inst.n; ++i)
            vars.emplace_back(XMonomial::variable(i, inst.n), std::vector<TVariable>{});
    for (const TVariable& t : t_variables(inst, ord))
        vars.emplace_back(XMonomial::unit(inst.n), std::vector<TVariable>{t});

    // The walk below visits exactly C(v + degcap, degcap) monomials (multisets
    // of size <= degcap over v variables); refuse runaway caps up front rather
    // than thrash for minutes.
    constexpr long kMonomialBudget = 2'000'000;
    boost::multiprecision::cpp_int predicted = 1;
    for (int i = 1; i <= degcap; ++i)
        predicted = predicted * (static_cast<long>(vars.size()) + i) / i;
    if (predicted > kMonomialBudget)
        throw ResourceError("degree cap " + std::to_string(degcap) + " would enumerate " +
                            predicted.str() + " monomials over " +
                            std::to_string(vars.size()) + " variables (limit " +
                            std::to_string(kMonomialBudget) + "); lower the cap");

    std::map<ImageMonomial, std::vector<SMonomial>> groups;
    // Multisets of variables of size <= degcap: at each position either move
    // past variable i or multiply by it once and stay.
    struct Rec {
        const std::vector<SMonomial>& vars;
        const Instance& inst;
        std::map<ImageMonomial, std::vector<SMonomial>>& groups;
        void walk(std::size_t i, int remaining, const SMonomial& cur) {
            if (i == vars.size()) {
                groups[phi_eval(cur, inst.r())].push_back(cur);
                return;
            }
            walk(i + 1, remaining, cur);
            if (remaining > 0) walk(i, remaining - 1, cur * vars[i]);
        }
    } rec{vars, inst, groups};
    rec.walk(0, degcap, SMonomial::unit(inst.n));
    return groups;
}

// Kernel membership of a single binomial under phi (or psi for fiber kind,
// where both terms must additionally be x-free).
bool in_kernel(const Binomial& b, const Instance& inst, MapKind kind) {
    if (kind == MapKind::fiber &&
        (!b.plus.xpart.is_unit() || !b.minus.xpart.is_unit()))
        return false;
    return phi_eval(b.plus, inst.r()) == phi_eval(b.minus, inst.r());
}

} // namespace

Certificate unique_sink_certify(const Instance& inst, const std::vector<Binomial>& B,
                                const TermOrder& ord, int degcap, MapKind kind) {
    Certificate cert;
    cert.method = "unique-sink";
    for (const Binomial& b : B)
        if (!in_kernel(b, inst, kind))
            cert.witnesses.push_back("not in the kernel: " + to_string(b, ord));
    if (!cert.witnesses.empty()) return cert;

    for (const auto& [mu, elems] : fibers_up_to(inst, degcap, kind, ord)) {
        std::vector<const SMonomial*> sinks;
        for (const SMonomial& u : elems) {
            bool reducible = false;
            for (const Binomial& b : B)
                if (b.plus.divides(u)) {
                    reducible = true;
                    break;
                }
            if (!reducible) sinks.push_back(&u);
        }
        if (sinks.size() != 1) {
            std::ostringstream os;
            os << "fiber of " << to_string(mu) << " has " << sinks.size()
               << " sinks:";
            for (const SMonomial* u : sinks) os << " " << to_string(*u, ord);
            cert.witnesses.push_back(os.str());
        }
    }
    cert.pass = cert.witnesses.empty();
    return cert;
}

Certificate buchberger_verify(const std::vector<Binomial>& G, const TermOrder& ord) {
    Certificate cert;
    cert.method = "buchberger";
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            SPolynomial sp = s_polynomial(G[i], G[j], ord);
            if (sp.coprime_leads || sp.poly.is_zero()) continue;
            ReductionResult red = reduce(sp.poly, G, ord);
            if (!red.normal_form.is_zero()) {
                cert.witnesses.push_back(
                    "pair (" + to_string(G[i], ord) + ", " + to_string(G[j], ord) +
                    ") leaves remainder " + render_polynomial(red.normal_form, ord));
                return cert;
            }
        }
    }
    cert.pass = true;
    return cert;
}

std::vector<Binomial> brute_force_kernel(const Instance& inst, int degcap,
                                         MapKind kind, const TermOrder& ord) {
    std::vector<Binomial> out;
    for (const auto& [mu, elems] : fibers_up_to(inst, degcap, kind, ord)) {
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = i + 1; j < elems.size(); ++j)
                if (auto b = make_binomial(elems[i], elems[j], ord))
                    out.push_back(*b);
    }
    sort_basis(out, ord);
    return out;
}

Certificate ideal_equal_up_to(const std::vector<Binomial>& G,
                              const std::vector<Binomial>& H, const TermOrder& ord,
                              int degcap, const Instance& inst, MapKind kind) {
    Certificate cert;
    cert.method = "ideal-equal-up-to-degree";
    for (const Binomial& h : H) {
        if (h.degree() > degcap) continue;
        Polynomial nf = reduce_binomial(h, G, ord);
        if (!nf.is_zero())
            cert.witnesses.push_back("does not reduce to zero: " + to_string(h, ord) +
                                     " -> " + render_polynomial(nf, ord));
    }
    for (const Binomial& g : G)
        if (!in_kernel(g, inst, kind))
            cert.witnesses.push_back("not in the kernel: " + to_string(g, ord));
    cert.pass = cert.witnesses.empty();
    return cert;
}

std::vector<Binomial> reduced_gb(const std::vector<Binomial>& G, const TermOrder& ord) {
    if (G.empty()) return {};
    // Minimalize: scan by ascending leading term; a candidate survives iff no
    // already-kept element's leading term divides its leading term.  Equal
    // leading terms keep only the structurally first candidate.
    std::vector<Binomial> sorted = G;
    std::sort(sorted.begin(), sorted.end(),
              [&](const Binomial& a, const Binomial& b) {
                  int c = compare_S(a.plus, b.plus, ord);
                  if (c != 0) return c < 0;
                  return compare_S(a.minus, b.minus, ord) < 0;
              });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Binomial> minimal;
    for (const Binomial& g : sorted) {
        bool redundant = false;
        for (const Binomial& h : minimal)
            if (h.plus.divides(g.plus)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }
    // Tail-reduce with divisors ordered by descending leading term, so ties go
    // to the largest-leading-term divisor.  An element's own leading term can
    // never divide monomials below it, so reducing against the full list is
    // safe.
    std::sort(minimal.begin(), minimal.end(),
              [&](const Binomial& a, const Binomial& b) {
                  return compare_S(a.plus, b.plus, ord) > 0;
              });
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        Polynomial tail = Polynomial::from_monomial(minimal[i].minus, 1, ord);
        ReductionResult red = reduce(tail, minimal, ord);
        // A monomial rewritten by binomials stays a single monomial with
        // coefficient one.
        assert(red.normal_form.size() == 1 && red.normal_form.leading_coeff() == 1);
        minimal[i].minus = red.normal_form.leading_monomial();
    }
    sort_basis(minimal, ord);
    return minimal;
}

} // namespace rees
