// The graph layer.
//
// Two bipartite graphs are attached to an instance: the incidence graph
// (x-variables vs t_1..t_r, edges by support membership), whose chordality
// controls Koszulness of the multi-fiber ring, and the cycle graph (x-vertices
// vs {1} and the reduced labels T_{m t_j} with m a generator of J_j^{a_j-1}),
// whose admissible cycles enumerate the cross-block binary quasi-minors.
#pragma once

#include "rees/binomial.hpp"
#include "rees/instance.hpp"
#include "rees/oracle.hpp"
#include "rees/quasi_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rees {

struct RightVertex {
    enum Kind { t_label, unit, reduced_t } kind = t_label;
    int block = 0;  // 1..r for t_label / reduced_t; 0 for the unit vertex
    XMonomial gen;  // reduced_t only: the generator m of J^{a-1} (may be unit)

    bool operator==(const RightVertex&) const = default;
};

struct BipartiteGraph {
    std::vector<int> left;            // 1-based x-indices
    std::vector<RightVertex> right;
    std::vector<std::vector<char>> adj; // adj[left_i][right_j]

    int left_size() const { return static_cast<int>(left.size()); }
    int right_size() const { return static_cast<int>(right.size()); }
    int edge_count() const;
    std::string left_label(int i) const;
    std::string right_label(int j) const;
};

// Left side: x-indices appearing in some support; right side: t_1..t_r.
BipartiteGraph incidence_graph(const Instance& inst);

// Left side: all of x_1..x_n; right side: the unit vertex plus the reduced
// labels per block; every x joins the unit vertex, x_i joins T_{m t_j} iff
// i lies in the support of J_j.
BipartiteGraph cycle_graph(const Instance& inst, const TermOrder& ord);

// An even cycle x_{i_1} - R_1 - x_{i_2} - R_2 - ... - R_k - x_{i_1} given by
// the alternating vertex lists; canonical form rotates the smallest x-index to
// the front and reflects so the first right vertex is the smaller neighbor.
struct EvenCycle {
    std::vector<int> xs;     // 0-based indices into graph.left
    std::vector<int> rights; // 0-based indices into graph.right; same length
    bool operator==(const EvenCycle&) const = default;
};
EvenCycle canonical_cycle(const EvenCycle& c);
std::string to_string(const EvenCycle& c, const BipartiteGraph& g);

enum class ChordalityMethod {
    exhaustive, // induced-cycle search over vertex subsets (default, desk scale)
    p4_sweep,   // polynomial method: induced paths a-b-c-d plus restricted reachability
};

struct ChordalityVerdict {
    bool chordal = false;
    std::optional<EvenCycle> witness; // a chordless cycle of length >= 6
};
// True iff no induced cycle of length >= 6 exists; on false the witness holds
// one chordless cycle.
ChordalityVerdict is_chordal_bipartite(const BipartiteGraph& g,
                                       ChordalityMethod method = ChordalityMethod::exhaustive);

// All simple cycles of the cycle graph whose right vertices are pairwise from
// distinct blocks (the unit vertex usable once), each reported once in
// canonical form, length capped at 2*max_right (so degree <= r+1 by default).
std::vector<EvenCycle> enumerate_admissible_cycles(const BipartiteGraph& g,
                                                   std::optional<int> max_len = std::nullopt);

// The cycle <-> binomial correspondence.  Edges are numbered around the
// cycle; odd-numbered edges feed one term and even-numbered the other.  The
// edge between x_l and the unit vertex contributes the factor x_l; the edge
// between x_l and T_{m t_j} contributes T_{x_l m t_j}.
struct CycleTranslation {
    Binomial binomial;
    bool negated; // true when canonicalization swapped the two terms
};
CycleTranslation cycle_to_binomial(const EvenCycle& c, const BipartiteGraph& g,
                                   const Instance& inst, const TermOrder& ord);

// Inverse translation; rejects (nullopt) binomials that are not connected
// cross-block binary quasi-minors with at most one x per term.
std::optional<EvenCycle> binomial_to_cycle(const Binomial& b, const BipartiteGraph& g,
                                           const Instance& inst, const TermOrder& ord);

// The Koszulness obstruction.  On a non-chordal incidence graph, picks a
// chordless cycle x_{i_1} t_{j_1} ... x_{i_m} t_{j_m} and instantiates the
// witness
//   alpha = prod_s T_{x_{i_s}^{a_{j_s}} t_{j_s}}
//         - prod_s T_{x_{i_s}^{a_{j_s}-1} x_{i_{s+1}} t_{j_s}},
// a kernel element of degree m >= 3.
struct KoszulWitness {
    EvenCycle cycle;
    Binomial alpha;
};
std::optional<KoszulWitness> koszul_witness(const Instance& inst, const TermOrder& ord);

// Certifies by exact rational linear algebra that alpha lies outside the span
// of all (monomial multiples of) degree-2 kernel binomials in its own
// multidegree slice.  kind selects the phi- or psi-kernel quadrics.
struct QuadricSpanCertificate {
    bool outside_span = false;
    int slice_dimension = 0;   // fiber size of alpha's multidegree
    int quadric_multiples = 0; // columns tested
    int span_rank = 0;
};
QuadricSpanCertificate not_quadric_generated(const Binomial& alpha, const Instance& inst,
                                             MapKind kind, const TermOrder& ord);

// DOT rendering for external graph viewers.
std::string to_dot(const BipartiteGraph& g);

} // namespace rees
