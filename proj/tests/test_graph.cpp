// Graph layer: incidence and cycle graphs, chordality, the cycle <-> binomial
// correspondence, and the Koszulness obstruction.
#include "doctest.h"

#include "rees/binomial.hpp"
#include "rees/graph.hpp"
#include "rees/instance.hpp"
#include "rees/oracle.hpp"
#include "rees/text.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

using namespace rees;

namespace {

const Instance kTriangle{3,
                         {IdealSpec{{1, 2}, 1}, IdealSpec{{2, 3}, 1}, IdealSpec{{1, 3}, 1}}};
const Instance kSquares{3,
                        {IdealSpec{{1, 2}, 2}, IdealSpec{{2, 3}, 2}, IdealSpec{{1, 3}, 2}}};
const Instance kFiveBlocks{4,
                           {IdealSpec{{1, 2}, 2}, IdealSpec{{1, 3}, 3}, IdealSpec{{2, 3}, 2},
                            IdealSpec{{1, 4}, 1}, IdealSpec{{2, 4}, 1}}};
const Instance kSingle{3, {IdealSpec{{1, 2, 3}, 2}}};
// A cyclic but chordal support pattern: the all-variable block gives every
// six-cycle a chord.
const Instance kChordalCyclic{3,
                              {IdealSpec{{1, 2}, 1}, IdealSpec{{2, 3}, 1},
                               IdealSpec{{1, 2, 3}, 1}}};

Binomial bn(const std::string& s, const TermOrder& ord, int n = 3, int r = 3) {
    return parse_binomial(s, n, r, ord);
}

int left_index(const BipartiteGraph& g, int x) {
    auto it = std::find(g.left.begin(), g.left.end(), x);
    REQUIRE(it != g.left.end());
    return static_cast<int>(it - g.left.begin());
}

int right_index(const BipartiteGraph& g, const std::string& label) {
    for (int j = 0; j < g.right_size(); ++j)
        if (g.right_label(j) == label) return j;
    FAIL("no right vertex labelled ", label);
    return -1;
}

// Builds a cycle x_{xs[0]} - rights[0] - x_{xs[1]} - ... from labels.
EvenCycle cycle_of(const BipartiteGraph& g, const std::vector<int>& xs,
                   const std::vector<std::string>& rights) {
    EvenCycle c;
    for (int x : xs) c.xs.push_back(left_index(g, x));
    for (const auto& s : rights) c.rights.push_back(right_index(g, s));
    return c;
}

} // namespace

TEST_CASE("incidence graphs and chordality") {
    BipartiteGraph tri = incidence_graph(kTriangle);
    CHECK(tri.left == std::vector<int>{1, 2, 3});
    REQUIRE(tri.right_size() == 3);
    CHECK(tri.right_label(0) == "t1");
    CHECK(tri.edge_count() == 6);

    // The triangle's incidence graph is the chordless six-cycle; both methods
    // agree and the witness is that cycle.
    for (auto m : {ChordalityMethod::exhaustive, ChordalityMethod::p4_sweep}) {
        ChordalityVerdict v = is_chordal_bipartite(tri, m);
        CHECK_FALSE(v.chordal);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->xs.size() == 3);
        CHECK(to_string(*v.witness, tri) == "x1 - t1 - x2 - t2 - x3 - t3 - x1");
    }

    // Controls: a path of supports, a single block, and a cyclic-but-chorded
    // pattern are all chordal bipartite.
    for (const Instance& inst :
         {Instance{3, {IdealSpec{{1, 2}, 1}, IdealSpec{{2, 3}, 1}}}, kSingle, kChordalCyclic}) {
        for (auto m : {ChordalityMethod::exhaustive, ChordalityMethod::p4_sweep}) {
            ChordalityVerdict v = is_chordal_bipartite(incidence_graph(inst), m);
            CHECK(v.chordal);
            CHECK_FALSE(v.witness.has_value());
        }
    }

    // Methods also agree on every cycle graph in the suite's instances.
    for (const Instance& inst : {kTriangle, kSquares, kFiveBlocks}) {
        BipartiteGraph g = cycle_graph(inst, TermOrder::standard(inst.n));
        CHECK(is_chordal_bipartite(g, ChordalityMethod::exhaustive).chordal ==
              is_chordal_bipartite(g, ChordalityMethod::p4_sweep).chordal);
    }
}

TEST_CASE("the cycle graph lists the unit vertex and reduced labels per block") {
    TermOrder ord = TermOrder::standard(4);
    BipartiteGraph g = cycle_graph(kFiveBlocks, ord);
    CHECK(g.left == std::vector<int>{1, 2, 3, 4});
    std::vector<std::string> labels;
    for (int j = 0; j < g.right_size(); ++j) labels.push_back(g.right_label(j));
    CHECK(labels == std::vector<std::string>{"1", "T[x2,t1]", "T[x1,t1]", "T[x3^2,t2]",
                                             "T[x1*x3,t2]", "T[x1^2,t2]", "T[x3,t3]",
                                             "T[x2,t3]", "T[1,t4]", "T[1,t5]"});
    // Every x joins the unit vertex; a reduced label joins exactly its
    // block's support.
    for (int i = 0; i < g.left_size(); ++i) CHECK(g.adj[i][0]);
    CHECK(g.adj[left_index(g, 1)][right_index(g, "T[x2,t1]")]);
    CHECK_FALSE(g.adj[left_index(g, 3)][right_index(g, "T[x2,t1]")]);
    CHECK(g.adj[left_index(g, 4)][right_index(g, "T[1,t4]")]);
    CHECK_FALSE(g.adj[left_index(g, 2)][right_index(g, "T[1,t4]")]);
}

TEST_CASE("canonical cycle form is rotation- and reflection-invariant") {
    TermOrder ord = TermOrder::standard(3);
    BipartiteGraph g = cycle_graph(kTriangle, ord);
    EvenCycle a = cycle_of(g, {1, 2, 3}, {"T[1,t1]", "T[1,t2]", "T[1,t3]"});
    // The same cycle entered rotated by one step and also reversed.
    EvenCycle rot = cycle_of(g, {2, 3, 1}, {"T[1,t2]", "T[1,t3]", "T[1,t1]"});
    EvenCycle refl = cycle_of(g, {1, 3, 2}, {"T[1,t3]", "T[1,t2]", "T[1,t1]"});
    CHECK(canonical_cycle(a) == canonical_cycle(rot));
    CHECK(canonical_cycle(a) == canonical_cycle(refl));
    CHECK(canonical_cycle(canonical_cycle(a)) == canonical_cycle(a));
}

TEST_CASE("named cycles translate to the expected binomials") {
    TermOrder o4 = TermOrder::standard(4);
    BipartiteGraph g = cycle_graph(kFiveBlocks, o4);

    // A three-block six-cycle through reduced labels of mixed powers.
    EvenCycle six = cycle_of(g, {1, 2, 3}, {"T[x2,t1]", "T[x2,t3]", "T[x1*x3,t2]"});
    CycleTranslation t6 = cycle_to_binomial(six, g, kFiveBlocks, o4);
    CHECK(t6.binomial ==
          bn("T[x2^2,t3]*T[x1*x3^2,t2]*T[x1*x2,t1] - T[x2*x3,t3]*T[x1^2*x3,t2]*T[x2^2,t1]", o4,
             4, 5));

    // A four-cycle through the unit vertex and a first-power block.
    EvenCycle four = cycle_of(g, {1, 4}, {"1", "T[1,t4]"});
    CycleTranslation t4 = cycle_to_binomial(four, g, kFiveBlocks, o4);
    CHECK(t4.binomial == bn("x4*T[x1,t4] - x1*T[x4,t4]", o4, 4, 5));

    // Both translations are kernel elements.
    CHECK(phi_eval(t6.binomial.plus, 5) == phi_eval(t6.binomial.minus, 5));
    CHECK(phi_eval(t4.binomial.plus, 5) == phi_eval(t4.binomial.minus, 5));
}

TEST_CASE("cycle translation round-trips across all admissible cycles") {
    for (const Instance& inst : {kTriangle, kSquares, kFiveBlocks}) {
        TermOrder ord = TermOrder::standard(inst.n);
        BipartiteGraph g = cycle_graph(inst, ord);
        std::vector<EvenCycle> cycles = enumerate_admissible_cycles(g);
        for (const auto& c : cycles) {
            CycleTranslation t = cycle_to_binomial(c, g, inst, ord);
            auto back = binomial_to_cycle(t.binomial, g, inst, ord);
            REQUIRE(back.has_value());
            CHECK(canonical_cycle(*back) == canonical_cycle(c));
        }
    }
    // Frozen counts: the number of admissible cycles per instance.
    CHECK(enumerate_admissible_cycles(cycle_graph(kTriangle, TermOrder::standard(3))).size() ==
          7);
    CHECK(enumerate_admissible_cycles(cycle_graph(kSquares, TermOrder::standard(3))).size() ==
          26);
    CHECK(
        enumerate_admissible_cycles(cycle_graph(kFiveBlocks, TermOrder::standard(4))).size() ==
        82);
    // A shorter length cap trims the listing to the four-cycles.
    auto quads = enumerate_admissible_cycles(cycle_graph(kSquares, TermOrder::standard(3)), 4);
    CHECK(quads.size() == 6);
    for (const auto& c : quads) CHECK(c.xs.size() == 2);
}

TEST_CASE("binomials that are not connected cross-block quasi-minors are rejected") {
    TermOrder ord = TermOrder::standard(3);
    BipartiteGraph g = cycle_graph(kSquares, ord);

    // A single-block T-minor uses two cells of one block per term.
    CHECK_FALSE(binomial_to_cycle(bn("T[x1^2,t1]*T[x2^2,t1] - T[x1*x2,t1]*T[x1*x2,t1]", ord), g,
                                  kSquares, ord)
                    .has_value());

    // A kernel element with two x-variables in a term.
    BipartiteGraph gt = cycle_graph(kTriangle, ord);
    Binomial twox = bn("x1*x2*T[x3,t2]*T[x3,t3] - x3^2*T[x2,t2]*T[x1,t3]", ord);
    CHECK(phi_eval(twox.plus, 3) == phi_eval(twox.minus, 3));
    CHECK_FALSE(binomial_to_cycle(twox, gt, kTriangle, ord).has_value());

    // The squared-triangle obstruction witness, by contrast, is a genuine
    // three-block quasi-minor and translates back to a six-cycle.
    Binomial alpha =
        bn("T[x1*x3,t3]*T[x2*x3,t2]*T[x1*x2,t1] - T[x3^2,t3]*T[x2^2,t2]*T[x1^2,t1]", ord);
    auto cyc = binomial_to_cycle(alpha, g, kSquares, ord);
    REQUIRE(cyc.has_value());
    CHECK(cyc->xs.size() == 3);
}

TEST_CASE("Koszulness obstruction witnesses") {
    TermOrder ord = TermOrder::standard(3);

    // Chordal incidence graph: no obstruction to report.
    CHECK_FALSE(koszul_witness(kSingle, ord).has_value());
    CHECK_FALSE(koszul_witness(kChordalCyclic, ord).has_value());

    // First powers: the witness is the triangle relation itself.
    auto tri = koszul_witness(kTriangle, ord);
    REQUIRE(tri.has_value());
    CHECK(tri->alpha == bn("T[x1,t3]*T[x3,t2]*T[x2,t1] - T[x3,t3]*T[x2,t2]*T[x1,t1]", ord));
    CHECK(to_string(tri->cycle, incidence_graph(kTriangle)) ==
          "x1 - t1 - x2 - t2 - x3 - t3 - x1");

    // Squared powers: the mixed-product witness.
    auto sq = koszul_witness(kSquares, ord);
    REQUIRE(sq.has_value());
    CHECK(sq->alpha ==
          bn("T[x1*x3,t3]*T[x2*x3,t2]*T[x1*x2,t1] - T[x3^2,t3]*T[x2^2,t2]*T[x1^2,t1]", ord));
    CHECK(phi_eval(sq->alpha.plus, 3) == phi_eval(sq->alpha.minus, 3));
    CHECK(sq->alpha.plus.xpart.is_unit());
    CHECK(sq->alpha.minus.xpart.is_unit());
}

TEST_CASE("the obstruction witness lies outside the quadric span") {
    TermOrder ord = TermOrder::standard(3);

    auto sq = koszul_witness(kSquares, ord);
    REQUIRE(sq.has_value());
    QuadricSpanCertificate cert = not_quadric_generated(sq->alpha, kSquares, MapKind::fiber, ord);
    CHECK(cert.outside_span);
    CHECK(cert.slice_dimension == 3);
    CHECK(cert.quadric_multiples == 0);
    CHECK(cert.span_rank == 0);

    auto tri = koszul_witness(kTriangle, ord);
    REQUIRE(tri.has_value());
    QuadricSpanCertificate tc = not_quadric_generated(tri->alpha, kTriangle, MapKind::fiber, ord);
    CHECK(tc.outside_span);
    CHECK(tc.slice_dimension == 2);

    // Negative control: in the single-block fiber ring the analogous cubic IS
    // a combination of exchange quadrics.
    Binomial prod = bn(
        "T[x1^2,t1]*T[x2^2,t1]*T[x3^2,t1] - T[x1*x2,t1]*T[x1*x3,t1]*T[x2*x3,t1]", ord, 3, 1);
    QuadricSpanCertificate neg = not_quadric_generated(prod, kSingle, MapKind::fiber, ord);
    CHECK_FALSE(neg.outside_span);
    CHECK(neg.span_rank > 0);
    CHECK(neg.quadric_multiples > 0);

    // Bad inputs: a non-kernel binomial, and an x-carrying binomial under the
    // fiber map.
    auto junk = make_binomial(parse_smonomial("T[x1,t1]", 3, 3),
                              parse_smonomial("T[x2,t1]", 3, 3), ord);
    REQUIRE(junk.has_value());
    CHECK_THROWS_AS((void)not_quadric_generated(*junk, kTriangle, MapKind::fiber, ord),
                    InputError);
    CHECK_THROWS_AS((void)not_quadric_generated(bn("x2*T[x1,t1] - x1*T[x2,t1]", ord), kTriangle,
                                                MapKind::fiber, ord),
                    InputError);
}

TEST_CASE("DOT rendering") {
    BipartiteGraph tri = incidence_graph(kTriangle);
    std::string dot = to_dot(tri);
    CHECK(dot.find("graph {") != std::string::npos);
    CHECK(dot.find("label=\"x1\"") != std::string::npos);
    CHECK(dot.find("label=\"t3\"") != std::string::npos);
    CHECK(dot.find("L0 -- R0;") != std::string::npos);
    CHECK(dot.find("}") != std::string::npos);
}
