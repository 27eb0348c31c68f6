// Basis construction: the structural binomial family, the fiber-ring family,
// minimal generating sets, and the structural report.
#include "doctest.h"

#include "rees/binomial.hpp"
#include "rees/gb.hpp"
#include "rees/instance.hpp"
#include "rees/oracle.hpp"
#include "rees/text.hpp"

#include <algorithm>
#include <set>
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

Binomial bn(const std::string& s, const TermOrder& ord, int n = 3, int r = 3) {
    return parse_binomial(s, n, r, ord);
}

std::multiset<std::string> rendered_set(const std::vector<Binomial>& G, const TermOrder& ord) {
    std::multiset<std::string> out;
    for (const auto& b : G) out.insert(to_string(b, ord));
    return out;
}

} // namespace

TEST_CASE("the triangle's structural family") {
    TermOrder ord = TermOrder::standard(3);
    std::vector<Binomial> fam = gb_rees(kTriangle, ord);
    CHECK(rendered_set(fam, ord) ==
          std::multiset<std::string>{
              "x3*T[x1,t3] - x1*T[x3,t3]",
              "x3*T[x2,t2] - x2*T[x3,t2]",
              "x2*T[x1,t1] - x1*T[x2,t1]",
              "T[x1,t3]*T[x3,t2]*T[x2,t1] - T[x3,t3]*T[x2,t2]*T[x1,t1]",
              "x2*T[x1,t3]*T[x3,t2] - x1*T[x3,t3]*T[x2,t2]",
              "x3*T[x1,t3]*T[x2,t1] - x2*T[x3,t3]*T[x1,t1]",
              "x3*T[x2,t2]*T[x1,t1] - x1*T[x3,t2]*T[x2,t1]",
          });
    // The family is a certified basis; the fiber-ring family is its x-free part.
    CHECK(buchberger_verify(fam, ord).pass);
    std::vector<Binomial> fib = gb_fiber(kTriangle, ord);
    REQUIRE(fib.size() == 1);
    CHECK(to_string(fib[0], ord) ==
          "T[x1,t3]*T[x3,t2]*T[x2,t1] - T[x3,t3]*T[x2,t2]*T[x1,t1]");
}

TEST_CASE("the fiber family is the x-free slice of the full family") {
    for (const Instance& inst : {kTriangle, kSquares, kFiveBlocks}) {
        TermOrder ord = TermOrder::standard(inst.n);
        std::vector<Binomial> xfree;
        for (const auto& b : gb_rees(inst, ord))
            if (b.plus.xpart.is_unit() && b.minus.xpart.is_unit()) xfree.push_back(b);
        sort_basis(xfree, ord);
        std::vector<Binomial> fib = gb_fiber(inst, ord);
        sort_basis(fib, ord);
        CHECK(fib == xfree);
        CHECK(buchberger_verify(fib, ord).pass);
    }
}

TEST_CASE("minimal generating sets") {
    TermOrder ord = TermOrder::standard(3);

    // The triangle needs exactly its three exchange quadrics and one cubic.
    std::vector<Binomial> mg = minimal_generators(kTriangle, MapKind::rees, ord);
    CHECK(rendered_set(mg, ord) ==
          std::multiset<std::string>{
              "x3*T[x1,t3] - x1*T[x3,t3]",
              "x3*T[x2,t2] - x2*T[x3,t2]",
              "x2*T[x1,t1] - x1*T[x2,t1]",
              "T[x1,t3]*T[x3,t2]*T[x2,t1] - T[x3,t3]*T[x2,t2]*T[x1,t1]",
          });

    std::vector<Binomial> mf = minimal_generators(kTriangle, MapKind::fiber, ord);
    REQUIRE(mf.size() == 1);
    CHECK(to_string(mf[0], ord) ==
          "T[x1,t3]*T[x3,t2]*T[x2,t1] - T[x3,t3]*T[x2,t2]*T[x1,t1]");

    // Frozen sizes elsewhere in the suite.
    CHECK(minimal_generators(kSquares, MapKind::rees, ord).size() == 17);
    CHECK(minimal_generators(kSquares, MapKind::fiber, ord).size() == 11);
    TermOrder o4 = TermOrder::standard(4);
    CHECK(minimal_generators(kFiveBlocks, MapKind::rees, o4).size() == 34);
    CHECK(minimal_generators(kFiveBlocks, MapKind::fiber, o4).size() == 25);

    // Minimal generators always generate: the certified family reduces to
    // zero... the other containment is automatic since they are family
    // combinations.  Agreement below the cap certifies both inclusions.
    CHECK(ideal_equal_up_to(gb_rees(kTriangle, ord), mg, ord, 4, kTriangle).pass);
    std::vector<Binomial> mgs = minimal_generators(kSquares, MapKind::rees, ord);
    CHECK(ideal_equal_up_to(gb_rees(kSquares, ord), mgs, ord, 4, kSquares).pass);

    // Every minimal generator's multidegree occurs among the family's
    // multidegrees (a generating set must meet every minimal degree).
    for (const Instance& inst : {kTriangle, kSquares}) {
        std::set<ImageMonomial> fam_degrees;
        for (const auto& b : gb_rees(inst, ord)) fam_degrees.insert(phi_eval(b.plus, inst.r()));
        for (const auto& b : minimal_generators(inst, MapKind::rees, ord))
            CHECK(fam_degrees.count(phi_eval(b.plus, inst.r())) == 1);
    }
}

TEST_CASE("the minimal generating set is not a basis when a fiber has two sinks") {
    TermOrder ord = TermOrder::standard(3);
    std::vector<Binomial> mg = minimal_generators(kTriangle, MapKind::rees, ord);
    CHECK_FALSE(buchberger_verify(mg, ord).pass);
    CHECK_FALSE(unique_sink_certify(kTriangle, mg, ord, 4).pass);
    // Interreduction of the full family instead keeps five elements.
    CHECK(reduced_gb(gb_rees(kTriangle, ord), ord).size() == 5);
}

TEST_CASE("family sizes and degree bounds across instances") {
    std::vector<std::pair<const Instance*, std::size_t>> sizes = {
        {&kTriangle, 7}, {&kSquares, 29}, {&kFiveBlocks, 87}};
    for (const auto& [inst, expect] : sizes) {
        TermOrder ord = TermOrder::standard(inst->n);
        std::vector<Binomial> fam = gb_rees(*inst, ord);
        CHECK(fam.size() == expect);
        CHECK(std::set<Binomial>(fam.begin(), fam.end()).size() == expect);
        for (const auto& b : fam) {
            CHECK(b.degree() <= inst->r() + 1);
            CHECK(phi_eval(b.plus, inst->r()) == phi_eval(b.minus, inst->r()));
        }
    }
    CHECK(reduced_gb(gb_rees(kFiveBlocks, TermOrder::standard(4)), TermOrder::standard(4))
              .size() == 41);
}

TEST_CASE("structural report") {
    TermOrder ord = TermOrder::standard(3);
    StructuralReport rep =
        structural_check(minimal_generators(kTriangle, MapKind::rees, ord), kTriangle, ord);
    CHECK(rep.pass);
    CHECK(rep.violations.empty());
    CHECK(rep.count_by_degree == std::map<int, int>{{2, 3}, {3, 1}});

    StructuralReport fam = structural_check(gb_rees(kSquares, ord), kSquares, ord);
    CHECK(fam.pass);
    CHECK(fam.count_by_degree.rbegin()->first <= kSquares.r() + 1);

    // Violations are reported: a squared leading term, a non-kernel element,
    // and a degree beyond r + 1.
    Binomial sq_lt = bn("x2^2*T[x1,t3]*T[x3,t2] - x1*x2*T[x3,t3]*T[x2,t2]", ord);
    StructuralReport v1 = structural_check({sq_lt}, kTriangle, ord);
    CHECK_FALSE(v1.pass);
    CHECK_FALSE(v1.violations.empty());

    auto nk = make_binomial(parse_smonomial("x1", 3, 3), parse_smonomial("x2", 3, 3), ord);
    REQUIRE(nk.has_value());
    CHECK_FALSE(structural_check({*nk}, kTriangle, ord).pass);

    Binomial cubic = bn("T[x1,t3]*T[x3,t2]*T[x2,t1] - T[x3,t3]*T[x2,t2]*T[x1,t1]", ord);
    SMonomial m = parse_smonomial("T[x1,t1]*T[x2,t1]", 3, 3);
    auto deep = make_binomial(cubic.plus * m, cubic.minus * m, ord);
    REQUIRE(deep.has_value());
    CHECK_FALSE(structural_check({*deep}, kTriangle, ord).pass);
}

TEST_CASE("a principal ideal has no relations") {
    TermOrder ord = TermOrder::standard(1);
    Instance principal{1, {IdealSpec{{1}, 1}}};
    CHECK(gb_rees(principal, ord).empty());
    CHECK(gb_fiber(principal, ord).empty());
    CHECK(minimal_generators(principal, MapKind::rees, ord).empty());
    StructuralReport rep = structural_check({}, principal, ord);
    CHECK(rep.pass);
    CHECK(rep.count_by_degree.empty());
}

TEST_CASE("stray cubics survive under both order variants") {
    TermOrder conv = TermOrder::standard(3);
    std::vector<Binomial> R = reduced_gb(gb_rees(kSquares, conv), conv);
    Binomial fstar = bn("x2*T[x1^2,t3]*T[x2*x3,t2] - x1*T[x1*x3,t3]*T[x2^2,t2]", conv);
    CHECK(std::find(R.begin(), R.end(), fstar) != R.end());

    TermOrder xt = TermOrder::standard(3);
    xt.variant = OrderVariant::x_above_t;
    std::vector<Binomial> Rx = reduced_gb(gb_rees(kSquares, xt), xt);
    CHECK(Rx.size() == 21);
    Binomial gstar = bn("x2*T[x3^2,t3]*T[x1^2,t1] - x3*T[x1*x3,t3]*T[x1*x2,t1]", xt);
    CHECK(std::find(Rx.begin(), Rx.end(), gstar) != Rx.end());
}
