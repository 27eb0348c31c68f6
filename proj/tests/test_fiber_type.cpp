// Constructive rewriters: quasi-minors into 2x2 minors, and x-quasi-minors of
// the assembled matrix into x-minors plus x-free quasi-minors.
#include "doctest.h"

#include "rees/binomial.hpp"
#include "rees/fiber_type.hpp"
#include "rees/gb.hpp"
#include "rees/instance.hpp"
#include "rees/oracle.hpp"
#include "rees/quasi_matrix.hpp"
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

Binomial bn(const std::string& s, const TermOrder& ord, int n = 3, int r = 3) {
    return parse_binomial(s, n, r, ord);
}

// A fully filled n x n matrix of pairwise-distinct T-variables: cell (i, j)
// holds the variable with generator x1^{i+1} * x2^{j+1}.
QuasiMatrix symbolic_matrix(int n) {
    QuasiMatrix A;
    A.n = n;
    for (int j = 0; j < n; ++j) {
        QuasiColumn col;
        col.block = 1;
        col.label = "c" + std::to_string(j);
        A.columns.push_back(col);
    }
    A.cells.assign(n, std::vector<std::optional<Entry>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> e(n, 0);
            e[0] = i + 1;
            e[1] = j + 1;
            A.cells[i][j] = Entry{TVariable{1, XMonomial(e)}};
        }
    return A;
}

// The binomial a placement denotes: product of plus cells minus product of
// minus cells.
Binomial placement_binomial(const Placement& p, const QuasiMatrix& A, const TermOrder& ord) {
    SMonomial plus = SMonomial::unit(A.n);
    SMonomial minus = SMonomial::unit(A.n);
    for (const auto& c : p.plus_cells) plus = plus * entry_monomial(*A.at(c.row, c.col), A.n);
    for (const auto& c : p.minus_cells) minus = minus * entry_monomial(*A.at(c.row, c.col), A.n);
    auto b = make_binomial(plus, minus, ord);
    REQUIRE(b.has_value());
    return *b;
}

void check_combination_exact(const Combination& c, const Binomial& target,
                             const TermOrder& ord) {
    CHECK(expand(c, ord) == Polynomial::from_binomial(target, ord));
}

bool generator_among_minors(const Binomial& g, const QuasiMatrix& A, const TermOrder& ord) {
    auto minors = two_by_two_minors(A, ord);
    return std::find(minors.begin(), minors.end(), g) != minors.end();
}

} // namespace

TEST_CASE("a quasi-minor of a full matrix decomposes into its 2x2 minors") {
    TermOrder o3 = TermOrder::standard(3);
    QuasiMatrix A = symbolic_matrix(3);
    Placement p{{{0, 0}, {1, 1}, {2, 2}}, {{0, 1}, {1, 2}, {2, 0}}};
    Binomial target = placement_binomial(p, A, o3);

    auto comb = rewrite_to_two_by_two(p, A, o3);
    REQUIRE(comb.has_value());
    check_combination_exact(*comb, target, o3);
    CHECK(comb->terms.size() >= 2);
    for (const auto& t : comb->terms) {
        CHECK((t.sign == 1 || t.sign == -1));
        CHECK(generator_among_minors(t.generator, A, o3));
    }
}

TEST_CASE("the recursion handles both 4x4 branches") {
    TermOrder o4 = TermOrder::standard(4);
    QuasiMatrix A = symbolic_matrix(4);

    // One eight-cycle through all four rows.
    Placement ordinary{{{0, 0}, {1, 1}, {2, 2}, {3, 3}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    // Two four-cycles; here the pivot's companion cell belongs to the other
    // term, forcing the degenerate factoring branch.
    Placement degenerate{{{0, 0}, {1, 1}, {2, 2}, {3, 3}}, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}};

    for (const Placement& p : {ordinary, degenerate}) {
        Binomial target = placement_binomial(p, A, o4);
        auto comb = rewrite_to_two_by_two(p, A, o4);
        REQUIRE(comb.has_value());
        check_combination_exact(*comb, target, o4);
        for (const auto& t : comb->terms) CHECK(generator_among_minors(t.generator, A, o4));
    }
}

TEST_CASE("an invalid placement is rejected") {
    TermOrder o3 = TermOrder::standard(3);
    QuasiMatrix A = symbolic_matrix(3);
    // Row 0 carries two plus cells and no minus cell.
    Placement bad{{{0, 0}, {0, 1}}, {{1, 0}, {2, 1}}};
    CHECK_FALSE(rewrite_to_two_by_two(bad, A, o3).has_value());
}

TEST_CASE("the stray cubic rewrites into two x-minors") {
    TermOrder ord = TermOrder::standard(3);
    QuasiMatrix C = build_C(kSquares, ord);
    Binomial fstar = bn("x2*T[x1^2,t3]*T[x2*x3,t2] - x1*T[x1*x3,t3]*T[x2^2,t2]", ord);

    auto comb = rewrite_fiber_type(fstar, C, ord);
    REQUIRE(comb.has_value());
    check_combination_exact(*comb, fstar, ord);
    CHECK(is_fiber_type_shape(*comb, C, ord));
    CHECK(to_string(*comb, ord) ==
          "-T[x1^2,t3]*(x3*T[x2^2,t2] - x2*T[x2*x3,t2]) + "
          "T[x2^2,t2]*(x3*T[x1^2,t3] - x1*T[x1*x3,t3])");

    REQUIRE(comb->terms.size() == 2);
    for (const auto& t : comb->terms) {
        // Both generators are 2x2 minors through the x column.
        CHECK_FALSE(t.generator.plus.xpart.is_unit());
        CHECK(t.generator.degree() == 2);
        CHECK(generator_among_minors(t.generator, C, ord));
    }
}

TEST_CASE("an x-minor decomposes as itself") {
    TermOrder ord = TermOrder::standard(3);
    QuasiMatrix C = build_C(kTriangle, ord);
    Binomial minor = bn("x2*T[x1,t1] - x1*T[x2,t1]", ord);
    auto comb = rewrite_fiber_type(minor, C, ord);
    REQUIRE(comb.has_value());
    REQUIRE(comb->terms.size() == 1);
    CHECK(comb->terms[0].sign == 1);
    CHECK(comb->terms[0].coefficient.is_unit());
    CHECK(comb->terms[0].generator == minor);
    check_combination_exact(*comb, minor, ord);
    CHECK(is_fiber_type_shape(*comb, C, ord));
}

TEST_CASE("inputs that are not x-quasi-minors are refused") {
    TermOrder ord = TermOrder::standard(3);
    QuasiMatrix C = build_C(kSquares, ord);

    // x-free on both sides: nothing to eliminate.
    CHECK_FALSE(rewrite_fiber_type(
                    bn("T[x1^2,t1]*T[x2^2,t1] - T[x1*x2,t1]*T[x1*x2,t1]", ord), C, ord)
                    .has_value());

    // Two x-variables in a term.
    QuasiMatrix Ct = build_C(kTriangle, ord);
    CHECK_FALSE(rewrite_fiber_type(bn("x1*x2*T[x3,t2]*T[x3,t3] - x3^2*T[x2,t2]*T[x1,t3]", ord),
                                   Ct, ord)
                    .has_value());

    // One x per term but no valid placement in the matrix.
    CHECK_FALSE(rewrite_fiber_type(bn("x1*T[x3^2,t2] - x3*T[x2*x3,t2]", ord), C, ord)
                    .has_value());
}

TEST_CASE("every x-carrying element of the reduced bases is multi-fiber type") {
    for (const Instance* inst : {&kTriangle, &kSquares}) {
        TermOrder ord = TermOrder::standard(inst->n);
        QuasiMatrix C = build_C(*inst, ord);
        std::vector<Binomial> R = reduced_gb(gb_rees(*inst, ord), ord);
        int decomposed = 0;
        for (const auto& b : R) {
            if (b.plus.xpart.is_unit() && b.minus.xpart.is_unit()) continue;
            auto comb = rewrite_fiber_type(b, C, ord);
            REQUIRE(comb.has_value());
            check_combination_exact(*comb, b, ord);
            CHECK(is_fiber_type_shape(*comb, C, ord));
            ++decomposed;
        }
        CHECK(decomposed > 0);
    }
}
