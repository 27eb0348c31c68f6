#include "rees/fiber_type.hpp"

#include "rees/text.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rees {

Polynomial expand(const Combination& c, const TermOrder& ord) {
    Polynomial p;
    for (const CombinationTerm& t : c.terms)
        p.add_scaled(t.coefficient, Coeff(t.sign), t.generator, ord);
    return p;
}

namespace {

SMonomial cell_monomial(const QuasiMatrix& A, const Cell& c) {
    return entry_monomial(*A.at(c.row, c.col), A.n);
}

SMonomial product(const QuasiMatrix& A, const std::vector<Cell>& cells) {
    SMonomial p = SMonomial::unit(A.n);
    for (const Cell& c : cells) p = p * cell_monomial(A, c);
    return p;
}

// Append sign * coeff * (P - Q) as a canonicalized term; drops zero summands.
void emit(Combination& out, const SMonomial& coeff, const SMonomial& P,
          const SMonomial& Q, const TermOrder& ord) {
    auto bin = make_binomial(P, Q, ord);
    if (!bin) return;
    int sign = bin->plus == P ? 1 : -1;
    out.terms.push_back({sign, coeff, *bin});
}

std::optional<Cell> cell_in_row(const std::vector<Cell>& cells, int row) {
    for (const Cell& c : cells)
        if (c.row == row) return c;
    return std::nullopt;
}

std::optional<Cell> cell_in_col(const std::vector<Cell>& cells, int col) {
    for (const Cell& c : cells)
        if (c.col == col) return c;
    return std::nullopt;
}

std::vector<Cell> without(const std::vector<Cell>& cells, const Cell& drop) {
    std::vector<Cell> out;
    for (const Cell& c : cells)
        if (!(c == drop)) out.push_back(c);
    return out;
}

// True when the placement is a binary quasi-minor of A: equal-size sides of
// distinct filled cells, every touched row and column holding exactly one cell
// from each side.
bool valid_placement(const Placement& p, const QuasiMatrix& A) {
    if (p.plus_cells.empty() || p.plus_cells.size() != p.minus_cells.size())
        return false;
    std::set<Cell> seen;
    std::map<int, std::pair<int, int>> rows, cols;
    for (int side = 0; side < 2; ++side) {
        for (const Cell& c : side == 0 ? p.plus_cells : p.minus_cells) {
            if (c.row < 0 || c.row >= A.n || c.col < 0 || c.col >= A.cols())
                return false;
            if (!A.at(c.row, c.col)) return false;
            if (!seen.insert(c).second) return false;
            (side == 0 ? rows[c.row].first : rows[c.row].second) += 1;
            (side == 0 ? cols[c.col].first : cols[c.col].second) += 1;
        }
    }
    for (const auto& [_, count] : rows)
        if (count != std::pair<int, int>(1, 1)) return false;
    for (const auto& [_, count] : cols)
        if (count != std::pair<int, int>(1, 1)) return false;
    return true;
}

// The honest-matrix pivot recursion.  V and W are the cells of the two terms;
// each pass removes the pivot 2x2 minor and either swaps the pivot entry U in
// for the V side (generic) or, when U occupies W's second cell, cancels that
// cell from both sides at once.
bool decompose_full(const QuasiMatrix& A, const std::vector<Cell>& V,
                    const std::vector<Cell>& W, const SMonomial& coeff,
                    const TermOrder& ord, Combination& out) {
    if (V.empty()) return true; // zero difference, nothing to add
    if (V.size() == 1) return false; // cannot arise from a valid placement
    std::vector<Cell> sv = V;
    std::sort(sv.begin(), sv.end());
    const Cell V1 = sv.front();
    const auto W1 = cell_in_row(W, V1.row);
    if (!W1) return false;
    const auto V2 = cell_in_col(V, W1->col);
    if (!V2) return false;
    const auto W2 = cell_in_row(W, V2->row);
    if (!W2) return false;
    const Cell Upos{V2->row, V1.col};
    if (!A.at(Upos.row, Upos.col)) return false; // pivot entry missing

    std::vector<Cell> restV = without(without(V, V1), *V2);
    emit(out, coeff * product(A, restV),
         cell_monomial(A, V1) * cell_monomial(A, *V2),
         cell_monomial(A, Upos) * cell_monomial(A, *W1), ord);

    if (Upos == *W2) {
        // Degenerate branch: the pivot entry IS W's cell in V2's row, so that
        // cell factors out of both terms of the remainder.
        return decompose_full(A, restV, without(without(W, *W1), *W2),
                              coeff * cell_monomial(A, *W1) * cell_monomial(A, *W2),
                              ord, out);
    }
    std::vector<Cell> nextV = restV;
    nextV.push_back(Upos);
    return decompose_full(A, nextV, without(W, *W1),
                          coeff * cell_monomial(A, *W1), ord, out);
}

} // namespace

std::optional<Combination> rewrite_to_two_by_two(const Placement& place,
                                                 const QuasiMatrix& A,
                                                 const TermOrder& ord) {
    if (!valid_placement(place, A)) return std::nullopt;
    Combination out;
    if (!decompose_full(A, place.plus_cells, place.minus_cells,
                        SMonomial::unit(A.n), ord, out))
        return std::nullopt;
    return out;
}

namespace {

// The x-row pivot recursion for f = x_i V1..Vm - x_j W1..Wm placed in C.
// W1 is the trailing term's T-cell in x_i's row, V1 the leading term's cell in
// W1's column, v = row(V1).  When v lands on x_j's row the pivot minor and an
// x-free remainder split off; otherwise the recursion continues on an x-binary
// quasi-minor with one T-cell less per side.
bool decompose_fiber(const QuasiMatrix& C, const Cell& xi,
                     const std::vector<Cell>& V, const Cell& xj,
                     const std::vector<Cell>& W, const SMonomial& coeff,
                     const TermOrder& ord, Combination& out) {
    if (V.empty() || V.size() != W.size()) return false;
    const auto W1 = cell_in_row(W, xi.row);
    if (!W1) return false;
    const auto V1 = cell_in_col(V, W1->col);
    if (!V1) return false;
    const int v = V1->row;

    std::vector<Cell> restV = without(V, *V1);
    std::vector<Cell> restW = without(W, *W1);
    const SMonomial coeff_minor = coeff * product(C, restV);

    if (v == xj.row) {
        emit(out, coeff_minor, cell_monomial(C, xi) * cell_monomial(C, *V1),
             cell_monomial(C, xj) * cell_monomial(C, *W1), ord);
        if (!restV.empty())
            emit(out, coeff * cell_monomial(C, xj) * cell_monomial(C, *W1),
                 product(C, restV), product(C, restW), ord);
        return true;
    }
    const Cell xv{v, xi.col};
    if (!C.at(xv.row, xv.col)) return false;
    emit(out, coeff_minor, cell_monomial(C, xi) * cell_monomial(C, *V1),
         cell_monomial(C, xv) * cell_monomial(C, *W1), ord);
    return decompose_fiber(C, xv, restV, xj, restW,
                           coeff * cell_monomial(C, *W1), ord, out);
}

} // namespace

std::optional<Combination> rewrite_fiber_type(const Binomial& f, const QuasiMatrix& C,
                                              const TermOrder& ord) {
    if (f.plus.xpart.degree() != 1 || f.minus.xpart.degree() != 1)
        return std::nullopt;
    auto place = validate_binary_quasi_minor(f, C);
    if (!place) return std::nullopt;

    auto split = [&C](const std::vector<Cell>& cells)
        -> std::optional<std::pair<Cell, std::vector<Cell>>> {
        std::optional<Cell> xcell;
        std::vector<Cell> ts;
        for (const Cell& c : cells) {
            if (entry_is_x(*C.at(c.row, c.col))) {
                if (xcell) return std::nullopt;
                xcell = c;
            } else {
                ts.push_back(c);
            }
        }
        if (!xcell) return std::nullopt;
        return std::pair(*xcell, ts);
    };
    auto plus = split(place->plus_cells);
    auto minus = split(place->minus_cells);
    if (!plus || !minus) return std::nullopt;

    Combination out;
    if (!decompose_fiber(C, plus->first, plus->second, minus->first, minus->second,
                         SMonomial::unit(C.n), ord, out))
        return std::nullopt;
    return out;
}

bool is_fiber_type_shape(const Combination& c, const QuasiMatrix& C,
                         const TermOrder& ord) {
    std::vector<Binomial> minors = two_by_two_minors(C, ord);
    std::set<Binomial> minor_set(minors.begin(), minors.end());
    for (const CombinationTerm& t : c.terms) {
        const Binomial& g = t.generator;
        if (g.plus.xpart.is_unit() && g.minus.xpart.is_unit()) continue;
        if (g.plus.xpart.degree() == 1 && g.minus.xpart.degree() == 1 &&
            minor_set.count(g))
            continue;
        return false;
    }
    return true;
}

std::string to_string(const Combination& c, const TermOrder& ord) {
    if (c.terms.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
        const CombinationTerm& t = c.terms[i];
        if (i == 0)
            os << (t.sign < 0 ? "-" : "");
        else
            os << (t.sign < 0 ? " - " : " + ");
        if (!t.coefficient.is_unit()) os << to_string(t.coefficient, ord) << "*";
        os << "(" << to_string(t.generator, ord) << ")";
    }
    return os.str();
}

} // namespace rees
