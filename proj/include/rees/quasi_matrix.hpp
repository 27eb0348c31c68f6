// Quasi-matrices: rectangular arrays with optional entries.
//
// The pipeline's central object is C = (x | D_1 | ... | D_r): one column
// holding x_1..x_n, then for each block l the quasi-matrix D_l whose columns
// are indexed by the generators m' of I_l divisible by x_{i_1} (i_1 the least
// support index of J_l), carrying T_{(x_v/x_{i_1}) m' t_l} at row v for every
// v in the support.  B_l is the full-matrix variant over all n variables with
// pivot x_1, exposed for testing.
#pragma once

#include "rees/binomial.hpp"
#include "rees/instance.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rees {

// A cell either holds an x-variable (1-based index) or a T-variable.
using Entry = std::variant<int, TVariable>;

SMonomial entry_monomial(const Entry& e, int n);
bool entry_is_x(const Entry& e);

struct QuasiColumn {
    int block = 0;                    // 0 for the x column, else 1..r
    std::optional<XMonomial> indexer; // the generator m' indexing the column
    std::string label;
};

struct QuasiMatrix {
    int n = 0; // rows = x_1..x_n
    std::vector<QuasiColumn> columns;
    // cells[row][col]; row 0-based (x_{row+1}), col 0-based into columns.
    std::vector<std::vector<std::optional<Entry>>> cells;

    int cols() const { return static_cast<int>(columns.size()); }
    const std::optional<Entry>& at(int row, int col) const { return cells[row][col]; }
    int filled_cell_count() const;
    // Columns belonging to block l (1-based), as 0-based column indices.
    std::vector<int> block_columns(int l) const;
};

// The full matrix B_l: columns are all degree-a_l monomials in x_1..x_n
// divisible by x_1, ascending grevlex; entry (v, m) = T_{(x_v/x_1) m t_l}.
QuasiMatrix build_B(int l, const Instance& inst, const TermOrder& ord);

// C = (x | D_1 | ... | D_r) as described at the top of this header.
QuasiMatrix build_C(const Instance& inst, const TermOrder& ord);

// All 2x2 minors within (x | D_l) for each block l (or just one block when
// `block` is set): two rows and two columns whose four cells exist give
// e(u,c1)e(v,c2) - e(v,c1)e(u,c2).  Zero differences are dropped, duplicates
// removed, output sorted by (degree, leading term descending).
std::vector<Binomial> two_by_two_minors(const QuasiMatrix& C, const TermOrder& ord,
                                        std::optional<int> block = std::nullopt);

// A placement certifies that a binomial is a binary quasi-minor of C: the two
// terms' factors are assigned to distinct cells such that every touched row
// and column holds exactly two cells, one from each term.
struct Cell {
    int row; // 0-based
    int col; // 0-based
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};
struct Placement {
    std::vector<Cell> plus_cells;  // cells of the leading term's factors
    std::vector<Cell> minus_cells; // cells of the trailing term's factors
};

// Searches for a placement of b in C (terms may be zero-x or carry x factors;
// squared factors need two distinct cells holding the same variable).  Returns
// the first placement found in deterministic cell order, or nullopt.
std::optional<Placement> validate_binary_quasi_minor(const Binomial& b,
                                                     const QuasiMatrix& C);

// Direct enumeration of the connected cross-block binary quasi-minors of C in
// which each term uses at most one x-column cell and at most one cell per
// block.  This walks cell cycles in the quasi-matrix itself, independently of
// the cycle-graph route, and exists to cross-validate that enumeration.
std::vector<Binomial> enumerate_cross_block_quasi_minors(const QuasiMatrix& C,
                                                         const TermOrder& ord);

// Aligned text rendering with '.' for empty cells.
std::string render(const QuasiMatrix& C);

} // namespace rees
