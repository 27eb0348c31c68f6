#include "rees/quasi_matrix.hpp"

#include "rees/text.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace rees {

SMonomial entry_monomial(const Entry& e, int n) {
    if (std::holds_alternative<int>(e))
        return SMonomial(XMonomial::variable(std::get<int>(e), n), {});
    return SMonomial(XMonomial::unit(n), {std::get<TVariable>(e)});
}

bool entry_is_x(const Entry& e) { return std::holds_alternative<int>(e); }

int QuasiMatrix::filled_cell_count() const {
    int count = 0;
    for (const auto& row : cells)
        for (const auto& cell : row)
            if (cell) ++count;
    return count;
}

std::vector<int> QuasiMatrix::block_columns(int l) const {
    std::vector<int> out;
    for (int c = 0; c < cols(); ++c)
        if (columns[c].block == l) out.push_back(c);
    return out;
}

QuasiMatrix build_B(int l, const Instance& inst, const TermOrder& ord) {
    assert(l >= 1 && l <= inst.r());
    const int n = inst.n;
    const int a = inst.block(l).power;
    // Columns: all degree-a monomials over every variable divisible by x_1,
    // i.e. x_1 times the degree-(a-1) monomials, ascending grevlex.
    IdealSpec all;
    for (int i = 1; i <= n; ++i) all.support.push_back(i);
    all.power = a - 1;
    XMonomial x1 = XMonomial::variable(1, n);
    std::vector<XMonomial> cols_m;
    for (const XMonomial& m : generators(all, n, ord)) cols_m.push_back(m * x1);
    std::sort(cols_m.begin(), cols_m.end(), [&](const XMonomial& x, const XMonomial& y) {
        return grevlex_compare(x, y, ord) < 0;
    });

    QuasiMatrix B;
    B.n = n;
    B.cells.assign(n, std::vector<std::optional<Entry>>(cols_m.size()));
    for (std::size_t c = 0; c < cols_m.size(); ++c) {
        B.columns.push_back({l, cols_m[c], to_string(TVariable(l, cols_m[c]))});
        XMonomial base = x1.divide_into(cols_m[c]); // m / x_1
        for (int v = 1; v <= n; ++v)
            B.cells[v - 1][c] = Entry(TVariable(l, base * XMonomial::variable(v, n)));
    }
    return B;
}

QuasiMatrix build_C(const Instance& inst, const TermOrder& ord) {
    const int n = inst.n;
    QuasiMatrix C;
    C.n = n;
    C.columns.push_back({0, std::nullopt, "x"});
    for (int l = 1; l <= inst.r(); ++l) {
        const IdealSpec& spec = inst.block(l);
        const int i1 = spec.support.front(); // least support index
        XMonomial xi1 = XMonomial::variable(i1, n);
        for (const XMonomial& m : generators(spec, n, ord)) {
            if (!xi1.divides(m)) continue;
            C.columns.push_back({l, m, to_string(TVariable(l, m))});
        }
    }
    C.cells.assign(n, std::vector<std::optional<Entry>>(C.columns.size()));
    for (int v = 1; v <= n; ++v) C.cells[v - 1][0] = Entry(v);
    for (int c = 1; c < C.cols(); ++c) {
        const int l = C.columns[c].block;
        const IdealSpec& spec = inst.block(l);
        const int i1 = spec.support.front();
        XMonomial base = XMonomial::variable(i1, n).divide_into(*C.columns[c].indexer);
        for (int v : spec.support)
            C.cells[v - 1][c] = Entry(TVariable(l, base * XMonomial::variable(v, n)));
    }
    return C;
}

std::vector<Binomial> two_by_two_minors(const QuasiMatrix& C, const TermOrder& ord,
                                        std::optional<int> block) {
    const int n = C.n;
    std::set<std::pair<SMonomial, SMonomial>> seen;
    std::vector<Binomial> out;
    int max_block = 0;
    for (const auto& col : C.columns) max_block = std::max(max_block, col.block);
    for (int l = 1; l <= max_block; ++l) {
        if (block && *block != l) continue;
        // The sub-quasi-matrix (x | D_l): the x column (if present) plus the
        // block-l columns.
        std::vector<int> cols;
        for (int c = 0; c < C.cols(); ++c)
            if (C.columns[c].block == 0 || C.columns[c].block == l) cols.push_back(c);
        for (std::size_t ci = 0; ci < cols.size(); ++ci) {
            for (std::size_t cj = ci + 1; cj < cols.size(); ++cj) {
                int c1 = cols[ci], c2 = cols[cj];
                for (int u = 0; u < n; ++u) {
                    for (int v = u + 1; v < n; ++v) {
                        const auto &a = C.at(u, c1), &b = C.at(u, c2);
                        const auto &c = C.at(v, c1), &d = C.at(v, c2);
                        if (!a || !b || !c || !d) continue;
                        SMonomial p = entry_monomial(*a, n) * entry_monomial(*d, n);
                        SMonomial q = entry_monomial(*c, n) * entry_monomial(*b, n);
                        auto bin = make_binomial(p, q, ord);
                        if (!bin) continue;
                        if (seen.insert({bin->plus, bin->minus}).second)
                            out.push_back(*bin);
                    }
                }
            }
        }
    }
    sort_basis(out, ord);
    return out;
}

namespace {

// Backtracking search assigning the factors of both terms to distinct cells of
// C so that every touched row and column carries exactly two cells, one from
// each term.  Factors are processed term-by-term; cells are scanned in
// deterministic (row, column) order.
class PlacementSearch {
public:
    PlacementSearch(const Binomial& b, const QuasiMatrix& C) : C_(C) {
        collect_factors(b.plus, plus_factors_);
        collect_factors(b.minus, minus_factors_);
        for (int side = 0; side < 2; ++side) {
            row_used_[side].assign(C.n, 0);
            col_used_[side].assign(C.cols(), 0);
        }
        used_.assign(C.n, std::vector<char>(C.cols(), 0));
    }

    std::optional<Placement> run() {
        if (plus_factors_.size() != minus_factors_.size()) return std::nullopt;
        if (search(0, 0)) {
            Placement p;
            p.plus_cells = cells_[0];
            p.minus_cells = cells_[1];
            return p;
        }
        return std::nullopt;
    }

private:
    void collect_factors(const SMonomial& u, std::vector<Entry>& out) {
        for (int i = 0; i < u.xpart.n(); ++i)
            for (int e = 0; e < u.xpart.exponents[i]; ++e) out.push_back(Entry(i + 1));
        for (const TVariable& t : u.tpart) out.push_back(Entry(t));
    }

    // Every row/column touched by one side must be touched by the other:
    // together with the per-side limits this is exactly "two cells per
    // nonempty row and column, one from each term".
    bool balanced() const {
        for (int i = 0; i < C_.n; ++i)
            if (row_used_[0][i] != row_used_[1][i]) return false;
        for (int c = 0; c < C_.cols(); ++c)
            if (col_used_[0][c] != col_used_[1][c]) return false;
        return true;
    }

    bool search(int side, std::size_t idx) {
        if (side == 0 && idx == plus_factors_.size()) return search(1, 0);
        if (side == 1 && idx == minus_factors_.size()) return balanced();
        const Entry& want = (side == 0 ? plus_factors_ : minus_factors_)[idx];
        for (int row = 0; row < C_.n; ++row) {
            if (row_used_[side][row]) continue;
            for (int col = 0; col < C_.cols(); ++col) {
                if (col_used_[side][col] || used_[row][col]) continue;
                const auto& cell = C_.at(row, col);
                if (!cell || !(*cell == want)) continue;
                used_[row][col] = 1;
                row_used_[side][row] = 1;
                col_used_[side][col] = 1;
                cells_[side].push_back({row, col});
                if (search(side, idx + 1)) return true;
                cells_[side].pop_back();
                used_[row][col] = 0;
                row_used_[side][row] = 0;
                col_used_[side][col] = 0;
            }
        }
        return false;
    }

    const QuasiMatrix& C_;
    std::vector<Entry> plus_factors_, minus_factors_;
    std::vector<char> row_used_[2], col_used_[2];
    std::vector<std::vector<char>> used_;
    std::vector<Cell> cells_[2];
};

} // namespace

std::optional<Placement> validate_binary_quasi_minor(const Binomial& b,
                                                     const QuasiMatrix& C) {
    if (b.plus == b.minus) return std::nullopt;
    return PlacementSearch(b, C).run();
}

namespace {

// Direct cross-block enumeration: walk cell cycles of C.  A connected binary
// quasi-matrix is a cyclic cell sequence c_1..c_{2k} in which consecutive
// cells alternately share a column and a row (closing row-wise back to c_1);
// the two terms take alternate cells.  Admissibility: each term uses at most
// one x-column cell and at most one cell per block.  Canonical traversal:
// c_1 is the minimal cell of the cycle and the first step is the column step,
// so every cycle is produced exactly once.
class CellCycleEnumerator {
public:
    CellCycleEnumerator(const QuasiMatrix& C, const TermOrder& ord)
        : C_(C), ord_(ord) {
        for (int side = 0; side < 2; ++side) row_used_[side].assign(C_.n, 0);
    }

    std::vector<Binomial> run() {
        for (int row = 0; row < C_.n; ++row) {
            for (int col = 0; col < C_.cols(); ++col) {
                if (!C_.at(row, col)) continue;
                start_ = {row, col};
                claim(0, start_);
                extend(/*next_is_column_step=*/true);
                release(0, start_);
            }
        }
        std::vector<Binomial> out(found_.begin(), found_.end());
        sort_basis(out, ord_);
        return out;
    }

private:
    bool admissible(int side, const Cell& c) const {
        if (row_used_[side][c.row]) return false;
        int block = C_.columns[c.col].block;
        if (block == 0) return !x_used_[side];
        return !block_used_[side].count(block);
    }
    void claim(int side, const Cell& c) {
        path_.push_back(c);
        row_used_[side][c.row] = 1;
        int block = C_.columns[c.col].block;
        if (block == 0)
            x_used_[side] = true;
        else
            block_used_[side].insert(block);
    }
    void release(int side, const Cell& c) {
        path_.pop_back();
        row_used_[side][c.row] = 0;
        int block = C_.columns[c.col].block;
        if (block == 0)
            x_used_[side] = false;
        else
            block_used_[side].erase(block);
    }

    void extend(bool next_is_column_step) {
        const Cell last = path_.back(); // by value: claim() may reallocate path_
        const int side = static_cast<int>(path_.size()) % 2; // side of the NEXT cell
        if (next_is_column_step) {
            // Move to the second cell of last's column.
            for (int row = 0; row < C_.n; ++row) {
                Cell next{row, last.col};
                if (row == last.row || !C_.at(row, last.col)) continue;
                // Closing is only legal via a row step; hitting the start here
                // would reuse its cell on the opposite side.
                if (next == start_) continue;
                if (next < start_ || !admissible(side, next)) continue;
                claim(side, next);
                extend(false);
                release(side, next);
            }
            return;
        }
        // Row step: either close the cycle back to the start or move on.
        for (int col = 0; col < C_.cols(); ++col) {
            Cell next{last.row, col};
            if (col == last.col || !C_.at(last.row, col)) continue;
            if (next == start_) {
                if (path_.size() >= 4 && path_.size() % 2 == 0) emit();
                continue;
            }
            if (next < start_ || !admissible(side, next)) continue;
            // The row constraint in `admissible` already forbids revisiting any
            // cell: a revisit would need its row twice on one side.
            claim(side, next);
            extend(true);
            release(side, next);
        }
    }

    void emit() {
        SMonomial a = SMonomial::unit(C_.n);
        SMonomial b = SMonomial::unit(C_.n);
        for (std::size_t i = 0; i < path_.size(); ++i) {
            SMonomial f = entry_monomial(*C_.at(path_[i].row, path_[i].col), C_.n);
            if (i % 2 == 0)
                a = a * f;
            else
                b = b * f;
        }
        auto bin = make_binomial(a, b, ord_);
        if (bin) found_.insert(*bin);
    }

    const QuasiMatrix& C_;
    const TermOrder& ord_;
    Cell start_{0, 0};
    std::vector<Cell> path_;
    bool x_used_[2] = {false, false};
    std::vector<char> row_used_[2];
    std::set<int> block_used_[2];
    std::set<Binomial> found_;
};

} // namespace

std::vector<Binomial> enumerate_cross_block_quasi_minors(const QuasiMatrix& C,
                                                         const TermOrder& ord) {
    return CellCycleEnumerator(C, ord).run();
}

std::string render(const QuasiMatrix& C) {
    std::vector<std::vector<std::string>> text(C.n + 1,
                                               std::vector<std::string>(C.cols()));
    for (int c = 0; c < C.cols(); ++c) {
        text[0][c] = C.columns[c].label;
        for (int rw = 0; rw < C.n; ++rw) {
            const auto& cell = C.at(rw, c);
            if (!cell)
                text[rw + 1][c] = ".";
            else if (entry_is_x(*cell))
                text[rw + 1][c] = "x" + std::to_string(std::get<int>(*cell));
            else
                text[rw + 1][c] = to_string(std::get<TVariable>(*cell));
        }
    }
    std::vector<std::size_t> width(C.cols(), 0);
    for (const auto& row : text)
        for (int c = 0; c < C.cols(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (std::size_t rw = 0; rw < text.size(); ++rw) {
        for (int c = 0; c < C.cols(); ++c) {
            os << text[rw][c];
            if (c + 1 < C.cols())
                os << std::string(width[c] - text[rw][c].size() + 2, ' ');
        }
        os << "\n";
        if (rw == 0) {
            std::size_t total = 0;
            for (int c = 0; c < C.cols(); ++c)
                total += width[c] + (c + 1 < C.cols() ? 2 : 0);
            os << std::string(total, '-') << "\n";
        }
    }
    return os.str();
}

} // namespace rees
