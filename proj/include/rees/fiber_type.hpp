// Constructive rewriters behind the two decomposition results.
//
// rewrite_to_two_by_two: every binary quasi-minor of an honest (fully filled)
// matrix is an R-combination of its 2x2 minors, by the pivot recursion
//   delta = (V1 V2 - U W1) V3..Vn + W1 (U V3..Vn - W2..Wn)
// with U the entry sharing V1's column and V2's row, and a degenerate branch
// when U happens to be the cell W2 (possible only for n >= 4), where the
// second summand factors as W2 (V3..Vn - W3..Wn).
//
// rewrite_fiber_type: every x-binary quasi-minor of C is a combination of 2x2
// x-minors and x-free binary quasi-minors, by the analogous recursion pivoting
// on the x rows; this is the multi-fiber-type property made algorithmic.
#pragma once

#include "rees/binomial.hpp"
#include "rees/quasi_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rees {

// target = sum_i sign_i * coefficient_i * generator_i, exactly.
struct CombinationTerm {
    int sign = 1;          // +1 or -1
    SMonomial coefficient; // monomial cofactor
    Binomial generator;    // canonicalized under the active order
};
struct Combination {
    std::vector<CombinationTerm> terms;
};

// Expands the combination as a polynomial; test hook for the exact identity.
Polynomial expand(const Combination& c, const TermOrder& ord);

// Decomposes the binary quasi-minor given by `place` in the honest matrix A
// into 2x2 minors of A.  A must have no empty cells among the rows/columns
// touched plus the pivot positions (a full matrix always qualifies).  Returns
// nullopt when the placement is not a binary quasi-matrix of A.
std::optional<Combination> rewrite_to_two_by_two(const Placement& place,
                                                 const QuasiMatrix& A,
                                                 const TermOrder& ord);

// Decomposes an x-binary quasi-minor of C into 2x2 x-minors plus x-free
// binary quasi-minors, following the x-row pivot recursion; the placement is
// found with validate_binary_quasi_minor.  Returns nullopt when f does not
// place as an x-binary quasi-minor (exactly one x-cell per term).
std::optional<Combination> rewrite_fiber_type(const Binomial& f, const QuasiMatrix& C,
                                              const TermOrder& ord);

// True when every generator is either x-free or a 2x2 minor using the x
// column; the multi-fiber-type shape of a decomposition.
bool is_fiber_type_shape(const Combination& c, const QuasiMatrix& C,
                         const TermOrder& ord);

std::string to_string(const Combination& c, const TermOrder& ord);

} // namespace rees
