// The explicit Groebner-basis families.
//
// For ker(phi) the family is (a) all 2x2 minors inside each (x | D_l) block of
// C, plus (b) the cross-block binary quasi-minors in which each term takes at
// most one x-column cell and at most one cell per block - enumerated through
// admissible cycles of the cycle graph.  For ker(psi) the x-touching members
// are dropped.  Completeness is certified externally (see oracle.hpp), not
// assumed.
#pragma once

#include "rees/binomial.hpp"
#include "rees/graph.hpp"
#include "rees/instance.hpp"

#include <map>
#include <string>
#include <vector>

namespace rees {

// The full structural family for ker(phi): minors plus cycle binomials,
// deduplicated and sorted by (degree, leading term descending).
std::vector<Binomial> gb_rees(const Instance& inst, const TermOrder& ord);

// The x-free subfamily, a Groebner basis for ker(psi).
std::vector<Binomial> gb_fiber(const Instance& inst, const TermOrder& ord);

// The minimal generating set of the toric ideal (the defining equations as a
// paper would display them).  A multidegree contributes generators exactly
// when its fiber splits into k >= 2 connected components under moves by ideal
// elements of properly smaller multidegree; the k-1 star-connecting binomials
// (each component's smallest element joined to the overall smallest) are
// emitted.  Candidate multidegrees are those of the structural family, which
// is a generating set, so no minimal degree is missed.
std::vector<Binomial> minimal_generators(const Instance& inst, MapKind kind,
                                         const TermOrder& ord);

// Structural guarantees: squarefree leading terms, total degree <= r+1, kernel
// membership under phi (or psi for x-free checks).  Any violation is reported
// as a counterexample; degrees are tallied.
struct StructuralReport {
    bool pass = false;
    std::map<int, int> count_by_degree;
    std::vector<std::string> violations;
};
StructuralReport structural_check(const std::vector<Binomial>& G, const Instance& inst,
                                  const TermOrder& ord);

} // namespace rees
