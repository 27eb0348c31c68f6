// Independent verification machinery for candidate Groebner bases of the two
// toric ideals: ker(phi) (multi-Rees presentation; x-variables allowed in
// preimages) and ker(psi) (multi-fiber ring; preimages are x-free).
//
// Everything here works up to a degree cap and is exhaustive below it: fibers
// are enumerated outright, S-pairs are reduced, sinks are counted.  The cap is
// a resource bound, not a correctness assumption - the structure theorems
// supply the unbounded statement, the oracle checks what is checkable.
#pragma once

#include "rees/binomial.hpp"
#include "rees/instance.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rees {

enum class MapKind {
    rees,  // phi: S = k[x,T] -> k[x,t]
    fiber, // psi: k[T] -> k[x,t]; fibers exclude x-variables
};

// Thrown when a requested computation exceeds a configured resource bound
// (such as a CLI degree cap); distinct from InputError so callers can map the
// two to different exit codes.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All S-monomials with phi-image mu (x-free when kind == fiber), sorted
// descending under ord.  Complete: fibers are finite because every preimage of
// mu has the same total S-degree.
std::vector<SMonomial> fiber(const ImageMonomial& mu, const Instance& inst,
                             MapKind kind, const TermOrder& ord);

// The directed fiber graph at mu for a binomial family B: vertices are the
// fiber elements, and u -> v whenever u - v is a monomial multiple of some
// b in B (edges oriented larger -> smaller under ord).
struct FiberGraph {
    ImageMonomial mu;
    std::vector<SMonomial> vertices;                 // descending under ord
    std::vector<std::pair<int, int>> edges;          // (from, to) indices
    std::vector<int> sinks;                          // vertices with no out-edge
};
FiberGraph build_fiber_graph(const ImageMonomial& mu, const Instance& inst,
                             const std::vector<Binomial>& B, MapKind kind,
                             const TermOrder& ord);

// Shared certificate shape for the verification routines; `witnesses` carries
// rendered counterexample material on failure.
struct Certificate {
    std::string method;
    bool pass = false;
    std::vector<std::string> witnesses;
};

// Checks that every fiber of total S-degree <= degcap has exactly one sink
// under B.  A monomial is a sink iff no leading term of B divides it, so the
// check runs without materializing edges.  Also pre-checks B is contained in
// the kernel.  Fails with the offending image and its sinks.
Certificate unique_sink_certify(const Instance& inst, const std::vector<Binomial>& B,
                                const TermOrder& ord, int degcap,
                                MapKind kind = MapKind::rees);

// Buchberger's criterion: every S-polynomial of a pair from G reduces to zero
// modulo G (pairs with coprime leading terms are skipped by the product
// criterion).  Fails with the first offending pair and its normal form.
Certificate buchberger_verify(const std::vector<Binomial>& G, const TermOrder& ord);

// All differences of distinct fiber elements across every fiber of S-degree <=
// degcap; spans the kernel in each multidegree below the cap.
std::vector<Binomial> brute_force_kernel(const Instance& inst, int degcap,
                                         MapKind kind, const TermOrder& ord);

// Certifies <G> and <H> agree below the cap: every h in H of degree <= degcap
// reduces to zero modulo G, and every g in G lies in the kernel.  G must pass
// buchberger_verify for reduction to decide membership.
Certificate ideal_equal_up_to(const std::vector<Binomial>& G,
                              const std::vector<Binomial>& H, const TermOrder& ord,
                              int degcap, const Instance& inst,
                              MapKind kind = MapKind::rees);

// Standard interreduction of a Groebner basis: keep minimal leading terms,
// then reduce every tail to normal form.  Toric tails stay single monomials.
// Deterministic: divisors with larger leading terms win ties, output sorted by
// (degree, leading term descending).
std::vector<Binomial> reduced_gb(const std::vector<Binomial>& G, const TermOrder& ord);

} // namespace rees
