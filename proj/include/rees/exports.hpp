// Serialization: Macaulay2 cross-check scripts, JSON payloads, DOT graphs.
#pragma once

#include "rees/binomial.hpp"
#include "rees/graph.hpp"
#include "rees/instance.hpp"
#include "rees/quasi_matrix.hpp"

#include <string>
#include <vector>

namespace rees {

// A standalone Macaulay2 script declaring the ambient ring (x- and
// T-variables), the ideal spanned by G, and a Groebner-basis printout, for
// cross-checking in an external computer-algebra system.  An empty G yields a
// valid empty-ideal script.
std::string export_m2(const std::vector<Binomial>& G, const Instance& inst,
                      const TermOrder& ord);

// Schema-versioned JSON for a basis listing, a quasi-matrix (explicit
// (row, column, entry) triples), or a full report envelope
// {tool_version, instance_hash, results[]}.
std::string basis_to_json(const std::vector<Binomial>& G, const Instance& inst,
                          const TermOrder& ord);
std::string matrix_to_json(const QuasiMatrix& C, const Instance& inst);
std::string report_envelope(const Instance& inst, const std::string& results_json);

extern const char* const tool_version;

} // namespace rees
