#pragma once

#include <nlohmann/json.hpp>

#include "celliep/cell_matrix.hpp"
#include "celliep/iep.hpp"
#include "celliep/matrix.hpp"
#include "celliep/perm.hpp"
#include "celliep/reduction.hpp"
#include "celliep/spectrum.hpp"

// Wire formats. Indices (ops, permutations) are 1-based on the wire.
//   matrix       {"n": int, "rows": [[real, ...], ...]}
//   vector       {"x": [real, ...]}
//   spectrum     {"eigenvalues": [real, ...]}          (descending)
//   reduction    {"core": [[...]], "known_blocks": [{"value", "count"}],
//                 "ops": [{"kind", "i", "j", "lambda"}], "permutation": [...]}
//   grouped spec {"tails": [real, ...], "multiplicities": [int, ...]}
//   solution     {"x": [...], "head": [...], "spectrum": [...]}
//   permutation  {"mapping": [int, ...]} or {"cycles": "(1 4)(2 5)"}
//
// Readers throw DomainError on schema violations; nlohmann parse errors pass through.

namespace celliep::json_io {

using json = nlohmann::ordered_json;

json to_json(const Matrix& m);
json to_json(const PositiveVector& x);
json to_json(const Spectrum& s);
json to_json(const ReductionResult& r);
json to_json(const GroupedSpec& g);
json to_json(const IEPSolution& s);
json to_json(const Permutation& p);
json to_json(const MembershipReport& r);
json to_json(const InvarianceReport& r);

/// Accepts {"n", "rows"} or a bare array of rows.
Matrix matrix_from_json(const json& j);
/// Accepts {"x": [...]} or a bare array.
PositiveVector vector_from_json(const json& j);
/// Accepts {"eigenvalues": [...]} or a bare array.
std::vector<double> values_from_json(const json& j);
GroupedSpec grouped_spec_from_json(const json& j);
/// Accepts {"mapping"}, {"cycles"}, a bare 1-based array or a cycle string. n is needed
/// only for cycle notation.
Permutation permutation_from_json(const json& j, std::size_t n);

}  // namespace celliep::json_io
