#include "celliep/json_io.hpp"

#include <string>

#include "celliep/errors.hpp"

namespace celliep::json_io {

namespace {

std::vector<double> reals(const json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw DomainError(std::string(what) + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::size_t> counts(const json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array of integers");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw DomainError(std::string(what) + " must contain nonnegative integers");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw DomainError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json to_json(const Matrix& m) {
  return json{{"n", m.rows()}, {"rows", m.to_rows()}};
}

json to_json(const PositiveVector& x) { return json{{"x", x.to_vector()}}; }

json to_json(const Spectrum& s) { return json{{"eigenvalues", s.values()}}; }

json to_json(const ReductionResult& r) {
  json blocks = json::array();
  for (const auto& b : r.known_blocks) blocks.push_back({{"value", b.value}, {"count", b.count}});
  json ops = json::array();
  for (const auto& op : r.ops) {
    json o{{"kind", op.kind == ElementaryOp::Kind::swap ? "swap" : "row_sum"},
           {"i", op.i + 1},
           {"j", op.j + 1}};
    if (op.kind == ElementaryOp::Kind::row_sum) o["lambda"] = op.lambda;
    ops.push_back(std::move(o));
  }
  std::vector<std::size_t> perm;
  for (std::size_t v : r.permutation) perm.push_back(v + 1);
  return json{{"core", r.core.to_rows()},
              {"known_blocks", std::move(blocks)},
              {"ops", std::move(ops)},
              {"permutation", std::move(perm)}};
}

json to_json(const GroupedSpec& g) {
  return json{{"tails", g.tails()}, {"multiplicities", g.multiplicities()}};
}

json to_json(const IEPSolution& s) {
  return json{{"x", s.x.to_vector()},
              {"head", s.head},
              {"spectrum", s.full_spectrum.values()},
              {"dominant_head", s.dominant_head}};
}

json to_json(const Permutation& p) {
  return json{{"mapping", p.one_based()}, {"cycles", p.to_cycle_string()}};
}

json to_json(const MembershipReport& r) {
  return json{{"accepted", r.accepted},
              {"condition1", r.condition1},
              {"condition2", r.condition2},
              {"tails_present", r.tails_present},
              {"failures", r.failures}};
}

json to_json(const InvarianceReport& r) {
  return json{{"holds", r.holds()},
              {"steps", r.steps},
              {"transpositions_ok", r.transpositions_ok},
              {"chain_reaches_target", r.chain_reaches_target},
              {"spectra_match", r.spectra_match},
              {"spectrum_distance", r.spectrum_distance}};
}

Matrix matrix_from_json(const json& j) {
  const json& rows_json = j.is_array() ? j : field(j, "rows");
  if (!rows_json.is_array()) throw DomainError("\"rows\" must be an array");
  std::vector<std::vector<double>> rows;
  for (const auto& r : rows_json) rows.push_back(reals(r, "matrix row"));
  Matrix m = Matrix::from_rows(rows);
  if (j.is_object() && j.contains("n")) {
    const json& n = j.at("n");
    if (!n.is_number_integer() || n.get<long long>() != static_cast<long long>(m.rows()))
      throw DomainError("\"n\" does not match the number of rows");
  }
  return m;
}

PositiveVector vector_from_json(const json& j) {
  return PositiveVector(reals(j.is_array() ? j : field(j, "x"), "vector"));
}

std::vector<double> values_from_json(const json& j) {
  return reals(j.is_array() ? j : field(j, "eigenvalues"), "spectrum");
}

GroupedSpec grouped_spec_from_json(const json& j) {
  return GroupedSpec(reals(field(j, "tails"), "tails"),
                     counts(field(j, "multiplicities"), "multiplicities"));
}

Permutation permutation_from_json(const json& j, std::size_t n) {
  if (j.is_string()) return Permutation::from_cycles(j.get<std::string>(), n);
  if (j.is_array()) {
    std::vector<long long> images;
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw DomainError("permutation mapping must be integers");
      images.push_back(v.get<long long>());
    }
    return Permutation::from_one_based(images);
  }
  if (j.is_object() && j.contains("mapping")) return permutation_from_json(j.at("mapping"), n);
  if (j.is_object() && j.contains("cycles")) {
    if (!j.at("cycles").is_string()) throw DomainError("\"cycles\" must be a string");
    return Permutation::from_cycles(j.at("cycles").get<std::string>(), n);
  }
  throw DomainError("permutation needs \"mapping\" or \"cycles\"");
}

}  // namespace celliep::json_io
