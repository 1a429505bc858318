#include "celliep/perm.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "celliep/eigen.hpp"
#include "celliep/errors.hpp"

namespace celliep {

Permutation::Permutation(std::vector<std::size_t> mapping) : map_(std::move(mapping)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t v : map_) {
    if (v >= map_.size() || seen[v]) throw DomainError("mapping is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  if (a >= n || b >= n) throw DomainError("transposition index out of range");
  if (a == b) throw DomainError("transposition needs distinct indices");
  Permutation p = identity(n);
  std::swap(p.map_[a], p.map_[b]);
  return p;
}

Permutation Permutation::from_one_based(const std::vector<long long>& images) {
  std::vector<std::size_t> m;
  m.reserve(images.size());
  for (long long v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size())
      throw DomainError("permutation image " + std::to_string(v) + " out of range 1.." +
                        std::to_string(images.size()));
    m.push_back(static_cast<std::size_t>(v - 1));
  }
  return Permutation(std::move(m));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t n) {
  Permutation p = identity(n);
  std::vector<bool> used(n, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw DomainError("cycle notation: expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw DomainError("cycle notation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw DomainError("cycle notation: unexpected character '" + std::string(1, text[pos]) +
                          "'");
      std::size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (v > n) break;
        ++pos;
      }
      if (v < 1 || v > n)
        throw DomainError("cycle notation: element out of range 1.." + std::to_string(n));
      if (used[v - 1]) throw DomainError("cycle notation: element repeated");
      used[v - 1] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.map_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return p;
}

std::vector<long long> Permutation::one_based() const {
  std::vector<long long> out;
  out.reserve(map_.size());
  for (std::size_t v : map_) out.push_back(static_cast<long long>(v) + 1);
  return out;
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw DomainError("composition size mismatch");
  std::vector<std::size_t> m(size());
  for (std::size_t i = 0; i < size(); ++i) m[i] = map_[other.map_[i]];
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> m(size());
  for (std::size_t i = 0; i < size(); ++i) m[map_[i]] = i;
  return Permutation(std::move(m));
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t s = 0; s < size(); ++s) {
    if (seen[s] || map_[s] == s) continue;
    std::vector<std::size_t> c;
    for (std::size_t v = s; !seen[v]; v = map_[v]) {
      seen[v] = true;
      c.push_back(v);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

std::vector<std::pair<std::size_t, std::size_t>> Permutation::transpositions() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& c : cycles())
    for (std::size_t i = 1; i < c.size(); ++i) out.emplace_back(c.front(), c[i]);
  return out;
}

Matrix Permutation::matrix() const {
  Matrix p(size(), size());
  for (std::size_t i = 0; i < size(); ++i) p(i, map_[i]) = 1.0;
  return p;
}

PositiveVector permute_vector(const PositiveVector& x, const Permutation& pi) {
  if (pi.size() != x.size())
    throw DomainError("permutation of size " + std::to_string(pi.size()) +
                      " applied to vector of size " + std::to_string(x.size()));
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[pi(i)];
  return PositiveVector(std::move(y));
}

bool transposition_similarity_check(const PositiveVector& x, std::size_t l, std::size_t k) {
  const Permutation t = Permutation::transposition(x.size(), l, k);
  const Matrix p = t.matrix();
  const Matrix conjugated = p * construct_cell_matrix(permute_vector(x, t)).matrix() * p;
  return conjugated == construct_cell_matrix(x).matrix();
}

InvarianceReport spectrum_invariance_check(const PositiveVector& x, const Permutation& pi,
                                           double tol) {
  if (pi.size() != x.size()) throw DomainError("permutation and vector sizes differ");
  InvarianceReport report;
  const auto steps = pi.transpositions();
  report.steps = steps.size();
  report.transpositions_ok = true;

  // pi = t_m o ... o t_1 acts on vectors as t_1(t_2(...t_m(x))).
  PositiveVector current = x;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (!transposition_similarity_check(current, it->first, it->second))
      report.transpositions_ok = false;
    current = permute_vector(current, Permutation::transposition(x.size(), it->first, it->second));
  }
  const PositiveVector target = permute_vector(x, pi);
  report.chain_reaches_target = current == target;

  const Spectrum a = eig_symmetric(construct_cell_matrix(x).matrix());
  const Spectrum b = eig_symmetric(construct_cell_matrix(target).matrix());
  report.spectrum_distance = multiset_distance(a.values(), b.values());
  report.spectra_match = report.spectrum_distance <= tol;
  return report;
}

}  // namespace celliep
