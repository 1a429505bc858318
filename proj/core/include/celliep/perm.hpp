#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "celliep/cell_matrix.hpp"
#include "celliep/matrix.hpp"
#include "celliep/spectrum.hpp"

namespace celliep {

/// Bijection on {0..n-1}. The external (1-based) form matches cycle notation:
/// a cycle (a b c) maps a -> b -> c -> a.
class Permutation {
public:
  explicit Permutation(std::vector<std::size_t> mapping);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
  /// Images 1..n of positions 1..n.
  static Permutation from_one_based(const std::vector<long long>& images);
  /// Parses "(1 4)(2 5)(3 7 6)"; fixed points may be omitted. Empty or "()" is the identity.
  static Permutation from_cycles(std::string_view cycles, std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return map_.size(); }
  [[nodiscard]] std::size_t operator()(std::size_t i) const noexcept { return map_[i]; }
  [[nodiscard]] const std::vector<std::size_t>& mapping() const noexcept { return map_; }
  [[nodiscard]] std::vector<long long> one_based() const;

  /// (this o other)(i) = this(other(i)).
  [[nodiscard]] Permutation after(const Permutation& other) const;
  [[nodiscard]] Permutation inverse() const;

  [[nodiscard]] std::vector<std::vector<std::size_t>> cycles() const;
  [[nodiscard]] std::string to_cycle_string() const;

  /// Transpositions t_1, ..., t_m (0-based pairs) with this = t_m o ... o t_1.
  /// Each cycle (c1 c2 ... cm) becomes (c1 c2) first, ..., (c1 cm) last.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> transpositions() const;

  /// Matrix P with P(i, map(i)) = 1.
  [[nodiscard]] Matrix matrix() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::size_t> map_;
};

/// (x_{pi(1)}, ..., x_{pi(n)}).
[[nodiscard]] PositiveVector permute_vector(const PositiveVector& x, const Permutation& pi);

/// P D(pi_1(x)) P == D(x) entrywise, bit for bit, for the transposition pi_1 = (l k).
[[nodiscard]] bool transposition_similarity_check(const PositiveVector& x, std::size_t l,
                                                  std::size_t k);

struct InvarianceReport {
  std::size_t steps = 0;               ///< number of transpositions walked
  bool transpositions_ok = false;      ///< every step passed the exact similarity check
  bool chain_reaches_target = false;   ///< the walked vectors end at pi(x)
  bool spectra_match = false;          ///< Jacobi spectra of D(x), D(pi(x)) agree
  double spectrum_distance = 0.0;

  [[nodiscard]] bool holds() const noexcept {
    return transpositions_ok && chain_reaches_target && spectra_match;
  }
};

[[nodiscard]] InvarianceReport spectrum_invariance_check(const PositiveVector& x,
                                                         const Permutation& pi,
                                                         double tol = kSpectrumTolerance);

}  // namespace celliep
