#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "celliep/cell_matrix.hpp"
#include "celliep/matrix.hpp"
#include "celliep/spectrum.hpp"

namespace celliep {

/// Elementary similarity E M E^-1. Indices are 0-based.
///  swap(i, j):         E = W_ij, exchange rows i, j and columns i, j.
///  row_sum(i, j, lam): E = S_ij(lam), R_i += lam R_j, then C_j -= lam C_i.
struct ElementaryOp {
  enum class Kind { swap, row_sum };

  Kind kind = Kind::swap;
  std::size_t i = 0;
  std::size_t j = 0;
  double lambda = 0.0;

  static ElementaryOp make_swap(std::size_t i, std::size_t j);
  static ElementaryOp make_row_sum(std::size_t i, std::size_t j, double lambda);

  friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

/// A run of equal forced eigenvalues -2 x_g with multiplicity l_g - 1.
struct KnownBlock {
  double value;
  std::size_t count;

  friend bool operator==(const KnownBlock&, const KnownBlock&) = default;
};

struct ReductionResult {
  Matrix core;                           ///< k x k leading block, equal to build_dk
  std::vector<KnownBlock> known_blocks;  ///< group 1 first
  std::vector<ElementaryOp> ops;         ///< in application order, on D(x) of the input x
  std::vector<std::size_t> permutation;  ///< grouped[i] = x[permutation[i]]
  GroupedVector grouped;
};

[[nodiscard]] Matrix apply_similarity(const Matrix& m, const ElementaryOp& op);

/// Apply ops in order.
[[nodiscard]] Matrix replay(const Matrix& m, std::span<const ElementaryOp> ops);

/// The k x k core of a grouped cell matrix:
///   (i, i) = (l_{k-i+1} - 1) 2 x_{k-i+1}
///   (i, j) = l_{k-j+1} (x_{k-j+1} + x_{k-i+1})
[[nodiscard]] Matrix build_dk(const GroupedVector& g);

/// Reduce D(x) by elementary similarities to [[core, *], [0, diag(known blocks)]].
/// Entries of x are first brought into contiguous groups by swaps.
[[nodiscard]] ReductionResult reduce_grouped(const PositiveVector& x,
                                             double group_tol = kGroupingTolerance);

/// eig_small_general(core) together with the known blocks.
[[nodiscard]] Spectrum spectrum_via_reduction(const PositiveVector& x,
                                              double tol = kSpectrumTolerance);

/// Replays a reduction on D(x) and measures how far the result is from the claimed form.
struct ReductionAudit {
  double max_forced_zero = 0.0;  ///< largest |entry| that must vanish
  double max_core_error = 0.0;   ///< largest |leading block - build_dk|
  double max_block_error = 0.0;  ///< largest |trailing diagonal - known block value|
  Matrix transformed;
};

[[nodiscard]] ReductionAudit audit_reduction(const PositiveVector& x, const ReductionResult& r);

}  // namespace celliep
