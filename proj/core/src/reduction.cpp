#include "celliep/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "celliep/eigen.hpp"
#include "celliep/errors.hpp"

namespace celliep {

namespace {

void check_op(const Matrix& m, const ElementaryOp& op) {
  if (!m.is_square()) throw DomainError("similarity needs a square matrix");
  if (op.i >= m.rows() || op.j >= m.rows())
    throw DomainError("elementary op index out of range (" + std::to_string(op.i + 1) + ", " +
                      std::to_string(op.j + 1) + ") for order " + std::to_string(m.rows()));
  if (op.i == op.j) throw DomainError("elementary op needs distinct indices");
}

void apply_in_place(Matrix& m, const ElementaryOp& op) {
  check_op(m, op);
  if (op.kind == ElementaryOp::Kind::swap) {
    m.swap_rows(op.i, op.j);
    m.swap_cols(op.i, op.j);
    return;
  }
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) m(op.i, c) += op.lambda * m(op.j, c);
  for (std::size_t r = 0; r < n; ++r) m(r, op.j) -= op.lambda * m(r, op.i);
}

// Emit swaps turning the arrangement `current` into `target` (both hold labels).
void collect_by_swaps(std::vector<std::size_t>& current, const std::vector<std::size_t>& target,
                      std::vector<ElementaryOp>& ops) {
  for (std::size_t t = 0; t < target.size(); ++t) {
    if (current[t] == target[t]) continue;
    const auto it = std::find(current.begin() + static_cast<std::ptrdiff_t>(t + 1),
                              current.end(), target[t]);
    const auto q = static_cast<std::size_t>(it - current.begin());
    ops.push_back(ElementaryOp::make_swap(t, q));
    std::swap(current[t], current[q]);
  }
}

}  // namespace

ElementaryOp ElementaryOp::make_swap(std::size_t i, std::size_t j) {
  if (i == j) throw DomainError("swap needs distinct indices");
  return ElementaryOp{Kind::swap, i, j, 0.0};
}

ElementaryOp ElementaryOp::make_row_sum(std::size_t i, std::size_t j, double lambda) {
  if (i == j) throw DomainError("row sum needs distinct indices");
  return ElementaryOp{Kind::row_sum, i, j, lambda};
}

Matrix apply_similarity(const Matrix& m, const ElementaryOp& op) {
  Matrix out = m;
  apply_in_place(out, op);
  return out;
}

Matrix replay(const Matrix& m, std::span<const ElementaryOp> ops) {
  Matrix out = m;
  for (const auto& op : ops) apply_in_place(out, op);
  return out;
}

Matrix build_dk(const GroupedVector& g) {
  const std::size_t k = g.groups();
  const auto& x = g.distinct_values();
  const auto& l = g.multiplicities();
  Matrix d(k, k);
  // Row/column i of the core belongs to group k - i (0-based: k - 1 - i).
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t gi = k - 1 - i;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t gj = k - 1 - j;
      const double lj = static_cast<double>(l[gj]);
      d(i, j) = i == j ? (lj - 1.0) * (2.0 * x[gj]) : lj * (x[gj] + x[gi]);
    }
  }
  return d;
}

ReductionResult reduce_grouped(const PositiveVector& x, double group_tol) {
  Grouping grouping = group_entries(x, group_tol);
  const GroupedVector& g = grouping.grouped;
  const std::size_t n = x.size();
  const std::size_t k = g.groups();
  const auto& mult = g.multiplicities();

  std::vector<ElementaryOp> ops;

  // Bring equal entries together: position t must hold original index order[t].
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  collect_by_swaps(labels, grouping.order, ops);

  std::vector<std::size_t> start(k);
  for (std::size_t s = 0, acc = 0; s < k; ++s) {
    start[s] = acc;
    acc += mult[s];
  }

  // Last group first; within a group, the trailing rows are cleared against its first row.
  for (std::size_t s = k; s-- > 0;) {
    const std::size_t first = start[s];
    for (std::size_t p = first + mult[s] - 1; p > first; --p)
      ops.push_back(ElementaryOp::make_row_sum(p, first, -1.0));
  }

  // Core rows are the first rows of groups k, k-1, ..., 1; then the cleared rows,
  // group 1 first.
  std::vector<std::size_t> target;
  target.reserve(n);
  for (std::size_t s = k; s-- > 0;) target.push_back(start[s]);
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t p = start[s] + 1; p < start[s] + mult[s]; ++p) target.push_back(p);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  collect_by_swaps(labels, target, ops);

  const Matrix reduced = replay(construct_cell_matrix(x).matrix(), ops);

  std::vector<KnownBlock> blocks;
  blocks.reserve(k);
  for (std::size_t s = 0; s < k; ++s)
    blocks.push_back(KnownBlock{-2.0 * g.distinct_values()[s], mult[s] - 1});

  return ReductionResult{reduced.leading(k), std::move(blocks), std::move(ops),
                         std::move(grouping.order), g};
}

Spectrum spectrum_via_reduction(const PositiveVector& x, double tol) {
  const ReductionResult r = reduce_grouped(x);
  std::vector<double> values = eig_small_general(r.core).values();
  for (const auto& b : r.known_blocks) values.insert(values.end(), b.count, b.value);
  return Spectrum(std::move(values), tol);
}

ReductionAudit audit_reduction(const PositiveVector& x, const ReductionResult& r) {
  ReductionAudit audit;
  audit.transformed = replay(construct_cell_matrix(x).matrix(), r.ops);
  const Matrix& t = audit.transformed;
  const std::size_t n = t.rows();
  const std::size_t k = r.core.rows();

  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) audit.max_forced_zero = std::max(audit.max_forced_zero, std::abs(t(i, j)));

  audit.max_core_error = max_abs_diff(t.leading(k), build_dk(r.grouped));

  std::size_t pos = k;
  for (const auto& b : r.known_blocks)
    for (std::size_t c = 0; c < b.count; ++c, ++pos) {
      if (pos >= n) {
        audit.max_block_error = std::numeric_limits<double>::infinity();
        return audit;
      }
      audit.max_block_error = std::max(audit.max_block_error, std::abs(t(pos, pos) - b.value));
    }
  if (pos != n) audit.max_block_error = std::numeric_limits<double>::infinity();
  return audit;
}

}  // namespace celliep
