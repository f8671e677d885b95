#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cobweb/bool_matrix.hpp"

namespace cobweb {

/// A 2x2 permutation submatrix found in a Boolean matrix: rows r1 < r2 and
/// columns c1 < c2 inducing [[1,0],[0,1]] or [[0,1],[1,0]].
struct FerrersWitness {
  std::uint32_t r1 = 0, r2 = 0, c1 = 0, c2 = 0;
  bool operator==(const FerrersWitness&) const = default;
};

/// Result of Ferrers analysis. is_dim1 holds exactly when witness is absent.
/// dimension and completion_arcs are filled by the operations that compute
/// them.
struct FerrersReport {
  bool is_dim1 = false;
  std::optional<FerrersWitness> witness;
  std::optional<std::uint32_t> dimension;
  std::optional<std::vector<std::pair<std::uint32_t, std::uint32_t>>> completion_arcs;
};

namespace detail {

/// Exhaustive quadruple scan in lexicographic (r1, r2, c1, c2) order; returns
/// the first permutation submatrix, if any.
std::optional<FerrersWitness> find_permutation_submatrix(const BoolMatrix& b);

/// Second route to the same predicate: the matrix is Ferrers dim 1 iff the
/// row supports form a chain under inclusion.
bool row_supports_nested(const BoolMatrix& b);

}  // namespace detail

/// Ferrers dim-1 test. Runs both routes (quadruple scan and nested-support
/// check) on every call and insists they agree; the scan supplies the witness.
/// The all-zeros matrix is Ferrers dim 1.
FerrersReport is_ferrers_dim1(const BoolMatrix& b);

/// Smallest d <= max_d such that b is the entrywise AND of d Ferrers dim-1
/// matrices, each entrywise >= b; nullopt if no such d. Brute force over
/// Ferrers supersets, so the matrix may have at most 12 cells.
std::optional<std::uint32_t> ferrers_dimension(const BoolMatrix& b, std::uint32_t max_d);

struct FerrersCompletion {
  /// Added arcs in row-major order; the lexicographically smallest among all
  /// minimum-size completions.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
  BoolMatrix completed;
};

/// Minimal set of 0-entries whose flip to 1 makes the matrix Ferrers dim 1,
/// searched by increasing set size. At most 20 cells.
FerrersCompletion min_completion_to_ferrers(const BoolMatrix& b);

}  // namespace cobweb
