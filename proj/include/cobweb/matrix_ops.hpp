#pragma once

#include <initializer_list>
#include <span>

#include "cobweb/bool_matrix.hpp"
#include "cobweb/real_matrix.hpp"

namespace cobweb {

/// Boolean matrix product: out[i][j] = 1 iff some t has a[i][t] = b[t][j] = 1.
BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);

/// Boolean k-th power of a square matrix; k = 0 gives the identity.
BoolMatrix bool_power(const BoolMatrix& a, std::size_t k);

/// Block-diagonal direct sum of the blocks, in order. Block i lands at row
/// offset sum of earlier row counts and column offset sum of earlier column
/// counts; everything else is 0.
BoolMatrix direct_sum(std::span<const BoolMatrix> blocks);
BoolMatrix direct_sum(std::initializer_list<BoolMatrix> blocks);

/// Standard Kronecker product, (a.rows*b.rows) x (a.cols*b.cols).
RealMatrix kronecker_product(const RealMatrix& a, const RealMatrix& b);

/// Kronecker sum of square matrices: a (x) I + I (x) b.
RealMatrix kronecker_sum(const RealMatrix& a, const RealMatrix& b);

/// Matrix exponential by direct series summation. Terms are added until the
/// series tail, bounded through the infinity norm of m, falls below tol.
RealMatrix real_exp(const RealMatrix& m, double tol);

/// Reflexive-transitive closure as the Boolean geometric series
/// I | a | a^2 | a^3 | ..., accumulated to a fixed point. The fixed point is
/// reached within a.rows() steps.
BoolMatrix boolean_geometric_series(const BoolMatrix& a);

/// Reflexive-transitive closure by the classic Warshall triple loop over a
/// reflexively seeded copy. Independent of the geometric series and kept
/// entrywise on purpose: the two routes cross-check each other.
BoolMatrix warshall_closure(const BoolMatrix& a);

}  // namespace cobweb
