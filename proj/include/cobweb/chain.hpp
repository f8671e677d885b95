#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cobweb/bool_matrix.hpp"

namespace cobweb {

/// Ordered tuple of positive level sizes <f_1,...,f_k>. The total vertex
/// count N is the sum; level r occupies the global index range
/// [offset(r), offset(r) + size(r)) in level order.
class LevelSequence {
public:
  explicit LevelSequence(std::vector<std::uint32_t> sizes);

  std::size_t level_count() const { return sizes_.size(); }
  std::uint32_t size(std::size_t level) const;
  std::size_t offset(std::size_t level) const;
  std::size_t vertex_count() const { return total_; }
  const std::vector<std::uint32_t>& sizes() const { return sizes_; }

  bool operator==(const LevelSequence& other) const { return sizes_ == other.sizes_; }

private:
  std::vector<std::uint32_t> sizes_;
  std::vector<std::size_t> offsets_;  // offsets_[r] = sum of sizes before level r
  std::size_t total_ = 0;
};

/// Global vertex index, < N of the chain it refers to.
struct VertexId {
  std::size_t index = 0;
};

/// A graded digraph given as a level sequence plus one biadjacency block per
/// consecutive level pair: block i has shape f_i x f_{i+1} and codes the arcs
/// from level i to level i+1. A single-level chain is an antichain and has no
/// blocks. Chains are immutable values.
class CobwebChain {
public:
  CobwebChain(LevelSequence levels, std::vector<BoolMatrix> blocks);

  /// Complete chain: every block all-ones.
  static CobwebChain complete(LevelSequence levels);

  /// Two-level complete chain, the directed complete bipartite graph with
  /// `lower` black and `upper` white vertices.
  static CobwebChain dibiclique(std::uint32_t lower, std::uint32_t upper);

  const LevelSequence& levels() const { return levels_; }
  const std::vector<BoolMatrix>& blocks() const { return blocks_; }
  std::size_t vertex_count() const { return levels_.vertex_count(); }

  std::size_t level_of(VertexId v) const;
  std::size_t position_in_level(VertexId v) const;

  bool operator==(const CobwebChain& other) const = default;

private:
  LevelSequence levels_;
  std::vector<BoolMatrix> blocks_;
};

/// Copy of the chain with the listed (row, col) entries of one block cleared.
CobwebChain delete_arcs(const CobwebChain& c, std::size_t block_index,
                        std::span<const std::pair<std::uint32_t, std::uint32_t>> arcs);

/// Glue two chains along the shared level: the last level of c1 and the first
/// level of c2 must have equal size and are identified positionally. Levels
/// become <f_1..f_k, g_2..g_m> and the block lists concatenate. Non-commutative.
CobwebChain natural_join(const CobwebChain& c1, const CobwebChain& c2);

/// N x N Hasse adjacency matrix: zero except the level-(r, r+1) blocks, which
/// hold blocks()[r]. Strictly upper block-superdiagonal, hence nilpotent.
BoolMatrix adjacency_matrix(const CobwebChain& c);

/// Direct sum diag(B_1, ..., B_{k-1}) of the chain's blocks. Requires at
/// least two levels.
BoolMatrix biadjacency_diag(const CobwebChain& c);

/// Reflexive order of the associated poset: the Boolean geometric series of
/// the adjacency matrix.
BoolMatrix zeta_matrix(const CobwebChain& c);

/// Strict order: the zeta matrix with the diagonal cleared.
BoolMatrix strict_order_matrix(const CobwebChain& c);

/// u <= v in the associated poset.
bool leq(const CobwebChain& c, VertexId u, VertexId v);

/// Every block all-ones.
bool is_complete(const CobwebChain& c);

/// Every block is a Ferrers dim-1 biadjacency matrix. Complete implies cobweb.
bool is_cobweb(const CobwebChain& c);

}  // namespace cobweb
