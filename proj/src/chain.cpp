#include "cobweb/chain.hpp"

#include <string>

#include "cobweb/errors.hpp"
#include "cobweb/ferrers.hpp"
#include "cobweb/matrix_ops.hpp"

namespace cobweb {

LevelSequence::LevelSequence(std::vector<std::uint32_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw ArgumentError("LevelSequence: need at least one level");
  offsets_.reserve(sizes_.size());
  for (std::uint32_t f : sizes_) {
    if (f == 0) throw ArgumentError("LevelSequence: level sizes must be positive");
    offsets_.push_back(total_);
    total_ += f;
  }
}

std::uint32_t LevelSequence::size(std::size_t level) const {
  if (level >= sizes_.size()) {
    throw BoundsError("LevelSequence: level " + std::to_string(level) + " out of range");
  }
  return sizes_[level];
}

std::size_t LevelSequence::offset(std::size_t level) const {
  if (level >= sizes_.size()) {
    throw BoundsError("LevelSequence: level " + std::to_string(level) + " out of range");
  }
  return offsets_[level];
}

CobwebChain::CobwebChain(LevelSequence levels, std::vector<BoolMatrix> blocks)
    : levels_(std::move(levels)), blocks_(std::move(blocks)) {
  const std::size_t k = levels_.level_count();
  if (blocks_.size() + 1 != k) {
    throw ShapeError("CobwebChain: " + std::to_string(k) + " levels need " +
                     std::to_string(k - 1) + " blocks, got " + std::to_string(blocks_.size()));
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (blocks_[i].rows() != levels_.size(i) || blocks_[i].cols() != levels_.size(i + 1)) {
      throw ShapeError("CobwebChain: block " + std::to_string(i) + " must be " +
                       std::to_string(levels_.size(i)) + "x" + std::to_string(levels_.size(i + 1)) +
                       ", got " + std::to_string(blocks_[i].rows()) + "x" +
                       std::to_string(blocks_[i].cols()));
    }
  }
}

CobwebChain CobwebChain::complete(LevelSequence levels) {
  std::vector<BoolMatrix> blocks;
  for (std::size_t i = 0; i + 1 < levels.level_count(); ++i) {
    blocks.push_back(BoolMatrix::ones(levels.size(i), levels.size(i + 1)));
  }
  return CobwebChain(std::move(levels), std::move(blocks));
}

CobwebChain CobwebChain::dibiclique(std::uint32_t lower, std::uint32_t upper) {
  if (lower == 0 || upper == 0) throw ArgumentError("dibiclique: both sizes must be positive");
  return complete(LevelSequence({lower, upper}));
}

std::size_t CobwebChain::level_of(VertexId v) const {
  if (v.index >= vertex_count()) {
    throw BoundsError("CobwebChain: vertex " + std::to_string(v.index) + " out of range");
  }
  std::size_t level = 0;
  while (v.index >= levels_.offset(level) + levels_.size(level)) ++level;
  return level;
}

std::size_t CobwebChain::position_in_level(VertexId v) const {
  return v.index - levels_.offset(level_of(v));
}

CobwebChain delete_arcs(const CobwebChain& c, std::size_t block_index,
                        std::span<const std::pair<std::uint32_t, std::uint32_t>> arcs) {
  if (block_index >= c.blocks().size()) {
    throw BoundsError("delete_arcs: block index " + std::to_string(block_index) + " out of range");
  }
  std::vector<BoolMatrix> blocks = c.blocks();
  BoolMatrix& b = blocks[block_index];
  for (const auto& [r, col] : arcs) {
    if (r >= b.rows() || col >= b.cols()) {
      throw BoundsError("delete_arcs: arc (" + std::to_string(r) + "," + std::to_string(col) +
                        ") outside block " + std::to_string(block_index));
    }
    b.set(r, col, false);
  }
  return CobwebChain(c.levels(), std::move(blocks));
}

CobwebChain natural_join(const CobwebChain& c1, const CobwebChain& c2) {
  const std::uint32_t last = c1.levels().size(c1.levels().level_count() - 1);
  const std::uint32_t first = c2.levels().size(0);
  if (last != first) {
    throw JoinError("natural_join: shared level sizes differ (" + std::to_string(last) + " vs " +
                    std::to_string(first) + ")");
  }
  std::vector<std::uint32_t> sizes = c1.levels().sizes();
  sizes.insert(sizes.end(), c2.levels().sizes().begin() + 1, c2.levels().sizes().end());
  std::vector<BoolMatrix> blocks = c1.blocks();
  blocks.insert(blocks.end(), c2.blocks().begin(), c2.blocks().end());
  return CobwebChain(LevelSequence(std::move(sizes)), std::move(blocks));
}

BoolMatrix adjacency_matrix(const CobwebChain& c) {
  const std::size_t n = c.vertex_count();
  BoolMatrix out(n, n);
  for (std::size_t i = 0; i < c.blocks().size(); ++i) {
    const BoolMatrix& b = c.blocks()[i];
    const std::size_t ro = c.levels().offset(i);
    const std::size_t co = c.levels().offset(i + 1);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t col = 0; col < b.cols(); ++col)
        if (b.get(r, col)) out.set(ro + r, co + col, true);
  }
  return out;
}

BoolMatrix biadjacency_diag(const CobwebChain& c) {
  if (c.blocks().empty()) {
    throw ArgumentError("biadjacency_diag: a single-level chain has no blocks");
  }
  return direct_sum(std::span<const BoolMatrix>(c.blocks()));
}

BoolMatrix zeta_matrix(const CobwebChain& c) {
  return boolean_geometric_series(adjacency_matrix(c));
}

BoolMatrix strict_order_matrix(const CobwebChain& c) {
  BoolMatrix z = zeta_matrix(c);
  for (std::size_t i = 0; i < z.rows(); ++i) z.set(i, i, false);
  return z;
}

bool leq(const CobwebChain& c, VertexId u, VertexId v) {
  const std::size_t n = c.vertex_count();
  if (u.index >= n || v.index >= n) {
    throw BoundsError("leq: vertex id out of range for chain with " + std::to_string(n) +
                      " vertices");
  }
  return zeta_matrix(c).get(u.index, v.index);
}

bool is_complete(const CobwebChain& c) {
  for (const BoolMatrix& b : c.blocks()) {
    if (b.count_ones() != b.rows() * b.cols()) return false;
  }
  return true;
}

bool is_cobweb(const CobwebChain& c) {
  for (const BoolMatrix& b : c.blocks()) {
    if (!is_ferrers_dim1(b).is_dim1) return false;
  }
  return true;
}

}  // namespace cobweb
