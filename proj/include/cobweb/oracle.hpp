#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cobweb/chain.hpp"
#include "cobweb/counting.hpp"

namespace cobweb::oracle {

using counting::BigCount;
using counting::CompositionType;

/// Ordered list of disjoint non-empty blocks covering {0..n-1}. Elements are
/// ascending within each block.
struct OrderedPartition {
  std::vector<std::vector<std::uint32_t>> blocks;
};

/// Same shape as a CobwebChain but with no constraint on the blocks; the
/// carrier for the experimental graded-poset enumerations.
using GradedRelationChain = CobwebChain;

using PartitionVisitor = std::function<void(const OrderedPartition&)>;
using ChainVisitor = std::function<void(const GradedRelationChain&)>;

/// Exhaustively generates the ordered set partitions of {0..n-1} (into
/// exactly k blocks when k is given) and returns the exact count. Each block
/// ranges over the non-empty subsets of the still-unplaced elements in
/// descending bitmask order. n <= 10.
BigCount enum_ordered_partitions(std::uint32_t n, std::optional<std::uint32_t> k = std::nullopt,
                                 const PartitionVisitor& visit = nullptr);

/// Ordered partitions whose i-th block has exactly t.parts()[i] elements;
/// blocks are chosen as ascending combinations. Sum of parts = n <= 10.
BigCount enum_ordered_partitions_of_type(std::uint32_t n, const CompositionType& t,
                                         const PartitionVisitor& visit = nullptr);

/// Walks every subset of the k-fold product of index sets of sizes
/// f_1..f_k and counts the non-empty ones. Product of parts <= 20.
BigCount enum_nonempty_subsets_of_product(const CompositionType& t);

/// Walks all maps {0..n-1} -> {0..k-1} and counts those hitting every
/// target. k^n <= 10^7.
BigCount enum_surjections(std::uint32_t n, std::uint32_t k);

/// Counts labeled complete cobweb posets on n elements of type t: builds the
/// order relation of each typed ordered partition, deduplicates, and checks
/// that distinct partitions really gave distinct posets. n <= 8.
BigCount enum_complete_cobwebs(std::uint32_t n, const CompositionType& t);

enum class ChainConstraint {
  AllBlocks,       // no restriction: 2^(sum f_i f_{i+1}) chains
  NoEmptyRowCol,   // every non-top vertex has an out-arc, every non-bottom an in-arc
  FerrersBlocks,   // every block is Ferrers dim 1
};

/// Walks every assignment of the inter-level block bits (ascending bit-mask
/// order, block 0 row-major first) and counts the chains of type t whose
/// blocks satisfy the constraint. Sum of f_i*f_{i+1} <= 20.
BigCount enum_graded_chains(const CompositionType& t, ChainConstraint constraint,
                            const ChainVisitor& visit = nullptr);

namespace detail {

// Second, independent implementations backing the cross-checks. The primary
// enumerators above are recursive generators (or plain odometers); these take
// the other route.
BigCount count_ordered_partitions_iterative(std::uint32_t n,
                                            std::optional<std::uint32_t> k = std::nullopt);
BigCount count_ordered_partitions_of_type_iterative(std::uint32_t n, const CompositionType& t);
BigCount count_nonempty_subsets_recursive(const CompositionType& t);
BigCount count_surjections_recursive(std::uint32_t n, std::uint32_t k);
BigCount count_graded_chains_recursive(const CompositionType& t, ChainConstraint constraint);

}  // namespace detail

}  // namespace cobweb::oracle
