#include "cobweb/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cobweb/errors.hpp"
#include "cobweb/ferrers.hpp"

namespace cobweb::oracle {

namespace {

constexpr std::uint32_t kMaxPartitionN = 10;
constexpr std::uint64_t kMaxSurjectionMaps = 10'000'000;
constexpr std::uint64_t kMaxProductCells = 20;
constexpr std::uint32_t kMaxCobwebN = 8;
constexpr std::uint64_t kMaxChainBits = 20;

std::vector<std::uint32_t> mask_elements(std::uint32_t mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; mask >> i; ++i)
    if ((mask >> i) & 1u) out.push_back(i);
  return out;
}

// k^n with an overflow-safe cap check.
std::uint64_t checked_pow(std::uint64_t k, std::uint32_t n, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (k != 0 && r > cap / k) return cap + 1;
    r *= k;
  }
  return r;
}

// Ascending row-major serialization; local so the oracle does not lean on the
// text-format code it is meant to cross-check.
std::string matrix_key(const BoolMatrix& m) {
  std::string s;
  s.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s.push_back(m.get(r, c) ? '1' : '0');
  return s;
}

bool surjective(const std::vector<std::uint32_t>& v, std::uint32_t k) {
  std::vector<bool> hit(k, false);
  for (std::uint32_t x : v) hit[x] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool odometer_step(std::vector<std::uint32_t>& v, std::uint32_t base) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i] < base) return true;
    v[i] = 0;
  }
  return false;
}

}  // namespace

BigCount enum_ordered_partitions(std::uint32_t n, std::optional<std::uint32_t> k,
                                 const PartitionVisitor& visit) {
  if (n == 0) throw ArgumentError("enum_ordered_partitions: n must be positive");
  if (n > kMaxPartitionN) {
    throw SizeError("enum_ordered_partitions: n is limited to " + std::to_string(kMaxPartitionN));
  }
  if (k && *k == 0) throw ArgumentError("enum_ordered_partitions: k must be positive");

  BigCount count = 0;
  OrderedPartition partition;
  const std::uint32_t full = (1u << n) - 1u;

  auto dfs = [&](auto&& self, std::uint32_t remaining) -> void {
    if (remaining == 0) {
      if (!k || partition.blocks.size() == *k) {
        ++count;
        if (visit) visit(partition);
      }
      return;
    }
    if (k && partition.blocks.size() >= *k) return;
    for (std::uint32_t s = remaining; s; s = (s - 1) & remaining) {
      partition.blocks.push_back(mask_elements(s));
      self(self, remaining & ~s);
      partition.blocks.pop_back();
    }
  };
  dfs(dfs, full);
  return count;
}

BigCount enum_ordered_partitions_of_type(std::uint32_t n, const CompositionType& t,
                                         const PartitionVisitor& visit) {
  if (t.sum() != n) {
    throw ArgumentError("enum_ordered_partitions_of_type: parts sum to " +
                        std::to_string(t.sum()) + ", expected " + std::to_string(n));
  }
  if (n > kMaxPartitionN) {
    throw SizeError("enum_ordered_partitions_of_type: n is limited to " +
                    std::to_string(kMaxPartitionN));
  }

  BigCount count = 0;
  OrderedPartition partition;
  std::vector<std::uint32_t> pool(n);
  for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;

  // Blocks in order; each block is an ascending combination of the remaining
  // elements, enumerated in lexicographic order.
  auto dfs = [&](auto&& self, const std::vector<std::uint32_t>& remaining,
                 std::size_t block) -> void {
    if (block == t.part_count()) {
      ++count;
      if (visit) visit(partition);
      return;
    }
    const std::uint32_t size = t.parts()[block];
    std::vector<std::size_t> idx(size);
    for (std::uint32_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<std::uint32_t> chosen, rest;
      for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
        if (j < idx.size() && idx[j] == i) {
          chosen.push_back(remaining[i]);
          ++j;
        } else {
          rest.push_back(remaining[i]);
        }
      }
      partition.blocks.push_back(chosen);
      self(self, rest, block + 1);
      partition.blocks.pop_back();

      std::size_t i = size;
      while (i > 0 && idx[i - 1] == remaining.size() - size + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  };
  dfs(dfs, pool, 0);
  return count;
}

BigCount enum_nonempty_subsets_of_product(const CompositionType& t) {
  std::uint64_t product = 1;
  for (std::uint32_t p : t.parts()) product *= p;
  if (product > kMaxProductCells) {
    throw SizeError("enum_nonempty_subsets_of_product: product of parts is limited to " +
                    std::to_string(kMaxProductCells));
  }
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << product;
  for (std::uint64_t mask = 1; mask < total; ++mask) ++count;
  return BigCount(static_cast<unsigned long>(count));
}

BigCount enum_surjections(std::uint32_t n, std::uint32_t k) {
  if (n == 0 || k == 0) throw ArgumentError("enum_surjections: n and k must be positive");
  if (checked_pow(k, n, kMaxSurjectionMaps) > kMaxSurjectionMaps) {
    throw SizeError("enum_surjections: k^n is limited to " + std::to_string(kMaxSurjectionMaps));
  }
  std::uint64_t count = 0;
  std::vector<std::uint32_t> v(n, 0);
  do {
    if (surjective(v, k)) ++count;
  } while (odometer_step(v, k));
  return BigCount(static_cast<unsigned long>(count));
}

BigCount enum_complete_cobwebs(std::uint32_t n, const CompositionType& t) {
  if (t.sum() != n) {
    throw ArgumentError("enum_complete_cobwebs: parts sum to " + std::to_string(t.sum()) +
                        ", expected " + std::to_string(n));
  }
  if (n > kMaxCobwebN) {
    throw SizeError("enum_complete_cobwebs: n is limited to " + std::to_string(kMaxCobwebN));
  }

  std::set<std::string> posets;
  std::uint64_t partitions = 0;
  enum_ordered_partitions_of_type(n, t, [&](const OrderedPartition& p) {
    std::vector<std::size_t> level(n);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
      for (std::uint32_t e : p.blocks[b]) level[e] = b;
    // Complete chain between consecutive blocks: u <= v iff u = v or
    // level(u) < level(v).
    BoolMatrix order(n, n);
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = 0; v < n; ++v)
        if (u == v || level[u] < level[v]) order.set(u, v, true);
    posets.insert(matrix_key(order));
    ++partitions;
  });
  if (posets.size() != partitions) {
    throw Error("enum_complete_cobwebs: distinct ordered partitions produced equal posets");
  }
  return BigCount(static_cast<unsigned long>(posets.size()));
}

namespace {

struct ChainShape {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> dims;  // (rows, cols) per block
  std::uint64_t total_bits = 0;
};

ChainShape chain_shape(const CompositionType& t) {
  ChainShape s;
  const auto& f = t.parts();
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    s.dims.emplace_back(f[i], f[i + 1]);
    s.total_bits += static_cast<std::uint64_t>(f[i]) * f[i + 1];
  }
  if (s.total_bits > kMaxChainBits) {
    throw SizeError("enum_graded_chains: total block cells are limited to " +
                    std::to_string(kMaxChainBits));
  }
  return s;
}

std::vector<BoolMatrix> decode_blocks(const ChainShape& shape, std::uint64_t mask) {
  std::vector<BoolMatrix> blocks;
  std::uint64_t bit = 0;
  for (const auto& [rows, cols] : shape.dims) {
    BoolMatrix b(rows, cols);
    for (std::uint32_t r = 0; r < rows; ++r)
      for (std::uint32_t c = 0; c < cols; ++c, ++bit)
        if ((mask >> bit) & 1u) b.set(r, c, true);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

bool blocks_satisfy(const std::vector<BoolMatrix>& blocks, ChainConstraint constraint) {
  switch (constraint) {
    case ChainConstraint::AllBlocks:
      return true;
    case ChainConstraint::NoEmptyRowCol:
      for (const BoolMatrix& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r) {
          bool any = false;
          for (std::size_t c = 0; c < b.cols() && !any; ++c) any = b.get(r, c);
          if (!any) return false;
        }
        for (std::size_t c = 0; c < b.cols(); ++c) {
          bool any = false;
          for (std::size_t r = 0; r < b.rows() && !any; ++r) any = b.get(r, c);
          if (!any) return false;
        }
      }
      return true;
    case ChainConstraint::FerrersBlocks:
      for (const BoolMatrix& b : blocks)
        if (!is_ferrers_dim1(b).is_dim1) return false;
      return true;
  }
  return false;
}

}  // namespace

BigCount enum_graded_chains(const CompositionType& t, ChainConstraint constraint,
                            const ChainVisitor& visit) {
  const ChainShape shape = chain_shape(t);
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << shape.total_bits;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<BoolMatrix> blocks = decode_blocks(shape, mask);
    if (!blocks_satisfy(blocks, constraint)) continue;
    ++count;
    if (visit) visit(GradedRelationChain(LevelSequence(t.parts()), std::move(blocks)));
  }
  return BigCount(static_cast<unsigned long>(count));
}

namespace detail {

BigCount count_ordered_partitions_iterative(std::uint32_t n, std::optional<std::uint32_t> k) {
  if (n == 0) throw ArgumentError("count_ordered_partitions_iterative: n must be positive");
  std::uint64_t count = 0;
  const std::uint32_t lo = k ? *k : 1, hi = k ? *k : n;
  for (std::uint32_t j = lo; j <= hi && j <= n; ++j) {
    if (checked_pow(j, n, 200'000'000) > 200'000'000) {
      throw SizeError("count_ordered_partitions_iterative: j^n too large");
    }
    // Ordered partitions into j blocks are exactly the surjections onto [j].
    std::vector<std::uint32_t> v(n, 0);
    do {
      if (surjective(v, j)) ++count;
    } while (odometer_step(v, j));
  }
  return BigCount(static_cast<unsigned long>(count));
}

BigCount count_ordered_partitions_of_type_iterative(std::uint32_t n, const CompositionType& t) {
  if (t.sum() != n) {
    throw ArgumentError("count_ordered_partitions_of_type_iterative: parts must sum to n");
  }
  const std::uint32_t k = static_cast<std::uint32_t>(t.part_count());
  if (checked_pow(k, n, 200'000'000) > 200'000'000) {
    throw SizeError("count_ordered_partitions_of_type_iterative: k^n too large");
  }
  std::uint64_t count = 0;
  std::vector<std::uint32_t> v(n, 0);
  do {
    std::vector<std::uint32_t> sizes(k, 0);
    for (std::uint32_t x : v) ++sizes[x];
    bool match = true;
    for (std::uint32_t b = 0; b < k && match; ++b) match = sizes[b] == t.parts()[b];
    if (match) ++count;
  } while (odometer_step(v, k));
  return BigCount(static_cast<unsigned long>(count));
}

BigCount count_nonempty_subsets_recursive(const CompositionType& t) {
  std::uint64_t product = 1;
  for (std::uint32_t p : t.parts()) product *= p;
  if (product > kMaxProductCells) {
    throw SizeError("count_nonempty_subsets_recursive: product of parts is limited to " +
                    std::to_string(kMaxProductCells));
  }
  std::uint64_t count = 0;
  auto dfs = [&](auto&& self, std::uint64_t cell, bool any) -> void {
    if (cell == product) {
      if (any) ++count;
      return;
    }
    self(self, cell + 1, any);        // cell excluded
    self(self, cell + 1, true);       // cell included
  };
  dfs(dfs, 0, false);
  return BigCount(static_cast<unsigned long>(count));
}

BigCount count_surjections_recursive(std::uint32_t n, std::uint32_t k) {
  if (n == 0 || k == 0) throw ArgumentError("count_surjections_recursive: n, k must be positive");
  if (checked_pow(k, n, kMaxSurjectionMaps) > kMaxSurjectionMaps) {
    throw SizeError("count_surjections_recursive: k^n is limited to " +
                    std::to_string(kMaxSurjectionMaps));
  }
  std::uint64_t count = 0;
  std::vector<std::uint32_t> hits(k, 0);
  std::uint32_t used = 0;
  auto dfs = [&](auto&& self, std::uint32_t i) -> void {
    if (i == n) {
      if (used == k) ++count;
      return;
    }
    for (std::uint32_t x = 0; x < k; ++x) {
      if (hits[x]++ == 0) ++used;
      self(self, i + 1);
      if (--hits[x] == 0) --used;
    }
  };
  dfs(dfs, 0);
  return BigCount(static_cast<unsigned long>(count));
}

BigCount count_graded_chains_recursive(const CompositionType& t, ChainConstraint constraint) {
  const ChainShape shape = chain_shape(t);
  std::uint64_t count = 0;
  std::vector<BoolMatrix> blocks;
  auto dfs = [&](auto&& self, std::size_t block) -> void {
    if (block == shape.dims.size()) {
      if (blocks_satisfy(blocks, constraint)) ++count;
      return;
    }
    const auto [rows, cols] = shape.dims[block];
    const std::uint64_t cells = static_cast<std::uint64_t>(rows) * cols;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
      BoolMatrix b(rows, cols);
      std::uint64_t bit = 0;
      for (std::uint32_t r = 0; r < rows; ++r)
        for (std::uint32_t c = 0; c < cols; ++c, ++bit)
          if ((m >> bit) & 1u) b.set(r, c, true);
      blocks.push_back(std::move(b));
      self(self, block + 1);
      blocks.pop_back();
    }
  };
  dfs(dfs, 0);
  return BigCount(static_cast<unsigned long>(count));
}

}  // namespace detail

}  // namespace cobweb::oracle
