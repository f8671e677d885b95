#include "cobweb/ferrers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "cobweb/errors.hpp"

namespace cobweb {

namespace detail {

std::optional<FerrersWitness> find_permutation_submatrix(const BoolMatrix& b) {
  for (std::size_t r1 = 0; r1 < b.rows(); ++r1)
    for (std::size_t r2 = r1 + 1; r2 < b.rows(); ++r2)
      for (std::size_t c1 = 0; c1 < b.cols(); ++c1)
        for (std::size_t c2 = c1 + 1; c2 < b.cols(); ++c2) {
          const bool a = b.get(r1, c1), x = b.get(r1, c2);
          const bool y = b.get(r2, c1), d = b.get(r2, c2);
          if ((a && d && !x && !y) || (!a && !d && x && y)) {
            return FerrersWitness{static_cast<std::uint32_t>(r1), static_cast<std::uint32_t>(r2),
                                  static_cast<std::uint32_t>(c1), static_cast<std::uint32_t>(c2)};
          }
        }
  return std::nullopt;
}

bool row_supports_nested(const BoolMatrix& b) {
  std::vector<std::size_t> order(b.rows());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> weight(b.rows());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    std::size_t w = 0;
    for (std::uint64_t word : b.row_words(r)) w += static_cast<std::size_t>(std::popcount(word));
    weight[r] = w;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t c) { return weight[a] > weight[c]; });
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const auto big = b.row_words(order[i]);
    const auto small = b.row_words(order[i + 1]);
    for (std::size_t w = 0; w < big.size(); ++w) {
      if ((big[w] & small[w]) != small[w]) return false;  // not a subset
    }
  }
  return true;
}

}  // namespace detail

FerrersReport is_ferrers_dim1(const BoolMatrix& b) {
  const auto witness = detail::find_permutation_submatrix(b);
  const bool nested = detail::row_supports_nested(b);
  if (nested == witness.has_value()) {
    throw Error("is_ferrers_dim1: scan and nested-support routes disagree");
  }
  FerrersReport report;
  report.is_dim1 = !witness.has_value();
  report.witness = witness;
  return report;
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> zero_cells(const BoolMatrix& b) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> zeros;
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (!b.get(r, c))
        zeros.emplace_back(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c));
  return zeros;
}

// Exact minimum set cover over the zero cells: branch on the lowest uncovered
// cell and try every candidate zero-set containing it.
bool cover_exists(std::uint32_t uncovered, std::uint32_t picks_left,
                  const std::vector<std::uint32_t>& candidates) {
  if (uncovered == 0) return true;
  if (picks_left == 0) return false;
  const std::uint32_t bit = uncovered & (~uncovered + 1);
  for (std::uint32_t zs : candidates) {
    if ((zs & bit) && cover_exists(uncovered & ~zs, picks_left - 1, candidates)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::uint32_t> ferrers_dimension(const BoolMatrix& b, std::uint32_t max_d) {
  if (max_d < 1) throw ArgumentError("ferrers_dimension: max_d must be at least 1");
  const std::size_t cells = b.rows() * b.cols();
  if (cells > 12) {
    throw SizeError("ferrers_dimension: brute force is limited to 12 cells, got " +
                    std::to_string(cells));
  }
  if (is_ferrers_dim1(b).is_dim1) return 1;

  const auto zeros = zero_cells(b);  // non-empty: a non-Ferrers matrix has zeros
  const std::uint32_t z = static_cast<std::uint32_t>(zeros.size());
  const std::uint32_t full = (1u << z) - 1u;

  // Every superset of b is b with a subset of its zero cells flipped to 1.
  // A Ferrers superset is useful exactly through the zero cells it keeps, so
  // collect those keep-sets and drop dominated ones.
  std::vector<std::uint32_t> keep_sets;
  for (std::uint32_t flip = 0; flip <= full; ++flip) {
    BoolMatrix m = b;
    for (std::uint32_t i = 0; i < z; ++i)
      if (flip & (1u << i)) m.set(zeros[i].first, zeros[i].second, true);
    if (!detail::find_permutation_submatrix(m).has_value()) {
      keep_sets.push_back(full & ~flip);
    }
  }
  std::sort(keep_sets.begin(), keep_sets.end(), [](std::uint32_t a, std::uint32_t c) {
    return std::popcount(a) > std::popcount(c);
  });
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t zs : keep_sets) {
    bool dominated = false;
    for (std::uint32_t m : maximal)
      if ((m & zs) == zs) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(zs);
  }

  for (std::uint32_t d = 2; d <= max_d && d <= z; ++d) {
    if (cover_exists(full, d, maximal)) return d;
  }
  return std::nullopt;
}

FerrersCompletion min_completion_to_ferrers(const BoolMatrix& b) {
  const std::size_t cells = b.rows() * b.cols();
  if (cells > 20) {
    throw SizeError("min_completion_to_ferrers: exhaustive search is limited to 20 cells, got " +
                    std::to_string(cells));
  }
  const auto zeros = zero_cells(b);  // already in row-major order
  const std::size_t z = zeros.size();

  // Increasing size, and within one size lexicographic combinations of the
  // row-major zero list: the first hit is the lexicographically smallest
  // minimum completion. Size z (all-ones) always succeeds.
  for (std::size_t s = 0; s <= z; ++s) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      BoolMatrix m = b;
      for (std::size_t i : idx) m.set(zeros[i].first, zeros[i].second, true);
      if (!detail::find_permutation_submatrix(m).has_value()) {
        FerrersCompletion out{{}, m};
        for (std::size_t i : idx) out.arcs.push_back(zeros[i]);
        return out;
      }
      // next s-combination in lexicographic order
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == z - s + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw Error("min_completion_to_ferrers: unreachable, all-ones is always Ferrers");
}

}  // namespace cobweb
