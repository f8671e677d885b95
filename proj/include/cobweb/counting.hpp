#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace cobweb::counting {

/// Arbitrary-precision natural number. All counting results are exact; no
/// floating point is used anywhere in this module.
using BigCount = mpz_class;

/// Ordered tuple <f_1,...,f_k> of positive parts: the type of a composition.
class CompositionType {
public:
  explicit CompositionType(std::vector<std::uint32_t> parts);

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }
  std::uint64_t sum() const;

  bool operator==(const CompositionType& other) const { return parts_ == other.parts_; }

private:
  std::vector<std::uint32_t> parts_;
};

/// n! / (f_1! f_2! ... f_k!). The parts must sum to n.
BigCount multinomial(std::uint64_t n, const CompositionType& t);

/// Stirling numbers of the second kind via the recurrence
/// S(n,k) = k S(n-1,k) + S(n-1,k-1), S(0,0) = 1.
BigCount stirling2(std::uint64_t n, std::uint64_t k);

/// Number of surjections from an n-set onto a k-set, n, k >= 1; zero when
/// k > n. Computed two ways, k! S(n,k) and the inclusion-exclusion sum
/// sum_{r=0..k} (-1)^{k-r} C(k,r) r^n, which must agree.
BigCount surjection_count(std::uint64_t n, std::uint64_t k);

/// Ordered Bell number: sum_{k=1..n} k! S(n,k), n >= 1.
BigCount fubini(std::uint64_t n);

/// 2^(f_1 f_2 ... f_k) - 1.
BigCount relations_of_type(const CompositionType& t);

/// Sum of relations_of_type over all compositions of n; n <= 24.
BigCount relations_total(std::uint64_t n);

/// Stream of the compositions of n, optionally into exactly k parts, in
/// lexicographic order on the part tuples. Restartable and copyable.
class CompositionStream {
public:
  /// All compositions of n (2^(n-1) of them).
  explicit CompositionStream(std::uint32_t n);
  /// Compositions of n into exactly k parts (C(n-1, k-1) of them).
  CompositionStream(std::uint32_t n, std::uint32_t k);

  std::optional<CompositionType> next();
  void reset();

private:
  std::uint32_t n_ = 0;
  std::uint32_t k_ = 0;  // 0 means all part counts
  std::vector<std::uint32_t> cur_;
  bool started_ = false;
  bool done_ = false;

  void advance();
};

/// Materialized composition list, for small n.
std::vector<CompositionType> all_compositions(std::uint32_t n, std::uint32_t k = 0);

}  // namespace cobweb::counting
