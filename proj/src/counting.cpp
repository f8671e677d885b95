#include "cobweb/counting.hpp"

#include <string>

#include "cobweb/errors.hpp"

namespace cobweb::counting {

namespace {
// Budget for 2^p: keeps a malformed type from asking GMP for gigabytes.
constexpr std::uint64_t kMaxRelationExponent = 1u << 26;
}  // namespace

CompositionType::CompositionType(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ArgumentError("CompositionType: need at least one part");
  for (std::uint32_t p : parts_) {
    if (p == 0) throw ArgumentError("CompositionType: parts must be positive");
  }
}

std::uint64_t CompositionType::sum() const {
  std::uint64_t s = 0;
  for (std::uint32_t p : parts_) s += p;
  return s;
}

BigCount multinomial(std::uint64_t n, const CompositionType& t) {
  if (t.sum() != n) {
    throw ArgumentError("multinomial: parts sum to " + std::to_string(t.sum()) + ", expected " +
                        std::to_string(n));
  }
  BigCount r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  BigCount f;
  for (std::uint32_t p : t.parts()) {
    mpz_fac_ui(f.get_mpz_t(), p);
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.get_mpz_t());
  }
  return r;
}

BigCount stirling2(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::vector<BigCount> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t top = std::min(i, k);
    for (std::uint64_t j = top; j >= 1; --j) {
      row[j] = BigCount(static_cast<unsigned long>(j)) * row[j] + row[j - 1];
    }
    row[0] = 0;  // S(i,0) = 0 for i > 0
  }
  return row[k];
}

BigCount surjection_count(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k == 0) throw ArgumentError("surjection_count: n and k must be positive");
  if (k > n) return 0;

  BigCount by_stirling;
  mpz_fac_ui(by_stirling.get_mpz_t(), static_cast<unsigned long>(k));
  by_stirling *= stirling2(n, k);

  BigCount by_inclusion_exclusion = 0;
  for (std::uint64_t r = 0; r <= k; ++r) {
    BigCount binom, power;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(r));
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(r),
                  static_cast<unsigned long>(n));
    if ((k - r) % 2 == 0)
      by_inclusion_exclusion += binom * power;
    else
      by_inclusion_exclusion -= binom * power;
  }

  if (by_stirling != by_inclusion_exclusion) {
    throw Error("surjection_count: the two formulas disagree at n=" + std::to_string(n) +
                ", k=" + std::to_string(k));
  }
  return by_stirling;
}

BigCount fubini(std::uint64_t n) {
  if (n == 0) throw ArgumentError("fubini: n must be positive");
  // One Stirling row S(n, 0..n), then sum k! S(n,k).
  std::vector<BigCount> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::uint64_t j = i; j >= 1; --j) {
      row[j] = BigCount(static_cast<unsigned long>(j)) * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  BigCount total = 0, kfac = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    kfac *= static_cast<unsigned long>(k);
    total += kfac * row[k];
  }
  return total;
}

BigCount relations_of_type(const CompositionType& t) {
  std::uint64_t product = 1;
  for (std::uint32_t p : t.parts()) {
    if (product > kMaxRelationExponent / p) {
      throw SizeError("relations_of_type: 2^(product of parts) exceeds the big-int budget");
    }
    product *= p;
  }
  BigCount r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(product));
  return r - 1;
}

BigCount relations_total(std::uint64_t n) {
  if (n == 0) throw ArgumentError("relations_total: n must be positive");
  if (n > 24) {
    throw SizeError("relations_total: n is limited to 24, got " + std::to_string(n));
  }
  BigCount total = 0;
  CompositionStream stream(static_cast<std::uint32_t>(n));
  while (auto t = stream.next()) total += relations_of_type(*t);
  return total;
}

CompositionStream::CompositionStream(std::uint32_t n) : n_(n) {
  if (n == 0) throw ArgumentError("CompositionStream: n must be positive");
}

CompositionStream::CompositionStream(std::uint32_t n, std::uint32_t k) : n_(n), k_(k) {
  if (n == 0) throw ArgumentError("CompositionStream: n must be positive");
  if (k == 0 || k > n) {
    throw ArgumentError("CompositionStream: k must satisfy 1 <= k <= n, got " + std::to_string(k));
  }
}

void CompositionStream::reset() {
  started_ = false;
  done_ = false;
  cur_.clear();
}

std::optional<CompositionType> CompositionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (k_ == 0) {
      cur_.assign(n_, 1);  // <1,1,...,1> is lexicographically first
    } else {
      cur_.assign(k_, 1);
      cur_.back() = n_ - k_ + 1;
    }
  } else {
    advance();
    if (done_) return std::nullopt;
  }
  return CompositionType(cur_);
}

void CompositionStream::advance() {
  if (k_ == 0) {
    // Merge the last part into an incremented predecessor, then pad with 1s.
    if (cur_.size() == 1) {
      done_ = true;
      return;
    }
    const std::uint32_t last = cur_.back();
    cur_.pop_back();
    cur_.back() += 1;
    cur_.insert(cur_.end(), last - 1, 1);
  } else {
    // Rightmost position after the head that still has weight to give.
    std::size_t j = cur_.size();
    while (j > 1 && cur_[j - 1] == 1) --j;
    if (j <= 1) {
      done_ = true;
      return;
    }
    std::uint32_t tail = 0;
    for (std::size_t i = j - 1; i < cur_.size(); ++i) tail += cur_[i];
    cur_[j - 2] += 1;
    for (std::size_t i = j - 1; i < cur_.size(); ++i) cur_[i] = 1;
    cur_.back() = tail - 1 - static_cast<std::uint32_t>(cur_.size() - j);
  }
}

std::vector<CompositionType> all_compositions(std::uint32_t n, std::uint32_t k) {
  std::vector<CompositionType> out;
  CompositionStream stream = (k == 0) ? CompositionStream(n) : CompositionStream(n, k);
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace cobweb::counting
