#include "cobweb/bool_matrix.hpp"

#include <bit>
#include <string>

#include "cobweb/errors.hpp"

namespace cobweb {

namespace {
constexpr std::size_t kWordBits = 64;
}

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + kWordBits - 1) / kWordBits) {
  if (rows == 0 || cols == 0) {
    throw ArgumentError("BoolMatrix: rows and cols must be at least 1, got " +
                        std::to_string(rows) + "x" + std::to_string(cols));
  }
  words_.assign(rows_ * words_per_row_, 0);
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BoolMatrix BoolMatrix::ones(std::size_t rows, std::size_t cols) {
  BoolMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, true);
  return m;
}

BoolMatrix BoolMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw ArgumentError("BoolMatrix::from_rows: need at least one row and one column");
  }
  BoolMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw ShapeError("BoolMatrix::from_rows: ragged row " + std::to_string(r));
    }
    for (std::size_t c = 0; c < m.cols_; ++c) {
      int v = rows[r][c];
      if (v != 0 && v != 1) {
        throw ArgumentError("BoolMatrix::from_rows: entries must be 0 or 1");
      }
      m.set(r, c, v != 0);
    }
  }
  return m;
}

BoolMatrix BoolMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> v;
  v.reserve(rows.size());
  for (const auto& row : rows) v.emplace_back(row);
  return from_rows(v);
}

void BoolMatrix::check_cell(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw BoundsError("BoolMatrix: cell (" + std::to_string(r) + "," + std::to_string(c) +
                      ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

bool BoolMatrix::get(std::size_t r, std::size_t c) const {
  check_cell(r, c);
  return (words_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BoolMatrix::set(std::size_t r, std::size_t c, bool value) {
  check_cell(r, c);
  std::uint64_t& w = words_[r * words_per_row_ + c / kWordBits];
  const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  if (value)
    w |= mask;
  else
    w &= ~mask;
}

std::size_t BoolMatrix::count_ones() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BoolMatrix::is_zero() const {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

std::span<const std::uint64_t> BoolMatrix::row_words(std::size_t r) const {
  if (r >= rows_) throw BoundsError("BoolMatrix: row " + std::to_string(r) + " out of range");
  return {words_.data() + r * words_per_row_, words_per_row_};
}

void BoolMatrix::or_row_from(std::size_t dst_row, const BoolMatrix& src, std::size_t src_row) {
  if (src.cols_ != cols_) throw ShapeError("BoolMatrix::or_row_from: column counts differ");
  if (dst_row >= rows_ || src_row >= src.rows_) {
    throw BoundsError("BoolMatrix::or_row_from: row index out of range");
  }
  std::uint64_t* dst = words_.data() + dst_row * words_per_row_;
  const std::uint64_t* s = src.words_.data() + src_row * src.words_per_row_;
  for (std::size_t w = 0; w < words_per_row_; ++w) dst[w] |= s[w];
}

BoolMatrix BoolMatrix::operator|(const BoolMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ShapeError("BoolMatrix: elementwise OR of differently shaped matrices");
  }
  BoolMatrix out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

BoolMatrix BoolMatrix::operator&(const BoolMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ShapeError("BoolMatrix: elementwise AND of differently shaped matrices");
  }
  BoolMatrix out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

}  // namespace cobweb
