#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace cobweb {

/// Dense 0/1 matrix with bit-packed rows.
///
/// The carrier type for biadjacency, adjacency, and zeta matrices. Values are
/// immutable in spirit: every operation returns a fresh matrix, and equality
/// is exact bit equality. Rows and columns are both at least 1; empty shapes
/// are rejected at construction.
class BoolMatrix {
public:
  /// All-zeros matrix of the given shape.
  BoolMatrix(std::size_t rows, std::size_t cols);

  static BoolMatrix identity(std::size_t n);
  static BoolMatrix ones(std::size_t rows, std::size_t cols);
  static BoolMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static BoolMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);

  std::size_t count_ones() const;
  bool is_zero() const;

  /// Words of one row, least-significant bit first. Bits at or beyond cols()
  /// are always zero.
  std::span<const std::uint64_t> row_words(std::size_t r) const;

  /// OR a row of another matrix with the same column count into a row of this
  /// one. The word-level primitive behind the product and closure kernels.
  void or_row_from(std::size_t dst_row, const BoolMatrix& src, std::size_t src_row);

  /// Elementwise OR / AND of same-shape matrices.
  BoolMatrix operator|(const BoolMatrix& other) const;
  BoolMatrix operator&(const BoolMatrix& other) const;

  bool operator==(const BoolMatrix& other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> words_;

  void check_cell(std::size_t r, std::size_t c) const;
};

}  // namespace cobweb
