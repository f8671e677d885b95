#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cobweb {

/// Small dense real matrix, just enough algebra for the Kronecker and
/// exponential identities. Desk-scale by design.
class RealMatrix {
public:
  RealMatrix(std::size_t rows, std::size_t cols);  // zeros

  static RealMatrix identity(std::size_t n);
  static RealMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static RealMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double operator()(std::size_t r, std::size_t c) const;
  double& operator()(std::size_t r, std::size_t c);

  RealMatrix operator*(const RealMatrix& other) const;
  RealMatrix& operator+=(const RealMatrix& other);
  RealMatrix& operator*=(double s);

  /// Largest absolute entry.
  double max_abs() const;
  /// Largest absolute row sum (the induced infinity norm; submultiplicative,
  /// so usable for series tail bounds).
  double inf_norm() const;
  bool all_finite() const;

  bool operator==(const RealMatrix& other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;

  void check_cell(std::size_t r, std::size_t c) const;
};

/// max |a_ij - b_ij|; shape-checked.
double max_abs_diff(const RealMatrix& a, const RealMatrix& b);

}  // namespace cobweb
