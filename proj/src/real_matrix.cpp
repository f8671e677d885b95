#include "cobweb/real_matrix.hpp"

#include <cmath>
#include <string>

#include "cobweb/errors.hpp"

namespace cobweb {

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw ArgumentError("RealMatrix: rows and cols must be at least 1");
  }
  a_.assign(rows_ * cols_, 0.0);
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw ArgumentError("RealMatrix::from_rows: need at least one row and one column");
  }
  RealMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw ShapeError("RealMatrix::from_rows: ragged row " + std::to_string(r));
    }
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RealMatrix RealMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> v;
  v.reserve(rows.size());
  for (const auto& row : rows) v.emplace_back(row);
  return from_rows(v);
}

void RealMatrix::check_cell(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw BoundsError("RealMatrix: cell (" + std::to_string(r) + "," + std::to_string(c) +
                      ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

double RealMatrix::operator()(std::size_t r, std::size_t c) const {
  check_cell(r, c);
  return a_[r * cols_ + c];
}

double& RealMatrix::operator()(std::size_t r, std::size_t c) {
  check_cell(r, c);
  return a_[r * cols_ + c];
}

RealMatrix RealMatrix::operator*(const RealMatrix& other) const {
  if (cols_ != other.rows_) throw ShapeError("RealMatrix: product of non-conformable matrices");
  RealMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t t = 0; t < cols_; ++t) {
      const double v = a_[i * cols_ + t];
      if (v == 0.0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out.a_[i * other.cols_ + j] += v * other.a_[t * other.cols_ + j];
      }
    }
  }
  return out;
}

RealMatrix& RealMatrix::operator+=(const RealMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ShapeError("RealMatrix: sum of differently shaped matrices");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

RealMatrix& RealMatrix::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

double RealMatrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double RealMatrix::inf_norm() const {
  double m = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) s += std::abs(a_[r * cols_ + c]);
    m = std::max(m, s);
  }
  return m;
}

bool RealMatrix::all_finite() const {
  for (double v : a_)
    if (!std::isfinite(v)) return false;
  return true;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("max_abs_diff: differently shaped matrices");
  }
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

}  // namespace cobweb
