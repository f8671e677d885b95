#include "cobweb/matrix_ops.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "cobweb/errors.hpp"

namespace cobweb {

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("bool_product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  BoolMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto words = a.row_words(i);
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::uint64_t bits = words[w];
      while (bits) {
        const std::size_t t = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        out.or_row_from(i, b, t);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

BoolMatrix bool_power(const BoolMatrix& a, std::size_t k) {
  if (!a.square()) throw ShapeError("bool_power: matrix must be square");
  BoolMatrix out = BoolMatrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) out = bool_product(out, a);
  return out;
}

BoolMatrix direct_sum(std::span<const BoolMatrix> blocks) {
  if (blocks.empty()) throw ArgumentError("direct_sum: block list must be non-empty");
  std::size_t rows = 0, cols = 0;
  for (const BoolMatrix& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  BoolMatrix out(rows, cols);
  std::size_t ro = 0, co = 0;
  for (const BoolMatrix& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (b.get(r, c)) out.set(ro + r, co + c, true);
    ro += b.rows();
    co += b.cols();
  }
  return out;
}

BoolMatrix direct_sum(std::initializer_list<BoolMatrix> blocks) {
  std::vector<BoolMatrix> v(blocks);
  return direct_sum(std::span<const BoolMatrix>(v));
}

RealMatrix kronecker_product(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double v = a(i, j);
      if (v == 0.0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = v * b(k, l);
    }
  return out;
}

RealMatrix kronecker_sum(const RealMatrix& a, const RealMatrix& b) {
  if (!a.square() || !b.square()) throw ShapeError("kronecker_sum: operands must be square");
  RealMatrix out = kronecker_product(a, RealMatrix::identity(b.rows()));
  out += kronecker_product(RealMatrix::identity(a.rows()), b);
  return out;
}

RealMatrix real_exp(const RealMatrix& m, double tol) {
  if (!m.square()) throw ShapeError("real_exp: matrix must be square");
  if (!(tol > 0.0)) throw ArgumentError("real_exp: tol must be positive");
  if (!m.all_finite()) throw ArgumentError("real_exp: entries must be finite");

  const double norm = m.inf_norm();
  RealMatrix sum = RealMatrix::identity(m.rows());
  RealMatrix term = RealMatrix::identity(m.rows());
  double scalar_term = 1.0;  // norm^k / k!, majorant of term k

  for (std::size_t k = 1; k <= 10000; ++k) {
    term = term * m;
    term *= 1.0 / static_cast<double>(k);
    sum += term;
    scalar_term *= norm / static_cast<double>(k);
    // Tail after term k: sum_{j>k} norm^j/j! <= t_{k+1} / (1 - norm/(k+2)).
    const double t_next = scalar_term * norm / static_cast<double>(k + 1);
    const double q = norm / static_cast<double>(k + 2);
    if (q < 1.0 && t_next / (1.0 - q) < tol) return sum;
  }
  throw Error("real_exp: series did not meet the tolerance within 10000 terms");
}

BoolMatrix boolean_geometric_series(const BoolMatrix& a) {
  if (!a.square()) throw ShapeError("boolean_geometric_series: matrix must be square");
  const std::size_t n = a.rows();
  BoolMatrix acc = BoolMatrix::identity(n);
  BoolMatrix power = BoolMatrix::identity(n);
  for (std::size_t step = 0; step < n; ++step) {
    power = bool_product(power, a);
    BoolMatrix next = acc | power;
    if (next == acc) break;  // fixed point
    acc = std::move(next);
  }
  return acc;
}

BoolMatrix warshall_closure(const BoolMatrix& a) {
  if (!a.square()) throw ShapeError("warshall_closure: matrix must be square");
  const std::size_t n = a.rows();
  BoolMatrix r = a;
  for (std::size_t i = 0; i < n; ++i) r.set(i, i, true);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!r.get(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (r.get(k, j)) r.set(i, j, true);
    }
  return r;
}

}  // namespace cobweb
