#pragma once

#include <vector>

#include "stratkit/polymap.hpp"
#include "stratkit/polynomial.hpp"

namespace stratkit {

/// Dense matrix of polynomials (row-major). Used for Jacobians and their
/// minors; square determinants are computed fraction-free.
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, const Ctx& ctx);
  PolyMatrix(int rows, int cols, std::vector<Polynomial> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Ctx& ctx() const { return ctx_; }

  const Polynomial& at(int i, int j) const { return entries_[i * cols_ + j]; }
  void set(int i, int j, Polynomial p);

  static PolyMatrix identity(int n, const Ctx& ctx);

  /// Determinant by memoized cofactor expansion over the polynomial ring
  /// (fraction-free; no divisions are performed).
  Polynomial determinant() const;

  /// All k-by-k minors, rows and columns in increasing index order.
  std::vector<Polynomial> minors(int k) const;

  /// Entry-wise evaluation at a rational point.
  std::vector<std::vector<Rational>> evaluate(
      const std::vector<Rational>& point) const;

 private:
  int rows_;
  int cols_;
  Ctx ctx_;
  std::vector<Polynomial> entries_;
};

/// Jacobian matrix of a map: entry (i, j) = d F_i / d x_j.
PolyMatrix jacobian(const PolyMap& F);

/// Rank of a rational matrix by exact Gaussian elimination.
int rational_rank(std::vector<std::vector<Rational>> m);

}  // namespace stratkit
