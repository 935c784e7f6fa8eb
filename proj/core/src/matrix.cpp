#include "stratkit/matrix.hpp"

#include <unordered_map>

namespace stratkit {

PolyMatrix::PolyMatrix(int rows, int cols, const Ctx& ctx)
    : rows_(rows), cols_(cols), ctx_(ctx) {
  if (rows <= 0 || cols <= 0) throw DomainError("matrix dimensions");
  entries_.assign((size_t)rows * cols, Polynomial(ctx));
}

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<Polynomial> entries)
    : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0 || entries.size() != (size_t)rows * cols)
    throw DomainError("matrix dimensions");
  ctx_ = entries.front().ctx();
  for (const auto& e : entries) require_same_ring(ctx_, e.ctx(), "matrix");
  entries_ = std::move(entries);
}

void PolyMatrix::set(int i, int j, Polynomial p) {
  require_same_ring(ctx_, p.ctx(), "matrix set");
  entries_[i * cols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::identity(int n, const Ctx& ctx) {
  PolyMatrix m(n, n, ctx);
  for (int i = 0; i < n; ++i)
    m.set(i, i, Polynomial::constant(ctx, Rational(1)));
  return m;
}

namespace {

// Expansion along the first remaining row; sub-determinants are keyed by the
// active column mask (the active rows are implied by its popcount).
Polynomial det_masked(const PolyMatrix& m, const std::vector<int>& row_ids,
                      const std::vector<int>& col_ids, unsigned mask,
                      std::unordered_map<unsigned, Polynomial>& memo) {
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  int k = 0;
  for (unsigned b = mask; b; b >>= 1u) k += (int)(b & 1u);
  int row = row_ids[(int)row_ids.size() - k];
  Polynomial acc(m.ctx());
  int sign = 1;
  for (size_t pos = 0; pos < col_ids.size(); ++pos) {
    if (!(mask & (1u << pos))) continue;
    const Polynomial& e = m.at(row, col_ids[pos]);
    if (!e.is_zero()) {
      if (k == 1) {
        acc = acc + (sign > 0 ? e : -e);
      } else {
        Polynomial sub =
            det_masked(m, row_ids, col_ids, mask & ~(1u << pos), memo);
        Polynomial prod = e * sub;
        acc = acc + (sign > 0 ? prod : -prod);
      }
    }
    sign = -sign;
  }
  memo.emplace(mask, acc);
  return acc;
}

Polynomial det_of(const PolyMatrix& m, const std::vector<int>& rows,
                  const std::vector<int>& cols) {
  std::unordered_map<unsigned, Polynomial> memo;
  unsigned full = (cols.size() == 32) ? ~0u : ((1u << cols.size()) - 1u);
  return det_masked(m, rows, cols, full, memo);
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(k);
  // iterative combinations in lexicographic order
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

}  // namespace

Polynomial PolyMatrix::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of non-square matrix");
  std::vector<int> idx(rows_);
  for (int i = 0; i < rows_; ++i) idx[i] = i;
  return det_of(*this, idx, idx);
}

std::vector<Polynomial> PolyMatrix::minors(int k) const {
  if (k < 1 || k > std::min(rows_, cols_))
    throw DomainError("minor size out of range");
  std::vector<std::vector<int>> row_sets, col_sets;
  subsets_of_size(rows_, k, row_sets);
  subsets_of_size(cols_, k, col_sets);
  std::vector<Polynomial> out;
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) out.push_back(det_of(*this, rs, cs));
  return out;
}

std::vector<std::vector<Rational>> PolyMatrix::evaluate(
    const std::vector<Rational>& point) const {
  std::vector<std::vector<Rational>> m(rows_);
  for (int i = 0; i < rows_; ++i) {
    m[i].reserve(cols_);
    for (int j = 0; j < cols_; ++j) m[i].push_back(at(i, j).evaluate(point));
  }
  return m;
}

PolyMatrix jacobian(const PolyMap& F) {
  const int n = F.source_arity();
  const int m = F.target_arity();
  PolyMatrix J(m, n, F.source);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) J.set(i, j, F.components[i].derivative(j));
  return J;
}

int rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const int rows = (int)m.size();
  const int cols = (int)m[0].size();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Rational inv = m[rank][col].inv();
    for (int c = col; c < cols; ++c) m[rank][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace stratkit
