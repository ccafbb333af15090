#include "gkm/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm {

SparseRow to_sparse(const QVector& v) {
  SparseRow r;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) r.emplace_back(i, v[i]);
  return r;
}

QVector to_dense(const SparseRow& r, int cols) {
  QVector v(cols, Rational(0));
  for (const auto& [c, x] : r) v[c] = x;
  return v;
}

namespace {

// r - factor * s, both sorted by column.
SparseRow axpy(const SparseRow& r, const Rational& factor, const SparseRow& s) {
  SparseRow out;
  out.reserve(r.size() + s.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || s[j].first < r[i].first) {
      out.emplace_back(s[j].first, -factor * s[j].second);
      ++j;
    } else {
      Rational v = r[i].second - factor * s[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void scale_to_unit_pivot(SparseRow& r) {
  const Rational pivot = r.front().second;
  if (pivot == 1) return;
  for (auto& [c, v] : r) v /= pivot;
}

}  // namespace

RowReducer::RowReducer(int cols) : cols_(cols) {}

bool RowReducer::add_row(SparseRow r) {
  while (!r.empty()) {
    auto it = rows_.find(r.front().first);
    if (it == rows_.end()) {
      scale_to_unit_pivot(r);
      rows_.emplace(r.front().first, std::move(r));
      reduced_ = false;
      return true;
    }
    r = axpy(r, r.front().second, it->second);
  }
  return false;
}

void RowReducer::make_reduced() {
  if (reduced_) return;
  // Backward pass: clear every pivot column from the rows above it. Stored
  // rows start at their pivot, so a row can only contain pivots of later rows.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    for (auto jt = rows_.begin(); jt != rows_.end() && jt->first < it->first; ++jt) {
      SparseRow& row = jt->second;
      auto pos = std::lower_bound(
          row.begin(), row.end(), it->first,
          [](const auto& entry, int col) { return entry.first < col; });
      if (pos != row.end() && pos->first == it->first)
        row = axpy(row, pos->second, it->second);
    }
  }
  reduced_ = true;
}

SparseRow RowReducer::reduce(SparseRow r) {
  make_reduced();
  std::size_t pos = 0;
  while (pos < r.size()) {
    auto it = rows_.find(r[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    // Entries before pos have smaller columns than the pivot and are final.
    SparseRow suffix(r.begin() + pos, r.end());
    suffix = axpy(suffix, suffix.front().second, it->second);
    r.resize(pos);
    r.insert(r.end(), suffix.begin(), suffix.end());
  }
  return r;
}

std::vector<QVector> RowReducer::kernel_basis() {
  make_reduced();
  std::vector<int> free_slot(cols_, -1);  // column -> basis index
  std::vector<bool> is_pivot(cols_, false);
  for (const auto& [p, row] : rows_) is_pivot[p] = true;
  int n_free = 0;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_slot[c] = n_free++;
  std::vector<QVector> basis(n_free, QVector(cols_, Rational(0)));
  for (int c = 0; c < cols_; ++c)
    if (free_slot[c] >= 0) basis[free_slot[c]][c] = 1;
  for (const auto& [p, row] : rows_) {
    for (const auto& [c, v] : row) {
      if (c == p) continue;
      basis[free_slot[c]][p] = -v;  // reduced form: non-pivot entries only
    }
  }
  return basis;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m.front().size());
  RowReducer red(cols);
  for (const auto& row : m) red.add_row(to_sparse(row));
  return red.kernel_basis();
}

int matrix_rank(const QMatrix& m) {
  if (m.empty()) return 0;
  RowReducer red(static_cast<int>(m.front().size()));
  for (const auto& row : m) red.add_row(to_sparse(row));
  return red.rank();
}

int rank_of_forms(const std::vector<QVector>& vectors) {
  return matrix_rank(vectors);
}

Int int_determinant(IntMatrix m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

QMatrix q_identity(int n) {
  QMatrix r(n, QVector(n, Rational(0)));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

QMatrix q_multiply(const QMatrix& a, const QMatrix& b) {
  const int n = static_cast<int>(a.size());
  const int k = n == 0 ? 0 : static_cast<int>(a.front().size());
  const int m = b.empty() ? 0 : static_cast<int>(b.front().size());
  if (static_cast<int>(b.size()) != k)
    throw std::invalid_argument("matrix product shape mismatch");
  QMatrix r(n, QVector(m, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

QMatrix q_inverse(const QMatrix& m) {
  const int n = static_cast<int>(m.size());
  QMatrix work = m;
  QMatrix inv = q_identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (work[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("singular matrix");
    std::swap(work[col], work[pivot]);
    std::swap(inv[col], inv[pivot]);
    const Rational p = work[col][col];
    for (int j = 0; j < n; ++j) {
      work[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work[r][col] == 0) continue;
      const Rational f = work[r][col];
      for (int j = 0; j < n; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace gkm
