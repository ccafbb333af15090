#ifndef GKM_MATRIX_HPP
#define GKM_MATRIX_HPP

#include <map>
#include <utility>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;
using IntMatrix = std::vector<std::vector<Int>>;

// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<int, Rational>>;

SparseRow to_sparse(const QVector& v);
QVector to_dense(const SparseRow& r, int cols);

// Incremental exact row reduction over Q. Rows are reduced against the
// current echelon set as they arrive; pivots are normalized to 1.
class RowReducer {
 public:
  explicit RowReducer(int cols);

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces r against the stored rows and inserts the residual if nonzero.
  // Returns true when the rank grew.
  bool add_row(SparseRow r);

  // Residual of r after eliminating every pivot column. Zero residual means
  // r lies in the row span. Switches the reducer to fully reduced form.
  SparseRow reduce(SparseRow r);

  // Re-reduces stored rows so every pivot column occurs in exactly one row.
  void make_reduced();

  // Basis of {x : Ax = 0} where A has the stored rows as its row span.
  // One vector per free column, in ascending column order; the free
  // coordinate is set to 1.
  std::vector<QVector> kernel_basis();

  const std::map<int, SparseRow>& rows() const { return rows_; }

 private:
  int cols_;
  bool reduced_ = true;
  std::map<int, SparseRow> rows_;  // pivot column -> row (pivot value 1)
};

// Exact basis of the null space of m (rows are constraints). The basis size
// always satisfies rank + nullity = column count.
std::vector<QVector> kernel_basis(const QMatrix& m);
int matrix_rank(const QMatrix& m);

int rank_of_forms(const std::vector<QVector>& vectors);

// Exact determinant by fraction-free (Bareiss) elimination.
Int int_determinant(IntMatrix m);

// Inverse of a square rational matrix; throws std::invalid_argument when
// singular.
QMatrix q_inverse(const QMatrix& m);

QMatrix q_multiply(const QMatrix& a, const QMatrix& b);
QMatrix q_identity(int n);

}  // namespace gkm

#endif
