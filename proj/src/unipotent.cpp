#include "gkm/unipotent.hpp"

#include <stdexcept>

namespace gkm {

std::optional<HessViolation> hess_space_violation(const HessenbergFunction& h,
                                                  const IntMatrix& m) {
  const int n = h.n();
  for (int j = 1; j <= n; ++j)
    for (int i = h(j) + 1; i <= n; ++i)
      if (m[i - 1][j - 1] != 0) return HessViolation{i, j};
  return std::nullopt;
}

bool in_hess_space(const HessenbergFunction& h, const IntMatrix& m) {
  return !hess_space_violation(h, m).has_value();
}

IntMatrix perm_matrix(const Perm& w) {
  const int n = w.n();
  IntMatrix m(n, std::vector<Int>(n, Int(0)));
  for (int k = 1; k <= n; ++k) m[w(k) - 1][k - 1] = 1;
  return m;
}

IntMatrix conjugate_elementary(const Perm& g, int i, int j) {
  const int n = g.n();
  if (i == j) throw std::invalid_argument("E_ij requires i != j");
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("index out of range");
  const Perm inv = g.inverse();
  IntMatrix m(n, std::vector<Int>(n, Int(0)));
  m[inv(i) - 1][inv(j) - 1] = 1;
  return m;
}

QMatrix conjugate_elementary(const IntMatrix& g, int i, int j) {
  const int n = static_cast<int>(g.size());
  if (i == j) throw std::invalid_argument("E_ij requires i != j");
  QMatrix gq(n, QVector(n, Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) gq[r][c] = Rational(g[r][c]);
  const QMatrix ginv = q_inverse(gq);
  // g^{-1} E_ij g has entry (a,b) = ginv[a][i-1] * g[j-1][b].
  QMatrix out(n, QVector(n, Rational(0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out[a][b] = ginv[a][i - 1] * gq[j - 1][b];
  return out;
}

std::optional<Perm> find_witness(const HessenbergFunction& h, int i, int j) {
  if (i == j) throw std::invalid_argument("E_ij requires i != j");
  for (const Perm& g : Perm::all(h.n())) {
    if (!in_hess_space(h, conjugate_elementary(g, i, j))) return g;
  }
  return std::nullopt;
}

std::optional<HessViolation> witness_violation(const HessenbergFunction& h,
                                               const Perm& g, int i, int j) {
  return hess_space_violation(h, conjugate_elementary(g, i, j));
}

Rational cofactor_entry(const IntMatrix& g, int i, int j) {
  const int n = static_cast<int>(g.size());
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("index out of range");
  if (int_determinant(g) == 0) throw std::invalid_argument("singular matrix");
  // Cofactor of a_{in}: strike row i and column n.
  IntMatrix minor;
  minor.reserve(n - 1);
  for (int r = 0; r < n; ++r) {
    if (r == i - 1) continue;
    std::vector<Int> row;
    row.reserve(n - 1);
    for (int c = 0; c + 1 < n; ++c) row.push_back(g[r][c]);
    minor.push_back(std::move(row));
  }
  Int cof = int_determinant(minor);
  if ((i + n) % 2 != 0) cof = -cof;
  return Rational(cof * g[j - 1][0]);
}

IntMatrix random_sl(int n, int ops, int bound, std::mt19937& rng) {
  IntMatrix m(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  std::uniform_int_distribution<int> pick_row(0, n - 1);
  std::uniform_int_distribution<int> pick_coeff(-bound, bound);
  for (int step = 0; step < ops; ++step) {
    const int a = pick_row(rng);
    int b = pick_row(rng);
    while (b == a) b = pick_row(rng);
    const Int c = pick_coeff(rng);
    for (int col = 0; col < n; ++col) m[b][col] += c * m[a][col];
  }
  return m;
}

}  // namespace gkm
