#include "gkm/lattice_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm {

namespace {

// Canonical integral extension of a sum-zero-lattice map. Input: columns
// a_i = phi(t_i - t_n) (so a_n = 0). Output columns a_i + v where
// v[k] = -lower_median{a_1[k], ..., a_n[k]}. The rule recovers the natural
// matrix of a signed permutation map and depends only on the restriction
// to the sum-zero sublattice.
IntMatrix median_extension(const std::vector<std::vector<Int>>& a) {
  const int n = static_cast<int>(a.size());
  IntMatrix m(n, std::vector<Int>(n, Int(0)));
  for (int k = 0; k < n; ++k) {
    std::vector<Int> vals;
    vals.reserve(n);
    for (int i = 0; i < n; ++i) vals.push_back(a[i][k]);
    std::sort(vals.begin(), vals.end());
    const Int v = -vals[(n - 1) / 2];
    for (int i = 0; i < n; ++i) m[k][i] = a[i][k] + v;
  }
  return m;
}

}  // namespace

LatticeMap::LatticeMap(IntMatrix m) : n_(static_cast<int>(m.size())), m_(std::move(m)) {
  for (const auto& row : m_)
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("lattice map matrix must be square");
}

LatticeMap LatticeMap::identity(int n) {
  IntMatrix m(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return LatticeMap(std::move(m));
}

LatticeMap LatticeMap::from_permutation(const Perm& sigma) {
  const int n = sigma.n();
  IntMatrix m(n, std::vector<Int>(n, Int(0)));
  for (int i = 1; i <= n; ++i) m[sigma(i) - 1][i - 1] = 1;
  return LatticeMap(std::move(m));
}

LatticeMap LatticeMap::longest_negation(int n) {
  IntMatrix m(n, std::vector<Int>(n, Int(0)));
  for (int i = 1; i <= n; ++i) m[n - i][i - 1] = -1;
  return LatticeMap(std::move(m));
}

std::optional<LatticeMap> LatticeMap::from_simple_root_images(
    const std::vector<LinearForm>& images) {
  const int n = static_cast<int>(images.size()) + 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, Int(0)));
  // phi(t_i - t_n) = sum_{j >= i} phi(s_j).
  for (int i = n - 2; i >= 0; --i) {
    const LinearForm& img = images[i];
    if (static_cast<int>(img.coeffs().size()) != n) return std::nullopt;
    if (!img.is_integral() || !img.sum_zero()) return std::nullopt;
    for (int k = 0; k < n; ++k)
      a[i][k] = a[i + 1][k] + numerator(img.coeff(k));
  }
  LatticeMap map(median_extension(a));
  if (!map.unimodular_on_sum_zero()) return std::nullopt;
  return map;
}

bool LatticeMap::preserves_sum_zero() const {
  if (n_ == 0) return true;
  std::vector<Int> col_sums(n_, Int(0));
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) col_sums[c] += m_[r][c];
  for (int c = 1; c < n_; ++c)
    if (col_sums[c] != col_sums[0]) return false;
  return true;
}

IntMatrix LatticeMap::simple_root_matrix() const {
  // Column j: phi(s_j) = col_j - col_{j+1}, expressed in the s-basis via
  // partial sums of its t-coordinates.
  const int k = n_ - 1;
  IntMatrix s(k, std::vector<Int>(k, Int(0)));
  for (int j = 0; j < k; ++j) {
    Int partial = 0;
    for (int r = 0; r < k; ++r) {
      partial += m_[r][j] - m_[r][j + 1];
      s[r][j] = partial;  // coefficient of s_{r+1}
    }
  }
  return s;
}

bool LatticeMap::unimodular_on_sum_zero() const {
  if (!preserves_sum_zero()) return false;
  if (n_ <= 1) return true;
  const Int d = int_determinant(simple_root_matrix());
  return d == 1 || d == -1;
}

bool LatticeMap::is_identity_on_sum_zero() const {
  return same_on_sum_zero(identity(n_));
}

LinearForm LatticeMap::apply(const LinearForm& l) const {
  if (l.n_vars() != n_) throw std::invalid_argument("lattice map arity mismatch");
  LinearForm out(n_);
  for (int r = 0; r < n_; ++r) {
    Rational v = 0;
    for (int c = 0; c < n_; ++c)
      if (m_[r][c] != 0) v += Rational(m_[r][c]) * l.coeff(c);
    out.coeff(r) = v;
  }
  return out;
}

Polynomial LatticeMap::apply(const Polynomial& p) const {
  if (p.n_vars() != n_) throw std::invalid_argument("lattice map arity mismatch");
  std::vector<Polynomial> images;
  images.reserve(n_);
  for (int c = 0; c < n_; ++c) {
    Polynomial img(n_);
    for (int r = 0; r < n_; ++r) {
      if (m_[r][c] == 0) continue;
      img += Polynomial::variable(n_, r + 1) * Rational(m_[r][c]);
    }
    images.push_back(std::move(img));
  }
  return p.substitute_all(images);
}

LatticeMap LatticeMap::compose(const LatticeMap& other) const {
  if (n_ != other.n_) throw std::invalid_argument("composing lattice maps of different rank");
  IntMatrix r(n_, std::vector<Int>(n_, Int(0)));
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if (m_[i][k] == 0) continue;
      for (int j = 0; j < n_; ++j) r[i][j] += m_[i][k] * other.m_[k][j];
    }
  return LatticeMap(std::move(r));
}

LatticeMap LatticeMap::inverse_on_sum_zero() const {
  if (!unimodular_on_sum_zero())
    throw std::invalid_argument("lattice map is not unimodular on the sum-zero sublattice");
  const int k = n_ - 1;
  QMatrix s(k, QVector(k, Rational(0)));
  const IntMatrix si = simple_root_matrix();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) s[i][j] = Rational(si[i][j]);
  const QMatrix inv = q_inverse(s);
  // Columns of inv are the s-coordinates of phi^{-1}(s_j); convert to t-coords.
  std::vector<LinearForm> images;
  images.reserve(k);
  for (int j = 0; j < k; ++j) {
    LinearForm img(n_);
    for (int r = 0; r < k; ++r) {
      img.coeff(r) += inv[r][j];
      img.coeff(r + 1) -= inv[r][j];
    }
    images.push_back(std::move(img));
  }
  auto result = from_simple_root_images(images);
  if (!result) throw std::logic_error("inverse of unimodular map must be unimodular");
  return *result;
}

std::optional<LatticeMap> LatticeMap::inverse_full() const {
  IntMatrix mi = m_;
  const Int d = int_determinant(mi);
  if (d != 1 && d != -1) return std::nullopt;
  QMatrix q(n_, QVector(n_, Rational(0)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) q[i][j] = Rational(m_[i][j]);
  const QMatrix inv = q_inverse(q);
  IntMatrix out(n_, std::vector<Int>(n_, Int(0)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (denominator(inv[i][j]) != 1) return std::nullopt;
      out[i][j] = numerator(inv[i][j]);
    }
  return LatticeMap(std::move(out));
}

std::vector<Polynomial> LatticeMap::reduced_action_images() const {
  // Image of t_i under the intrinsic action on the quotient coordinates:
  // lift t_i to t_i - (1/n) e1 in the sum-zero subspace, apply, project by
  // t_n -> -(t_1 + ... + t_{n-1}). The result does not depend on the
  // integral extension.
  std::vector<Rational> me1(n_, Rational(0));  // phi(e1) for this extension
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) me1[r] += Rational(m_[r][c]);
  std::vector<Polynomial> images;
  images.reserve(n_ - 1);
  for (int i = 0; i < n_ - 1; ++i) {
    std::vector<Rational> u(n_, Rational(0));
    for (int r = 0; r < n_; ++r)
      u[r] = Rational(m_[r][i]) - me1[r] / n_;
    Polynomial img(n_);
    for (int r = 0; r < n_ - 1; ++r) {
      const Rational c = u[r] - u[n_ - 1];
      if (c != 0) img += Polynomial::variable(n_, r + 1) * c;
    }
    images.push_back(std::move(img));
  }
  return images;
}

bool LatticeMap::same_on_sum_zero(const LatticeMap& o) const {
  if (n_ != o.n_) return false;
  return simple_root_matrix() == o.simple_root_matrix();
}

LatticeMap LatticeMap::canonicalized() const {
  std::vector<std::vector<Int>> a(n_, std::vector<Int>(n_, Int(0)));
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) a[i][k] = m_[k][i] - m_[k][n_ - 1];
  return LatticeMap(median_extension(a));
}

}  // namespace gkm
