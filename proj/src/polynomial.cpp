#include "gkm/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gkm {

namespace {

int exp_sum(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check_same_vars(const Polynomial& a, const Polynomial& b) {
  if (a.n_vars() != b.n_vars())
    throw std::invalid_argument("mismatched variable counts");
}

}  // namespace

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = exp_sum(a), db = exp_sum(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial::Polynomial(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 0 || n_vars > kMaxVars)
    throw std::invalid_argument("variable count out of range");
}

Polynomial Polynomial::constant(int n_vars, const Rational& c) {
  Polynomial p(n_vars);
  p.add_term(Exponents(n_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int n_vars, int i) {
  if (i < 1 || i > n_vars) throw std::invalid_argument("variable index out of range");
  Polynomial p(n_vars);
  Exponents e(n_vars, 0);
  e[i - 1] = 1;
  p.add_term(e, 1);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_vars_)
    throw std::invalid_argument("exponent vector arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return exp_sum(terms_.begin()->first);  // leading term has max degree
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = exp_sum(terms_.begin()->first);
  return exp_sum(terms_.rbegin()->first) == d;
}

int Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  if (!is_homogeneous())
    throw std::invalid_argument("polynomial is not homogeneous");
  return exp_sum(terms_.begin()->first);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_vars(*this, o);
  Polynomial r(n_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(n_vars_);
      for (int i = 0; i < n_vars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(n_vars_);
  if (c == 0) return r;
  for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
  return r;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

bool Polynomial::operator==(const Polynomial& o) const {
  return n_vars_ == o.n_vars_ && terms_ == o.terms_;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Polynomial r = constant(n_vars_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
  std::vector<Polynomial> images;
  images.reserve(n_vars_);
  for (int i = 1; i <= n_vars_; ++i)
    images.push_back(i == var ? value : variable(n_vars_, i));
  return substitute_all(images);
}

Polynomial Polynomial::substitute_all(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != n_vars_)
    throw std::invalid_argument("substitution arity mismatch");
  const int out_vars = n_vars_ == 0 ? 0 : images[0].n_vars();
  Polynomial r(out_vars);
  // Power cache keyed by (variable, exponent).
  std::vector<std::vector<Polynomial>> powers(n_vars_);
  auto power_of = [&](int i, int k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(out_vars, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(out_vars, c);
    for (int i = 0; i < n_vars_; ++i)
      if (e[i] > 0) term = term * power_of(i, e[i]);
    r += term;
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string monomial;
    for (int i = 0; i < n_vars_; ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += "t" + std::to_string(i + 1);
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty()) {
      os << rational_to_string(mag);
    } else {
      if (mag != 1) os << rational_to_string(mag) << "*";
      os << monomial;
    }
  }
  return os.str();
}

LinearForm::LinearForm(int n_vars) : coeffs_(n_vars, Rational(0)) {}

LinearForm::LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

bool LinearForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool LinearForm::sum_zero() const {
  Rational s = 0;
  for (const auto& c : coeffs_) s += c;
  return s == 0;
}

bool LinearForm::is_integral() const {
  for (const auto& c : coeffs_)
    if (denominator(c) != 1) return false;
  return true;
}

bool LinearForm::proportional_to(const LinearForm& o) const {
  if (n_vars() != o.n_vars()) return false;
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  Rational lambda = 0;
  for (int i = 0; i < n_vars(); ++i) {
    if (coeffs_[i] == 0) {
      if (o.coeffs_[i] != 0) return false;
      continue;
    }
    if (o.coeffs_[i] == 0) return false;
    const Rational ratio = o.coeffs_[i] / coeffs_[i];
    if (lambda == 0)
      lambda = ratio;
    else if (ratio != lambda)
      return false;
  }
  return lambda != 0;
}

bool LinearForm::congruent_mod(const LinearForm& a, const LinearForm& b,
                               const LinearForm& unit) {
  if (unit.is_zero()) throw std::invalid_argument("congruence modulo zero form");
  const LinearForm d = b - a;
  if (d.is_zero()) return true;
  if (!d.proportional_to(unit) && !unit.proportional_to(d)) return false;
  // d = c * unit with integral c.
  Rational c = 0;
  for (int i = 0; i < unit.n_vars(); ++i) {
    if (unit.coeff(i) != 0) {
      c = d.coeff(i) / unit.coeff(i);
      break;
    }
  }
  if (denominator(c) != 1) return false;
  return d == unit * c;
}

LinearForm LinearForm::operator-() const { return *this * Rational(-1); }

LinearForm LinearForm::operator+(const LinearForm& o) const {
  LinearForm r = *this;
  for (int i = 0; i < n_vars(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

LinearForm LinearForm::operator-(const LinearForm& o) const {
  LinearForm r = *this;
  for (int i = 0; i < n_vars(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

LinearForm LinearForm::operator*(const Rational& c) const {
  LinearForm r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Polynomial LinearForm::to_poly() const {
  Polynomial p(n_vars());
  for (int i = 0; i < n_vars(); ++i) {
    if (coeffs_[i] == 0) continue;
    Exponents e(n_vars(), 0);
    e[i] = 1;
    p.add_term(e, coeffs_[i]);
  }
  return p;
}

LinearForm LinearForm::from_poly(const Polynomial& p) {
  LinearForm l(p.n_vars());
  for (const auto& [e, c] : p.terms()) {
    if (exp_sum(e) != 1)
      throw std::invalid_argument("polynomial is not a linear form");
    for (int i = 0; i < p.n_vars(); ++i)
      if (e[i] == 1) l.coeff(i) = c;
  }
  return l;
}

bool divisible_by_linear(const Polynomial& p, const LinearForm& l) {
  if (l.is_zero()) throw std::invalid_argument("division by the zero form");
  if (p.n_vars() != l.n_vars())
    throw std::invalid_argument("mismatched variable counts");
  if (p.is_zero()) return true;
  // Parametrize the hyperplane l = 0 by solving for its last nonzero variable.
  int m = -1;
  for (int i = l.n_vars() - 1; i >= 0; --i)
    if (l.coeff(i) != 0) {
      m = i;
      break;
    }
  Polynomial value(p.n_vars());
  for (int i = 0; i < l.n_vars(); ++i) {
    if (i == m || l.coeff(i) == 0) continue;
    value += Polynomial::variable(p.n_vars(), i + 1) * (-l.coeff(i) / l.coeff(m));
  }
  return p.substitute(m + 1, value).is_zero();
}

Polynomial normal_form_T(const Polynomial& p) {
  const int n = p.n_vars();
  if (n == 0) return p;
  Polynomial value(n);
  for (int i = 1; i < n; ++i) value -= Polynomial::variable(n, i);
  return p.substitute(n, value);
}

}  // namespace gkm
