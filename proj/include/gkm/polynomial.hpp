#ifndef GKM_POLYNOMIAL_HPP
#define GKM_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

// Hard cap on the number of variables; everything downstream is S_n-sized
// and blows up long before this.
inline constexpr int kMaxVars = 8;

using Exponents = std::vector<int>;

// Orders terms leading-first: higher total degree, then lexicographically
// greater exponent vector. Iterating a term map front-to-back yields the
// canonical text order ("t1^2 - t2^2").
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse exact multivariate polynomial in t_1..t_n over the rationals.
// No zero coefficients are ever stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  explicit Polynomial(int n_vars);
  static Polynomial constant(int n_vars, const Rational& c);
  static Polynomial variable(int n_vars, int i);  // t_i, 1-based

  int n_vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // Accumulates c * t^e; erases the term if the sum cancels.
  void add_term(const Exponents& e, const Rational& c);
  Rational coeff(const Exponents& e) const;

  // Max total degree over stored terms; -1 for the zero polynomial.
  int degree() const;
  // Common total degree of all terms. Throws std::invalid_argument when the
  // polynomial is not homogeneous; the zero polynomial reports 0.
  int homogeneous_degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(int k) const;

  // Replaces t_i (1-based) by the given polynomial; other variables are kept.
  Polynomial substitute(int var, const Polynomial& value) const;
  // Simultaneously replaces every t_i by images[i-1].
  Polynomial substitute_all(const std::vector<Polynomial>& images) const;

  // Canonical text: terms in graded-lex order, e.g. "t1^2 - t2^2", "1/2*t1*t2".
  std::string to_string() const;

 private:
  int n_vars_;
  TermMap terms_;
};

// A degree-one form sum c_i t_i, the value type of axial functions.
class LinearForm {
 public:
  explicit LinearForm(int n_vars);
  explicit LinearForm(std::vector<Rational> coeffs);

  int n_vars() const { return static_cast<int>(coeffs_.size()); }
  const Rational& coeff(int i) const { return coeffs_[i]; }  // 0-based slot
  Rational& coeff(int i) { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool sum_zero() const;
  bool is_integral() const;
  bool proportional_to(const LinearForm& o) const;  // o = lambda * this, lambda != 0
  // True when o - this is an integer multiple of unit; requires unit nonzero.
  static bool congruent_mod(const LinearForm& a, const LinearForm& b,
                            const LinearForm& unit);

  LinearForm operator-() const;
  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm operator*(const Rational& c) const;
  bool operator==(const LinearForm& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LinearForm& o) const { return !(*this == o); }
  bool operator<(const LinearForm& o) const { return coeffs_ < o.coeffs_; }

  Polynomial to_poly() const;
  // Requires a homogeneous degree-1 polynomial (or zero).
  static LinearForm from_poly(const Polynomial& p);

  std::string to_string() const { return to_poly().to_string(); }

 private:
  std::vector<Rational> coeffs_;
};

// True iff l divides p exactly. Decided by substituting a parametrization of
// the hyperplane l = 0 into p and testing identical vanishing. Throws on l = 0.
bool divisible_by_linear(const Polynomial& p, const LinearForm& l);

// Canonical representative of p modulo the ideal (t_1 + ... + t_n), obtained
// by substituting t_n -> -(t_1 + ... + t_{n-1}). Idempotent.
Polynomial normal_form_T(const Polynomial& p);

}  // namespace gkm

#endif
