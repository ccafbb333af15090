#ifndef GKM_TESTS_TEST_UTIL_HPP
#define GKM_TESTS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "gkm/polynomial.hpp"

namespace gkm::testutil {

inline Polynomial var(int n, int i) { return Polynomial::variable(n, i); }

inline LinearForm form(std::vector<int> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (int x : coeffs) c.emplace_back(x);
  return LinearForm(std::move(c));
}

// Random homogeneous polynomial of the given degree with small integer
// coefficients; may be zero.
inline Polynomial random_homogeneous(std::mt19937& rng, int n, int degree,
                                     int terms = 4) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> pick(0, n - 1);
  Polynomial p(n);
  for (int t = 0; t < terms; ++t) {
    Exponents e(n, 0);
    for (int d = 0; d < degree; ++d) ++e[pick(rng)];
    p.add_term(e, coeff(rng));
  }
  return p;
}

inline LinearForm random_form(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Rational> c(n, Rational(0));
  for (auto& x : c) x = coeff(rng);
  return LinearForm(std::move(c));
}

}  // namespace gkm::testutil

#endif
