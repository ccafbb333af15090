#include <doctest.h>

#include <random>

#include "gkm/matrix.hpp"

using namespace gkm;

namespace {

QMatrix from_ints(const std::vector<std::vector<int>>& m) {
  QMatrix out;
  for (const auto& row : m) {
    QVector r;
    for (int x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TEST_CASE("kernel of the identity is empty") {
  CHECK(kernel_basis(from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).empty());
}

TEST_CASE("kernel of the zero map is everything") {
  const auto basis = kernel_basis(from_ints({{0, 0, 0}, {0, 0, 0}}));
  CHECK(basis.size() == 3);
}

TEST_CASE("one-dimensional kernel by hand") {
  const auto basis = kernel_basis(from_ints({{1, 1, 0}, {0, 1, 1}}));
  REQUIRE(basis.size() == 1);
  // Spanned by (1, -1, 1); the computed vector is a scalar multiple.
  const QVector& v = basis.front();
  CHECK(v[0] == -v[1]);
  CHECK(v[0] == v[2]);
  CHECK(v[0] != 0);
}

TEST_CASE("kernel vectors are annihilated and rank-nullity holds") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = 2 + trial % 4, cols = 2 + (trial * 7) % 5;
    QMatrix m(rows, QVector(cols, Rational(0)));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    const auto basis = kernel_basis(m);
    CHECK(matrix_rank(m) + static_cast<int>(basis.size()) == cols);
    for (const auto& v : basis) {
      for (const auto& row : m) {
        Rational dot = 0;
        for (int c = 0; c < cols; ++c) dot += row[c] * v[c];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("reducer residuals detect span membership") {
  RowReducer red(3);
  red.add_row(to_sparse({Rational(1), Rational(2), Rational(0)}));
  red.add_row(to_sparse({Rational(0), Rational(1), Rational(1)}));
  CHECK(red.reduce(to_sparse({Rational(1), Rational(3), Rational(1)})).empty());
  CHECK(!red.reduce(to_sparse({Rational(0), Rational(0), Rational(1)})).empty());
}

TEST_CASE("integer determinants") {
  CHECK(int_determinant({{Int(2), Int(0)}, {Int(0), Int(3)}}) == 6);
  CHECK(int_determinant({{Int(0), Int(1)}, {Int(1), Int(0)}}) == -1);
  CHECK(int_determinant({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 0);
  // Vandermonde 4x4 on 0,1,2,3: product of differences = 12.
  IntMatrix v(4, std::vector<Int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Int p = 1;
      for (int k = 0; k < j; ++k) p *= i;
      v[i][j] = p;
    }
  CHECK(int_determinant(v) == 12);
}

TEST_CASE("rational inverse") {
  const QMatrix m = from_ints({{2, 1}, {1, 1}});
  const QMatrix inv = q_inverse(m);
  CHECK(q_multiply(m, inv) == q_identity(2));
  CHECK_THROWS_AS(q_inverse(from_ints({{1, 1}, {1, 1}})), std::invalid_argument);
}
