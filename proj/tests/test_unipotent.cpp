#include <doctest.h>

#include <random>

#include "gkm/unipotent.hpp"

using namespace gkm;

TEST_CASE("conjugating by the identity fixes the elementary matrices") {
  const Perm id = Perm::identity(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const IntMatrix m = conjugate_elementary(id, i, j);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          CHECK(m[r][c] == ((r == i - 1 && c == j - 1) ? 1 : 0));
    }
  CHECK_THROWS_AS(conjugate_elementary(id, 2, 2), std::invalid_argument);
}

TEST_CASE("conjugation moves the single entry as computed by hand") {
  // 1s at (1,1), (3,2), (2,3): w = 132 in one-line notation.
  const Perm w = Perm::from_one_line({1, 3, 2});
  const IntMatrix pm = perm_matrix(w);
  CHECK(pm[0][0] == 1);
  CHECK(pm[2][1] == 1);
  CHECK(pm[1][2] == 1);
  const IntMatrix m = conjugate_elementary(w, 2, 1);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(m[r][c] == ((r == 2 && c == 0) ? 1 : 0));
}

TEST_CASE("permutation conjugation agrees with the matrix route") {
  std::mt19937 rng(47);
  const auto perms = Perm::all(4);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(perms.size()) - 1);
  for (int trial = 0; trial < 10; ++trial) {
    const Perm w = perms[pick(rng)];
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        if (i == j) continue;
        const IntMatrix fast = conjugate_elementary(w, i, j);
        const QMatrix slow = conjugate_elementary(perm_matrix(w), i, j);
        for (int r = 0; r < 4; ++r)
          for (int c = 0; c < 4; ++c) CHECK(Rational(fast[r][c]) == slow[r][c]);
      }
  }
}

TEST_CASE("witness search below the full flag") {
  const auto h = HessenbergFunction::from_values({2, 3, 3});
  const auto witness = find_witness(h, 2, 1);
  REQUIRE(witness.has_value());
  const auto violation = witness_violation(h, *witness, 2, 1);
  REQUIRE(violation.has_value());
  CHECK(violation->row > h(violation->col));
}

TEST_CASE("the full flag admits no witness") {
  for (int n = 2; n <= 4; ++n) {
    const auto h = HessenbergFunction::from_values(std::vector<int>(n, n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        CHECK(!find_witness(h, i, j).has_value());
      }
  }
}

TEST_CASE("every ordered pair has a witness for a strict n = 4 function") {
  const auto h = HessenbergFunction::from_values({2, 3, 4, 4});
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      CHECK(find_witness(h, i, j).has_value());
    }
}

TEST_CASE("staircase spaces are monotone in h") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> entry(-2, 2);
  const auto all4 = HessenbergFunction::all(4);
  for (const auto& small : all4) {
    for (const auto& big : all4) {
      bool leq = true;
      for (int j = 1; j <= 4; ++j)
        if (small(j) > big(j)) leq = false;
      if (!leq) continue;
      for (int trial = 0; trial < 3; ++trial) {
        IntMatrix m(4, std::vector<Int>(4, Int(0)));
        for (int j = 1; j <= 4; ++j)
          for (int i = 1; i <= small(j); ++i) m[i - 1][j - 1] = entry(rng);
        CHECK(in_hess_space(small, m));
        CHECK(in_hess_space(big, m));
      }
    }
  }
}

TEST_CASE("cofactor identity examples") {
  IntMatrix id(3, std::vector<Int>(3, Int(0)));
  for (int i = 0; i < 3; ++i) id[i][i] = 1;
  CHECK(cofactor_entry(id, 3, 1) == 1);
  CHECK(cofactor_entry(id, 1, 2) == 0);
  IntMatrix singular(2, std::vector<Int>(2, Int(1)));
  CHECK_THROWS_AS(cofactor_entry(singular, 1, 2), std::invalid_argument);
}

TEST_CASE("cofactor formula against direct conjugation") {
  std::mt19937 rng(59);
  for (int n : {3, 4, 5}) {
    for (int trial = 0; trial < 40; ++trial) {
      const IntMatrix g = random_sl(n, 3 * n, 3, rng);
      CHECK(int_determinant(g) == 1);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          CHECK(cofactor_entry(g, i, j) == conjugate_elementary(g, i, j)[n - 1][0]);
        }
    }
  }
}
