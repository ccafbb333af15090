#include <doctest.h>

#include <random>

#include "gkm/lattice_map.hpp"
#include "test_util.hpp"

using namespace gkm;
using testutil::random_homogeneous;
using testutil::var;

TEST_CASE("transposition action on a root") {
  const auto m = LatticeMap::from_permutation(Perm::transposition(3, 1, 2));
  CHECK(m.apply(var(3, 1) - var(3, 2)) == var(3, 2) - var(3, 1));
  CHECK(m.is_valid());
}

TEST_CASE("longest-element negation sends t1 to -t3") {
  const auto m = LatticeMap::longest_negation(3);
  CHECK(m.apply(var(3, 1)) == -var(3, 3));
  CHECK(m.is_valid());
  CHECK(m.compose(m).is_identity_on_sum_zero());
}

TEST_CASE("identity map fixes polynomials") {
  std::mt19937 rng(31);
  const auto id = LatticeMap::identity(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial p = random_homogeneous(rng, 4, trial % 3 + 1);
    CHECK(id.apply(p) == p);
  }
}

TEST_CASE("lattice maps are ring homomorphisms") {
  std::mt19937 rng(37);
  const auto maps = {LatticeMap::from_permutation(Perm::from_one_line({2, 3, 1})),
                     LatticeMap::longest_negation(3)};
  for (const auto& m : maps) {
    for (int trial = 0; trial < 15; ++trial) {
      const Polynomial p = random_homogeneous(rng, 3, 2);
      const Polynomial q = random_homogeneous(rng, 3, 1);
      CHECK(m.apply(p * q) == m.apply(p) * m.apply(q));
      CHECK(m.apply(p + q * q) == m.apply(p) + m.apply(q) * m.apply(q));
      if (!p.is_zero()) CHECK(m.apply(p).homogeneous_degree() == 2);
    }
  }
}

TEST_CASE("column sums detect maps leaving the sum-zero sublattice") {
  // t1 -> t1 + t2 does not preserve equal column sums.
  IntMatrix bad{{Int(1), Int(0)}, {Int(1), Int(1)}};
  CHECK(!LatticeMap(bad).preserves_sum_zero());
}

TEST_CASE("simple-root reconstruction recovers the natural matrices") {
  for (int n : {3, 4, 5}) {
    for (const auto& sigma : Perm::all(n)) {
      const auto m = LatticeMap::from_permutation(sigma);
      std::vector<LinearForm> images;
      for (int j = 1; j < n; ++j)
        images.push_back(LinearForm::from_poly(m.apply(var(n, j) - var(n, j + 1))));
      const auto rebuilt = LatticeMap::from_simple_root_images(images);
      REQUIRE(rebuilt.has_value());
      CHECK(rebuilt->matrix() == m.matrix());
    }
    const auto neg = LatticeMap::longest_negation(n);
    std::vector<LinearForm> images;
    for (int j = 1; j < n; ++j)
      images.push_back(LinearForm::from_poly(neg.apply(var(n, j) - var(n, j + 1))));
    const auto rebuilt = LatticeMap::from_simple_root_images(images);
    REQUIRE(rebuilt.has_value());
    CHECK(rebuilt->matrix() == neg.matrix());
  }
}

TEST_CASE("non-unimodular root images are rejected") {
  // s1 -> 2 s1 is integral but not invertible over the integers.
  std::vector<LinearForm> images{LinearForm({Rational(2), Rational(-2)})};
  CHECK(!LatticeMap::from_simple_root_images(images).has_value());
}

TEST_CASE("inverse on the sum-zero sublattice") {
  const auto m = LatticeMap::from_permutation(Perm::from_one_line({3, 1, 2}));
  const auto inv = m.inverse_on_sum_zero();
  CHECK(m.compose(inv).is_identity_on_sum_zero());
  CHECK(inv.compose(m).is_identity_on_sum_zero());
}

TEST_CASE("reduced action matches substitution plus normal form for sum-fixing maps") {
  // For maps with phi(e1) = +-e1 the intrinsic action on reduced coordinates
  // equals substitute-then-reduce.
  std::mt19937 rng(41);
  for (const auto& m : {LatticeMap::from_permutation(Perm::from_one_line({2, 3, 4, 1})),
                        LatticeMap::longest_negation(4)}) {
    auto images = m.reduced_action_images();
    images.push_back(Polynomial(4));
    for (int trial = 0; trial < 10; ++trial) {
      Polynomial p = normal_form_T(random_homogeneous(rng, 4, 2));
      CHECK(p.substitute_all(images) == normal_form_T(m.apply(p)));
    }
  }
}
