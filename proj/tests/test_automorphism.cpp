#include <doctest.h>

#include <algorithm>
#include <random>

#include "gkm/automorphism.hpp"
#include "gkm/cohomology.hpp"
#include "test_util.hpp"

using namespace gkm;
using testutil::form;

namespace {

struct Fixture {
  HessenbergFunction h;
  GkmGraph g;
  explicit Fixture(std::vector<int> values)
      : h(HessenbergFunction::from_values(std::move(values))), g(build_gkm_graph(h)) {}
};

}  // namespace

TEST_CASE("identity translation is the identity automorphism") {
  Fixture f({2, 3, 3});
  CHECK(phi_sigma(f.g, Perm::identity(3)).is_identity());
}

TEST_CASE("translation by a transposition moves the pinned edge") {
  Fixture f({2, 3, 3});
  const Perm sigma = Perm::from_one_line({2, 1, 3});
  const auto a = phi_sigma(f.g, sigma);
  CHECK(a.satisfies_invariant());
  // Edge (123 -> 213) labelled t2 - t1 maps to (213 -> 123) labelled t1 - t2.
  const int src = f.g.index_of("123");
  CHECK(f.g.vertex_id(a.map_vertex(src)) == "213");
  CHECK(a.lattice_map().apply(form({-1, 1, 0})) == form({1, -1, 0}));
}

TEST_CASE("translations compose like the group") {
  Fixture f({2, 3, 4, 4});
  std::mt19937 rng(43);
  const auto perms = Perm::all(4);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(perms.size()) - 1);
  for (int trial = 0; trial < 10; ++trial) {
    const Perm s = perms[pick(rng)], t = perms[pick(rng)];
    CHECK(phi_sigma(f.g, s).compose(phi_sigma(f.g, t)) ==
          phi_sigma(f.g, s.compose(t)));
  }
}

TEST_CASE("the longest-element involution") {
  Fixture f({2, 3, 3});
  const auto a = phi_zero(f.g, f.h);
  CHECK(a.satisfies_invariant());
  CHECK(a.compose(a).is_identity());
  CHECK(!a.is_identity());
}

TEST_CASE("the involution is rejected without staircase symmetry") {
  Fixture f({3, 3, 4, 4});
  CHECK_THROWS_AS(phi_zero(f.g, f.h), std::invalid_argument);
}

TEST_CASE("the involution exists for every full flag up to n = 5") {
  for (int n = 2; n <= 5; ++n) {
    Fixture f(std::vector<int>(n, n));
    const auto a = phi_zero(f.g, f.h);
    CHECK(a.satisfies_invariant());
    CHECK(a.compose(a).is_identity());
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_aut(Fixture({2, 3, 3}).g).size() == 12);
  CHECK(enumerate_aut(Fixture({3, 3, 3}).g).size() == 12);
  CHECK(enumerate_aut(Fixture({3, 3, 4, 4}).g).size() == 24);
}

TEST_CASE("enumeration rejects low rank and disconnected graphs") {
  GkmGraph two_cycle(3, {"a", "b"});
  two_cycle.add_edge_pair("a", "b", form({1, -1, 0}));
  two_cycle.finalize();
  CHECK_THROWS_AS(enumerate_aut(two_cycle), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_aut(Fixture({1, 3, 3}).g), std::invalid_argument);
}

TEST_CASE("enumerated automorphisms verify independently and form a group") {
  for (auto values : {std::vector<int>{2, 3, 3}, std::vector<int>{3, 3, 3},
                      std::vector<int>{2, 3, 4, 4}}) {
    Fixture f(values);
    const auto auts = enumerate_aut(f.g);
    for (const auto& a : auts) CHECK(a.satisfies_invariant());
    auto contains = [&](const GkmAutomorphism& a) {
      return std::find(auts.begin(), auts.end(), a) != auts.end();
    };
    for (const auto& a : auts) {
      CHECK(contains(a.inverse()));
      for (const auto& b : auts) CHECK(contains(a.compose(b)));
    }
  }
}

TEST_CASE("enumeration reproduces the generator description") {
  Fixture f({2, 3, 3});
  const auto auts = enumerate_aut(f.g);
  std::vector<GkmAutomorphism> expected;
  const auto zero = phi_zero(f.g, f.h);
  for (const auto& sigma : Perm::all(3)) {
    expected.push_back(phi_sigma(f.g, sigma));
    expected.push_back(phi_sigma(f.g, sigma).compose(zero));
  }
  std::sort(expected.begin(), expected.end());
  REQUIRE(expected.size() == auts.size());
  CHECK(std::equal(expected.begin(), expected.end(), auts.begin()));
}

TEST_CASE("pullback by the identity fixes classes") {
  Fixture f({2, 3, 3});
  const auto xs = x_classes(f.g);
  const auto id = phi_sigma(f.g, Perm::identity(3));
  for (const auto& x : xs) CHECK(act_on_map(id, x) == x);
}

TEST_CASE("tautological classes under the generators") {
  for (auto values : {std::vector<int>{2, 3, 3}, std::vector<int>{4, 4, 4, 4}}) {
    Fixture f(values);
    const int n = f.h.n();
    const auto xs = x_classes(f.g);
    CHECK(xs[0].value(f.g.index_of(Perm::identity(n).to_string())) ==
          Polynomial::variable(n, 1));
    for (const auto& sigma : Perm::all(n)) {
      const auto a = phi_sigma(f.g, sigma);
      for (int i = 0; i < n; ++i) CHECK(act_on_map(a, xs[i]) == xs[i]);
    }
    const auto zero = phi_zero(f.g, f.h);
    for (int i = 0; i < n; ++i)
      CHECK(act_on_map(zero, xs[i]) == xs[n - 1 - i] * Rational(-1));
  }
}

TEST_CASE("x-hat values follow the definition") {
  Fixture f({2, 3, 3});
  const auto xs = x_classes(f.g);
  CHECK(xs[0].value(f.g.index_of("123")) == Polynomial::variable(3, 1));
  CHECK(xs[0].value(f.g.index_of("213")) == Polynomial::variable(3, 2));
}

TEST_CASE("dot action identities") {
  Fixture f({2, 3, 3});
  CohomologyContext ctx(f.g, Lattice::T);
  for (int k = 0; k <= 2; ++k) {
    for (const auto& xi : ctx.equivariant_basis(k)) {
      CHECK(dot_action(Perm::identity(3), xi) == xi);
      for (const auto& tau : Perm::all(3)) {
        const auto lhs = dot_action(tau, xi);
        CHECK(lhs == act_on_map(phi_sigma(f.g, tau.inverse()), xi));
        CHECK(lhs.satisfies_congruences());
        for (const auto& sigma : Perm::all(3))
          CHECK(dot_action(sigma, lhs) == dot_action(sigma.compose(tau), xi));
      }
    }
  }
}
