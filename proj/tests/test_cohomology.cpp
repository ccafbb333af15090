#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gkm/cohomology.hpp"
#include "test_util.hpp"

using namespace gkm;

namespace {

struct Fixture {
  HessenbergFunction h;
  GkmGraph g;
  explicit Fixture(std::vector<int> values)
      : h(HessenbergFunction::from_values(std::move(values))), g(build_gkm_graph(h)) {}
};

}  // namespace

TEST_CASE("degree zero is spanned by component indicators") {
  Fixture connected({2, 3, 3});
  CohomologyContext ctx(connected.g, Lattice::T);
  CHECK(ctx.dim_equivariant(0) == 1);

  Fixture split({1, 3, 3});
  CohomologyContext split_ctx(split.g, Lattice::T);
  CHECK(split_ctx.dim_equivariant(0) == 3);
  CHECK_THROWS_AS(split_ctx.betti_numbers(), std::invalid_argument);
}

TEST_CASE("negative degrees are rejected") {
  Fixture f({2, 3, 3});
  CohomologyContext ctx(f.g, Lattice::T);
  CHECK_THROWS_AS(ctx.dim_equivariant(-1), std::invalid_argument);
}

TEST_CASE("degree-2 dimension for the hexagon") {
  Fixture f({2, 3, 3});
  CohomologyContext ctx(f.g, Lattice::T);
  CHECK(ctx.dim_equivariant(1) == 6);
  // Cross-check through the free-module count with Betti (1,4,1).
  CHECK(ctx.dim_equivariant(1) == 4 * 1 + 1 * 2);
}

TEST_CASE("tautological classes lie in the full-lattice solution space") {
  Fixture f({3, 3, 3});
  CohomologyContext ctx(f.g, Lattice::That);
  const auto& basis = ctx.equivariant_basis(1);
  const auto xs = x_classes(f.g);
  QMatrix all_rows;
  for (const auto& b : basis) all_rows.push_back(ctx.class_coordinates(b, 1));
  const int span_rank = matrix_rank(all_rows);
  QMatrix x_rows;
  for (const auto& x : xs) {
    CHECK(x.satisfies_congruences());
    all_rows.push_back(ctx.class_coordinates(x, 1));
    x_rows.push_back(ctx.class_coordinates(x, 1));
  }
  CHECK(matrix_rank(all_rows) == span_rank);  // membership
  CHECK(matrix_rank(x_rows) == 3);            // independence upstairs
}

TEST_CASE("basis elements satisfy every congruence") {
  for (auto values : {std::vector<int>{2, 3, 3}, std::vector<int>{2, 3, 4, 4}}) {
    Fixture f(values);
    for (auto lattice : {Lattice::T, Lattice::That}) {
      CohomologyContext ctx(f.g, lattice);
      for (int k = 0; k <= 2; ++k)
        for (const auto& xi : ctx.equivariant_basis(k))
          CHECK(xi.satisfies_congruences());
    }
  }
}

TEST_CASE("pinned Betti vectors") {
  {
    Fixture f({2, 3, 3});
    CohomologyContext ctx(f.g, Lattice::T);
    CHECK(ctx.betti_numbers() == std::vector<int>{1, 4, 1});
  }
  {
    Fixture f({3, 3, 3});
    CohomologyContext ctx(f.g, Lattice::T);
    CHECK(ctx.betti_numbers() == std::vector<int>{1, 2, 2, 1});
  }
}

TEST_CASE("Betti profile of a connected n = 4 case") {
  Fixture f({2, 3, 4, 4});
  CohomologyContext ctx(f.g, Lattice::T);
  const auto betti = ctx.betti_numbers();
  CHECK(betti.size() == 4);  // complex dimension 3
  CHECK(betti.front() == 1);
  CHECK(betti.back() == 1);
  CHECK(std::accumulate(betti.begin(), betti.end(), 0) == 24);
  for (std::size_t k = 0; k < betti.size(); ++k)
    CHECK(betti[k] == betti[betti.size() - 1 - k]);
}

TEST_CASE("free-module dimension count holds beyond the top degree") {
  Fixture f({2, 3, 3});
  CohomologyContext ctx(f.g, Lattice::T);
  const auto betti = ctx.betti_numbers();
  for (int k = 0; k <= 4; ++k) {
    long expected = 0;
    for (int j = 0; j <= k; ++j) {
      const int b = (k - j) < static_cast<int>(betti.size()) ? betti[k - j] : 0;
      expected += static_cast<long>(b) * polynomial_space_dim(2, j);
    }
    CHECK(ctx.dim_equivariant(k) == expected);
  }
}

TEST_CASE("action matrices on the ordinary quotient") {
  Fixture f({3, 3, 3});
  CohomologyContext ctx(f.g, Lattice::T);

  const auto id = phi_sigma(f.g, Perm::identity(3));
  CHECK(ctx.action_matrix(id, 1) == q_identity(2));

  // The involution carries the image of x_i to the image of -x_{4-i}.
  const auto zero = phi_zero(f.g, f.h);
  const QMatrix m = ctx.action_matrix(zero, 1);
  const auto xs = x_classes(f.g);
  std::vector<QVector> coords;
  for (const auto& x : xs)
    coords.push_back(ctx.ordinary_coordinates(to_T_lattice(x)));
  for (int i = 0; i < 3; ++i) {
    QVector lhs(2, Rational(0));
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) lhs[r] += m[r][c] * coords[i][c];
    for (int r = 0; r < 2; ++r) CHECK(lhs[r] == -coords[2 - i][r]);
  }
}

TEST_CASE("nontrivial translations act nontrivially on the hexagon") {
  Fixture f({2, 3, 3});
  CohomologyContext ctx(f.g, Lattice::T);
  const auto a = phi_sigma(f.g, Perm::from_one_line({2, 1, 3}));
  CHECK(ctx.action_matrix(a, 1) != q_identity(4));
}

TEST_CASE("trivially-acting automorphisms per the classification") {
  {
    Fixture f({3, 3, 3});
    const auto stars = aut_star(f.g, 3);
    std::vector<GkmAutomorphism> expected;
    for (const auto& sigma : Perm::all(3)) expected.push_back(phi_sigma(f.g, sigma));
    std::sort(expected.begin(), expected.end());
    REQUIRE(stars.size() == expected.size());
    CHECK(std::equal(expected.begin(), expected.end(), stars.begin()));
  }
  {
    Fixture f({2, 3, 3});
    const auto stars = aut_star(f.g, 2);
    REQUIRE(stars.size() == 1);
    CHECK(stars.front().is_identity());
  }
  {
    Fixture f({2, 3, 4, 4});
    const auto stars = aut_star(f.g, 3);
    REQUIRE(stars.size() == 1);
    CHECK(stars.front().is_identity());
  }
}

TEST_CASE("pullbacks keep the equivariant space stable") {
  Fixture f({2, 3, 3});
  CohomologyContext ctx(f.g, Lattice::T);
  const auto auts = enumerate_aut(f.g);
  for (int k = 1; k <= 2; ++k) {
    QMatrix rows;
    for (const auto& xi : ctx.equivariant_basis(k))
      rows.push_back(ctx.class_coordinates(xi, k));
    const int base_rank = matrix_rank(rows);
    for (const auto& a : auts) {
      for (const auto& xi : ctx.equivariant_basis(k)) {
        const auto image = act_on_map(a, xi);
        CHECK(image.satisfies_congruences());
        rows.push_back(ctx.class_coordinates(image, k));
      }
    }
    CHECK(matrix_rank(rows) == base_rank);
  }
}
