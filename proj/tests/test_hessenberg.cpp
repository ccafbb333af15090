#include <doctest.h>

#include "gkm/hessenberg.hpp"
#include "test_util.hpp"

using namespace gkm;

TEST_CASE("validation of function vectors") {
  CHECK_NOTHROW(HessenbergFunction::from_values({2, 3, 3}));
  CHECK_THROWS_AS(HessenbergFunction::from_values({3, 2, 3}), std::invalid_argument);
  CHECK_NOTHROW(HessenbergFunction::from_values({1, 2, 3}));
  CHECK_THROWS_AS(HessenbergFunction::from_values({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(HessenbergFunction::from_values({2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(HessenbergFunction::parse("2,x"), std::invalid_argument);
  CHECK(HessenbergFunction::parse("2,3,3").to_string() == "2,3,3");
}

TEST_CASE("complex dimension") {
  CHECK(HessenbergFunction::from_values({2, 3, 3}).complex_dimension() == 2);
  CHECK(HessenbergFunction::from_values({4, 4, 4, 4}).complex_dimension() == 6);
  CHECK(HessenbergFunction::from_values({1, 2, 3, 4}).complex_dimension() == 0);
}

TEST_CASE("connectivity criterion") {
  CHECK(HessenbergFunction::from_values({2, 3, 3}).is_connected());
  CHECK(!HessenbergFunction::from_values({1, 2, 3}).is_connected());
  CHECK(!HessenbergFunction::from_values({2, 2, 3, 4}).is_connected());
}

TEST_CASE("the n = 3 hexagon pins the right-multiplication convention") {
  const GkmGraph g = build_gkm_graph(HessenbergFunction::from_values({2, 3, 3}));
  CHECK(g.vertex_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(g.out_degree(v) == 2);
  // Edge 123 -> 213 from box (2,1): label t_{w(2)} - t_{w(1)} = t2 - t1.
  const int id = g.index_of("123");
  bool found_box21 = false, found_box32 = false;
  for (int e : g.out_edges(id)) {
    const auto& edge = g.edges()[e];
    if (g.vertex_id(edge.dst) == "213") {
      CHECK(edge.label == testutil::form({-1, 1, 0}));
      found_box21 = true;
    }
    if (g.vertex_id(edge.dst) == "132") {
      CHECK(edge.label == testutil::form({0, -1, 1}));
      found_box32 = true;
    }
  }
  CHECK(found_box21);
  CHECK(found_box32);
  // All six labels together are the six roots +-(t_a - t_b).
  int root_count = 0;
  for (const auto& e : g.edges()) {
    CHECK(e.label.sum_zero());
    ++root_count;
  }
  CHECK(root_count == 12);
}

TEST_CASE("empty staircase gives isolated vertices") {
  const GkmGraph g = build_gkm_graph(HessenbergFunction::from_values({1, 2}));
  CHECK(g.vertex_count() == 2);
  CHECK(g.edges().empty());
}

TEST_CASE("staircase flip condition") {
  CHECK(HessenbergFunction::from_values({2, 3, 3}).star_condition());
  CHECK(!HessenbergFunction::from_values({3, 3, 4, 4}).star_condition());
  CHECK(HessenbergFunction::from_values({4, 4, 4, 4}).star_condition());
  CHECK(HessenbergFunction::from_values({5, 5, 5, 5, 5}).star_condition());
  CHECK(HessenbergFunction::from_values({2, 3, 4, 4}).star_condition());
  CHECK(!HessenbergFunction::from_values({2, 4, 4, 4}).star_condition());
}

TEST_CASE("flip condition agrees with the transposed-function comparison") {
  // Independent route: the flipped function j -> n - #{k : h(k) < n+1-j}
  // must equal h itself.
  for (int n = 1; n <= 6; ++n) {
    for (const auto& h : HessenbergFunction::all(n)) {
      std::vector<int> flipped(n);
      for (int j = 1; j <= n; ++j) {
        int below = 0;
        for (int k = 1; k <= n; ++k)
          if (h(k) < n + 1 - j) ++below;
        flipped[j - 1] = n - below;
      }
      CHECK(h.star_condition() == (flipped == h.values()));
    }
  }
}

TEST_CASE("enumeration counts match the Catalan numbers") {
  CHECK(HessenbergFunction::all(3).size() == 5);
  CHECK(HessenbergFunction::all(4).size() == 14);
  CHECK(HessenbergFunction::all(5).size() == 42);
}

TEST_CASE("graph building is capped") {
  std::vector<int> big(7, 7);
  CHECK_THROWS_AS(build_gkm_graph(HessenbergFunction::from_values(big)),
                  std::invalid_argument);
}
