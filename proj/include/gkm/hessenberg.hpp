#ifndef GKM_HESSENBERG_HPP
#define GKM_HESSENBERG_HPP

#include <string>
#include <vector>

#include "gkm/gkm_graph.hpp"
#include "gkm/permutation.hpp"

namespace gkm {

// Graph building is capped here; the vertex set is S_n.
inline constexpr int kMaxGraphN = 6;

struct StaircaseBox {
  int row = 0;  // i
  int col = 0;  // j, with col < row <= h(col)
};

// A nondecreasing function h: [n] -> [n] with h(j) >= j.
class HessenbergFunction {
 public:
  // Throws std::invalid_argument on non-monotone, h(j) < j, or out-of-range
  // values.
  static HessenbergFunction from_values(std::vector<int> values);
  // Parses the comma-separated CLI form "2,3,3".
  static HessenbergFunction parse(const std::string& s);
  // Every valid function for the given n, in lexicographic order.
  static std::vector<HessenbergFunction> all(int n);

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int j) const { return values_[j - 1]; }
  const std::vector<int>& values() const { return values_; }

  // Sum of h(j) - j; the complex dimension of the associated variety and the
  // regular out-degree of its graph.
  int complex_dimension() const;
  // True iff h(j) >= j+1 for all j in [n-1].
  bool is_connected() const;
  bool is_full_flag() const;

  bool contains_box(int i, int j) const;   // j < i <= h(j)
  std::vector<StaircaseBox> staircase() const;

  // True iff the staircase box set is invariant under the anti-diagonal flip
  // (i,j) -> (n+1-j, n+1-i).
  bool star_condition() const;

  std::string to_string() const;  // "2,3,3"

  bool operator==(const HessenbergFunction& o) const { return values_ == o.values_; }
  bool operator<(const HessenbergFunction& o) const { return values_ < o.values_; }

 private:
  explicit HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {}
  std::vector<int> values_;
};

// The labelled graph on S_n: for each w and each staircase box (i,j), an
// oriented edge (w, w(i,j)) with label t_{w(i)} - t_{w(j)}. Throws when
// n exceeds the build guard.
GkmGraph build_gkm_graph(const HessenbergFunction& h);

}  // namespace gkm

#endif
