#include "gkm/hessenberg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gkm {

HessenbergFunction HessenbergFunction::from_values(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  if (n == 0) throw std::invalid_argument("empty Hessenberg function");
  for (int j = 1; j <= n; ++j) {
    const int v = values[j - 1];
    if (v < 1 || v > n)
      throw std::invalid_argument("h(" + std::to_string(j) + ") out of range");
    if (v < j)
      throw std::invalid_argument("h(" + std::to_string(j) + ") < " + std::to_string(j));
    if (j > 1 && v < values[j - 2])
      throw std::invalid_argument("h is not nondecreasing");
  }
  return HessenbergFunction(std::move(values));
}

HessenbergFunction HessenbergFunction::parse(const std::string& s) {
  std::vector<int> values;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("");
      values.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed Hessenberg function '" + s + "'");
    }
  }
  return from_values(std::move(values));
}

std::vector<HessenbergFunction> HessenbergFunction::all(int n) {
  std::vector<HessenbergFunction> out;
  std::vector<int> values(n);
  // Depth-first over nondecreasing choices with h(j) >= j.
  auto rec = [&](auto&& self, int j) -> void {
    if (j > n) {
      out.push_back(HessenbergFunction(values));
      return;
    }
    const int lo = std::max(j, j > 1 ? values[j - 2] : 1);
    for (int v = lo; v <= n; ++v) {
      values[j - 1] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 1);
  return out;
}

int HessenbergFunction::complex_dimension() const {
  int d = 0;
  for (int j = 1; j <= n(); ++j) d += values_[j - 1] - j;
  return d;
}

bool HessenbergFunction::is_connected() const {
  for (int j = 1; j <= n() - 1; ++j)
    if (values_[j - 1] < j + 1) return false;
  return true;
}

bool HessenbergFunction::is_full_flag() const {
  for (int v : values_)
    if (v != n()) return false;
  return true;
}

bool HessenbergFunction::contains_box(int i, int j) const {
  return j >= 1 && j < i && i <= values_[j - 1];
}

std::vector<StaircaseBox> HessenbergFunction::staircase() const {
  std::vector<StaircaseBox> boxes;
  for (int j = 1; j <= n(); ++j)
    for (int i = j + 1; i <= values_[j - 1]; ++i) boxes.push_back({i, j});
  return boxes;
}

bool HessenbergFunction::star_condition() const {
  for (const auto& box : staircase())
    if (!contains_box(n() + 1 - box.col, n() + 1 - box.row)) return false;
  return true;
}

std::string HessenbergFunction::to_string() const {
  std::string s;
  for (int j = 0; j < n(); ++j) {
    if (j) s += ",";
    s += std::to_string(values_[j]);
  }
  return s;
}

GkmGraph build_gkm_graph(const HessenbergFunction& h) {
  const int n = h.n();
  if (n > kMaxGraphN)
    throw std::invalid_argument("graph building capped at n = " +
                                std::to_string(kMaxGraphN));
  const auto perms = Perm::all(n);
  std::vector<std::string> vertices;
  vertices.reserve(perms.size());
  for (const auto& w : perms) vertices.push_back(w.to_string());
  GkmGraph g(n, std::move(vertices));
  const auto boxes = h.staircase();
  for (const auto& w : perms) {
    for (const auto& [i, j] : boxes) {
      const Perm v = w.right_transposition(i, j);
      LinearForm label(n);
      label.coeff(w(i) - 1) = 1;
      label.coeff(w(j) - 1) = -1;
      g.add_oriented_edge(w.to_string(), v.to_string(), std::move(label));
    }
  }
  g.finalize();
  return g;
}

}  // namespace gkm
