#include "gkm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gkm {

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Perm(std::move(v));
}

Perm Perm::transposition(int n, int i, int j) {
  Perm p = identity(n);
  std::swap(p.values_[i - 1], p.values_[j - 1]);
  return p;
}

Perm Perm::from_one_line(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(n, false);
  for (int v : values) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("not a permutation in one-line notation");
    seen[v - 1] = true;
  }
  return Perm(std::move(values));
}

Perm Perm::from_string(const std::string& s) {
  std::vector<int> values;
  values.reserve(s.size());
  for (char c : s) {
    if (c < '1' || c > '9')
      throw std::invalid_argument("bad one-line permutation string '" + s + "'");
    values.push_back(c - '0');
  }
  return from_one_line(std::move(values));
}

std::vector<Perm> Perm::all(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Perm Perm::compose(const Perm& other) const {
  if (n() != other.n()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> v(n());
  for (int i = 1; i <= n(); ++i) v[i - 1] = (*this)(other(i));
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<int> v(n());
  for (int i = 1; i <= n(); ++i) v[values_[i - 1] - 1] = i;
  return Perm(std::move(v));
}

Perm Perm::right_transposition(int i, int j) const {
  Perm p = *this;
  std::swap(p.values_[i - 1], p.values_[j - 1]);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (values_[i - 1] != i) return false;
  return true;
}

std::string Perm::to_string() const {
  std::string s;
  s.reserve(values_.size());
  for (int v : values_) s += static_cast<char>('0' + v);
  return s;
}

}  // namespace gkm
