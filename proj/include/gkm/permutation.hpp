#ifndef GKM_PERMUTATION_HPP
#define GKM_PERMUTATION_HPP

#include <string>
#include <vector>

namespace gkm {

// Permutation of [n] in one-line notation; w(i) for 1 <= i <= n.
class Perm {
 public:
  static Perm identity(int n);
  static Perm longest(int n);  // w0: i -> n+1-i
  static Perm transposition(int n, int i, int j);
  static Perm from_one_line(std::vector<int> values);  // validates
  static Perm from_string(const std::string& s);       // "231"
  static std::vector<Perm> all(int n);                 // lexicographic order

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& one_line() const { return values_; }

  // (this o other)(i) = this(other(i)).
  Perm compose(const Perm& other) const;
  Perm inverse() const;
  // Right multiplication w * (i,j): swaps the values at positions i and j.
  Perm right_transposition(int i, int j) const;

  bool is_identity() const;
  std::string to_string() const;

  bool operator==(const Perm& o) const { return values_ == o.values_; }
  bool operator!=(const Perm& o) const { return values_ != o.values_; }
  bool operator<(const Perm& o) const { return values_ < o.values_; }

 private:
  explicit Perm(std::vector<int> values) : values_(std::move(values)) {}
  std::vector<int> values_;
};

}  // namespace gkm

#endif
