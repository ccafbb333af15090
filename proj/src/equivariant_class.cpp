#include "gkm/equivariant_class.hpp"

#include <stdexcept>

namespace gkm {

int free_vars(const GkmGraph& g, Lattice lattice) {
  return lattice == Lattice::That ? g.n_vars() : g.n_vars() - 1;
}

LinearForm label_in_lattice(const GkmGraph& g, const LinearForm& label,
                            Lattice lattice) {
  if (lattice == Lattice::That) return label;
  // Substitute t_n -> -(t_1 + ... + t_{n-1}); the slot for t_n goes to 0.
  const int n = g.n_vars();
  LinearForm out(n);
  const Rational last = label.coeff(n - 1);
  for (int i = 0; i < n - 1; ++i) out.coeff(i) = label.coeff(i) - last;
  return out;
}

EquivariantClass::EquivariantClass(const GkmGraph* graph, Lattice lattice,
                                   int degree, std::vector<Polynomial> values)
    : graph_(graph), lattice_(lattice), degree_(degree), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != graph_->vertex_count())
    throw std::invalid_argument("one polynomial per vertex required");
  for (const auto& p : values_) {
    if (p.n_vars() != graph_->n_vars())
      throw std::invalid_argument("class value arity mismatch");
    if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != degree_))
      throw std::invalid_argument("class values must be homogeneous of the stated degree");
  }
}

bool EquivariantClass::satisfies_congruences() const {
  for (const auto& e : graph_->edges()) {
    const Polynomial diff = values_[e.src] - values_[e.dst];
    if (diff.is_zero()) continue;
    const LinearForm l = label_in_lattice(*graph_, e.label, lattice_);
    if (!divisible_by_linear(diff, l)) return false;
  }
  return true;
}

EquivariantClass EquivariantClass::operator+(const EquivariantClass& o) const {
  if (graph_ != o.graph_ || lattice_ != o.lattice_ || degree_ != o.degree_)
    throw std::invalid_argument("class mismatch in addition");
  std::vector<Polynomial> vals;
  vals.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) vals.push_back(values_[i] + o.values_[i]);
  return EquivariantClass(graph_, lattice_, degree_, std::move(vals));
}

EquivariantClass EquivariantClass::operator-(const EquivariantClass& o) const {
  return *this + o * Rational(-1);
}

EquivariantClass EquivariantClass::operator*(const Rational& c) const {
  std::vector<Polynomial> vals;
  vals.reserve(values_.size());
  for (const auto& v : values_) vals.push_back(v * c);
  return EquivariantClass(graph_, lattice_, degree_, std::move(vals));
}

EquivariantClass EquivariantClass::operator*(const EquivariantClass& o) const {
  if (graph_ != o.graph_ || lattice_ != o.lattice_)
    throw std::invalid_argument("class mismatch in product");
  std::vector<Polynomial> vals;
  vals.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) vals.push_back(values_[i] * o.values_[i]);
  return EquivariantClass(graph_, lattice_, degree_ + o.degree_, std::move(vals));
}

bool EquivariantClass::operator==(const EquivariantClass& o) const {
  return graph_ == o.graph_ && lattice_ == o.lattice_ && degree_ == o.degree_ &&
         values_ == o.values_;
}

bool EquivariantClass::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

EquivariantClass EquivariantClass::zero(const GkmGraph* graph, Lattice lattice,
                                        int degree) {
  return EquivariantClass(graph, lattice, degree,
                          std::vector<Polynomial>(graph->vertex_count(),
                                                  Polynomial(graph->n_vars())));
}

EquivariantClass EquivariantClass::constant(const GkmGraph* graph, Lattice lattice,
                                            const Polynomial& p) {
  const int degree = p.is_zero() ? 0 : p.homogeneous_degree();
  return EquivariantClass(graph, lattice, degree,
                          std::vector<Polynomial>(graph->vertex_count(), p));
}

EquivariantClass to_T_lattice(const EquivariantClass& c) {
  if (c.lattice() == Lattice::T) return c;
  std::vector<Polynomial> vals;
  vals.reserve(c.values().size());
  for (const auto& v : c.values()) vals.push_back(normal_form_T(v));
  return EquivariantClass(&c.graph(), Lattice::T, c.degree(), std::move(vals));
}

}  // namespace gkm
