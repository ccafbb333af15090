#include "gkm/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkm {

int polynomial_space_dim(int f, int j) {
  if (j < 0) return 0;
  if (f == 0) return j == 0 ? 1 : 0;
  // C(j + f - 1, f - 1)
  long long r = 1;
  for (int i = 1; i <= f - 1; ++i) r = r * (j + i) / i;
  return static_cast<int>(r);
}

std::vector<Exponents> degree_monomials(int n_vars, int f, int k) {
  std::vector<Exponents> out;
  Exponents current(n_vars, 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == f - 1) {
      current[var] = remaining;
      out.push_back(current);
      current[var] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current[var] = e;
      self(self, var + 1, remaining - e);
      current[var] = 0;
    }
    };
  if (f == 0) {
    if (k == 0) out.push_back(current);
    return out;
  }
  if (k < 0) return out;
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(), GradedLexGreater{});
  return out;
}

std::vector<Polynomial> substituted_monomials(const std::vector<Exponents>& monomials,
                                              const std::vector<Polynomial>& images,
                                              int n_vars) {
  // Shared subproducts: subst(m) = subst(m / t_i) * images[i] for the first
  // variable i occurring in m.
  std::map<Exponents, Polynomial, GradedLexGreater> cache;
  const int out_vars = images.empty() ? n_vars : images[0].n_vars();
  cache.emplace(Exponents(n_vars, 0), Polynomial::constant(out_vars, 1));
  auto eval = [&](auto&& self, const Exponents& m) -> const Polynomial& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    int i = 0;
    while (m[i] == 0) ++i;
    Exponents parent = m;
    --parent[i];
    const Polynomial value = self(self, parent) * images[i];
    return cache.emplace(m, std::move(value)).first->second;
  };
  std::vector<Polynomial> out;
  out.reserve(monomials.size());
  for (const auto& m : monomials) out.push_back(eval(eval, m));
  return out;
}

CohomologyContext::CohomologyContext(const GkmGraph& g, Lattice lattice)
    : g_(&g), lattice_(lattice), free_vars_(gkm::free_vars(g, lattice)) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
}

CohomologyContext::DegreeData& CohomologyContext::degree_data(int k) {
  auto it = degrees_.find(k);
  if (it != degrees_.end()) return it->second;
  DegreeData data;
  data.monomials = degree_monomials(g_->n_vars(), free_vars_, k);
  int idx = 0;
  for (const auto& m : data.monomials) data.monomial_index.emplace(m, idx++);
  return degrees_.emplace(k, std::move(data)).first->second;
}

void CohomologyContext::ensure_constraints(int k) {
  DegreeData& data = degree_data(k);
  if (data.constraints) return;
  const int n_monomials = static_cast<int>(data.monomials.size());
  const int cols = g_->vertex_count() * n_monomials;
  auto reducer = std::make_shared<RowReducer>(cols);

  // Substituted-monomial tables are shared between edges with the same
  // hyperplane.
  std::map<std::vector<Rational>, std::vector<Polynomial>> table_cache;
  for (const auto& e : g_->edges()) {
    if (e.src > e.dst) continue;  // one orientation per unordered edge
    LinearForm l = label_in_lattice(*g_, e.label, lattice_);
    if (l.is_zero())
      throw std::invalid_argument("zero edge label in congruence system");
    // Normalize so that +-l and scalar multiples share a table.
    int m = -1;
    for (int i = free_vars_ - 1; i >= 0; --i)
      if (l.coeff(i) != 0) {
        m = i;
        break;
      }
    l = l * (Rational(1) / l.coeff(m));
    auto cache_it = table_cache.find(l.coeffs());
    if (cache_it == table_cache.end()) {
      // Parametrize l = 0: t_m -> -sum of the other terms.
      std::vector<Polynomial> images;
      images.reserve(free_vars_);
      for (int i = 0; i < free_vars_; ++i) {
        if (i != m) {
          images.push_back(Polynomial::variable(g_->n_vars(), i + 1));
          continue;
        }
        Polynomial sub(g_->n_vars());
        for (int j = 0; j < free_vars_; ++j)
          if (j != m && l.coeff(j) != 0)
            sub += Polynomial::variable(g_->n_vars(), j + 1) * (-l.coeff(j));
        images.push_back(std::move(sub));
      }
      // Monomials only involve the first free_vars_ variables.
      std::vector<Exponents> trimmed;
      trimmed.reserve(data.monomials.size());
      for (const auto& mono : data.monomials)
        trimmed.push_back(Exponents(mono.begin(), mono.begin() + free_vars_));
      cache_it = table_cache
                     .emplace(l.coeffs(),
                              substituted_monomials(trimmed, images, free_vars_))
                     .first;
    }
    const auto& table = cache_it->second;
    // One constraint row per monomial of the substituted difference.
    std::map<Exponents, SparseRow, GradedLexGreater> rows;
    for (int mi = 0; mi < n_monomials; ++mi) {
      for (const auto& [expo, c] : table[mi].terms()) {
        SparseRow& row = rows[expo];
        row.emplace_back(e.src * n_monomials + mi, c);
        row.emplace_back(e.dst * n_monomials + mi, -c);
      }
    }
    for (auto& [expo, row] : rows) {
      std::sort(row.begin(), row.end());
      reducer->add_row(std::move(row));
    }
  }
  data.constraints = std::move(reducer);
  data.dim = cols - data.constraints->rank();
}

int CohomologyContext::dim_equivariant(int k) {
  if (k < 0) throw std::invalid_argument("negative degree");
  ensure_constraints(k);
  return degree_data(k).dim;
}

EquivariantClass CohomologyContext::class_from_coordinates(const QVector& v, int k) {
  DegreeData& data = degree_data(k);
  const int n_monomials = static_cast<int>(data.monomials.size());
  std::vector<Polynomial> values;
  values.reserve(g_->vertex_count());
  for (int vert = 0; vert < g_->vertex_count(); ++vert) {
    Polynomial p(g_->n_vars());
    for (int mi = 0; mi < n_monomials; ++mi) {
      const Rational& c = v[vert * n_monomials + mi];
      if (c != 0) p.add_term(data.monomials[mi], c);
    }
    values.push_back(std::move(p));
  }
  return EquivariantClass(g_, lattice_, k, std::move(values));
}

void CohomologyContext::ensure_basis(int k) {
  ensure_constraints(k);
  DegreeData& data = degree_data(k);
  if (data.basis_done) return;
  data.basis_vectors = data.constraints->kernel_basis();
  data.basis.clear();
  data.basis.reserve(data.basis_vectors.size());
  for (const auto& v : data.basis_vectors)
    data.basis.push_back(class_from_coordinates(v, k));
  data.basis_done = true;
}

const std::vector<EquivariantClass>& CohomologyContext::equivariant_basis(int k) {
  if (k < 0) throw std::invalid_argument("negative degree");
  ensure_basis(k);
  return degree_data(k).basis;
}

QVector CohomologyContext::class_coordinates(const EquivariantClass& c, int k) {
  DegreeData& data = degree_data(k);
  const int n_monomials = static_cast<int>(data.monomials.size());
  QVector v(g_->vertex_count() * n_monomials, Rational(0));
  for (int vert = 0; vert < g_->vertex_count(); ++vert) {
    for (const auto& [expo, coeff] : c.value(vert).terms()) {
      auto it = data.monomial_index.find(expo);
      if (it == data.monomial_index.end())
        throw std::invalid_argument("class value outside the coordinate space");
      v[vert * n_monomials + it->second] = coeff;
    }
  }
  return v;
}

void CohomologyContext::ensure_quotient(int k) {
  DegreeData& data = degree_data(k);
  if (data.quotient_done) return;
  ensure_basis(k);
  if (k == 0) {
    // No positive-degree products land in degree 0.
    const int cols = static_cast<int>(data.monomials.size()) * g_->vertex_count();
    data.ordinary = data.dim;
    data.quotient = std::make_shared<RowReducer>(cols + data.dim);
    data.rep_basis_index.clear();
    for (int i = 0; i < static_cast<int>(data.basis_vectors.size()); ++i) {
      SparseRow row = to_sparse(data.basis_vectors[i]);
      row.emplace_back(cols + i, Rational(1));
      data.quotient->add_row(std::move(row));
      data.rep_basis_index.push_back(i);
    }
    data.quotient_done = true;
    return;
  }
  ensure_basis(k - 1);
  const DegreeData& lower = degree_data(k - 1);
  const int n_monomials = static_cast<int>(data.monomials.size());
  const int lower_monomials = static_cast<int>(lower.monomials.size());
  const int cols = g_->vertex_count() * n_monomials;

  // Span of degree-1 constants times the lower equivariant space.
  RowReducer products(cols);
  for (int var = 0; var < free_vars_; ++var) {
    for (const auto& bv : lower.basis_vectors) {
      SparseRow row;
      for (int vert = 0; vert < g_->vertex_count(); ++vert) {
        for (int mi = 0; mi < lower_monomials; ++mi) {
          const Rational& c = bv[vert * lower_monomials + mi];
          if (c == 0) continue;
          Exponents expo = lower.monomials[mi];
          ++expo[var];
          row.emplace_back(vert * n_monomials + data.monomial_index.at(expo), c);
        }
      }
      std::sort(row.begin(), row.end());
      products.add_row(std::move(row));
    }
  }
  const int product_dim = products.rank();
  data.ordinary = data.dim - product_dim;

  // Augmented reducer: products first, then quotient representatives tagged
  // with unit tail columns.
  data.quotient = std::make_shared<RowReducer>(cols + data.ordinary);
  for (const auto& [pivot, row] : products.rows())
    data.quotient->add_row(row);
  data.rep_basis_index.clear();
  for (int i = 0; i < static_cast<int>(data.basis_vectors.size()); ++i) {
    SparseRow row = to_sparse(data.basis_vectors[i]);
    SparseRow residual = data.quotient->reduce(row);
    if (residual.empty() || residual.front().first >= cols) continue;
    const int slot = static_cast<int>(data.rep_basis_index.size());
    row = to_sparse(data.basis_vectors[i]);
    row.emplace_back(cols + slot, Rational(1));
    data.quotient->add_row(std::move(row));
    data.rep_basis_index.push_back(i);
  }
  if (static_cast<int>(data.rep_basis_index.size()) != data.ordinary)
    throw std::logic_error("quotient dimension mismatch");
  data.quotient_done = true;
}

int CohomologyContext::ordinary_dim(int k) {
  if (k < 0) throw std::invalid_argument("negative degree");
  ensure_quotient(k);
  return degree_data(k).ordinary;
}

QVector CohomologyContext::ordinary_coordinates(const EquivariantClass& c) {
  const int k = c.degree();
  ensure_quotient(k);
  DegreeData& data = degree_data(k);
  const int cols = g_->vertex_count() * static_cast<int>(data.monomials.size());
  SparseRow residual = data.quotient->reduce(to_sparse(class_coordinates(c, k)));
  QVector coords(data.ordinary, Rational(0));
  for (const auto& [col, v] : residual) {
    if (col < cols)
      throw std::invalid_argument("class does not satisfy the congruences");
    coords[col - cols] = -v;
  }
  return coords;
}

QMatrix CohomologyContext::action_matrix(const GkmAutomorphism& a, int k) {
  ensure_quotient(k);
  DegreeData& data = degree_data(k);
  const int b = data.ordinary;
  const int n_monomials = static_cast<int>(data.monomials.size());
  const int cols = g_->vertex_count() * n_monomials;

  // Monomial substitution matrix for the inverse character action.
  const auto images = class_action_images(a.lattice_map(), lattice_, g_->n_vars());
  std::vector<Exponents> trimmed;
  trimmed.reserve(data.monomials.size());
  for (const auto& mono : data.monomials)
    trimmed.push_back(Exponents(mono.begin(), mono.begin() + free_vars_));
  std::vector<Polynomial> trimmed_images(images.begin(), images.begin() + free_vars_);
  const auto table = substituted_monomials(trimmed, trimmed_images, free_vars_);

  QMatrix result(b, QVector(b, Rational(0)));
  for (int j = 0; j < b; ++j) {
    const QVector& rep = data.basis_vectors[data.rep_basis_index[j]];
    // (a* xi)(v) = subst(xi(phi(v))).
    SparseRow image_vec;
    for (int vert = 0; vert < g_->vertex_count(); ++vert) {
      const int src = a.map_vertex(vert);
      for (int mi = 0; mi < n_monomials; ++mi) {
        const Rational& c = rep[src * n_monomials + mi];
        if (c == 0) continue;
        for (const auto& [expo, tc] : table[mi].terms()) {
          Exponents full(g_->n_vars(), 0);
          std::copy(expo.begin(), expo.end(), full.begin());
          image_vec.emplace_back(vert * n_monomials + data.monomial_index.at(full),
                                 c * tc);
        }
      }
    }
    std::sort(image_vec.begin(), image_vec.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    // Merge duplicate columns.
    SparseRow merged;
    for (const auto& [col, v] : image_vec) {
      if (!merged.empty() && merged.back().first == col)
        merged.back().second += v;
      else
        merged.emplace_back(col, v);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& e) { return e.second == 0; }),
                 merged.end());
    SparseRow residual = data.quotient->reduce(std::move(merged));
    for (const auto& [col, v] : residual) {
      if (col < cols)
        throw std::logic_error("action image left the equivariant space");
      result[col - cols][j] = -v;
    }
  }
  return result;
}

std::vector<int> CohomologyContext::betti_numbers() {
  if (connected_components(*g_).size() != 1)
    throw std::invalid_argument(
        "betti numbers require a connected graph; compute per component");
  const int d = g_->out_degree(0);
  std::vector<int> betti;
  betti.reserve(d + 1);
  for (int k = 0; k <= d; ++k) betti.push_back(ordinary_dim(k));
  return betti;
}

std::vector<EquivariantClass> x_classes(const GkmGraph& g) {
  const int n = g.n_vars();
  std::vector<EquivariantClass> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) {
    std::vector<Polynomial> values;
    values.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      const Perm w = Perm::from_string(g.vertex_id(v));
      values.push_back(Polynomial::variable(n, w(i)));
    }
    out.emplace_back(&g, Lattice::That, 1, std::move(values));
  }
  return out;
}

std::vector<GkmAutomorphism> aut_star(const std::vector<GkmAutomorphism>& auts,
                                      CohomologyContext& ctx, int up_to_degree) {
  std::vector<GkmAutomorphism> out;
  for (const auto& a : auts) {
    bool trivial = true;
    for (int k = 1; k <= up_to_degree && trivial; ++k) {
      const QMatrix m = ctx.action_matrix(a, k);
      for (int i = 0; i < static_cast<int>(m.size()) && trivial; ++i)
        for (int j = 0; j < static_cast<int>(m.size()); ++j)
          if (m[i][j] != (i == j ? 1 : 0)) {
            trivial = false;
            break;
          }
    }
    if (trivial) out.push_back(a);
  }
  return out;
}

std::vector<GkmAutomorphism> aut_star(const GkmGraph& g, int up_to_degree) {
  const auto auts = enumerate_aut(g);
  CohomologyContext ctx(g, Lattice::T);
  return aut_star(auts, ctx, up_to_degree);
}

}  // namespace gkm
