#include "towerdepth/algebra.hpp"

#include <atomic>
#include <deque>

namespace td {

namespace {

template <class T>
void add_scaled(std::vector<std::pair<Index, T>>& raw, const SparseVec<T>& v, const T& a) {
  for (const auto& [k, x] : v.terms) raw.emplace_back(k, a * x);
}

}  // namespace

template <class T>
SparseVec<T> FinDimAlgebra<T>::mul(const SparseVec<T>& x, const SparseVec<T>& y) const {
  std::vector<std::pair<Index, T>> raw;
  for (const auto& [i, a] : x.terms)
    for (const auto& [j, b] : y.terms) add_scaled(raw, basis_product(i, j), T(a * b));
  return collect(std::move(raw));
}

template <class T>
SparseMap<T> FinDimAlgebra<T>::left_mult(const SparseVec<T>& x) const {
  SparseMap<T> m(dim, dim);
  for (Index j = 0; j < dim; ++j) m.cols[j] = mul(x, basis(j));
  return m;
}

template <class T>
SparseMap<T> FinDimAlgebra<T>::right_mult(const SparseVec<T>& x) const {
  SparseMap<T> m(dim, dim);
  for (Index j = 0; j < dim; ++j) m.cols[j] = mul(basis(j), x);
  return m;
}

template <class T>
bool FinDimAlgebra<T>::is_commutative() const {
  for (Index i = 0; i < dim; ++i)
    for (Index j = i + 1; j < dim; ++j)
      if (basis_product(i, j) != basis_product(j, i)) return false;
  return true;
}

template <class T>
Subspace<T> generated_subalgebra(const FinDimAlgebra<T>& a, const std::vector<SparseVec<T>>& gens) {
  Echelon<T> ech(a.field, a.dim);
  std::vector<SparseVec<T>> found;
  std::deque<std::size_t> queue;
  if (ech.insert(a.unit) == Echelon<T>::Outcome::Added) {
    found.push_back(a.unit);
    queue.push_back(0);
  }
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      SparseVec<T> w = a.mul(found[k], g);
      if (ech.insert(w) == Echelon<T>::Outcome::Added) {
        found.push_back(std::move(w));
        queue.push_back(found.size() - 1);
      }
    }
  }
  return span_of(a.field, a.dim, found);
}

template <class T>
Audit audit_algebra(const FinDimAlgebra<T>& a) {
  Audit audit;
  if (a.table.size() != a.dim * a.dim) {
    audit.fail("structure constant table has wrong size");
    return audit;
  }
  for (Index i = 0; i < a.dim; ++i) {
    if (a.mul(a.unit, a.basis(i)) != a.basis(i) || a.mul(a.basis(i), a.unit) != a.basis(i)) {
      audit.fail("unit does not act as identity on basis element " + a.labels.at(i));
      return audit;
    }
  }
  if (generated_subalgebra(a, a.generators).dim() != a.dim) {
    audit.fail("generator list does not generate the algebra");
    return audit;
  }
  std::atomic<long> bad_i{-1};
  const long n = static_cast<long>(a.dim);
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    if (bad_i.load() >= 0) continue;
    for (Index j = 0; j < a.dim; ++j) {
      const auto& bij = a.basis_product(static_cast<Index>(i), j);
      for (const auto& g : a.generators) {
        if (a.mul(bij, g) != a.mul(a.basis(static_cast<Index>(i)), a.mul(a.basis(j), g))) {
          bad_i.store(i);
          break;
        }
      }
      if (bad_i.load() >= 0) break;
    }
  }
  if (bad_i.load() >= 0) audit.fail("associativity fails for basis element " + a.labels.at(bad_i.load()));
  return audit;
}

template <class T>
AlgebraPtr<T> make_algebra(FinDimAlgebra<T> a) {
  if (a.labels.size() != a.dim) {
    a.labels.clear();
    for (Index i = 0; i < a.dim; ++i) a.labels.push_back("b" + std::to_string(i));
  }
  Audit audit = audit_algebra(a);
  if (!audit.ok) throw AlgebraError("algebra '" + a.name + "' failed audit: " + audit.detail);
  return std::make_shared<const FinDimAlgebra<T>>(std::move(a));
}

template <class T>
AlgebraPtr<T> base_field_algebra(const FieldSpec& field) {
  if (!Scalar<T>::compatible(field)) throw FieldMismatch("scalar type does not match field " + field.name());
  FinDimAlgebra<T> a;
  a.field = field;
  a.dim = 1;
  a.labels = {"1"};
  a.table = {SparseVec<T>::unit(0, one<T>(field))};
  a.unit = a.table[0];
  a.name = field.name();
  return make_algebra(std::move(a));
}

template <class T>
AlgebraPtr<T> group_algebra(const PermGroup& g, const FieldSpec& field) {
  if (!Scalar<T>::compatible(field)) throw FieldMismatch("scalar type does not match field " + field.name());
  FinDimAlgebra<T> a;
  a.field = field;
  a.dim = g.order();
  for (const auto& p : g.elements()) a.labels.push_back(p.cycles());
  a.table.resize(a.dim * a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      a.table[i * a.dim + j] = SparseVec<T>::unit(static_cast<Index>(g.mul(i, j)), one<T>(field));
  a.unit = SparseVec<T>::unit(static_cast<Index>(g.identity_index()), one<T>(field));
  for (const auto& x : g.generators())
    a.generators.push_back(SparseVec<T>::unit(static_cast<Index>(g.index_of(x)), one<T>(field)));
  a.name = field.name() + "[" + g.describe() + "]";
  return make_algebra(std::move(a));
}

template <class T>
AlgebraPtr<T> opposite(const AlgebraPtr<T>& a) {
  FinDimAlgebra<T> op = *a;
  for (std::size_t i = 0; i < a->dim; ++i)
    for (std::size_t j = 0; j < a->dim; ++j) op.table[i * a->dim + j] = a->table[j * a->dim + i];
  op.name = a->name + "^op";
  return make_algebra(std::move(op));
}

template <class T>
bool same_algebra(const AlgebraPtr<T>& x, const AlgebraPtr<T>& y) {
  if (x == y) return true;
  return x && y && x->field == y->field && x->dim == y->dim && x->unit == y->unit && x->table == y->table;
}

template <class T>
Audit audit_embedding(const Embedding<T>& e) {
  Audit audit;
  if (!(e.sub->field == e.sup->field)) {
    audit.fail("embedding between algebras over different fields");
    return audit;
  }
  if (e.map.ncols() != e.sub->dim || e.map.rows != e.sup->dim) {
    audit.fail("embedding matrix has wrong shape");
    return audit;
  }
  if (span_of(e.sub->field, e.sup->dim, e.map.cols).dim() != e.sub->dim) {
    audit.fail("embedding is not injective");
    return audit;
  }
  if (e(e.sub->unit) != e.sup->unit) {
    audit.fail("embedding is not unital");
    return audit;
  }
  for (Index i = 0; i < e.sub->dim; ++i) {
    for (const auto& g : e.sub->generators) {
      if (e(e.sub->mul(e.sub->basis(i), g)) != e.sup->mul(e.image(i), e(g))) {
        audit.fail("embedding is not multiplicative at basis element " + e.sub->labels.at(i));
        return audit;
      }
    }
  }
  return audit;
}

template <class T>
Embedding<T> make_embedding(AlgebraPtr<T> sub, AlgebraPtr<T> sup, SparseMap<T> map) {
  Embedding<T> e{std::move(sub), std::move(sup), std::move(map)};
  Audit audit = audit_embedding(e);
  if (!audit.ok) throw AlgebraError(audit.detail);
  return e;
}

template <class T>
Embedding<T> identity_embedding(const AlgebraPtr<T>& a) {
  return Embedding<T>{a, a, identity_map(a->dim, one<T>(a->field))};
}

template <class T>
Embedding<T> scalar_embedding(const AlgebraPtr<T>& a) {
  auto f = base_field_algebra<T>(a->field);
  SparseMap<T> m(a->dim, 1);
  m.cols[0] = a->unit;
  return Embedding<T>{f, a, std::move(m)};
}

template <class T>
Embedding<T> compose(const Embedding<T>& outer, const Embedding<T>& inner) {
  if (!same_algebra(inner.sup, outer.sub)) throw AlgebraError("cannot compose embeddings: algebras do not match");
  return Embedding<T>{inner.sub, outer.sup, outer.map.compose(inner.map)};
}

template <class T>
Embedding<T> subgroup_embedding(const AlgebraPtr<T>& fh, const PermGroup& h, const AlgebraPtr<T>& fg,
                                const PermGroup& g) {
  if (!h.is_subgroup_of(g)) throw GroupError("subgroup_embedding: subgroup is not contained in the group");
  SparseMap<T> m(fg->dim, fh->dim);
  for (std::size_t i = 0; i < h.order(); ++i)
    m.cols[i] = SparseVec<T>::unit(static_cast<Index>(g.index_of(h.element(i))), one<T>(fg->field));
  return make_embedding(fh, fg, std::move(m));
}

template <class T>
Embedding<T> opposite_embedding(const Embedding<T>& e, const AlgebraPtr<T>& sub_op, const AlgebraPtr<T>& sup_op) {
  return make_embedding(sub_op, sup_op, e.map);
}

template <class T>
Tower<T> make_tower(Embedding<T> incl_cb, Embedding<T> incl_ba) {
  Tower<T> t;
  t.incl_ca = compose(incl_ba, incl_cb);
  t.a = incl_ba.sup;
  t.b = incl_ba.sub;
  t.c = incl_cb.sub;
  t.incl_cb = std::move(incl_cb);
  t.incl_ba = std::move(incl_ba);
  return t;
}

template <class T>
Tower<T> group_tower(const PermGroup& g, const PermGroup& h, const PermGroup& k, const FieldSpec& field) {
  if (!h.is_subgroup_of(g) || !k.is_subgroup_of(h)) throw GroupError("group_tower: need K ⊆ H ⊆ G");
  auto fg = group_algebra<T>(g, field);
  auto fh = group_algebra<T>(h, field);
  auto fk = group_algebra<T>(k, field);
  return make_tower(subgroup_embedding(fk, k, fh, h), subgroup_embedding(fh, h, fg, g));
}

template <class T>
Tower<T> degenerate_tower(const Embedding<T>& incl_ba) {
  return make_tower(identity_embedding(incl_ba.sub), incl_ba);
}

template <class T>
SparseVec<T> Bimodule<T>::act_left(const SparseVec<T>& a, const SparseVec<T>& m) const {
  std::vector<std::pair<Index, T>> raw;
  for (const auto& [i, x] : a.terms)
    for (const auto& [k, y] : m.terms) add_scaled(raw, left_basis(i, k), T(x * y));
  return collect(std::move(raw));
}

template <class T>
SparseVec<T> Bimodule<T>::act_right(const SparseVec<T>& m, const SparseVec<T>& a) const {
  std::vector<std::pair<Index, T>> raw;
  for (const auto& [k, y] : m.terms)
    for (const auto& [i, x] : a.terms) add_scaled(raw, right_basis(k, i), T(x * y));
  return collect(std::move(raw));
}

template <class T>
SparseMap<T> Bimodule<T>::left_matrix(const SparseVec<T>& a) const {
  SparseMap<T> mat(dim, dim);
  const T u = one<T>(field());
  for (Index k = 0; k < dim; ++k) mat.cols[k] = act_left(a, SparseVec<T>::unit(k, u));
  return mat;
}

template <class T>
SparseMap<T> Bimodule<T>::right_matrix(const SparseVec<T>& a) const {
  SparseMap<T> mat(dim, dim);
  const T u = one<T>(field());
  for (Index k = 0; k < dim; ++k) mat.cols[k] = act_right(SparseVec<T>::unit(k, u), a);
  return mat;
}

template <class T>
Audit audit_bimodule(const Bimodule<T>& m) {
  Audit audit;
  const T u = one<T>(m.field());
  for (Index k = 0; k < m.dim; ++k) {
    auto e = SparseVec<T>::unit(k, u);
    if (m.act_left(m.left->unit, e) != e || m.act_right(e, m.right->unit) != e) {
      audit.fail("unit does not act trivially on module basis element " + std::to_string(k));
      return audit;
    }
    for (Index a = 0; a < m.left->dim; ++a) {
      for (const auto& g : m.left->generators) {
        auto lhs = m.act_left(m.left->mul(m.left->basis(a), g), e);
        auto rhs = m.act_left(m.left->basis(a), m.act_left(g, e));
        if (lhs != rhs) {
          audit.fail("left action is not associative");
          return audit;
        }
      }
    }
    for (Index a = 0; a < m.right->dim; ++a) {
      for (const auto& g : m.right->generators) {
        auto lhs = m.act_right(e, m.right->mul(g, m.right->basis(a)));
        auto rhs = m.act_right(m.act_right(e, g), m.right->basis(a));
        if (lhs != rhs) {
          audit.fail("right action is not associative");
          return audit;
        }
      }
    }
    for (const auto& g : m.left->generators) {
      for (const auto& h : m.right->generators) {
        if (m.act_right(m.act_left(g, e), h) != m.act_left(g, m.act_right(e, h))) {
          audit.fail("left and right actions do not commute");
          return audit;
        }
      }
    }
  }
  return audit;
}

template <class T>
Bimodule<T> regular_bimodule(const AlgebraPtr<T>& a) {
  Bimodule<T> m;
  m.left = a;
  m.right = a;
  m.dim = a->dim;
  m.left_basis = [a](Index i, Index k) { return a->basis_product(i, k); };
  m.right_basis = [a](Index k, Index i) { return a->basis_product(k, i); };
  return m;
}

template <class T>
Bimodule<T> restrict_bimodule(const Bimodule<T>& m, const Embedding<T>& lhs, const Embedding<T>& rhs) {
  if (!same_algebra(lhs.sup, m.left) || !same_algebra(rhs.sup, m.right))
    throw AlgebraError("restriction along embeddings into the wrong algebras");
  Bimodule<T> r;
  r.left = lhs.sub;
  r.right = rhs.sub;
  r.dim = m.dim;
  const T u = one<T>(m.field());
  auto lmap = std::make_shared<const SparseMap<T>>(lhs.map);
  auto rmap = std::make_shared<const SparseMap<T>>(rhs.map);
  r.left_basis = [m, lmap, u](Index i, Index k) { return m.act_left(lmap->cols[i], SparseVec<T>::unit(k, u)); };
  r.right_basis = [m, rmap, u](Index k, Index i) { return m.act_right(SparseVec<T>::unit(k, u), rmap->cols[i]); };
  return r;
}

template <class T>
SparseVec<T> TensorProduct<T>::element(const SparseVec<T>& x, const SparseVec<T>& y) const {
  std::vector<std::pair<Index, T>> raw;
  for (const auto& [i, a] : x.terms)
    for (const auto& [j, b] : y.terms) add_scaled(raw, simple(i, j), T(a * b));
  return collect(std::move(raw));
}

template <class T>
TensorProduct<T> tensor_over(const Bimodule<T>& x, const Bimodule<T>& y) {
  if (!same_algebra(x.right, y.left)) throw AlgebraError("tensor_over: middle algebras do not match");
  const FieldSpec& f = x.field();
  const std::size_t dx = x.dim, dy = y.dim, n = dx * dy;
  Echelon<T> ech(f, n);
  for (const auto& g : x.right->generators) {
    SparseMap<T> xg = x.right_matrix(g);
    SparseMap<T> gy = y.left_matrix(g);
    for (Index i = 0; i < dx; ++i) {
      for (Index j = 0; j < dy; ++j) {
        std::vector<std::pair<Index, T>> raw;
        for (const auto& [k, v] : xg.cols[i].terms) raw.emplace_back(static_cast<Index>(k * dy + j), v);
        for (const auto& [l, v] : gy.cols[j].terms) raw.emplace_back(static_cast<Index>(i * dy + l), T(-v));
        auto row = collect(std::move(raw));
        if (!row.empty()) ech.insert(row);
      }
    }
  }
  ech.make_reduced();

  TensorProduct<T> t;
  t.dim_x = dx;
  t.dim_y = dy;
  t.relation_rank = ech.rank();
  std::vector<long> qindex(n, -1);
  for (Index s = 0; s < n; ++s) {
    if (!ech.is_pivot(s)) {
      qindex[s] = static_cast<long>(t.pairs.size());
      t.pairs.emplace_back(static_cast<Index>(s / dy), static_cast<Index>(s % dy));
    }
  }
  auto proj = std::make_shared<std::vector<SparseVec<T>>>(n);
  const T u = one<T>(f);
  for (Index s = 0; s < n; ++s) {
    if (qindex[s] >= 0) {
      (*proj)[s] = SparseVec<T>::unit(static_cast<Index>(qindex[s]), u);
    } else {
      const auto& row = ech.rows()[ech.pivot_row(s)];
      std::vector<std::pair<Index, T>> raw;
      for (const auto& [c, v] : row.terms)
        if (c != s) raw.emplace_back(static_cast<Index>(qindex[c]), T(-v));
      (*proj)[s] = collect(std::move(raw));
    }
  }
  t.proj = proj;

  auto pairs = std::make_shared<const std::vector<std::pair<Index, Index>>>(t.pairs);
  std::shared_ptr<const std::vector<SparseVec<T>>> cproj = proj;
  t.module.left = x.left;
  t.module.right = y.right;
  t.module.dim = t.pairs.size();
  t.module.left_basis = [x, pairs, cproj, dy](Index a, Index q) {
    auto [i, j] = (*pairs)[q];
    std::vector<std::pair<Index, T>> raw;
    for (const auto& [k, v] : x.left_basis(a, i).terms) add_scaled(raw, (*cproj)[k * dy + j], v);
    return collect(std::move(raw));
  };
  t.module.right_basis = [y, pairs, cproj, dy](Index q, Index a) {
    auto [i, j] = (*pairs)[q];
    std::vector<std::pair<Index, T>> raw;
    for (const auto& [l, v] : y.right_basis(j, a).terms) add_scaled(raw, (*cproj)[i * dy + l], v);
    return collect(std::move(raw));
  };
  return t;
}

template <class T>
Subspace<T> centralizer(const Bimodule<T>& m, const Embedding<T>& into_left, const Embedding<T>& into_right) {
  if (!same_algebra(into_left.sup, m.left) || !same_algebra(into_right.sup, m.right))
    throw AlgebraError("centralizer: embeddings do not land in the acting algebras");
  if (!same_algebra(into_left.sub, into_right.sub)) throw AlgebraError("centralizer: two different subalgebras");
  Echelon<T> ech(m.field(), m.dim);
  for (const auto& c : into_left.sub->generators) {
    SparseMap<T> l = m.left_matrix(into_left(c));
    SparseMap<T> r = m.right_matrix(into_right(c));
    SparseMap<T> d(m.dim, m.dim);
    for (Index k = 0; k < m.dim; ++k) d.cols[k] = l.cols[k] - r.cols[k];
    for (const auto& row : d.rows_view())
      if (!row.empty()) ech.insert(row);
  }
  return kernel_of(ech);
}

template <class T>
Subspace<T> algebra_centralizer(const Embedding<T>& c_in_a) {
  return centralizer(regular_bimodule(c_in_a.sup), c_in_a, c_in_a);
}

template <class T>
std::vector<SparseMap<T>> bimodule_hom(const Bimodule<T>& m, const Bimodule<T>& n) {
  if (!same_algebra(m.left, n.left) || !same_algebra(m.right, n.right))
    throw AlgebraError("bimodule_hom: bimodules over different algebras");
  const std::size_t dm = m.dim, dn = n.dim;
  Echelon<T> ech(m.field(), dm * dn);
  auto add_block = [&](const SparseMap<T>& gm, const SparseMap<T>& gn) {
    auto gn_rows = gn.rows_view();
    for (Index c = 0; c < dm; ++c) {
      for (Index r = 0; r < dn; ++r) {
        std::vector<std::pair<Index, T>> raw;
        for (const auto& [k, v] : gm.cols[c].terms) raw.emplace_back(static_cast<Index>(k * dn + r), v);
        for (const auto& [s, v] : gn_rows[r].terms) raw.emplace_back(static_cast<Index>(c * dn + s), T(-v));
        auto row = collect(std::move(raw));
        if (!row.empty()) ech.insert(row);
      }
    }
  };
  for (const auto& g : m.left->generators) add_block(m.left_matrix(g), n.left_matrix(g));
  for (const auto& g : m.right->generators) add_block(m.right_matrix(g), n.right_matrix(g));
  Subspace<T> ker = kernel_of(ech);
  std::vector<SparseMap<T>> maps;
  maps.reserve(ker.dim());
  for (const auto& v : ker.basis) {
    SparseMap<T> phi(dn, dm);
    std::vector<std::vector<std::pair<Index, T>>> cols(dm);
    for (const auto& [idx, x] : v.terms) cols[idx / dn].emplace_back(static_cast<Index>(idx % dn), x);
    for (Index c = 0; c < dm; ++c) phi.cols[c].terms = std::move(cols[c]);
    maps.push_back(std::move(phi));
  }
  return maps;
}

template <class T>
AlgebraPtr<T> make_algebra_generated(FinDimAlgebra<T> m) {
  m.generators.clear();
  Subspace<T> gen = generated_subalgebra(m, m.generators);
  for (Index i = 0; i < m.dim && gen.dim() < m.dim; ++i) {
    auto v = SparseVec<T>::unit(i, one<T>(m.field));
    if (gen.contains(v)) continue;
    m.generators.push_back(v);
    gen = generated_subalgebra(m, m.generators);
  }
  return make_algebra(std::move(m));
}

template <class T>
Embedding<T> subalgebra(const AlgebraPtr<T>& a, const Subspace<T>& s, const std::string& name) {
  const auto& A = *a;
  if (!s.contains(A.unit)) throw AlgebraError(name + " does not contain the unit");
  FinDimAlgebra<T> m;
  m.field = A.field;
  m.dim = s.dim();
  m.name = name;
  m.table.resize(m.dim * m.dim);
  for (std::size_t i = 0; i < m.dim; ++i) {
    m.labels.push_back("c" + std::to_string(i));
    for (std::size_t j = 0; j < m.dim; ++j) {
      auto p = A.mul(s.basis[i], s.basis[j]);
      if (!s.contains(p)) throw AlgebraError(name + " is not closed under multiplication");
      m.table[i * m.dim + j] = s.coords_sparse(p);
    }
  }
  m.unit = s.coords_sparse(A.unit);
  SparseMap<T> map(A.dim, m.dim);
  map.cols = s.basis;
  return make_embedding(make_algebra_generated(std::move(m)), a, std::move(map));
}

#define TD_INSTANTIATE(T)                                                                                       \
  template struct FinDimAlgebra<T>;                                                                             \
  template struct Bimodule<T>;                                                                                  \
  template struct TensorProduct<T>;                                                                             \
  template Audit audit_algebra<T>(const FinDimAlgebra<T>&);                                                     \
  template AlgebraPtr<T> make_algebra<T>(FinDimAlgebra<T>);                                                     \
  template AlgebraPtr<T> base_field_algebra<T>(const FieldSpec&);                                               \
  template AlgebraPtr<T> group_algebra<T>(const PermGroup&, const FieldSpec&);                                  \
  template AlgebraPtr<T> opposite<T>(const AlgebraPtr<T>&);                                                     \
  template bool same_algebra<T>(const AlgebraPtr<T>&, const AlgebraPtr<T>&);                                    \
  template AlgebraPtr<T> make_algebra_generated<T>(FinDimAlgebra<T>);                                           \
  template Embedding<T> subalgebra<T>(const AlgebraPtr<T>&, const Subspace<T>&, const std::string&);            \
  template Audit audit_embedding<T>(const Embedding<T>&);                                                       \
  template Embedding<T> make_embedding<T>(AlgebraPtr<T>, AlgebraPtr<T>, SparseMap<T>);                          \
  template Embedding<T> identity_embedding<T>(const AlgebraPtr<T>&);                                            \
  template Embedding<T> scalar_embedding<T>(const AlgebraPtr<T>&);                                              \
  template Embedding<T> compose<T>(const Embedding<T>&, const Embedding<T>&);                                   \
  template Embedding<T> subgroup_embedding<T>(const AlgebraPtr<T>&, const PermGroup&, const AlgebraPtr<T>&,     \
                                              const PermGroup&);                                                \
  template Embedding<T> opposite_embedding<T>(const Embedding<T>&, const AlgebraPtr<T>&, const AlgebraPtr<T>&); \
  template Tower<T> make_tower<T>(Embedding<T>, Embedding<T>);                                                  \
  template Tower<T> degenerate_tower<T>(const Embedding<T>&);                                                   \
  template Tower<T> group_tower<T>(const PermGroup&, const PermGroup&, const PermGroup&, const FieldSpec&);      \
  template Audit audit_bimodule<T>(const Bimodule<T>&);                                                         \
  template Bimodule<T> regular_bimodule<T>(const AlgebraPtr<T>&);                                               \
  template Bimodule<T> restrict_bimodule<T>(const Bimodule<T>&, const Embedding<T>&, const Embedding<T>&);      \
  template TensorProduct<T> tensor_over<T>(const Bimodule<T>&, const Bimodule<T>&);                             \
  template Subspace<T> centralizer<T>(const Bimodule<T>&, const Embedding<T>&, const Embedding<T>&);            \
  template Subspace<T> algebra_centralizer<T>(const Embedding<T>&);                                             \
  template std::vector<SparseMap<T>> bimodule_hom<T>(const Bimodule<T>&, const Bimodule<T>&);                   \
  template Subspace<T> generated_subalgebra<T>(const FinDimAlgebra<T>&, const std::vector<SparseVec<T>>&);

TD_INSTANTIATE(Rational)
TD_INSTANTIATE(Fp)

}  // namespace td
