#include <utility>

#include "galois_common.hpp"

namespace td {

using detail::unit_vec;

template <class T>
SparseVec<T> MapSubspace<T>::flatten(const SparseMap<T>& m) const {
  SparseVec<T> v;
  for (Index c = 0; c < m.ncols(); ++c)
    for (const auto& [r, x] : m.cols[c].terms) v.terms.emplace_back(static_cast<Index>(c * n + r), x);
  return v;
}

template <class T>
SparseMap<T> MapSubspace<T>::unflatten(const SparseVec<T>& v) const {
  SparseMap<T> m(n, n);
  for (const auto& [k, x] : v.terms) m.cols[k / n].terms.emplace_back(static_cast<Index>(k % n), x);
  return m;
}

template <class T>
MapSubspace<T> map_subspace(const FieldSpec& f, std::size_t n, const std::vector<SparseMap<T>>& maps) {
  MapSubspace<T> s;
  s.n = n;
  std::vector<SparseVec<T>> flat;
  for (const auto& m : maps) flat.push_back(s.flatten(m));
  s.flat = span_of(f, n * n, flat);
  for (const auto& b : s.flat.basis) s.maps.push_back(s.unflatten(b));
  return s;
}

template <class T>
SparseVec<T> nest(const FinDimAlgebra<T>& a, const TensorProduct<T>& out,
                  const std::vector<std::pair<const TensorProduct<T>*, SparseVec<T>>>& factors) {
  const std::size_t n = a.dim;
  const FieldSpec& f = a.field;
  if (factors.empty()) return {};
  // current value in A ⊗_k A, index i * n + j
  std::vector<std::pair<Index, T>> raw;
  for (const auto& [q, c] : factors[0].second.terms) {
    const auto& [i, j] = factors[0].first->pairs[q];
    raw.emplace_back(static_cast<Index>(i * n + j), c);
  }
  SparseVec<T> cur = collect(std::move(raw));
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const auto& [x, coords] = factors[k];
    Accumulator<T> acc(n * n, zero<T>(f));
    for (const auto& [s, c] : cur.terms) {
      const Index i = s / n, j = s % n;
      for (const auto& [q, d] : coords.terms) {
        const auto& [k1, k2] = x->pairs[q];
        const auto& l = a.basis_product(k1, i);
        const auto& r = a.basis_product(j, k2);
        T cd = c * d;
        for (const auto& [li, lv] : l.terms)
          for (const auto& [ri, rv] : r.terms) acc.add(static_cast<Index>(li * n + ri), cd * lv * rv);
      }
    }
    cur = acc.take();
  }
  Accumulator<T> res(out.dim(), zero<T>(f));
  for (const auto& [s, c] : cur.terms) res.add(out.simple(s / n, s % n), c);
  return res.take();
}

namespace {

template <class T>
AlgebraPtr<T> tensor_ring(const FinDimAlgebra<T>& a, const TensorSubspace<T>& ts, const std::string& name,
                          Audit& audit) {
  const auto& X = *ts.x;
  FinDimAlgebra<T> m;
  m.field = a.field;
  m.dim = ts.dim();
  m.name = name;
  m.table.resize(m.dim * m.dim);
  for (std::size_t i = 0; i < m.dim; ++i) {
    m.labels.push_back(name + std::to_string(i));
    for (std::size_t j = 0; j < m.dim; ++j) {
      auto prod = nest(a, X, {{&X, ts.space.basis[i]}, {&X, ts.space.basis[j]}});
      if (!ts.space.contains(prod)) audit.fail(name + " is not closed under its product");
      m.table[i * m.dim + j] = ts.space.coords_sparse(prod);
    }
  }
  auto one_tensor = X.element(a.unit, a.unit);
  if (!ts.space.contains(one_tensor)) audit.fail(name + " does not contain 1 ⊗ 1");
  m.unit = ts.space.coords_sparse(one_tensor);
  if (!audit.ok) return nullptr;
  try {
    return make_algebra_generated(std::move(m));
  } catch (const AlgebraError& e) {
    audit.fail(e.what());
    return nullptr;
  }
}

template <class T>
void audit_composition(const MapSubspace<T>& s, const std::string& name, Audit& audit) {
  for (const auto& x : s.maps)
    for (const auto& y : s.maps)
      if (!s.contains(x.compose(y))) {
        audit.fail(name + " is not closed under composition");
        return;
      }
}

template <class T>
void audit_subalgebra(const FinDimAlgebra<T>& a, const Subspace<T>& s, const std::string& name, Audit& audit) {
  if (!s.contains(a.unit)) audit.fail(name + " does not contain 1");
  for (const auto& x : s.basis)
    for (const auto& y : s.basis)
      if (!s.contains(a.mul(x, y))) {
        audit.fail(name + " is not closed under multiplication");
        return;
      }
}

}  // namespace

template <class T>
StandardBimodules<T> standard_bimodules(const Tower<T>& t, const Caps& caps) {
  StandardBimodules<T> sb;
  sb.tower = t;
  const auto& A = *t.a;
  const std::size_t n = A.dim;
  if (n * n > caps.max_side * caps.max_side) throw AlgebraError("standard bimodules: algebra above the size cap");
  sb.xb = tensor_square(t.incl_ba);
  sb.xc = tensor_square(t.incl_ca);
  if (sb.xb->dim() > caps.max_side || sb.xc->dim() > caps.max_side)
    throw AlgebraError("standard bimodules: tensor square above the size cap");
  sb.p = {sb.xb, centralizer(sb.xb->module, t.incl_ca, t.incl_ca)};
  sb.q = {sb.xc, centralizer(sb.xc->module, t.incl_ba, t.incl_ba)};
  sb.t = {sb.xb, centralizer(sb.xb->module, t.incl_ba, t.incl_ba)};
  sb.u = {sb.xc, centralizer(sb.xc->module, t.incl_ca, t.incl_ca)};
  sb.r = algebra_centralizer(t.incl_ba);
  sb.v = algebra_centralizer(t.incl_ca);

  auto reg = regular_bimodule(t.a);
  auto id = identity_embedding(t.a);
  auto ends = [&](const Embedding<T>& lhs, const Embedding<T>& rhs) {
    auto m = restrict_bimodule(reg, lhs, rhs);
    return map_subspace(A.field, n, bimodule_hom(m, m));
  };
  sb.e = ends(t.incl_ba, t.incl_ca);
  sb.j = ends(t.incl_ca, t.incl_ba);
  sb.s = ends(t.incl_ca, t.incl_ca);
  sb.s_cal = ends(t.incl_ba, t.incl_ba);

  Audit& audit = sb.ring_laws;
  audit_subalgebra(A, sb.r, "R", audit);
  audit_subalgebra(A, sb.v, "V", audit);
  if (audit.ok) {
    sb.r_in_a = subalgebra(t.a, sb.r, "R");
    sb.v_in_a = subalgebra(t.a, sb.v, "V");
  }
  sb.t_ring = tensor_ring(A, sb.t, "T", audit);
  sb.u_ring = tensor_ring(A, sb.u, "U", audit);
  audit_composition(sb.e, "E", audit);
  audit_composition(sb.j, "J", audit);
  audit_composition(sb.s, "S", audit);
  audit_composition(sb.s_cal, "S_cal", audit);
  // S_cal ⊆ E ⊆ S
  for (const auto& m : sb.s_cal.maps)
    if (!sb.e.contains(m)) audit.fail("End(_B A_B) is not inside End(_B A_C)");
  for (const auto& m : sb.e.maps)
    if (!sb.s.contains(m)) audit.fail("End(_B A_C) is not inside End(_C A_C)");

  auto a_c = restrict_bimodule(reg, id, t.incl_ca);
  sb.dim_v_via_end = bimodule_hom(a_c, a_c).size();
  sb.dim_p_via_hom = bimodule_hom(sb.xc->module, sb.xb->module).size();
  sb.dim_q_via_hom = bimodule_hom(sb.xb->module, sb.xc->module).size();
  return sb;
}

template <class T>
MoritaReport morita_anchor_check(const StandardBimodules<T>& sb, const Caps& caps) {
  MoritaReport rep;
  const auto& A = *sb.tower.a;
  const FieldSpec& f = A.field;
  const auto& XB = *sb.xb;
  const auto& XC = *sb.xc;
  const auto& P = sb.p.space;
  const auto& Q = sb.q.space;

  // pq ∈ T, qp ∈ U
  std::vector<std::vector<SparseVec<T>>> pq(P.dim()), qp(Q.dim());
  for (std::size_t a = 0; a < P.dim(); ++a)
    for (std::size_t b = 0; b < Q.dim(); ++b) {
      pq[a].push_back(nest(A, XB, {{&XB, P.basis[a]}, {&XC, Q.basis[b]}}));
      if (!sb.t.space.contains(pq[a].back())) rep.products.fail("pq is not in T");
    }
  for (std::size_t b = 0; b < Q.dim(); ++b)
    for (std::size_t a = 0; a < P.dim(); ++a) {
      qp[b].push_back(nest(A, XC, {{&XC, Q.basis[b]}, {&XB, P.basis[a]}}));
      if (!sb.u.space.contains(qp[b].back())) rep.products.fail("qp is not in U");
    }
  for (const auto& tv : sb.t.space.basis)
    for (const auto& pv : P.basis)
      if (!P.contains(nest(A, XB, {{&XB, tv}, {&XB, pv}}))) rep.products.fail("t·p is not in P");
  for (const auto& uv : sb.u.space.basis) {
    for (const auto& pv : P.basis)
      if (!P.contains(nest(A, XB, {{&XB, pv}, {&XC, uv}}))) rep.products.fail("p·u is not in P");
    for (const auto& qv : Q.basis)
      if (!Q.contains(nest(A, XC, {{&XC, uv}, {&XC, qv}}))) rep.products.fail("u·q is not in Q");
  }
  for (const auto& tv : sb.t.space.basis)
    for (const auto& qv : Q.basis)
      if (!Q.contains(nest(A, XC, {{&XC, qv}, {&XB, tv}}))) rep.products.fail("q·t is not in Q");

  // p(qp') = (pq)p' and q(pq') = (qp)q'
  for (std::size_t a = 0; a < P.dim(); ++a)
    for (std::size_t b = 0; b < Q.dim(); ++b)
      for (std::size_t c = 0; c < P.dim(); ++c) {
        ++rep.triples;
        auto lhs = nest(A, XB, {{&XB, P.basis[a]}, {&XC, qp[b][c]}});
        auto rhs = nest(A, XB, {{&XB, pq[a][b]}, {&XB, P.basis[c]}});
        if (lhs != rhs) rep.associativity.fail("p(qp') != (pq)p'");
      }
  for (std::size_t b = 0; b < Q.dim(); ++b)
    for (std::size_t a = 0; a < P.dim(); ++a)
      for (std::size_t d = 0; d < Q.dim(); ++d) {
        ++rep.triples;
        auto lhs = nest(A, XC, {{&XC, Q.basis[b]}, {&XB, pq[a][d]}});
        auto rhs = nest(A, XC, {{&XC, qp[b][a]}, {&XC, Q.basis[d]}});
        if (lhs != rhs) rep.associativity.fail("q(pq') != (qp)q'");
      }

  // anchors R ⊗_T P -> V and V ⊗_U Q -> R
  if (sb.t_ring && sb.u_ring && sb.ring_laws.ok) {
    auto field_alg = base_field_algebra<T>(f);
    auto scalar = [](Index, const SparseVec<T>& x) { return x; };
    const TensorSubspace<T> tt = sb.t, uu = sb.u;
    auto r_mod = detail::subspace_bimodule<T>(
        field_alg, sb.t_ring, sb.r, scalar,
        [&](const SparseVec<T>& r, Index k) { return detail::sandwich(A, XB, tt.space.basis[k], r); });
    auto p_mod = detail::subspace_bimodule<T>(
        sb.t_ring, field_alg, P, [&](Index k, const SparseVec<T>& p) { return nest(A, XB, {{&XB, tt.space.basis[k]}, {&XB, p}}); },
        [](const SparseVec<T>& p, Index) { return p; });
    auto v_mod = detail::subspace_bimodule<T>(
        field_alg, sb.u_ring, sb.v, scalar,
        [&](const SparseVec<T>& v, Index k) { return detail::sandwich(A, XC, uu.space.basis[k], v); });
    auto q_mod = detail::subspace_bimodule<T>(
        sb.u_ring, field_alg, Q, [&](Index k, const SparseVec<T>& q) { return nest(A, XC, {{&XC, uu.space.basis[k]}, {&XC, q}}); },
        [](const SparseVec<T>& q, Index) { return q; });
    auto rtp = tensor_over(r_mod, p_mod);
    auto vuq = tensor_over(v_mod, q_mod);
    rep.dim_r_t_p = rtp.dim();
    rep.dim_v_u_q = vuq.dim();
    Echelon<T> er(f, A.dim), ev(f, A.dim);
    for (const auto& [i, k] : rtp.pairs) er.insert(detail::sandwich(A, XB, P.basis[k], sb.r.basis[i]));
    for (const auto& [i, k] : vuq.pairs) ev.insert(detail::sandwich(A, XC, Q.basis[k], sb.v.basis[i]));
    rep.rank_r = er.rank();
    rep.rank_v = ev.rank();
    rep.anchor_r_bijective = rep.rank_r == rtp.dim() && rep.rank_r == sb.v.dim();
    rep.anchor_v_bijective = rep.rank_v == vuq.dim() && rep.rank_v == sb.r.dim();
  }
  rep.h_separable = separability_element(sb.tower.incl_cb, SeparabilityMode::HSeparable, caps).holds;
  return rep;
}

#define TD_INSTANTIATE(T)                                                                                    \
  template struct MapSubspace<T>;                                                                            \
  template MapSubspace<T> map_subspace<T>(const FieldSpec&, std::size_t, const std::vector<SparseMap<T>>&);   \
  template SparseVec<T> nest<T>(const FinDimAlgebra<T>&, const TensorProduct<T>&,                            \
                                const std::vector<std::pair<const TensorProduct<T>*, SparseVec<T>>>&);       \
  template StandardBimodules<T> standard_bimodules<T>(const Tower<T>&, const Caps&);                         \
  template MoritaReport morita_anchor_check<T>(const StandardBimodules<T>&, const Caps&);

TD_INSTANTIATE(Rational)
TD_INSTANTIATE(Fp)

}  // namespace td
