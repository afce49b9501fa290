#include "galois_common.hpp"

namespace td {

using detail::unit_vec;

bool CoringReport::ok() const {
  return identification.ok && coassociative.ok && counit_left.ok && counit_right.ok && grouplike.ok && pairing.ok &&
         duality.ok;
}

namespace {

template <class T>
void check_witness(const StandardBimodules<T>& sb, const QuasibaseWitness<T>& w, Side side) {
  if (w.side != side) throw AlgebraError("galois: witness on the wrong side");
  for (const auto& u : w.tensors)
    if (!sb.p.space.contains(u)) throw AlgebraError("galois: witness tensor outside P (different tensor basis?)");
}

template <class T>
Bimodule<T> p_bimodule(const StandardBimodules<T>& sb) {
  const auto& XB = *sb.xb;
  const auto& V = sb.v;
  auto v = sb.v_in_a.sub;
  return detail::subspace_bimodule<T>(
      v, v, sb.p.space, [&XB, V](Index a, const SparseVec<T>& p) { return XB.module.act_left(V.basis[a], p); },
      [&XB, V](const SparseVec<T>& p, Index a) { return XB.module.act_right(p, V.basis[a]); });
}

// ⟨p, α⟩ = p^1 α(p^2), p in XB coordinates, result in A
template <class T>
SparseVec<T> pair_with(const FinDimAlgebra<T>& a, const TensorProduct<T>& x, const SparseVec<T>& p,
                       const SparseMap<T>& alpha) {
  SparseVec<T> out;
  for (const auto& [q, c] : p.terms) {
    const auto& [i, j] = x.pairs[q];
    out = out + scaled(a.mul(unit_vec<T>(i, a.field), alpha.cols[j]), c);
  }
  return out;
}

}  // namespace

template <class T>
CoringData<T> coring_on_p(const StandardBimodules<T>& sb, const QuasibaseWitness<T>& right) {
  check_witness(sb, right, Side::Right);
  const auto& A = *sb.tower.a;
  const auto& XB = *sb.xb;
  const auto& P = sb.p.space;
  CoringData<T> cd;
  cd.v = sb.v_in_a.sub;
  cd.p_module = p_bimodule(sb);
  cd.pp = std::make_shared<const TensorProduct<T>>(tensor_over(cd.p_module, cd.p_module));
  cd.ppp = std::make_shared<const TensorProduct<T>>(tensor_over(cd.pp->module, cd.p_module));
  std::vector<SparseVec<T>> u;
  for (const auto& t : right.tensors) u.push_back(P.coords_sparse(t));
  // Δ(p) = Σ_i (p^1 ⊗ γ_i(p^2)) ⊗_V u_i
  cd.delta = SparseMap<T>(cd.pp->dim(), P.dim());
  for (std::size_t k = 0; k < P.dim(); ++k) {
    SparseVec<T> d;
    for (std::size_t i = 0; i < right.n(); ++i) {
      auto w = detail::apply_right_leg(XB, P.basis[k], right.maps[i]);
      if (!P.contains(w)) throw AlgebraError("coring: p^1 ⊗ γ(p^2) left P");
      d = d + cd.pp->element(P.coords_sparse(w), u[i]);
    }
    cd.delta.cols[k] = std::move(d);
  }
  cd.counit = SparseMap<T>(sb.v.dim(), P.dim());
  for (std::size_t k = 0; k < P.dim(); ++k) cd.counit.cols[k] = sb.v.coords_sparse(detail::multiply_out(A, XB, P.basis[k]));
  cd.grouplike = P.coords_sparse(XB.element(A.unit, A.unit));

  auto reg = regular_bimodule(sb.tower.a);
  auto id = identity_embedding(sb.tower.a);
  cd.triple = std::make_shared<const TensorProduct<T>>(
      tensor_over(restrict_bimodule(XB.module, id, sb.tower.incl_ba), restrict_bimodule(reg, sb.tower.incl_ba, id)));
  cd.triple_c = centralizer(cd.triple->module, sb.tower.incl_ca, sb.tower.incl_ca);
  return cd;
}

template <class T>
CoringReport audit_coring(const StandardBimodules<T>& sb, const CoringData<T>& cd, const QuasibaseWitness<T>& right) {
  CoringReport rep;
  const auto& A = *sb.tower.a;
  const FieldSpec& f = A.field;
  const auto& XB = *sb.xb;
  const auto& P = sb.p.space;
  const auto& PP = *cd.pp;
  const auto& PPP = *cd.ppp;
  const auto& X3 = *cd.triple;
  rep.dim_p = P.dim();
  rep.dim_e = sb.e.dim();
  auto triple = [&](const SparseVec<T>& x, const SparseVec<T>& y, const SparseVec<T>& z) {
    return X3.element(XB.element(x, y), z);
  };
  std::vector<SparseVec<T>> u;
  for (const auto& t : right.tensors) u.push_back(P.coords_sparse(t));

  // φ: p ⊗ p' -> p^1 ⊗ p^2 p'^1 ⊗ p'^2 and ψ: w -> Σ_i (w^1 ⊗ w^2 γ_i(w^3)) ⊗_V u_i
  auto phi = [&](Index a, Index b) {
    SparseVec<T> out;
    for (const auto& [q, c] : P.basis[a].terms)
      for (const auto& [q2, d] : P.basis[b].terms) {
        const auto& [i, j] = XB.pairs[q];
        const auto& [k, l] = XB.pairs[q2];
        out = out + scaled(triple(unit_vec<T>(i, f), A.basis_product(j, k), unit_vec<T>(l, f)), T(c * d));
      }
    return out;
  };
  auto psi = [&](const SparseVec<T>& w) {
    SparseVec<T> out;
    for (std::size_t m = 0; m < right.n(); ++m) {
      SparseVec<T> first;
      for (const auto& [s, c] : w.terms) {
        const auto& [q, l] = X3.pairs[s];
        const auto& [i, j] = XB.pairs[q];
        first = first + scaled(XB.element(unit_vec<T>(i, f), A.mul(unit_vec<T>(j, f), right.maps[m].cols[l])), c);
      }
      if (!P.contains(first)) rep.identification.fail("ψ produced a first leg outside P");
      out = out + PP.element(P.coords_sparse(first), u[m]);
    }
    return out;
  };
  for (std::size_t s = 0; s < PP.dim(); ++s) {
    const auto& [a, b] = PP.pairs[s];
    auto w = phi(a, b);
    if (!cd.triple_c.contains(w)) rep.identification.fail("φ leaves (A⊗_B A⊗_B A)^C");
    if (psi(w) != unit_vec<T>(static_cast<Index>(s), f)) rep.identification.fail("ψ∘φ != id");
  }
  for (const auto& w : cd.triple_c.basis) {
    auto x = psi(w);
    SparseVec<T> back;
    for (const auto& [s, c] : x.terms) back = back + scaled(phi(PP.pairs[s].first, PP.pairs[s].second), c);
    if (back != w) rep.identification.fail("φ∘ψ != id");
  }
  if (PP.dim() != cd.triple_c.dim()) rep.identification.fail("dim P⊗_V P != dim (A⊗_B A⊗_B A)^C");
  for (std::size_t k = 0; k < P.dim(); ++k) {
    SparseVec<T> w;
    for (const auto& [q, c] : P.basis[k].terms) {
      const auto& [i, j] = XB.pairs[q];
      w = w + scaled(triple(unit_vec<T>(i, f), A.unit, unit_vec<T>(j, f)), c);
    }
    if (psi(w) != cd.delta.cols[k]) rep.identification.fail("Δ(p) != ψ(p^1 ⊗ 1 ⊗ p^2)");
  }

  // coassociativity and counit laws on the basis of P
  for (std::size_t k = 0; k < P.dim(); ++k) {
    const auto& d = cd.delta.cols[k];
    SparseVec<T> lhs, rhs, cl, cr;
    for (const auto& [s, c] : d.terms) {
      const auto& [a, b] = PP.pairs[s];
      lhs = lhs + scaled(PPP.element(cd.delta.cols[a], unit_vec<T>(b, f)), c);
      for (const auto& [s2, c2] : cd.delta.cols[b].terms) {
        const auto& [x, y] = PP.pairs[s2];
        rhs = rhs + scaled(PPP.element(PP.simple(a, x), unit_vec<T>(y, f)), T(c * c2));
      }
      cl = cl + scaled(cd.p_module.act_left(cd.counit.cols[a], unit_vec<T>(b, f)), c);
      cr = cr + scaled(cd.p_module.act_right(unit_vec<T>(a, f), cd.counit.cols[b]), c);
    }
    if (lhs != rhs) rep.coassociative.fail("(Δ⊗id)Δ != (id⊗Δ)Δ");
    if (cl != unit_vec<T>(static_cast<Index>(k), f)) rep.counit_left.fail("(ε⊗id)Δ != id");
    if (cr != unit_vec<T>(static_cast<Index>(k), f)) rep.counit_right.fail("(id⊗ε)Δ != id");
  }
  // ε and Δ are V-bimodule maps; the laws above are evaluated on representatives and rely on it
  const auto& V = sb.v;
  const auto& Vring = *cd.v;
  for (Index a = 0; a < V.dim(); ++a)
    for (Index k = 0; k < P.dim(); ++k) {
      auto va = unit_vec<T>(a, f);
      auto pk = unit_vec<T>(k, f);
      auto vp = cd.p_module.act_left(va, pk);
      auto pv = cd.p_module.act_right(pk, va);
      if (cd.counit.apply(vp) != Vring.mul(va, cd.counit.cols[k])) rep.counit_left.fail("ε is not left V-linear");
      if (cd.counit.apply(pv) != Vring.mul(cd.counit.cols[k], va)) rep.counit_right.fail("ε is not right V-linear");
      if (cd.delta.apply(vp) != PP.module.act_left(va, cd.delta.cols[k]) ||
          cd.delta.apply(pv) != PP.module.act_right(cd.delta.cols[k], va))
        rep.coassociative.fail("Δ is not a V-bimodule map");
    }
  if (cd.delta.apply(cd.grouplike) != PP.element(cd.grouplike, cd.grouplike)) rep.grouplike.fail("Δ(g) != g ⊗ g");
  if (cd.counit.apply(cd.grouplike) != sb.v.coords_sparse(A.unit)) rep.grouplike.fail("ε(g) != 1");

  // pairing ⟨p, α⟩ and E ≅ Hom(_V P, _V V)
  auto field_alg = base_field_algebra<T>(f);
  auto p_left = detail::subspace_bimodule<T>(
      cd.v, field_alg, P, [&](Index a, const SparseVec<T>& p) { return XB.module.act_left(V.basis[a], p); },
      [](const SparseVec<T>& p, Index) { return p; });
  auto v_left = detail::subspace_bimodule<T>(
      cd.v, field_alg, V, [&](Index a, const SparseVec<T>& x) { return A.mul(V.basis[a], x); },
      [](const SparseVec<T>& x, Index) { return x; });
  auto homs = bimodule_hom(p_left, v_left);
  rep.dim_hom = homs.size();
  auto pairing_map = [&](const SparseMap<T>& alpha) {
    SparseMap<T> m(V.dim(), P.dim());
    for (std::size_t k = 0; k < P.dim(); ++k) m.cols[k] = V.coords_sparse(pair_with(A, XB, P.basis[k], alpha));
    return m;
  };
  auto flat = [&](const SparseMap<T>& m) {
    SparseVec<T> v;
    for (Index c = 0; c < m.ncols(); ++c)
      for (const auto& [r, x] : m.cols[c].terms) v.terms.emplace_back(static_cast<Index>(c * V.dim() + r), x);
    return v;
  };
  std::vector<SparseVec<T>> hom_flat;
  for (const auto& h : homs) hom_flat.push_back(flat(h));
  auto hom_span = span_of(f, V.dim() * P.dim(), hom_flat);
  Echelon<T> ech(f, V.dim() * P.dim());
  std::vector<SparseMap<T>> pm;
  for (const auto& alpha : sb.e.maps) {
    pm.push_back(pairing_map(alpha));
    auto v = flat(pm.back());
    if (!hom_span.contains(v)) rep.pairing.fail("⟨-, α⟩ is not left V-linear");
    ech.insert(v);
  }
  rep.pairing_rank = ech.rank();
  if (rep.pairing_rank != sb.e.dim()) rep.pairing.fail("α -> ⟨-, α⟩ is not injective");
  if (rep.dim_hom != sb.e.dim()) rep.pairing.fail("dim Hom(_V P, _V V) != dim E");
  Echelon<T> ech_p(f, V.dim() * sb.e.dim());
  for (std::size_t k = 0; k < P.dim(); ++k) {
    SparseVec<T> row;
    for (std::size_t a = 0; a < pm.size(); ++a)
      for (const auto& [r, x] : pm[a].cols[k].terms) row.terms.emplace_back(static_cast<Index>(a * V.dim() + r), x);
    ech_p.insert(row);
  }
  if (ech_p.rank() != P.dim()) rep.pairing.fail("p -> ⟨p, -⟩ is not injective");

  // (f * g)(p) = f(p_(1) g(p_(2))) equals ⟨p, α∘β⟩
  for (std::size_t a = 0; a < sb.e.dim(); ++a)
    for (std::size_t b = 0; b < sb.e.dim(); ++b) {
      auto ab = pairing_map(sb.e.maps[a].compose(sb.e.maps[b]));
      for (std::size_t k = 0; k < P.dim(); ++k) {
        SparseVec<T> val;
        for (const auto& [s, c] : cd.delta.cols[k].terms) {
          const auto& [x, y] = PP.pairs[s];
          auto moved = cd.p_module.act_right(unit_vec<T>(x, f), pm[b].cols[y]);
          val = val + scaled(pm[a].apply(moved), c);
        }
        if (val != ab.cols[k]) {
          rep.duality.fail("⟨-, α⟩ * ⟨-, β⟩ != ⟨-, α∘β⟩");
          break;
        }
      }
    }
  return rep;
}

template <class T>
PreGaloisReport<T> pre_galois(const StandardBimodules<T>& sb, const QuasibaseWitness<T>& right) {
  check_witness(sb, right, Side::Right);
  PreGaloisReport<T> rep;
  const auto& A = *sb.tower.a;
  const FieldSpec& f = A.field;
  const auto& XB = *sb.xb;
  const auto& P = sb.p.space;
  auto reg = regular_bimodule(sb.tower.a);
  auto id = identity_embedding(sb.tower.a);
  auto avp = tensor_over(restrict_bimodule(reg, id, sb.v_in_a), p_bimodule(sb));
  rep.dim_aba = XB.dim();
  rep.dim_avp = avp.dim();
  rep.dim_a = A.dim;
  rep.dim_p = P.dim();
  rep.dim_v = sb.v.dim();
  std::vector<SparseVec<T>> u;
  for (const auto& t : right.tensors) u.push_back(P.coords_sparse(t));

  rep.beta = SparseMap<T>(avp.dim(), XB.dim());
  for (std::size_t q = 0; q < XB.dim(); ++q) {
    const auto& [i, j] = XB.pairs[q];
    SparseVec<T> out;
    for (std::size_t m = 0; m < right.n(); ++m)
      out = out + avp.element(A.mul(unit_vec<T>(i, f), right.maps[m].cols[j]), u[m]);
    rep.beta.cols[q] = std::move(out);
  }
  rep.beta_inverse = SparseMap<T>(XB.dim(), avp.dim());
  for (std::size_t s = 0; s < avp.dim(); ++s) {
    const auto& [i, k] = avp.pairs[s];
    rep.beta_inverse.cols[s] = XB.module.act_left(unit_vec<T>(i, f), P.basis[k]);
  }
  if (rep.beta_inverse.compose(rep.beta) != identity_map(XB.dim(), one<T>(f)))
    rep.beta_then_inverse.fail("β⁻¹∘β != id on A⊗_B A");
  if (rep.beta.compose(rep.beta_inverse) != identity_map(avp.dim(), one<T>(f)))
    rep.inverse_then_beta.fail("β∘β⁻¹ != id on A⊗_V P");

  for (Index a = 0; a < A.dim; ++a) {
    SparseVec<T> d;
    for (std::size_t m = 0; m < right.n(); ++m) d = d + avp.element(right.maps[m].cols[a], u[m]);
    rep.delta.push_back(std::move(d));
  }
  SparseVec<T> delta_one;
  for (const auto& [a, c] : A.unit.terms) delta_one = delta_one + scaled(rep.delta[a], c);
  if (rep.beta_inverse.apply(delta_one) != XB.element(A.unit, A.unit)) rep.coaction_unit.fail("β⁻¹(δ(1)) != 1 ⊗ 1");
  if (delta_one != avp.element(A.unit, P.coords_sparse(XB.element(A.unit, A.unit))))
    rep.coaction_unit.fail("δ(1) != 1 ⊗ g_P");
  return rep;
}

#define TD_INSTANTIATE(T)                                                                                   \
  template CoringData<T> coring_on_p<T>(const StandardBimodules<T>&, const QuasibaseWitness<T>&);           \
  template CoringReport audit_coring<T>(const StandardBimodules<T>&, const CoringData<T>&,                  \
                                        const QuasibaseWitness<T>&);                                        \
  template struct PreGaloisReport<T>;                                                                       \
  template PreGaloisReport<T> pre_galois<T>(const StandardBimodules<T>&, const QuasibaseWitness<T>&);

TD_INSTANTIATE(Rational)
TD_INSTANTIATE(Fp)

}  // namespace td
