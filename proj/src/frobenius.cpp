#include "towerdepth/frobenius.hpp"

#include <atomic>

namespace td {

namespace {

template <class T>
SparseVec<T> unit_vec(Index i, const FieldSpec& f) {
  return SparseVec<T>::unit(i, one<T>(f));
}

}  // namespace

template <class T>
Audit audit_frobenius(const FrobeniusSystem<T>& fs) {
  Audit audit;
  const auto& B = *fs.ext.sup;
  const auto& C = *fs.ext.sub;
  const FieldSpec& f = B.field;
  if (fs.e.rows != C.dim || fs.e.ncols() != B.dim) {
    audit.fail("E has the wrong shape");
    return audit;
  }
  if (fs.dual_x.size() != fs.dual_y.size()) {
    audit.fail("dual bases of different lengths");
    return audit;
  }
  for (Index k = 0; k < B.dim; ++k) {
    auto a = unit_vec<T>(k, f);
    SparseVec<T> lhs, rhs;
    for (std::size_t i = 0; i < fs.dual_x.size(); ++i) {
      lhs = lhs + B.mul(fs.e_in_b(B.mul(a, fs.dual_x[i])), fs.dual_y[i]);
      rhs = rhs + B.mul(fs.dual_x[i], fs.e_in_b(B.mul(fs.dual_y[i], a)));
    }
    if (lhs != a) audit.fail("Σ E(a x_i) y_i != a at basis element " + B.labels[k]);
    if (rhs != a) audit.fail("Σ x_i E(y_i a) != a at basis element " + B.labels[k]);
    for (const auto& c : C.generators) {
      auto ic = fs.ext(c);
      if (fs.e.apply(B.mul(ic, a)) != C.mul(c, fs.e.cols[k])) audit.fail("E is not left C-linear");
      if (fs.e.apply(B.mul(a, ic)) != C.mul(fs.e.cols[k], c)) audit.fail("E is not right C-linear");
    }
    if (!audit.ok) return audit;
  }
  return audit;
}

template <class T>
FrobeniusSystem<T> group_frobenius_system(const AlgebraPtr<T>& fh, const PermGroup& h, const AlgebraPtr<T>& fg,
                                          const PermGroup& g) {
  FrobeniusSystem<T> fs;
  fs.ext = subgroup_embedding(fh, h, fg, g);
  const FieldSpec& f = fg->field;
  fs.e = SparseMap<T>(fh->dim, fg->dim);
  for (std::size_t k = 0; k < g.order(); ++k) {
    const Perm& p = g.element(k);
    if (h.contains(p)) fs.e.cols[k] = unit_vec<T>(static_cast<Index>(h.index_of(p)), f);
  }
  for (const Perm& rep : left_coset_representatives(g, h)) {
    std::size_t k = g.index_of(rep);
    fs.dual_x.push_back(unit_vec<T>(static_cast<Index>(k), f));
    fs.dual_y.push_back(unit_vec<T>(static_cast<Index>(g.inv(k)), f));
  }
  Audit audit = audit_frobenius(fs);
  if (!audit.ok) throw AlgebraError("group Frobenius system: " + audit.detail);
  return fs;
}

template <class T>
BasicConstruction<T> basic_construction(const FrobeniusSystem<T>& fs, bool check_end_iso) {
  Audit pre = audit_frobenius(fs);
  if (!pre.ok) throw AlgebraError("basic construction: " + pre.detail);
  const auto& B = *fs.ext.sup;
  const FieldSpec& f = B.field;
  const std::size_t nb = B.dim;
  BasicConstruction<T> bc;
  bc.tensor = tensor_square(fs.ext);
  const auto& X = *bc.tensor;
  const std::size_t n = X.dim();

  // mid[j * nb + i'] = E(b_j b_i') viewed in B
  std::vector<SparseVec<T>> mid(nb * nb);
  const long nbl = static_cast<long>(nb * nb);
#pragma omp parallel for schedule(static)
  for (long s = 0; s < nbl; ++s) mid[s] = fs.e_in_b(B.table[s]);

  FinDimAlgebra<T> m;
  m.field = f;
  m.dim = n;
  m.name = "End(" + B.name + ")";
  m.table.resize(n * n);
  for (const auto& [i, j] : X.pairs) m.labels.push_back(B.labels[i] + "⊗" + B.labels[j]);
  const long total = static_cast<long>(n * n);
#pragma omp parallel for schedule(dynamic, 64)
  for (long s = 0; s < total; ++s) {
    const auto& [i, j] = X.pairs[s / n];
    const auto& [i2, j2] = X.pairs[s % n];
    const auto& c = mid[static_cast<std::size_t>(j) * nb + i2];
    if (c.empty()) continue;
    m.table[s] = X.element(B.mul(unit_vec<T>(i, f), c), unit_vec<T>(j2, f));
  }
  for (std::size_t k = 0; k < fs.dual_x.size(); ++k) m.unit = m.unit + X.element(fs.dual_x[k], fs.dual_y[k]);
  bc.e1 = X.element(B.unit, B.unit);

  SparseMap<T> lambda(n, nb);
  for (Index b = 0; b < nb; ++b) {
    auto bv = unit_vec<T>(b, f);
    for (std::size_t k = 0; k < fs.dual_x.size(); ++k)
      lambda.cols[b] = lambda.cols[b] + X.element(B.mul(bv, fs.dual_x[k]), fs.dual_y[k]);
  }
  for (const auto& g : B.generators) m.generators.push_back(lambda.apply(g));
  m.generators.push_back(bc.e1);
  bc.m1 = make_algebra(std::move(m));
  bc.b_in_m1 = make_embedding(fs.ext.sup, bc.m1, std::move(lambda));

  // E_1(x⊗y) = xy, dual bases x_i⊗1 and 1⊗y_i
  bc.next.ext = bc.b_in_m1;
  bc.next.e = SparseMap<T>(nb, n);
  for (std::size_t q = 0; q < n; ++q) bc.next.e.cols[q] = B.basis_product(X.pairs[q].first, X.pairs[q].second);
  for (std::size_t k = 0; k < fs.dual_x.size(); ++k) {
    bc.next.dual_x.push_back(X.element(fs.dual_x[k], B.unit));
    bc.next.dual_y.push_back(X.element(B.unit, fs.dual_y[k]));
  }
  Audit post = audit_frobenius(bc.next);
  if (!post.ok) throw AlgebraError("basic construction: next system: " + post.detail);
  if (check_end_iso) bc.end_iso = check_end_isomorphism(fs, bc);
  return bc;
}

template <class T>
Audit check_end_isomorphism(const FrobeniusSystem<T>& fs, const BasicConstruction<T>& bc) {
  Audit audit;
  const auto& B = *fs.ext.sup;
  const auto& C = *fs.ext.sub;
  const auto& M = *bc.m1;
  const auto& X = *bc.tensor;
  const FieldSpec& f = B.field;
  const std::size_t nb = B.dim;

  // Φ(x⊗y) = λ_x ∘ E ∘ λ_y
  auto phi = [&](const SparseVec<T>& q) {
    SparseMap<T> out(nb, nb);
    for (Index z = 0; z < nb; ++z) {
      std::vector<std::pair<Index, T>> raw;
      for (const auto& [k, a] : q.terms) {
        const auto& [i, j] = X.pairs[k];
        auto v = B.mul(unit_vec<T>(i, f), fs.e_in_b(B.basis_product(j, z)));
        for (auto& [r, x] : v.terms) raw.emplace_back(r, a * x);
      }
      out.cols[z] = collect(std::move(raw));
    }
    return out;
  };
  auto flatten = [&](const SparseMap<T>& m) {
    SparseVec<T> v;
    for (Index c = 0; c < nb; ++c)
      for (const auto& [r, x] : m.cols[c].terms) v.terms.emplace_back(static_cast<Index>(c * nb + r), x);
    return v;
  };

  std::vector<SparseMap<T>> images(M.dim);
  const long total = static_cast<long>(M.dim);
#pragma omp parallel for schedule(dynamic, 8)
  for (long q = 0; q < total; ++q) images[q] = phi(unit_vec<T>(static_cast<Index>(q), f));

  if (phi(M.unit) != identity_map(nb, one<T>(f))) audit.fail("Φ is not unital");

  std::vector<SparseMap<T>> gens;
  for (const auto& g : M.generators) gens.push_back(phi(g));
  std::atomic<bool> mult_ok{true}, lin_ok{true};
#pragma omp parallel for schedule(dynamic, 8)
  for (long q = 0; q < total; ++q) {
    if (!mult_ok.load()) continue;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (phi(M.mul(unit_vec<T>(static_cast<Index>(q), f), M.generators[g])) != images[q].compose(gens[g])) {
        mult_ok = false;
        break;
      }
    }
    for (const auto& c : C.generators) {
      auto rc = B.right_mult(fs.ext(c));
      if (images[q].compose(rc) != rc.compose(images[q])) lin_ok = false;
    }
  }
  if (!mult_ok) audit.fail("Φ is not multiplicative");
  if (!lin_ok) audit.fail("Φ(x⊗y) is not right C-linear");

  Echelon<T> ech(f, nb * nb);
  for (const auto& m : images) ech.insert(flatten(m));
  if (ech.rank() != M.dim) audit.fail("Φ is not injective");

  auto mod = restrict_bimodule(regular_bimodule(fs.ext.sup), scalar_embedding(fs.ext.sup), fs.ext);
  const std::size_t end_dim = bimodule_hom(mod, mod).size();
  if (end_dim != M.dim)
    audit.fail("dim End(B_C) = " + std::to_string(end_dim) + " but dim B⊗_C B = " + std::to_string(M.dim));
  return audit;
}

template <class T>
Embedding<T> JonesTower<T>::embedding(int from, int to) const {
  if (from > to || from < -1 || to > top()) throw AlgebraError("tower embedding: levels out of range");
  Embedding<T> e = identity_embedding(level(from));
  for (int k = from + 1; k <= to; ++k) e = compose(incl[k], e);
  return e;
}

template <class T>
bool extend_tower(JonesTower<T>& jt, std::size_t cap_dim, bool check_end_iso) {
  const int t = jt.top();
  const std::size_t dt = jt.level(t)->dim, dp = jt.level(t - 1)->dim;
  const std::size_t next = dt * dt / dp;
  if (next > cap_dim) {
    jt.truncated = true;
    return false;
  }
  auto bc = basic_construction(jt.systems[t], check_end_iso);
  jt.levels.push_back(bc.m1);
  jt.incl.push_back(bc.b_in_m1);
  jt.systems.push_back(std::move(bc.next));
  jt.jones.push_back(bc.e1);
  jt.end_iso.push_back(bc.end_iso.value_or(Audit{}));
  return true;
}

template <class T>
JonesTower<T> jones_tower(const PermGroup& g, const PermGroup& h, const FieldSpec& field, int levels,
                          std::size_t cap_dim, bool check_end_iso) {
  JonesTower<T> jt;
  jt.field = field;
  auto fh = group_algebra<T>(h, field);
  auto fg = group_algebra<T>(g, field);
  auto fs = group_frobenius_system(fh, h, fg, g);
  jt.levels = {fh, fg};
  jt.incl = {fs.ext};
  jt.systems = {fs};
  jt.jones = {SparseVec<T>{}};
  jt.end_iso = {Audit{}};
  while (jt.top() < levels) {
    if (!extend_tower(jt, cap_dim, check_end_iso)) break;
  }
  return jt;
}

template <class T>
Audit audit_jones_tower(const JonesTower<T>& jt, std::size_t index) {
  Audit audit;
  const int i = static_cast<int>(index);
  if (i < 0 || i > jt.top()) {
    audit.fail("level " + std::to_string(i) + " not built");
    return audit;
  }
  const FieldSpec& f = jt.field;
  audit.merge(audit_frobenius(jt.systems[i]));
  // dim M_i = dim M_0 [M_0 : M_{-1}]^i
  const std::size_t d0 = jt.level(0)->dim, dn = jt.level(-1)->dim;
  std::size_t expect = d0;
  for (int k = 0; k < i; ++k) expect = expect * d0 / dn;
  if (jt.level(i)->dim != expect)
    audit.fail("dim M_" + std::to_string(i) + " = " + std::to_string(jt.level(i)->dim) + ", expected " +
               std::to_string(expect));
  if (i == 0) return audit;
  if (!jt.end_iso[i].ok) audit.fail("M_" + std::to_string(i) + " vs End: " + jt.end_iso[i].detail);

  const auto& Mi = *jt.level(i);
  const auto& e = jt.jones[i];
  // e_i y e_i = E_{i-1}(y) e_i = e_i E_{i-1}(y) for y ∈ M_{i-1}
  const auto& prev = *jt.level(i - 1);
  const auto& sys = jt.systems[i - 1];
  auto into = jt.embedding(i - 2, i);
  for (Index y = 0; y < prev.dim; ++y) {
    auto yv = jt.incl[i](unit_vec<T>(y, f));
    auto lhs = Mi.mul(Mi.mul(e, yv), e);
    auto ey = into(sys.e.cols[y]);
    if (lhs != Mi.mul(ey, e)) audit.fail("e_i y e_i != E(y) e_i at level " + std::to_string(i));
    if (lhs != Mi.mul(e, ey)) audit.fail("e_i y e_i != e_i E(y) at level " + std::to_string(i));
    if (!audit.ok) return audit;
  }
  // e_i commutes with M_{i-2}
  for (const auto& c : jt.level(i - 2)->generators) {
    auto cv = into(c);
    if (Mi.mul(cv, e) != Mi.mul(e, cv)) audit.fail("e_" + std::to_string(i) + " does not commute with M_{i-2}");
  }
  // E_i(e_i) = 1
  if (jt.systems[i].e.apply(e) != prev.unit) audit.fail("E_i(e_i) != 1 at level " + std::to_string(i));
  if (i + 1 <= jt.top()) {
    const auto& Mn = *jt.level(i + 1);
    auto ei = jt.incl[i + 1](e);
    const auto& en = jt.jones[i + 1];
    if (Mn.mul(Mn.mul(ei, en), ei) != ei) audit.fail("e_i e_{i+1} e_i != e_i at level " + std::to_string(i));
    if (Mn.mul(Mn.mul(en, ei), en) != en) audit.fail("e_{i+1} e_i e_{i+1} != e_{i+1} at level " + std::to_string(i));
  }
  return audit;
}

template <class T>
DepthInstance<T> depth_subtower(const JonesTower<T>& jt, int n) {
  if (n < 2 || n - 2 > jt.top()) throw AlgebraError("depth subtower: level " + std::to_string(n - 2) + " not built");
  return DepthInstance<T>::make(jt.incl[n - 2], jt.embedding(-1, n - 2));
}

namespace {

template <class T>
bool reach(JonesTower<T>& jt, int k, std::size_t cap_dim) {
  while (jt.top() < k)
    if (!extend_tower(jt, cap_dim, false)) return false;
  return true;
}

template <class T>
LevelResult<T> test_level(const JonesTower<T>& jt, int n, const Caps& caps) {
  LevelResult<T> r;
  r.n = n;
  const std::size_t dx = jt.level(n - 2)->dim * jt.level(n - 2)->dim / jt.level(n - 3)->dim;
  if (dx > caps.max_side) {
    r.right.note = r.left.note = "A ⊗_B A has dimension " + std::to_string(dx) + " above the cap";
    return r;
  }
  auto inst = depth_subtower(jt, n);
  r.right = rd3_witness(inst, Side::Right, caps);
  r.left = rd3_witness(inst, Side::Left, caps);
  return r;
}

}  // namespace

template <class T>
DepthReport<T> subgroup_depth(JonesTower<T>& jt, int n_max, const Caps& caps, std::size_t cap_dim) {
  DepthReport<T> rep;
  rep.n_max = n_max;
  for (int n = 2; n <= n_max; ++n) {
    if (!reach(jt, n - 2, cap_dim)) {
      rep.truncated = true;
      rep.truncation_note = "M_" + std::to_string(jt.top() + 1) + " exceeds the dimension cap " +
                            std::to_string(cap_dim);
      break;
    }
    auto r = test_level(jt, n, caps);
    const bool decided = r.decided(), holds = r.holds();
    rep.levels.push_back(std::move(r));
    if (!decided && !holds) {
      rep.truncated = true;
      rep.truncation_note = "test at n = " + std::to_string(n) + " undecided: " + rep.levels.back().right.note;
      break;
    }
    rep.tried_up_to = n;
    if (holds) {
      rep.depth = n;
      break;
    }
  }
  return rep;
}

template <class T>
DepthReport<T> subgroup_depth(const PermGroup& g, const PermGroup& h, const FieldSpec& field, int n_max,
                              const Caps& caps, std::size_t cap_dim) {
  auto jt = jones_tower<T>(g, h, field, 0, cap_dim, false);
  return subgroup_depth(jt, n_max, caps, cap_dim);
}

namespace {

/// Restriction of M_{k-1} -> M_k to the centralizers of N.
template <class T>
Embedding<T> restrict_to(const Embedding<T>& outer, const Embedding<T>& lower, const Embedding<T>& upper,
                         const Subspace<T>& upper_space) {
  SparseMap<T> map(upper.sub->dim, lower.sub->dim);
  for (Index i = 0; i < lower.sub->dim; ++i) {
    auto v = outer(lower.image(i));
    if (!upper_space.contains(v)) throw AlgebraError("centralizer restriction leaves the upper centralizer");
    map.cols[i] = upper_space.coords_sparse(v);
  }
  return make_embedding(lower.sub, upper.sub, std::move(map));
}

}  // namespace

template <class T>
DerivedTowerReport derived_tower_check(const JonesTower<T>& jt, int n, const Caps& caps) {
  DerivedTowerReport rep;
  rep.n = n;
  if (n < 2 || n > jt.top()) throw AlgebraError("derived tower check: level " + std::to_string(n) + " missing");
  const FieldSpec& f = jt.field;
  auto cent = [&](int k) { return algebra_centralizer(jt.embedding(-1, k)); };
  Subspace<T> z2 = cent(n - 2), z1 = cent(n - 1), z0 = cent(n);
  rep.dim_prev2 = z2.dim();
  rep.dim_prev = z1.dim();
  rep.dim_top = z0.dim();
  auto c2 = subalgebra(jt.level(n - 2), z2, "M_" + std::to_string(n - 2) + "^N");
  auto c1 = subalgebra(jt.level(n - 1), z1, "M_" + std::to_string(n - 1) + "^N");
  auto c21 = restrict_to(jt.incl[n - 1], c2, c1, z1);

  auto reg = regular_bimodule(c1.sub);
  auto id = identity_embedding(c1.sub);
  auto t = tensor_over(restrict_bimodule(reg, id, c21), restrict_bimodule(reg, c21, id));
  rep.dim_tensor = t.dim();
  rep.dims_agree = rep.dim_tensor == rep.dim_top;

  // x⊗y -> x e_n y
  const auto& Mn = *jt.level(n);
  const auto& en = jt.jones[n];
  Echelon<T> ech(f, Mn.dim);
  bool inside = true;
  for (const auto& [i, j] : t.pairs) {
    auto x = jt.incl[n](z1.basis[i]);
    auto y = jt.incl[n](z1.basis[j]);
    auto v = Mn.mul(Mn.mul(x, en), y);
    if (!z0.contains(v)) inside = false;
    ech.insert(v);
  }
  rep.bijective = inside && ech.rank() == t.dim() && rep.dims_agree;
  if (!inside) rep.note = "x e_n y leaves M_n^N";

  // dual bases of E_{n-1} rebuilt from a left witness of M_{n-2} | M_{n-3} | N
  auto inst = depth_subtower(jt, n);
  auto left = rd3_witness(inst, Side::Left, caps);
  if (!left.holds()) {
    rep.note += (rep.note.empty() ? "" : "; ") + std::string("no left witness at this level");
    return rep;
  }
  const auto& X = inst.tensor();
  const auto& Mp = *jt.level(n - 1);
  if (X.pairs.size() != Mp.dim) {
    rep.note += "; tensor square and M_{n-1} bases differ";
    return rep;
  }
  const auto& w = *left.witness;
  const auto& sys = jt.systems[n - 2];  // E_{n-2}: M_{n-2} -> M_{n-3}
  std::vector<SparseVec<T>> ts = w.tensors, ss;
  for (const auto& beta : w.maps) {
    SparseVec<T> s;
    for (std::size_t k = 0; k < sys.dual_x.size(); ++k) s = s + X.element(beta.apply(sys.dual_x[k]), sys.dual_y[k]);
    ss.push_back(std::move(s));
  }
  rep.dual_bases_central = true;
  for (const auto* list : {&ts, &ss})
    for (const auto& v : *list)
      if (!z1.contains(v)) rep.dual_bases_central = false;
  const auto& En = jt.systems[n - 1];  // E_{n-1}: M_{n-1} -> M_{n-2}
  rep.dual_identity_derived = rep.dual_identity_other = true;
  for (Index m = 0; m < Mp.dim; ++m) {
    auto mv = unit_vec<T>(m, f);
    SparseVec<T> a, b;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      a = a + Mp.mul(ts[k], En.e_in_b(Mp.mul(ss[k], mv)));
      b = b + Mp.mul(En.e_in_b(Mp.mul(mv, ts[k])), ss[k]);
    }
    if (a != mv) rep.dual_identity_derived = false;
    if (b != mv) rep.dual_identity_other = false;
  }
  return rep;
}

template <class T>
EmbeddingReport embedding_check(JonesTower<T>& jt, const DepthReport<T>& report, int extra_levels, const Caps& caps,
                                std::size_t cap_dim) {
  if (!report.depth) throw AlgebraError("embedding check: depth not established");
  EmbeddingReport rep;
  const int n = *report.depth;
  rep.depth = n;
  // n = 2^m + 1: N -> M_{n-2} is D2
  const int m1 = n - 1;
  if ((m1 & (m1 - 1)) == 0) {
    rep.d2_level = n - 2;
    if (reach(jt, n - 2, cap_dim)) {
      auto v = rd2_witness(jt.embedding(-1, n - 2), Side::Right, caps);
      rep.d2_checked = v.status != Status::Inconclusive;
      rep.d2_holds = v.holds();
      if (!rep.d2_checked) rep.note = "D2 test undecided: " + v.note;
    } else {
      rep.note = "M_" + std::to_string(n - 2) + " beyond the cap";
    }
  }
  for (int k = n + 1; k <= n + extra_levels; ++k) {
    if (!reach(jt, k - 2, cap_dim)) {
      rep.note += (rep.note.empty() ? "" : "; ") + std::string("monotonicity stopped at the cap");
      break;
    }
    auto r = test_level(jt, k, caps);
    if (!r.decided()) break;
    rep.monotonicity.emplace_back(k, r.holds());
    if (!r.holds()) rep.monotone = false;
  }
  return rep;
}

template <class T>
QuasibaseWitness<T> convert_left_to_right(const DepthInstance<T>& inst, const QuasibaseWitness<T>& left,
                                          const FrobeniusSystem<T>& fs) {
  if (left.side != Side::Left) throw AlgebraError("convert_left_to_right: witness is not a left witness");
  if (!same_algebra(fs.ext.sup, inst.a) || fs.ext.map != inst.b_in_a.map)
    throw AlgebraError("convert_left_to_right: Frobenius system is not for A | B");
  const auto& A = *inst.a;
  const auto& X = inst.tensor();
  const FieldSpec& f = A.field;
  QuasibaseWitness<T> out;
  out.side = Side::Right;
  for (std::size_t j = 0; j < left.n(); ++j) {
    // γ_j(y) = Σ E(y t_j^1) t_j^2
    SparseMap<T> gamma(A.dim, A.dim);
    for (Index y = 0; y < A.dim; ++y) {
      std::vector<std::pair<Index, T>> raw;
      for (const auto& [q, c] : left.tensors[j].terms) {
        const auto& [i, k] = X.pairs[q];
        auto v = A.mul(fs.e_in_b(A.basis_product(y, i)), unit_vec<T>(k, f));
        for (auto& [r, x] : v.terms) raw.emplace_back(r, c * x);
      }
      gamma.cols[y] = collect(std::move(raw));
    }
    // u_j = Σ_i β_j(x_i) ⊗ y_i
    SparseVec<T> u;
    for (std::size_t i = 0; i < fs.dual_x.size(); ++i) u = u + X.element(left.maps[j].apply(fs.dual_x[i]), fs.dual_y[i]);
    out.maps.push_back(std::move(gamma));
    out.tensors.push_back(std::move(u));
  }
  return out;
}

#define TD_INSTANTIATE(T)                                                                                          \
  template Audit audit_frobenius<T>(const FrobeniusSystem<T>&);                                                    \
  template FrobeniusSystem<T> group_frobenius_system<T>(const AlgebraPtr<T>&, const PermGroup&,                 \
                                                        const AlgebraPtr<T>&, const PermGroup&);                \
  template BasicConstruction<T> basic_construction<T>(const FrobeniusSystem<T>&, bool);                           \
  template Audit check_end_isomorphism<T>(const FrobeniusSystem<T>&, const BasicConstruction<T>&);                \
  template struct JonesTower<T>;                                                                                   \
  template JonesTower<T> jones_tower<T>(const PermGroup&, const PermGroup&, const FieldSpec&, int, std::size_t,   \
                                        bool);                                                                     \
  template bool extend_tower<T>(JonesTower<T>&, std::size_t, bool);                                               \
  template Audit audit_jones_tower<T>(const JonesTower<T>&, std::size_t);                                          \
  template DepthInstance<T> depth_subtower<T>(const JonesTower<T>&, int);                                          \
  template DepthReport<T> subgroup_depth<T>(JonesTower<T>&, int, const Caps&, std::size_t);                        \
  template DepthReport<T> subgroup_depth<T>(const PermGroup&, const PermGroup&, const FieldSpec&, int,             \
                                            const Caps&, std::size_t);                                             \
  template DerivedTowerReport derived_tower_check<T>(const JonesTower<T>&, int, const Caps&);                      \
  template EmbeddingReport embedding_check<T>(JonesTower<T>&, const DepthReport<T>&, int, const Caps&,             \
                                              std::size_t);                                                        \
  template QuasibaseWitness<T> convert_left_to_right<T>(const DepthInstance<T>&, const QuasibaseWitness<T>&,       \
                                                        const FrobeniusSystem<T>&);

TD_INSTANTIATE(Rational)
TD_INSTANTIATE(Fp)

}  // namespace td
