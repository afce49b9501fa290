#include <atomic>

#include "depth_common.hpp"
#include "towerdepth/depth.hpp"

namespace td {

namespace {

// End(A_B) (left case) or End(_B A) (right case) as a bimodule whose basis is a
// pivot-normal basis of the flattened maps (entry (r, c) at c * dim A + r).
template <class T>
struct EndoModule {
  Subspace<T> maps;
  Bimodule<T> module;
};

template <class T>
SparseVec<T> flatten(const SparseMap<T>& m) {
  SparseVec<T> v;
  for (std::size_t c = 0; c < m.ncols(); ++c)
    for (const auto& [r, x] : m.cols[c].terms) v.terms.emplace_back(static_cast<Index>(c * m.rows + r), x);
  return v;
}

template <class T>
SparseMap<T> unflatten(const SparseVec<T>& v, std::size_t n) {
  SparseMap<T> m(n, n);
  for (const auto& [idx, x] : v.terms) m.cols[idx / n].terms.emplace_back(static_cast<Index>(idx % n), x);
  return m;
}

template <class T>
EndoModule<T> endo_module(const Tower<T>& t, Side side) {
  const auto a = t.a;
  const std::size_t n = a->dim;
  auto reg = regular_bimodule(a);
  auto scal = scalar_embedding(a);
  // left case: right B-linear maps; right case: left B-linear maps
  auto base = side == Side::Left ? restrict_bimodule(reg, scal, t.incl_ba) : restrict_bimodule(reg, t.incl_ba, scal);
  std::vector<SparseVec<T>> flat;
  for (const auto& m : bimodule_hom(base, base)) flat.push_back(flatten(m));
  EndoModule<T> em;
  em.maps = span_of(a->field, n * n, flat);
  auto maps = std::make_shared<const Subspace<T>>(em.maps);
  auto c_in_a = std::make_shared<const SparseMap<T>>(t.incl_ca.map);
  em.module.dim = maps->dim();
  if (side == Side::Left) {
    // A-C-bimodule: (a·f·c)(x) = a f(c x)
    em.module.left = a;
    em.module.right = t.c;
    em.module.left_basis = [a, maps, n](Index i, Index k) {
      SparseMap<T> f = unflatten(maps->basis[k], n);
      SparseMap<T> g(n, n);
      for (Index x = 0; x < n; ++x) g.cols[x] = a->mul(a->basis(i), f.cols[x]);
      return maps->coords_sparse(flatten(g));
    };
    em.module.right_basis = [a, maps, c_in_a, n](Index k, Index j) {
      SparseMap<T> f = unflatten(maps->basis[k], n);
      SparseMap<T> g(n, n);
      for (Index x = 0; x < n; ++x) g.cols[x] = f.apply(a->mul(c_in_a->cols[j], a->basis(x)));
      return maps->coords_sparse(flatten(g));
    };
  } else {
    // C-A-bimodule: (c·f·a)(x) = f(x c) a
    em.module.left = t.c;
    em.module.right = a;
    em.module.left_basis = [a, maps, c_in_a, n](Index j, Index k) {
      SparseMap<T> f = unflatten(maps->basis[k], n);
      SparseMap<T> g(n, n);
      for (Index x = 0; x < n; ++x) g.cols[x] = f.apply(a->mul(a->basis(x), c_in_a->cols[j]));
      return maps->coords_sparse(flatten(g));
    };
    em.module.right_basis = [a, maps, n](Index k, Index i) {
      SparseMap<T> f = unflatten(maps->basis[k], n);
      SparseMap<T> g(n, n);
      for (Index x = 0; x < n; ++x) g.cols[x] = a->mul(f.cols[x], a->basis(i));
      return maps->coords_sparse(flatten(g));
    };
  }
  return em;
}

template <class T>
Audit verify_summand(const Bimodule<T>& y, const SummandWitness<T>& w) {
  Audit audit;
  const FieldSpec& f = y.field();
  std::atomic<bool> bad{false};
  const long total = static_cast<long>(y.dim);
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < total; ++k) {
    if (bad.load()) continue;
    auto wk = SparseVec<T>::unit(static_cast<Index>(k), one<T>(f));
    std::vector<std::pair<Index, T>> raw;
    for (std::size_t i = 0; i < w.maps.size(); ++i) {
      auto img = w.maps[i].cols[k];
      auto part = w.side == Side::Left ? y.act_left(img, w.elements[i]) : y.act_right(w.elements[i], img);
      for (auto& t : part.terms) raw.push_back(std::move(t));
    }
    if (collect(std::move(raw)) != wk) bad.store(true);
  }
  if (bad.load()) audit.fail("summand identity fails on some basis element of End");
  return audit;
}

}  // namespace

template <class T>
EndoVerdict<T> endo_characterization(const Tower<T>& t, Side side, const Caps& caps) {
  EndoVerdict<T> out;
  auto& v = out.verdict;
  v.property = side == Side::Right ? Property::rD3 : Property::lD3;
  v.method = Method::EndoCharacterization;
  const auto& A = *t.a;
  const FieldSpec& f = A.field;
  v.stats.dim_a = A.dim;
  const std::size_t dim_b = t.b->dim;
  // End(A_B) has dimension dim A · [A : B] for free extensions
  if (A.dim > caps.max_side || A.dim * (A.dim / std::max<std::size_t>(dim_b, 1)) > caps.max_side) {
    v.note = "size cap exceeded";
    return out;
  }
  EndoModule<T> em = endo_module(t, side);
  const Bimodule<T>& y = em.module;
  const std::size_t dim_y = y.dim;
  v.stats.dim_x = dim_y;
  auto reg = regular_bimodule(t.a);
  auto id_a = identity_embedding(t.a);
  auto id_c = identity_embedding(t.c);

  // Hom(A, Y) ≅ {y : c·y = y·c}
  Subspace<T> fixed = side == Side::Left ? centralizer(y, t.incl_ca, id_c) : centralizer(y, id_c, t.incl_ca);
  // Hom(Y, A) by the generic intertwiner solver
  auto target_mod = side == Side::Left ? restrict_bimodule(reg, id_a, t.incl_ca) : restrict_bimodule(reg, t.incl_ca, id_a);
  std::vector<SparseMap<T>> homs = bimodule_hom(y, target_mod);
  Subspace<T> vsub = algebra_centralizer(t.incl_ca);
  v.stats.dim_p = fixed.dim();
  v.stats.dim_hom = homs.size();
  v.stats.dim_v = vsub.dim();

  std::function<std::vector<SparseVec<T>>(const SparseVec<T>&)> fixed_orbit = [&](const SparseVec<T>& q) {
    std::vector<SparseVec<T>> o;
    for (const auto& vk : vsub.basis) o.push_back(side == Side::Left ? y.act_left(vk, q) : y.act_right(q, vk));
    return o;
  };
  auto elems = detail::greedy_generators<T>(f, dim_y, fixed.basis, fixed.dim(), fixed_orbit);

  std::function<std::vector<SparseVec<T>>(const SparseVec<T>&)> y_orbit = [&](const SparseVec<T>& w) {
    std::vector<SparseVec<T>> o;
    for (Index i = 0; i < y.left->dim; ++i) {
      auto lw = y.act_left(y.left->basis(i), w);
      for (Index j = 0; j < y.right->dim; ++j) o.push_back(y.act_right(lw, y.right->basis(j)));
    }
    return o;
  };
  std::vector<SparseVec<T>> basis_y;
  for (Index k = 0; k < dim_y; ++k) basis_y.push_back(SparseVec<T>::unit(k, one<T>(f)));
  auto ws = detail::greedy_generators<T>(f, dim_y, basis_y, dim_y, y_orbit);
  v.stats.tensor_generators = elems.size();
  v.stats.module_generators = ws.size();

  const std::size_t nh = homs.size(), ncols = elems.size() * nh;
  v.stats.unknowns = ncols;
  v.stats.equations = ws.size() * dim_y;
  std::vector<SparseVec<T>> columns(ncols);
  const long total = static_cast<long>(ncols);
#pragma omp parallel for schedule(dynamic, 16)
  for (long idx = 0; idx < total; ++idx) {
    const std::size_t i = static_cast<std::size_t>(idx) / nh, j = static_cast<std::size_t>(idx) % nh;
    std::vector<SparseVec<T>> parts(ws.size());
    for (std::size_t s = 0; s < ws.size(); ++s) {
      auto img = homs[j].apply(ws[s]);
      parts[s] = side == Side::Left ? y.act_left(img, elems[i]) : y.act_right(elems[i], img);
    }
    columns[idx] = detail::concat_blocks(parts, dim_y);
  }
  auto target = detail::concat_blocks(ws, dim_y);
  auto sol = solve_columns(f, ws.size() * dim_y, columns, target);
  if (!sol) {
    v.status = Status::False;
    v.note = "End is not a summand of a power of A (rank deficient)";
    return out;
  }
  SummandWitness<T> w;
  w.side = side;
  w.dim_y = dim_y;
  std::vector<std::vector<std::pair<Index, T>>> per_elem(elems.size());
  for (const auto& [idx, coeff] : sol->terms) per_elem[idx / nh].emplace_back(static_cast<Index>(idx % nh), coeff);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (per_elem[i].empty()) continue;
    auto m = detail::combine_maps(homs, per_elem[i], A.dim, dim_y);
    if (m.is_zero()) continue;
    w.maps.push_back(std::move(m));
    w.elements.push_back(elems[i]);
  }
  Audit audit = verify_summand(y, w);
  if (!audit.ok) {
    v.note = "internal error: summand witness failed verification: " + audit.detail;
    return out;
  }
  v.status = Status::True;
  v.verified = true;
  out.witness = std::move(w);
  return out;
}

template EndoVerdict<Rational> endo_characterization<Rational>(const Tower<Rational>&, Side, const Caps&);
template EndoVerdict<Fp> endo_characterization<Fp>(const Tower<Fp>&, Side, const Caps&);

}  // namespace td
