#include "towerdepth/depth.hpp"

#include <atomic>
#include <mutex>

#include "depth_common.hpp"

namespace td {

std::string to_string(Side s) { return s == Side::Right ? "right" : "left"; }

std::string to_string(Property p) {
  switch (p) {
    case Property::rD2: return "rD2";
    case Property::lD2: return "lD2";
    case Property::rD3: return "rD3";
    case Property::lD3: return "lD3";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::SpanFeasibility: return "span-feasibility";
    case Method::EndoCharacterization: return "endo-characterization";
    case Method::GroupCriterion: return "group-criterion";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::True: return "true";
    case Status::False: return "false";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

template <class T>
std::shared_ptr<const TensorProduct<T>> tensor_square(const Embedding<T>& b_in_a) {
  auto reg = regular_bimodule(b_in_a.sup);
  auto id = identity_embedding(b_in_a.sup);
  return std::make_shared<const TensorProduct<T>>(
      tensor_over(restrict_bimodule(reg, id, b_in_a), restrict_bimodule(reg, b_in_a, id)));
}

template <class T>
DepthInstance<T> DepthInstance<T>::make(const Embedding<T>& b_in_a, const Embedding<T>& c_in_a) {
  if (!same_algebra(b_in_a.sup, c_in_a.sup)) throw AlgebraError("depth instance: subalgebras of different algebras");
  DepthInstance inst;
  inst.a = b_in_a.sup;
  inst.b_in_a = b_in_a;
  inst.c_in_a = c_in_a;
  inst.x = tensor_square(b_in_a);
  return inst;
}

template <class T>
DepthInstance<T> DepthInstance<T>::from_tower(const Tower<T>& t) {
  return make(t.incl_ba, t.incl_ca);
}

namespace {

template <class T>
SparseVec<T> unit_vec(Index i, const FieldSpec& f) {
  return SparseVec<T>::unit(i, one<T>(f));
}

}  // namespace

template <class T>
DepthVerdict<T> rd3_witness(const DepthInstance<T>& inst, Side side, const Caps& caps) {
  DepthVerdict<T> out;
  out.property = side == Side::Right ? Property::rD3 : Property::lD3;
  out.method = Method::SpanFeasibility;
  const auto& A = *inst.a;
  const auto& X = inst.tensor();
  const FieldSpec& f = A.field;
  const std::size_t dim_a = A.dim, dim_x = X.dim();
  out.stats.dim_a = dim_a;
  out.stats.dim_x = dim_x;
  if (dim_a > caps.max_side || dim_x > caps.max_side) {
    out.note = "size cap exceeded (dim A = " + std::to_string(dim_a) + ", dim A⊗A = " + std::to_string(dim_x) + ")";
    return out;
  }
  const Embedding<T>& b = inst.b_in_a;
  const Embedding<T>& c = inst.c_in_a;
  auto reg = regular_bimodule(inst.a);

  // Hom(A⊗_B A, A) ≅ End(_B A_C) for the right case, End(_C A_B) for the left case.
  auto hom_space = side == Side::Right ? restrict_bimodule(reg, b, c) : restrict_bimodule(reg, c, b);
  std::vector<SparseMap<T>> maps = bimodule_hom(hom_space, hom_space);
  // Hom(A, A⊗_B A) ≅ (A⊗_B A)^C
  Subspace<T> p = centralizer(X.module, c, c);
  Subspace<T> v = algebra_centralizer(c);
  out.stats.dim_hom = maps.size();
  out.stats.dim_p = p.dim();
  out.stats.dim_v = v.dim();

  // V-generators of P: right case uses v·p, left case p·v.
  std::function<std::vector<SparseVec<T>>(const SparseVec<T>&)> p_orbit = [&](const SparseVec<T>& q) {
    std::vector<SparseVec<T>> o;
    for (const auto& vk : v.basis) o.push_back(side == Side::Right ? X.module.act_left(vk, q) : X.module.act_right(q, vk));
    return o;
  };
  auto tensors = detail::greedy_generators<T>(f, dim_x, p.basis, p.dim(), p_orbit);

  // Bimodule generators of A: B-C for the right case, C-B for the left case.
  const Embedding<T>& lhs = side == Side::Right ? b : c;
  const Embedding<T>& rhs = side == Side::Right ? c : b;
  std::function<std::vector<SparseVec<T>>(const SparseVec<T>&)> a_orbit = [&](const SparseVec<T>& y) {
    std::vector<SparseVec<T>> o;
    for (Index i = 0; i < lhs.sub->dim; ++i) {
      auto ly = A.mul(lhs.image(i), y);
      for (Index j = 0; j < rhs.sub->dim; ++j) o.push_back(A.mul(ly, rhs.image(j)));
    }
    return o;
  };
  std::vector<SparseVec<T>> basis_a;
  for (Index i = 0; i < dim_a; ++i) basis_a.push_back(unit_vec<T>(i, f));
  auto ys = detail::greedy_generators<T>(f, dim_a, basis_a, dim_a, a_orbit);
  out.stats.tensor_generators = tensors.size();
  out.stats.module_generators = ys.size();

  const std::size_t nmaps = maps.size(), ncols = tensors.size() * nmaps;
  out.stats.unknowns = ncols;
  out.stats.equations = ys.size() * dim_x;
  std::vector<SparseVec<T>> columns(ncols);
  const long total = static_cast<long>(ncols);
#pragma omp parallel for schedule(dynamic, 16)
  for (long idx = 0; idx < total; ++idx) {
    const std::size_t i = static_cast<std::size_t>(idx) / nmaps, j = static_cast<std::size_t>(idx) % nmaps;
    std::vector<SparseVec<T>> parts(ys.size());
    for (std::size_t s = 0; s < ys.size(); ++s) {
      auto img = maps[j].apply(ys[s]);
      parts[s] = side == Side::Right ? X.module.act_left(img, tensors[i]) : X.module.act_right(tensors[i], img);
    }
    columns[idx] = detail::concat_blocks(parts, dim_x);
  }
  std::vector<SparseVec<T>> target_parts;
  for (const auto& y : ys) target_parts.push_back(side == Side::Right ? X.element(A.unit, y) : X.element(y, A.unit));
  auto target = detail::concat_blocks(target_parts, dim_x);

  auto sol = solve_columns(f, ys.size() * dim_x, columns, target);
  if (!sol) {
    out.status = Status::False;
    out.note = "identity is not in the span of composites (rank deficient)";
    return out;
  }
  QuasibaseWitness<T> w;
  w.side = side;
  std::vector<std::vector<std::pair<Index, T>>> per_tensor(tensors.size());
  for (const auto& [idx, coeff] : sol->terms) per_tensor[idx / nmaps].emplace_back(static_cast<Index>(idx % nmaps), coeff);
  for (std::size_t i = 0; i < tensors.size(); ++i) {
    if (per_tensor[i].empty()) continue;
    auto m = detail::combine_maps(maps, per_tensor[i], dim_a, dim_a);
    if (m.is_zero()) continue;
    w.maps.push_back(std::move(m));
    w.tensors.push_back(tensors[i]);
  }
  Audit audit = verify_quasibases(inst, w);
  if (!audit.ok) {
    out.note = "internal error: solver witness failed verification: " + audit.detail;
    return out;
  }
  out.status = Status::True;
  out.verified = true;
  out.witness = std::move(w);
  return out;
}

template <class T>
DepthVerdict<T> rd3_witness(const Tower<T>& t, Side side, const Caps& caps) {
  return rd3_witness(DepthInstance<T>::from_tower(t), side, caps);
}

template <class T>
DepthVerdict<T> rd2_witness(const Embedding<T>& b_in_a, Side side, const Caps& caps) {
  auto v = rd3_witness(DepthInstance<T>::make(b_in_a, b_in_a), side, caps);
  v.property = side == Side::Right ? Property::rD2 : Property::lD2;
  return v;
}

template <class T>
Audit verify_quasibases(const DepthInstance<T>& inst, const QuasibaseWitness<T>& w) {
  Audit audit;
  const auto& A = *inst.a;
  const auto& X = inst.tensor();
  const FieldSpec& f = A.field;
  const std::size_t n = A.dim;
  if (w.maps.size() != w.tensors.size()) {
    audit.fail("witness has different numbers of maps and tensors");
    return audit;
  }
  const Embedding<T>& lhs = w.side == Side::Right ? inst.b_in_a : inst.c_in_a;
  const Embedding<T>& rhs = w.side == Side::Right ? inst.c_in_a : inst.b_in_a;
  for (std::size_t k = 0; k < w.maps.size(); ++k) {
    const auto& m = w.maps[k];
    if (m.rows != n || m.ncols() != n) {
      audit.fail("map " + std::to_string(k) + " has wrong shape");
      return audit;
    }
    for (Index e = 0; e < n; ++e) {
      auto be = unit_vec<T>(e, f);
      for (const auto& g : lhs.sub->generators) {
        auto ig = lhs(g);
        if (m.apply(A.mul(ig, be)) != A.mul(ig, m.cols[e])) {
          audit.fail("map " + std::to_string(k) + " is not left linear over its subalgebra");
          return audit;
        }
      }
      for (const auto& g : rhs.sub->generators) {
        auto ig = rhs(g);
        if (m.apply(A.mul(be, ig)) != A.mul(m.cols[e], ig)) {
          audit.fail("map " + std::to_string(k) + " is not right linear over its subalgebra");
          return audit;
        }
      }
    }
    for (const auto& g : inst.c_in_a.sub->generators) {
      auto ig = inst.c_in_a(g);
      if (X.module.act_left(ig, w.tensors[k]) != X.module.act_right(w.tensors[k], ig)) {
        audit.fail("tensor " + std::to_string(k) + " does not centralize C");
        return audit;
      }
    }
  }
  // x⊗y = Σ x γ_i(y) u_i  (right)   or   x⊗y = Σ t_j β_j(x) y  (left)
  std::mutex mu;
  std::atomic<bool> bad{false};
  const long total = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long outer = 0; outer < total; ++outer) {
    if (bad.load()) continue;
    const Index o = static_cast<Index>(outer);
    std::vector<std::pair<Index, T>> raw;
    for (std::size_t k = 0; k < w.maps.size(); ++k) {
      const auto& img = w.maps[k].cols[o];
      auto part = w.side == Side::Right ? X.module.act_left(img, w.tensors[k]) : X.module.act_right(w.tensors[k], img);
      for (auto& t : part.terms) raw.push_back(std::move(t));
    }
    auto partial = collect(std::move(raw));
    for (Index other = 0; other < n; ++other) {
      auto be = unit_vec<T>(other, f);
      SparseVec<T> lhs_v, rhs_v;
      if (w.side == Side::Right) {
        lhs_v = X.simple(other, o);
        rhs_v = X.module.act_left(be, partial);
      } else {
        lhs_v = X.simple(o, other);
        rhs_v = X.module.act_right(partial, be);
      }
      if (lhs_v != rhs_v) {
        std::lock_guard<std::mutex> lock(mu);
        if (!bad.exchange(true)) {
          const auto& x = w.side == Side::Right ? A.labels[other] : A.labels[o];
          const auto& y = w.side == Side::Right ? A.labels[o] : A.labels[other];
          audit.fail("quasibase identity fails at x = " + x + ", y = " + y);
        }
        break;
      }
    }
  }
  return audit;
}

bool group_criterion(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  return normal_closure(k, g).is_subgroup_of(h);
}

template <class T>
QuasibaseWitness<T> group_quasibases(const DepthInstance<T>& inst, const PermGroup& g, const PermGroup& h,
                                          const PermGroup& k) {
  if (!group_criterion(g, h, k)) throw GroupError("group_quasibases: the normal closure of K is not contained in H");
  const FieldSpec& f = inst.field();
  const auto& X = inst.tensor();
  QuasibaseWitness<T> w;
  w.side = Side::Right;
  for (const auto& cell : double_cosets(g, h, k)) {
    SparseMap<T> proj(g.order(), g.order());
    for (std::size_t idx : cell.members) proj.cols[idx] = unit_vec<T>(static_cast<Index>(idx), f);
    w.maps.push_back(std::move(proj));
    auto gi = static_cast<Index>(g.index_of(cell.representative));
    w.tensors.push_back(X.simple(static_cast<Index>(g.inv(gi)), gi));
  }
  return w;
}

template <class T>
SeparabilityResult<T> separability_element(const Embedding<T>& c_in_b, SeparabilityMode mode, const Caps& caps) {
  SeparabilityResult<T> res;
  auto x = tensor_square(c_in_b);
  res.tensor = x;
  const auto& B = *c_in_b.sup;
  if (mode == SeparabilityMode::HSeparable) {
    auto inst = DepthInstance<T>::make(c_in_b, identity_embedding(c_in_b.sup));
    res.holds = rd3_witness(inst, Side::Right, caps).holds();
    return res;
  }
  auto id = identity_embedding(c_in_b.sup);
  Subspace<T> p = centralizer(x->module, id, id);
  std::vector<SparseVec<T>> images;
  for (const auto& e : p.basis) {
    std::vector<std::pair<Index, T>> raw;
    for (const auto& [q, v] : e.terms) {
      auto [i, j] = x->pairs[q];
      for (const auto& [r, w] : B.basis_product(i, j).terms) raw.emplace_back(r, v * w);
    }
    images.push_back(collect(std::move(raw)));
  }
  auto sol = solve_columns(B.field, B.dim, images, B.unit);
  if (!sol) return res;
  res.holds = true;
  res.element = p.element(*sol);
  return res;
}

#define TD_INSTANTIATE(T)                                                                                   \
  template struct DepthInstance<T>;                                                                         \
  template std::shared_ptr<const TensorProduct<T>> tensor_square<T>(const Embedding<T>&);                   \
  template DepthVerdict<T> rd3_witness<T>(const DepthInstance<T>&, Side, const Caps&);                      \
  template DepthVerdict<T> rd3_witness<T>(const Tower<T>&, Side, const Caps&);                              \
  template DepthVerdict<T> rd2_witness<T>(const Embedding<T>&, Side, const Caps&);                          \
  template Audit verify_quasibases<T>(const DepthInstance<T>&, const QuasibaseWitness<T>&);                 \
  template QuasibaseWitness<T> group_quasibases<T>(const DepthInstance<T>&, const PermGroup&, const PermGroup&, \
                                                   const PermGroup&);                                           \
  template SeparabilityResult<T> separability_element<T>(const Embedding<T>&, SeparabilityMode, const Caps&);

TD_INSTANTIATE(Rational)
TD_INSTANTIATE(Fp)

}  // namespace td
