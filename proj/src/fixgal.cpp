#include <cmath>
#include <numeric>

#include "galois_common.hpp"
#include "towerdepth/matrix.hpp"

namespace td {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients of x^0, x^1, ...

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo the monic polynomial m
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - lead * m[i] % p) % p);
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  trim(c);
  return c;
}

// monic polynomial of degree d numbered by k: digit i of k in base p is the coefficient of x^i
Poly monic(std::uint64_t k, int d, std::uint32_t p) {
  Poly m(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    m[i] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  m[d] = 1;
  return m;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= n; ++d)
    for (std::uint64_t k = 0; k < ipow(p, d); ++k)
      if (poly_mod(f, monic(k, d, p), p).empty()) return false;
  return true;
}

SparseVec<Fp> to_vec(const Poly& a, std::uint32_t p) {
  SparseVec<Fp> v;
  for (std::size_t i = 0; i < a.size(); ++i) v.push(static_cast<Index>(i), Fp(a[i], p));
  return v;
}

Poly x_power(std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1}, base = poly_mod({0, 1}, m, p);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

SparseMap<Fp> power(const SparseMap<Fp>& m, int k, const FieldSpec& f) {
  auto r = identity_map<Fp>(m.ncols(), one<Fp>(f));
  for (int i = 0; i < k; ++i) r = m.compose(r);
  return r;
}

ExactMatrix<Fp> dense(const SparseMap<Fp>& m, const FieldSpec& f) {
  ExactMatrix<Fp> d(f, m.rows, m.ncols());
  for (std::size_t c = 0; c < m.ncols(); ++c)
    for (const auto& [r, x] : m.cols[c].terms) d(r, c) = x;
  return d;
}

SparseMap<Fp> sparse(const ExactMatrix<Fp>& d) {
  SparseMap<Fp> m(d.rows, d.cols);
  for (std::size_t c = 0; c < d.cols; ++c)
    for (std::size_t r = 0; r < d.rows; ++r) m.cols[c].push(static_cast<Index>(r), d(r, c));
  return m;
}

// Adjoint for the trace form ⟨x, y⟩ = Tr(xy): the candidate antipode on End(E_K).
Audit antipode_audit(const FiniteField& e, const std::vector<IntermediateField>& fields) {
  Audit audit;
  const auto& E = *e.algebra;
  const FieldSpec f = E.field;
  const std::size_t n = E.dim;
  auto trace = [&](const SparseVec<Fp>& y) {
    auto m = E.left_mult(y);
    Fp t = zero<Fp>(f);
    for (Index i = 0; i < n; ++i) t += m.cols[i].at(i, zero<Fp>(f));
    return t;
  };
  ExactMatrix<Fp> gram(f, n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) gram(i, j) = trace(E.basis_product(i, j));
  ExactMatrix<Fp> gram_inv(f, n, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Fp> rhs(n, zero<Fp>(f));
    rhs[c] = one<Fp>(f);
    auto col = solve(gram, rhs);
    if (!col) {
      audit.fail("trace form is degenerate");
      return audit;
    }
    for (std::size_t r = 0; r < n; ++r) gram_inv(r, c) = (*col)[r];
  }
  auto antipode = [&](const SparseMap<Fp>& m) { return sparse(gram_inv * dense(m, f).transpose() * gram); };
  const auto& full = fields.front().gal;
  for (const auto& x : full.maps) {
    if (antipode(antipode(x)) != x) audit.fail("S∘S != id");
    for (const auto& y : full.maps)
      if (antipode(x.compose(y)) != antipode(y).compose(antipode(x))) audit.fail("S is not anti-multiplicative");
  }
  for (Index i = 0; i < n; ++i)
    if (antipode(E.left_mult(E.basis(i))) != E.left_mult(E.basis(i))) audit.fail("S(λ_a) != λ_a");
  if (antipode(e.frobenius).compose(e.frobenius) != identity_map<Fp>(n, one<Fp>(f)))
    audit.fail("S(φ) != φ^-1");
  for (const auto& fld : fields)
    for (const auto& x : fld.gal.maps)
      if (!fld.gal.contains(antipode(x))) audit.fail("S does not preserve Gal(F)");
  return audit;
}

}  // namespace

FiniteField finite_field(std::uint32_t p, int n, std::size_t cap) {
  if (!is_prime(p)) throw std::invalid_argument("finite_field: " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("finite_field: degree must be positive");
  if (static_cast<double>(n) * std::log2(static_cast<double>(p)) > 62 || ipow(p, n) > cap)
    throw std::invalid_argument("finite_field: p^n exceeds the cap " + std::to_string(cap));
  const FieldSpec f = FieldSpec::prime(p);
  FiniteField e;
  e.p = p;
  e.n = n;
  for (std::uint64_t k = 0;; ++k) {
    auto m = monic(k, n, p);
    if (irreducible(m, p)) {
      e.modulus = m;
      break;
    }
  }
  FinDimAlgebra<Fp> a;
  a.field = f;
  a.dim = static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i) a.labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  a.table.resize(a.dim * a.dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.table[i * n + j] = to_vec(x_power(i + j, e.modulus, p), p);
  a.unit = SparseVec<Fp>::unit(0, one<Fp>(f));
  if (n > 1) a.generators.push_back(SparseVec<Fp>::unit(1, one<Fp>(f)));
  a.name = "F" + std::to_string(p) + "^" + std::to_string(n);
  e.algebra = make_algebra(std::move(a));
  e.frobenius = SparseMap<Fp>(n, n);
  for (int i = 0; i < n; ++i) e.frobenius.cols[i] = to_vec(x_power(static_cast<std::uint64_t>(i) * p, e.modulus, p), p);
  return e;
}

Subspace<Fp> fix_of(const FiniteField& e, const MapSubspace<Fp>& w) { return detail::fixed_points(*e.algebra, w.maps); }

MapSubspace<Fp> gal_of(const FiniteField& e, const Embedding<Fp>& f) {
  auto reg = regular_bimodule(e.algebra);
  auto m = restrict_bimodule(reg, scalar_embedding(e.algebra), f);
  return map_subspace(e.algebra->field, e.algebra->dim, bimodule_hom(m, m));
}

FieldCorrespondence field_fix_gal(std::uint32_t p, int n, bool antipode) {
  FieldCorrespondence fc;
  fc.e = finite_field(p, n);
  const auto& e = fc.e;
  const auto& E = *e.algebra;
  const FieldSpec f = E.field;
  auto id = identity_map<Fp>(E.dim, one<Fp>(f));
  auto fixed_by_power = [&](int d) {
    auto m = power(e.frobenius, d, f);
    std::vector<SparseVec<Fp>> eqs;
    for (Index i = 0; i < E.dim; ++i) m.cols[i] = m.cols[i] - id.cols[i];
    for (auto& row : m.rows_view())
      if (!row.empty()) eqs.push_back(std::move(row));
    return kernel_of(f, E.dim, eqs);
  };
  for (int d : divisors(n)) {
    IntermediateField F;
    F.d = d;
    F.field = fixed_by_power(d);
    F.embedding = subalgebra(e.algebra, F.field, "F" + std::to_string(p) + "^" + std::to_string(d));
    F.gal = gal_of(e, F.embedding);
    F.fix_of_gal = fix_of(e, F.gal);
    F.gal_of_fix = gal_of(e, subalgebra(e.algebra, F.fix_of_gal, "Fix"));
    const std::string tag = "d=" + std::to_string(d) + ": ";
    if (F.field.dim() != static_cast<std::size_t>(d)) fc.round_trips.fail(tag + "fixed field has the wrong dimension");
    if (!detail::same_subspace(F.fix_of_gal, F.field)) fc.round_trips.fail(tag + "Fix(Gal(F)) != F");
    if (!detail::same_subspace(F.gal_of_fix.flat, F.gal.flat)) fc.round_trips.fail(tag + "Gal(Fix(W)) != W");
    for (Index i = 0; i < E.dim; ++i)
      if (!F.gal.contains(E.left_mult(E.basis(i)))) fc.gal_shape.fail(tag + "λ(E) is not inside Gal(F)");
    const std::size_t k = static_cast<std::size_t>(n / d);
    if (F.gal.dim() != k * k * static_cast<std::size_t>(d)) fc.gal_shape.fail(tag + "dim Gal(F) != (n/d)^2 d");
    fc.fields.push_back(std::move(F));
  }
  // every power of Frobenius fixes one of the subfields above, and each is reached
  std::vector<Subspace<Fp>> distinct;
  for (int m = 1; m <= n; ++m) {
    auto s = fixed_by_power(m);
    bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const auto& x) { return detail::same_subspace(x, s); });
    if (!seen) distinct.push_back(std::move(s));
  }
  fc.counts_match = distinct.size() == fc.fields.size();
  if (antipode) fc.antipode = antipode_audit(e, fc.fields);
  return fc;
}

Tower<Fp> field_tower(const FiniteField& e, int d) {
  if (d < 1 || e.n % d != 0) throw std::invalid_argument("field_tower: d must divide n");
  const FieldSpec f = e.algebra->field;
  auto m = power(e.frobenius, d, f);
  auto id = identity_map<Fp>(e.algebra->dim, one<Fp>(f));
  std::vector<SparseVec<Fp>> eqs;
  for (Index i = 0; i < e.algebra->dim; ++i) m.cols[i] = m.cols[i] - id.cols[i];
  for (auto& row : m.rows_view())
    if (!row.empty()) eqs.push_back(std::move(row));
  auto mid = subalgebra(e.algebra, kernel_of(f, e.algebra->dim, eqs), "F" + std::to_string(e.p) + "^" + std::to_string(d));
  return make_tower(scalar_embedding(mid.sub), mid);
}

}  // namespace td
