#include <algorithm>
#include <array>
#include <random>

#include "doctest.h"
#include "towerdepth/echelon.hpp"
#include "towerdepth/matrix.hpp"

using namespace td;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF7 = FieldSpec::prime(7);

using P3 = std::array<int, 3>;

// All of S3 as image tuples, enumerated independently of the groups module.
std::vector<P3> s3_elements() {
  std::vector<P3> out;
  P3 p{0, 1, 2};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

P3 compose(const P3& a, const P3& b) {  // (a b)(x) = a(b(x))
  return {a[b[0]], a[b[1]], a[b[2]]};
}

std::size_t index_of(const std::vector<P3>& els, const P3& p) {
  return static_cast<std::size_t>(std::find(els.begin(), els.end(), p) - els.begin());
}

template <class T>
ExactMatrix<T> random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937& rng, int density = 2) {
  ExactMatrix<T> m(f, r, c);
  std::uniform_int_distribution<int> val(-3, 3), keep(0, density);
  for (auto& e : m.entries) {
    if (keep(rng) == 0) e = Scalar<T>::from_int(f, val(rng));
  }
  return m;
}

template <class T>
std::size_t sparse_rank(const ExactMatrix<T>& m) {
  Echelon<T> ech(m.field, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    SparseVec<T> row;
    for (std::size_t j = 0; j < m.cols; ++j) row.push(static_cast<Index>(j), m(i, j));
    ech.insert(row);
  }
  return ech.rank();
}

}  // namespace

TEST_CASE("rank of trivial shapes") {
  CHECK(rank(ExactMatrix<Rational>(kQ, 0, 0)) == 0);
  for (std::size_t n : {1u, 4u, 9u}) {
    CHECK(rank(ExactMatrix<Rational>::identity(kQ, n)) == n);
    CHECK(rank(ExactMatrix<Fp>::identity(kF7, n)) == n);
  }
}

TEST_CASE("left regular representation of a transposition has full rank") {
  auto els = s3_elements();
  P3 t{1, 0, 2};
  ExactMatrix<Rational> m(kQ, 6, 6);
  for (std::size_t j = 0; j < 6; ++j) m(index_of(els, compose(t, els[j])), j) = 1;
  CHECK(rank(m) == 6);
  // The oracle: a permutation matrix squared to the identity here.
  CHECK(m * m == ExactMatrix<Rational>::identity(kQ, 6));
}

TEST_CASE("solve on identity and zero matrices") {
  std::vector<Rational> b{1, Rational(2, 3), -4};
  auto x = solve(ExactMatrix<Rational>::identity(kQ, 3), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK_FALSE(solve(ExactMatrix<Rational>(kQ, 3, 3), b));
}

TEST_CASE("solution space of the centre equations of Q[S3] has dimension 3") {
  // Unknown z = sum z_k g_k; equations g z = z g for all g, written out by brute force.
  auto els = s3_elements();
  std::vector<std::vector<Rational>> eqs;
  for (const auto& g : els) {
    for (std::size_t out = 0; out < 6; ++out) {
      std::vector<Rational> row(6, 0);
      for (std::size_t k = 0; k < 6; ++k) {
        if (index_of(els, compose(g, els[k])) == out) row[k] += 1;
        if (index_of(els, compose(els[k], g)) == out) row[k] -= 1;
      }
      eqs.push_back(row);
    }
  }
  ExactMatrix<Rational> m(kQ, eqs.size(), 6);
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = eqs[i][j];
  auto ker = kernel(m);
  CHECK(ker.size() == 3);
  for (const auto& v : ker) CHECK(m.apply(v) == std::vector<Rational>(m.rows, 0));
  CHECK(*solve(m, std::vector<Rational>(m.rows, 0)) == std::vector<Rational>(6, 0));
}

TEST_CASE("span membership basics") {
  ExactMatrix<Rational> e11(kQ, 2, 2), e22(kQ, 2, 2);
  e11(0, 0) = 1;
  e22(1, 1) = 1;
  auto c = span_membership(ExactMatrix<Rational>::identity(kQ, 2), {e11, e22});
  REQUIRE(c);
  CHECK(*c == std::vector<Rational>{1, 1});
  auto unit = span_membership(e11, {e11, e22});
  CHECK(*unit == std::vector<Rational>{1, 0});
  auto zero_c = span_membership(ExactMatrix<Rational>(kQ, 2, 2), {e11, e22});
  CHECK(*zero_c == std::vector<Rational>{0, 0});
  ExactMatrix<Rational> off(kQ, 2, 2);
  off(0, 1) = 1;
  CHECK_FALSE(span_membership(off, {e11, e22}));
}

TEST_CASE("field mismatch is reported") {
  auto m = ExactMatrix<Fp>::identity(kF7, 2);
  std::vector<Fp> rhs{Fp(1, 5), Fp(2, 5)};
  CHECK_THROWS_AS(solve(m, rhs), FieldMismatch);
  CHECK_THROWS_AS(solve(m, std::vector<Fp>{Fp(1, 7)}), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime(9), std::invalid_argument);
  CHECK(FieldSpec::parse("F101").p == 101);
  CHECK(FieldSpec::parse("Q").is_rational());
}

TEST_CASE_TEMPLATE("randomized linear algebra properties", T, Rational, Fp) {
  const FieldSpec f = std::is_same_v<T, Rational> ? kQ : FieldSpec::prime(101);
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
    auto m = random_matrix<T>(f, r, c, rng);
    std::size_t rk = rank(m);
    CHECK(rk == rank(m.transpose()));
    CHECK(rk <= std::min(r, c));
    CHECK(rk == sparse_rank(m));
    auto par = rref_parallel(m), ser = rref_serial(m);
    CHECK(par.reduced == ser.reduced);
    CHECK(par.pivot_cols == ser.pivot_cols);

    // solve: any returned solution reproduces rhs exactly
    std::vector<T> x0(c, zero<T>(f));
    for (auto& v : x0) v = Scalar<T>::from_int(f, static_cast<int>(rng() % 5) - 2);
    auto b = m.apply(x0);
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(m.apply(*x) == b);

    // span membership vs rank of the augmented column set
    std::vector<ExactMatrix<T>> gens;
    std::size_t ng = rng() % 4;
    for (std::size_t k = 0; k < ng; ++k) gens.push_back(random_matrix<T>(f, 2, 2, rng, 1));
    auto target = random_matrix<T>(f, 2, 2, rng, 1);
    ExactMatrix<T> g_cols(f, 4, ng), aug(f, 4, ng + 1);
    for (std::size_t k = 0; k < ng; ++k)
      for (std::size_t e = 0; e < 4; ++e) g_cols(e, k) = aug(e, k) = gens[k].entries[e];
    for (std::size_t e = 0; e < 4; ++e) aug(e, ng) = target.entries[e];
    auto coeffs = span_membership(target, gens);
    CHECK(coeffs.has_value() == (rank(aug) == rank(g_cols)));
    if (coeffs) {
      ExactMatrix<T> sum(f, 2, 2);
      for (std::size_t k = 0; k < ng; ++k)
        for (std::size_t e = 0; e < 4; ++e) sum.entries[e] += (*coeffs)[k] * gens[k].entries[e];
      CHECK(sum == target);
    }
  }
}

TEST_CASE_TEMPLATE("sparse kernel and column solving agree with dense", T, Rational, Fp) {
  const FieldSpec f = std::is_same_v<T, Rational> ? kQ : FieldSpec::prime(101);
  std::mt19937 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    auto m = random_matrix<T>(f, r, c, rng);
    std::vector<SparseVec<T>> rows(r), cols(c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) rows[i].push(static_cast<Index>(j), m(i, j));
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t i = 0; i < r; ++i) cols[j].push(static_cast<Index>(i), m(i, j));
    auto ker = kernel_of<T>(f, c, rows);
    CHECK(ker.dim() == kernel(m).size());
    for (const auto& v : ker.basis) {
      for (const auto& row : rows) {
        T s = zero<T>(f);
        for (const auto& [j, x] : row.terms) s += x * v.at(j, zero<T>(f));
        CHECK(Scalar<T>::is_zero(s));
      }
    }
    auto span = span_of<T>(f, r, cols);
    CHECK(span.dim() == rank(m));
    for (const auto& col : cols) CHECK(span.contains(col));

    SparseVec<T> target;
    for (std::size_t i = 0; i < r; ++i) target.push(static_cast<Index>(i), Scalar<T>::from_int(f, static_cast<int>(rng() % 3) - 1));
    auto sol = solve_columns<T>(f, r, cols, target);
    std::vector<T> dense_t(r, zero<T>(f));
    for (const auto& [i, x] : target.terms) dense_t[i] = x;
    CHECK(sol.has_value() == solve(m, dense_t).has_value());
    if (sol) {
      std::vector<T> xs(c, zero<T>(f));
      for (const auto& [j, x] : sol->terms) xs[j] = x;
      CHECK(m.apply(xs) == dense_t);
    }
  }
}
