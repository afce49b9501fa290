#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace td {

using Rational = mpq_class;

bool is_prime(std::uint64_t n);

/// Element of a prime field F_p with p < 2^31. The modulus travels with the
/// value so that matrices over different primes cannot be mixed silently.
struct Fp {
  std::uint32_t v = 0;
  std::uint32_t p = 2;

  Fp() = default;
  Fp(std::int64_t value, std::uint32_t modulus) : p(modulus) {
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    v = static_cast<std::uint32_t>(r);
  }

  Fp inverse() const;

  friend Fp operator+(Fp a, Fp b) {
    std::uint32_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return raw(s, a.p);
  }
  friend Fp operator-(Fp a, Fp b) { return raw(a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p); }
  friend Fp operator-(Fp a) { return raw(a.v == 0 ? 0 : a.p - a.v, a.p); }
  friend Fp operator*(Fp a, Fp b) {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % a.p), a.p);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

 private:
  static Fp raw(std::uint32_t value, std::uint32_t modulus) {
    Fp r;
    r.v = value;
    r.p = modulus;
    return r;
  }
};

/// The base field: Q or F_p.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q" or "F<p>" (e.g. "F7").
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return kind == Kind::Rationals; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return is_rational() ? 0 : p; }
  std::string name() const { return is_rational() ? "Q" : "F" + std::to_string(p); }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && (a.kind == Kind::Rationals || a.p == b.p);
  }
};

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Scalar traits. Every generic routine goes through these so that Rational and
// Fp share one code path.
template <class T>
struct Scalar;

template <>
struct Scalar<Rational> {
  static Rational from_int(const FieldSpec&, std::int64_t k) { return Rational(static_cast<long>(k)); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool is_one(const Rational& x) { return x == 1; }
  /// Heuristic size used for pivot selection (smaller is preferred).
  static std::size_t weight(const Rational& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
  }
  static std::string to_string(const Rational& x) { return x.get_str(); }
  static Rational parse(const FieldSpec&, const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
  }
  static bool compatible(const FieldSpec& f) { return f.is_rational(); }
};

template <>
struct Scalar<Fp> {
  static Fp from_int(const FieldSpec& f, std::int64_t k) { return Fp(k, f.p); }
  static bool is_zero(Fp x) { return x.v == 0; }
  static bool is_one(Fp x) { return x.v == 1; }
  static std::size_t weight(Fp) { return 1; }
  static std::string to_string(Fp x) { return std::to_string(x.v); }
  static Fp parse(const FieldSpec& f, const std::string& s) { return Fp(std::stoll(s), f.p); }
  static bool compatible(const FieldSpec& f) { return !f.is_rational(); }
};

template <class T>
inline T zero(const FieldSpec& f) {
  return Scalar<T>::from_int(f, 0);
}
template <class T>
inline T one(const FieldSpec& f) {
  return Scalar<T>::from_int(f, 1);
}
template <class T>
inline bool is_zero(const T& x) {
  return Scalar<T>::is_zero(x);
}

}  // namespace td
