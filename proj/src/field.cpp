#include "towerdepth/field.hpp"

#include <charconv>

namespace td {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Fp Fp::inverse() const {
  if (v == 0) throw std::domain_error("division by zero in F_" + std::to_string(p));
  // extended Euclid on (v, p)
  std::int64_t a = v, b = p, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, p);
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31)) throw std::invalid_argument("prime modulus must be below 2^31");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  FieldSpec f;
  f.kind = Kind::PrimeField;
  f.p = static_cast<std::uint32_t>(p);
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  if (text == "Q") return rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    std::uint64_t p = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q or F<p>)");
}

}  // namespace td
