#include "dkcat/field.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace dkcat {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not a supported prime");
  }
  return Field(p);
}

Field Field::parse(std::string_view name) {
  if (name == "Q") return rationals();
  if (name.size() >= 2 && name[0] == 'F') {
    return prime(parse_int(name.substr(1)));
  }
  throw std::invalid_argument("field must be 'Q' or 'F<p>', got '" + std::string(name) + "'");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar Field::make_rational(__int128 num, __int128 den) const {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) {
    throw std::overflow_error("rational scalar exceeds 64-bit range");
  }
  return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

Scalar Field::from_int(std::int64_t v) const {
  if (p_ == 0) return {v, 1};
  std::int64_t r = v % p_;
  if (r < 0) r += p_;
  return {r, 1};
}

Scalar Field::add(Scalar a, Scalar b) const {
  if (p_ != 0) {
    std::int64_t s = a.num + b.num;
    return {s >= p_ ? s - p_ : s, 1};
  }
  if (a.den == b.den) return make_rational(static_cast<__int128>(a.num) + b.num, a.den);
  return make_rational(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                       static_cast<__int128>(a.den) * b.den);
}

Scalar Field::neg(Scalar a) const {
  if (p_ != 0) return {a.num == 0 ? 0 : p_ - a.num, 1};
  return make_rational(-static_cast<__int128>(a.num), a.den);
}

Scalar Field::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar Field::mul(Scalar a, Scalar b) const {
  if (p_ != 0) return {static_cast<std::int64_t>((static_cast<__int128>(a.num) * b.num) % p_), 1};
  if (a.num == 0 || b.num == 0) return zero();
  return make_rational(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}

Scalar Field::inv(Scalar a) const {
  if (a.num == 0) throw std::domain_error("inverse of zero");
  if (p_ == 0) return make_rational(a.den, a.num);
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a.num;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

std::string Field::format(Scalar a) const {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

Scalar Field::parse_scalar(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (p_ == 0) return make_rational(num, den);
  return div(from_int(num), from_int(den));
}

}  // namespace dkcat
