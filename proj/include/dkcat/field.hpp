#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dkcat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (matrix sizes, ranks, degrees).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Two objects live over different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation needs a finite field (enumeration) but got the rationals.
class UnsupportedField : public Error {
 public:
  using Error::Error;
};

/// Structural data violates a required identity (not a chain map, etc.).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A scalar in reduced form. Over F_p: `num` in [0, p) and `den == 1`.
/// Over Q: lowest terms with `den > 0`.
struct Scalar {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool operator==(const Scalar&) const = default;
};

/// Exact arithmetic over Q or a prime field F_p.
///
/// Rational arithmetic runs on 64-bit numerators and denominators with
/// 128-bit intermediates; a result that does not fit throws
/// std::overflow_error instead of losing precision.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(0); }
  /// Throws std::invalid_argument unless `p` is a prime below 2^31.
  static Field prime(std::int64_t p);
  /// Parses "Q" or "F<p>".
  static Field parse(std::string_view name);

  bool is_prime_field() const { return p_ != 0; }
  std::int64_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const { return {0, 1}; }
  Scalar one() const { return {1, 1}; }
  Scalar from_int(std::int64_t v) const;

  Scalar add(Scalar a, Scalar b) const;
  Scalar sub(Scalar a, Scalar b) const;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar neg(Scalar a) const;
  /// Throws std::domain_error on zero.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  bool is_zero(Scalar a) const { return a.num == 0; }

  /// Decimal form: "n/d" (or "n" when d = 1) over Q, 0..p-1 over F_p.
  std::string format(Scalar a) const;
  /// Accepts any integer or "n/d" string and reduces it into the field.
  Scalar parse_scalar(std::string_view text) const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  Scalar make_rational(__int128 num, __int128 den) const;

  std::int64_t p_ = 0;
};

}  // namespace dkcat
