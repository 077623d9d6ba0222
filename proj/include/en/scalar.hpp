#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace en {

struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

// Exact element of Q (modulus 0) or of F_p for an odd prime p <= 2^31.
//
// A rational value combines with an F_p value by reduction mod p, so integer
// literals can be mixed freely with prime-field data. Two different nonzero
// moduli never mix.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Scalar rational(long num, long den);
  static Scalar modular(long long v, std::uint32_t p);
  // Accepts "a", "-a", "a/b"; reduces mod p when p != 0.
  static Scalar parse(std::string_view text, std::uint32_t p = 0);

  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

  // Value for Q, or the residue in [0, p) as an integer rational.
  mpq_class rational_value() const { return p_ ? mpq_class(static_cast<long>(r_)) : q_; }
  std::int64_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar to_field(std::uint32_t p) const;

  bool is_square() const;
  // Exact square root; throws std::domain_error if not a square.
  Scalar sqrt() const;
  // Canonical representative of the class of a nonzero value in k*/(k*)^2:
  // over Q the signed squarefree part of num*den, over F_p either 1 or the
  // least quadratic non-residue.
  Scalar square_class() const;

  std::string str() const;
  std::size_t hash() const;

 private:
  mpq_class q_{0};
  std::int64_t r_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_odd_prime(std::uint64_t p);

// A ground field: Q when p == 0, F_p otherwise.
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint32_t p);
  // "q" or "pNNN".
  static Field parse(std::string_view spec);

  Scalar zero() const { return from(0); }
  Scalar one() const { return from(1); }
  Scalar from(long v) const { return p ? Scalar::modular(v, p) : Scalar(v); }
  Scalar from(const Scalar& v) const { return p ? v.to_field(p) : v; }
  std::string name() const { return p ? "p" + std::to_string(p) : "q"; }
  bool operator==(const Field&) const = default;
};

}  // namespace en

template <>
struct std::hash<en::Scalar> {
  std::size_t operator()(const en::Scalar& s) const { return s.hash(); }
};
