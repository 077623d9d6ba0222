#include "en/scalar.hpp"

#include <atomic>
#include <ostream>

namespace en {

namespace {

std::int64_t mod_reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

std::int64_t mod_pow(std::int64_t b, std::uint64_t e, std::uint32_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::int64_t mod_inverse(std::int64_t a, std::uint32_t p) {
  if (a == 0) throw DivisionByZero("inverse of zero in F_p");
  return mod_pow(a, p - 2, p);
}

std::uint32_t common_modulus(std::uint32_t a, std::uint32_t b) {
  if (a == b || b == 0) return a;
  if (a == 0) return b;
  throw FieldMismatch("scalars from F_" + std::to_string(a) + " and F_" + std::to_string(b));
}

// Tonelli-Shanks; a must be a nonzero quadratic residue.
std::int64_t mod_sqrt(std::int64_t a, std::uint32_t p) {
  if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::int64_t m = s, c = mod_pow(z, q, p), t = mod_pow(a, q, p), r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

mpz_class squarefree_part(mpz_class v) {
  mpz_class out = 1;
  for (mpz_class d = 2; d * d <= v; ++d) {
    unsigned e = 0;
    while (v % d == 0) {
      v /= d;
      ++e;
    }
    if (e % 2) out *= d;
  }
  return out * v;
}

}  // namespace

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::modular(long long v, std::uint32_t p) {
  static std::atomic<std::uint32_t> last_checked{0};
  if (p != last_checked.load(std::memory_order_relaxed)) {
    if (!is_odd_prime(p) || p > (1u << 31))
      throw std::invalid_argument("modulus must be an odd prime <= 2^31, got " + std::to_string(p));
    last_checked.store(p, std::memory_order_relaxed);
  }
  Scalar s;
  s.p_ = p;
  long long r = v % static_cast<long long>(p);
  s.r_ = r < 0 ? r + p : r;
  return s;
}

Scalar Scalar::parse(std::string_view text, std::uint32_t p) {
  std::string t(text);
  if (t.empty()) throw std::invalid_argument("empty scalar literal");
  if (t.find_first_of(".eE") != std::string::npos)
    throw std::invalid_argument("scalar literal must be an integer or fraction: " + t);
  mpq_class q;
  try {
    if (t.front() == '+') t.erase(0, 1);
    q = mpq_class(t, 10);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad scalar literal: " + std::string(text));
  }
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in " + t);
  Scalar s(q);
  return p ? s.to_field(p) : s;
}

Scalar Scalar::to_field(std::uint32_t p) const {
  if (p_ == p) return *this;
  if (p_ != 0) throw FieldMismatch("cannot move F_" + std::to_string(p_) + " value to another field");
  if (p == 0) return *this;
  std::int64_t num = mod_reduce(q_.get_num(), p);
  std::int64_t den = mod_reduce(q_.get_den(), p);
  if (den == 0) throw DivisionByZero("denominator vanishes mod " + std::to_string(p));
  return modular(num * mod_inverse(den, p) % p, p);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_)
    s.r_ = r_ ? p_ - r_ : 0;
  else
    s.q_ = -q_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar s = *this;
  if (p_)
    s.r_ = mod_inverse(r_, p_);
  else
    s.q_ = 1 / q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint32_t p = common_modulus(p_, o.p_);
  if (p == 0) {
    q_ += o.q_;
    return *this;
  }
  if (p_ == 0) *this = to_field(p);
  std::int64_t b = o.p_ ? o.r_ : o.to_field(p).r_;
  r_ = (r_ + b) % p;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint32_t p = common_modulus(p_, o.p_);
  if (p == 0) {
    q_ *= o.q_;
    return *this;
  }
  if (p_ == 0) *this = to_field(p);
  std::int64_t b = o.p_ ? o.r_ : o.to_field(p).r_;
  r_ = r_ * b % p;
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint32_t p = common_modulus(a.p_, b.p_);
  if (p == 0) return a.q_ == b.q_;
  return a.to_field(p).r_ == b.to_field(p).r_;
}

bool Scalar::is_square() const {
  if (is_zero()) return true;
  if (p_) return mod_pow(r_, (p_ - 1) / 2, p_) == 1;
  if (sgn(q_) < 0) return false;
  return mpz_perfect_square_p(q_.get_num_mpz_t()) && mpz_perfect_square_p(q_.get_den_mpz_t());
}

Scalar Scalar::sqrt() const {
  if (!is_square()) throw std::domain_error(str() + " is not a square");
  if (is_zero()) return *this;
  if (p_) return modular(mod_sqrt(r_, p_), p_);
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q_.get_den_mpz_t());
  return Scalar(mpq_class(n, d));
}

Scalar Scalar::square_class() const {
  if (is_zero()) throw std::domain_error("zero has no square class");
  if (p_) {
    if (is_square()) return modular(1, p_);
    std::int64_t z = 2;
    while (mod_pow(z, (p_ - 1) / 2, p_) == 1) ++z;
    return modular(z, p_);
  }
  mpz_class v = abs(q_.get_num()) * q_.get_den();
  mpz_class sf = squarefree_part(v);
  if (sgn(q_) < 0) sf = -sf;
  return Scalar(mpq_class(sf));
}

std::string Scalar::str() const { return p_ ? std::to_string(r_) : q_.get_str(); }

std::size_t Scalar::hash() const {
  if (p_) return std::hash<std::int64_t>{}(r_) ^ (std::size_t{p_} << 1);
  return std::hash<std::string>{}(q_.get_str());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Field Field::prime(std::uint32_t p) {
  if (!is_odd_prime(p) || p > (1u << 31))
    throw std::invalid_argument("field modulus must be an odd prime <= 2^31");
  return Field{p};
}

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.size() > 1 && (spec[0] == 'p' || spec[0] == 'P')) {
    std::uint64_t p = 0;
    for (char ch : spec.substr(1)) {
      if (ch < '0' || ch > '9' || p > (1ull << 32)) throw std::invalid_argument("bad field spec");
      p = p * 10 + static_cast<unsigned>(ch - '0');
    }
    if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
    return prime(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("field must be 'q' or 'p<prime>', got '" + std::string(spec) + "'");
}

}  // namespace en
