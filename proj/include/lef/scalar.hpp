#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "lef/errors.hpp"

namespace lef {

// Coefficient field descriptor: the rationals (characteristic 0) or a prime
// field F_p with p < 2^31, so that products of residues fit in 64 bits.
struct FieldCtx {
  std::uint32_t characteristic = 0;

  static FieldCtx rationals() { return FieldCtx{0}; }
  static FieldCtx prime_field(std::uint32_t p);

  bool is_rational() const { return characteristic == 0; }
  bool operator==(const FieldCtx&) const = default;
};

// Exact field element. In characteristic 0 the value is a canonical fraction
// (gcd(|num|, den) = 1, den > 0, courtesy of mpq); in F_p it is the residue
// in [0, p). All arithmetic is exact; there is no floating point anywhere.
class Scalar {
public:
  Scalar() = default;  // 0 in Q

  static Scalar zero(const FieldCtx& ctx) { return from_integer(0, ctx); }
  static Scalar one(const FieldCtx& ctx) { return from_integer(1, ctx); }
  static Scalar from_integer(long long n, const FieldCtx& ctx);
  static Scalar from_mpz(const mpz_class& n, const FieldCtx& ctx);
  static Scalar from_rational(const mpq_class& q);  // characteristic 0

  // Accepts "n" and "n/d" with optional sign. In F_p the value is reduced
  // mod p ("n/d" becomes n * d^{-1}, DivisionByZero if p divides d).
  static Scalar parse(std::string_view text, const FieldCtx& ctx);

  const FieldCtx& ctx() const { return ctx_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;          // DivisionByZero on 0
  Scalar pow(unsigned long e) const;  // 0^0 == 1

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "num/den" with "/den" omitted when den == 1; "r mod p" in prime fields.
  std::string to_string() const;
  // Same, but without the " mod p" suffix; for tables whose header fixes p.
  std::string to_short_string() const;

  const mpq_class& rational() const;  // characteristic 0 only
  std::int64_t residue() const;       // prime fields only

private:
  void check_ctx(const Scalar& o) const {
    if (ctx_ != o.ctx_) throw ContextMismatch();
  }

  FieldCtx ctx_{0};
  mpq_class rat_;
  std::int64_t res_ = 0;
};

}  // namespace lef
