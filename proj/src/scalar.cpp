#include "lef/scalar.hpp"

#include <cctype>

namespace lef {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Inverse of a mod p for a in (0, p), extended Euclid.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  // old_r == gcd(a, p) == 1 since p is prime and 0 < a < p
  return old_s >= 0 ? old_s : old_s + p;
}

// Strictly [+-]?[0-9]+ and nonempty.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

FieldCtx FieldCtx::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw InvalidParameter("characteristic must be a prime below 2^31");
  return FieldCtx{p};
}

Scalar Scalar::from_integer(long long n, const FieldCtx& ctx) {
  Scalar s;
  s.ctx_ = ctx;
  if (ctx.is_rational()) {
    s.rat_ = mpq_class(mpz_class(static_cast<long>(n)));
  } else {
    const std::int64_t p = ctx.characteristic;
    s.res_ = ((n % p) + p) % p;
  }
  return s;
}

Scalar Scalar::from_mpz(const mpz_class& n, const FieldCtx& ctx) {
  Scalar s;
  s.ctx_ = ctx;
  if (ctx.is_rational()) {
    s.rat_ = mpq_class(n);
  } else {
    s.res_ = static_cast<std::int64_t>(
        mpz_fdiv_ui(n.get_mpz_t(), ctx.characteristic));
  }
  return s;
}

Scalar Scalar::from_rational(const mpq_class& q) {
  Scalar s;
  s.ctx_ = FieldCtx::rationals();
  s.rat_ = q;
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::parse(std::string_view text, const FieldCtx& ctx) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw InvalidParameter("malformed scalar '" + std::string(text) + "'");

  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw DivisionByZero();
  if (ctx.is_rational()) {
    mpq_class q(n, d);
    q.canonicalize();
    return from_rational(q);
  }
  return from_mpz(n, ctx) * from_mpz(d, ctx).inverse();
}

bool Scalar::is_zero() const {
  return ctx_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return ctx_.is_rational() ? rat_ == 1 : res_ == 1 % ctx_.characteristic;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (ctx_.is_rational())
    r.rat_ = -rat_;
  else if (res_ != 0)
    r.res_ = ctx_.characteristic - res_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar r = *this;
  if (ctx_.is_rational())
    r.rat_ = 1 / rat_;
  else
    r.res_ = mod_inverse(res_, ctx_.characteristic);
  return r;
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar base = *this, acc = Scalar::one(ctx_);
  while (e != 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_ctx(o);
  if (ctx_.is_rational())
    rat_ += o.rat_;
  else
    res_ = (res_ + o.res_) % ctx_.characteristic;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_ctx(o);
  if (ctx_.is_rational()) {
    rat_ -= o.rat_;
  } else {
    res_ -= o.res_;
    if (res_ < 0) res_ += ctx_.characteristic;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_ctx(o);
  if (ctx_.is_rational())
    rat_ *= o.rat_;
  else
    res_ = (res_ * o.res_) % ctx_.characteristic;  // p < 2^31 keeps this exact
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  check_ctx(o);
  return ctx_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::to_string() const {
  if (ctx_.is_rational()) return rat_.get_str();
  return std::to_string(res_) + " mod " + std::to_string(ctx_.characteristic);
}

std::string Scalar::to_short_string() const {
  return ctx_.is_rational() ? rat_.get_str() : std::to_string(res_);
}

const mpq_class& Scalar::rational() const {
  if (!ctx_.is_rational()) throw ContextMismatch();
  return rat_;
}

std::int64_t Scalar::residue() const {
  if (ctx_.is_rational()) throw ContextMismatch();
  return res_;
}

}  // namespace lef
