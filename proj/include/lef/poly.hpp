#pragma once

#include <map>
#include <span>
#include <vector>

#include "lef/monomial.hpp"
#include "lef/scalar.hpp"

namespace lef {

// Homogeneous polynomial, stored as monomial -> coefficient with no explicit
// zero coefficients. The degree is part of the value, so the zero polynomial
// of each degree is distinct.
class HomogPoly {
public:
  HomogPoly(unsigned nvars, unsigned degree, const FieldCtx& ctx)
      : nvars_(nvars), degree_(degree), ctx_(ctx) {}

  static HomogPoly term(Monomial m, Scalar c);
  static HomogPoly one(unsigned nvars, const FieldCtx& ctx);
  // coeffs[i] * x_i summed over all variables.
  static HomogPoly linear_form(const std::vector<Scalar>& coeffs);

  unsigned nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  const FieldCtx& ctx() const { return ctx_; }
  bool is_zero() const { return coeffs_.empty(); }

  const std::map<Monomial, Scalar>& terms() const { return coeffs_; }
  Scalar coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Scalar& c);  // accumulates

  HomogPoly operator+(const HomogPoly& o) const;
  HomogPoly operator-(const HomogPoly& o) const;
  HomogPoly operator*(const HomogPoly& o) const;
  HomogPoly scaled(const Scalar& c) const;
  HomogPoly pow(unsigned e) const;

  bool operator==(const HomogPoly& o) const;

  Scalar eval(std::span<const Scalar> point) const;

  // Terms in decreasing graded-lex order, "-" and "^" notation: x^2 - 2*x*y.
  std::string to_string() const;

private:
  unsigned nvars_;
  unsigned degree_;
  FieldCtx ctx_;
  std::map<Monomial, Scalar> coeffs_;
};

// Homogeneous generators of an ideal over one field context. Zero generators
// are dropped at construction so that every stored generator is nonzero.
struct IdealPresentation {
  unsigned nvars;
  FieldCtx ctx;
  std::vector<HomogPoly> generators;

  IdealPresentation(unsigned nvars_, const FieldCtx& ctx_,
                    std::vector<HomogPoly> gens);
};

}  // namespace lef
