#pragma once

#include <array>
#include <span>

#include "lef/poly.hpp"

namespace lef {

// Points of projective 3-space with first coordinate 1 (none at infinity).
struct PointSet {
  std::vector<std::array<Scalar, 4>> points;

  std::string to_string() const;  // one "[1 : a : b : c]" line per point
};

// The monomial almost complete intersection
// (x^{t+1}, y^{t+1}, z^{t+1}, xyz) in three variables.
IdealPresentation ideal_I(unsigned t, const FieldCtx& ctx);

// Whether a*i = -1 in the field for some 1 <= i <= t; such values of a make
// the hyperplane sections below fail to be Artinian.
bool in_N(const Scalar& a, unsigned t);

// Hyperplane section family in three variables:
// (x^{t+1}, prod_i (iax + y), prod_i (iax + z), xyz), i = 0..t.
// Throws NonArtinianSection when a is in N.
IdealPresentation ideal_J(unsigned t, const Scalar& a);

// Two-variable reduction of ideal_J by the linear form bx + cy - z:
// (x^{t+1}, prod_i (iax + y), prod_i ((ia+b)x + cy), xy(bx + cy)), i = 0..t.
IdealPresentation ideal_L(unsigned t, const Scalar& a, const Scalar& b,
                          const Scalar& c);

// Homogenization of the monomial x^alpha to a product of point-vanishing
// factors: prod_j prod_{i<alpha_j} (x_j - tvals[j][i] * x_0), in one more
// variable with x_0 first. tvals[j] needs at least alpha_j values, distinct
// within each variable.
HomogPoly lift_monomial(const Monomial& alpha,
                        std::span<const std::vector<Scalar>> tvals,
                        const FieldCtx& ctx);

// Lifting of ideal_I with t-values 0, 1, ..., t in each variable, in four
// variables w, x, y, z. Defined over any field; the product form is built
// directly, so small characteristic is permitted (the result is then not a
// true lifting, merely the same formulas).
IdealPresentation lifted_I(unsigned t, const FieldCtx& ctx);

// The 3t(t+1) + 1 points [1 : a : b : c], 0 <= a, b, c <= t with at least
// one zero coordinate, cut out by lifted_I when the t-values stay distinct.
// Throws NotTrueLifting when 2 <= char <= t.
PointSet point_set(unsigned t, const FieldCtx& ctx);

// Substitute x_0 <- -a * x_1 in a four-variable ideal and drop x_0. The
// result is checked to be Artinian within the summed generator degrees;
// NonArtinianSection otherwise.
IdealPresentation hyperplane_section(const IdealPresentation& ideal4,
                                     const Scalar& a);

}  // namespace lef
