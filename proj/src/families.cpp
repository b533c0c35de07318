#include "lef/families.hpp"

#include "lef/combinatorics.hpp"
#include "lef/graded.hpp"

namespace lef {

namespace {

// Sum_i coeffs[i] x^i y^{deg-i} as a bivariate form embedded at positions
// (var, other) of an nvars-variable polynomial.
HomogPoly two_var_form(unsigned nvars, unsigned var_x, unsigned var_y,
                       const std::vector<Scalar>& coeffs, const FieldCtx& ctx) {
  const unsigned deg = static_cast<unsigned>(coeffs.size()) - 1;
  HomogPoly p(nvars, deg, ctx);
  for (unsigned i = 0; i < coeffs.size(); ++i) {
    std::vector<unsigned> e(nvars, 0);
    e[var_x] = i;
    e[var_y] = deg - i;
    p.add_term(Monomial(std::move(e)), coeffs[i]);
  }
  return p;
}

HomogPoly power_gen(unsigned nvars, unsigned var, unsigned deg,
                    const FieldCtx& ctx) {
  std::vector<unsigned> e(nvars, 0);
  e[var] = deg;
  return HomogPoly::term(Monomial(std::move(e)), Scalar::one(ctx));
}

}  // namespace

IdealPresentation ideal_I(unsigned t, const FieldCtx& ctx) {
  if (t == 0) throw InvalidParameter("family parameter t must be positive");
  std::vector<HomogPoly> gens;
  for (unsigned v = 0; v < 3; ++v) gens.push_back(power_gen(3, v, t + 1, ctx));
  gens.push_back(HomogPoly::term(Monomial({1, 1, 1}), Scalar::one(ctx)));
  return IdealPresentation(3, ctx, std::move(gens));
}

bool in_N(const Scalar& a, unsigned t) {
  const FieldCtx& ctx = a.ctx();
  const Scalar minus_one = -Scalar::one(ctx);
  for (unsigned i = 1; i <= t; ++i)
    if (a * Scalar::from_integer(i, ctx) == minus_one) return true;
  return false;
}

IdealPresentation ideal_J(unsigned t, const Scalar& a) {
  if (t == 0) throw InvalidParameter("family parameter t must be positive");
  if (in_N(a, t)) throw NonArtinianSection();
  const FieldCtx& ctx = a.ctx();

  std::vector<LinearFactor> factors;
  for (unsigned i = 0; i <= t; ++i)
    factors.push_back({Scalar::from_integer(i, ctx) * a, Scalar::one(ctx)});
  const auto coeffs = expand_linear_product(factors, ctx);

  std::vector<HomogPoly> gens;
  gens.push_back(power_gen(3, 0, t + 1, ctx));
  gens.push_back(two_var_form(3, 0, 1, coeffs, ctx));
  gens.push_back(two_var_form(3, 0, 2, coeffs, ctx));
  gens.push_back(HomogPoly::term(Monomial({1, 1, 1}), Scalar::one(ctx)));
  return IdealPresentation(3, ctx, std::move(gens));
}

IdealPresentation ideal_L(unsigned t, const Scalar& a, const Scalar& b,
                          const Scalar& c) {
  if (t == 0) throw InvalidParameter("family parameter t must be positive");
  const FieldCtx& ctx = a.ctx();
  if (b.ctx() != ctx || c.ctx() != ctx) throw ContextMismatch();

  std::vector<LinearFactor> fy, fm;
  for (unsigned i = 0; i <= t; ++i) {
    const Scalar ia = Scalar::from_integer(i, ctx) * a;
    fy.push_back({ia, Scalar::one(ctx)});
    fm.push_back({ia + b, c});
  }

  std::vector<HomogPoly> gens;
  gens.push_back(power_gen(2, 0, t + 1, ctx));
  gens.push_back(two_var_form(2, 0, 1, expand_linear_product(fy, ctx), ctx));
  gens.push_back(two_var_form(2, 0, 1, expand_linear_product(fm, ctx), ctx));
  HomogPoly xy = HomogPoly::term(Monomial({1, 1}), Scalar::one(ctx));
  gens.push_back(xy * HomogPoly::linear_form({b, c}));
  return IdealPresentation(2, ctx, std::move(gens));
}

HomogPoly lift_monomial(const Monomial& alpha,
                        std::span<const std::vector<Scalar>> tvals,
                        const FieldCtx& ctx) {
  const unsigned n = alpha.nvars();
  if (tvals.size() < n)
    throw InvalidParameter("lift: a t-value list per variable is required");
  for (unsigned j = 0; j < n; ++j) {
    if (tvals[j].size() < alpha[j])
      throw InvalidParameter("lift: not enough t-values for a variable");
    for (unsigned i = 0; i < alpha[j]; ++i) {
      if (tvals[j][i].ctx() != ctx) throw ContextMismatch();
      for (unsigned i2 = i + 1; i2 < alpha[j]; ++i2)
        if (tvals[j][i] == tvals[j][i2])
          throw InvalidParameter("lift: t-values repeat within a variable");
    }
  }

  HomogPoly p = HomogPoly::one(n + 1, ctx);
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < alpha[j]; ++i) {
      std::vector<Scalar> coeffs(n + 1, Scalar::zero(ctx));
      coeffs[0] = -tvals[j][i];
      coeffs[j + 1] = Scalar::one(ctx);
      p = p * HomogPoly::linear_form(coeffs);
    }
  }
  return p;
}

IdealPresentation lifted_I(unsigned t, const FieldCtx& ctx) {
  if (t == 0) throw InvalidParameter("family parameter t must be positive");
  std::vector<HomogPoly> gens;
  for (unsigned v = 1; v <= 3; ++v) {
    HomogPoly g = HomogPoly::one(4, ctx);
    for (unsigned i = 0; i <= t; ++i) {
      std::vector<Scalar> coeffs(4, Scalar::zero(ctx));
      coeffs[0] = Scalar::from_integer(-(long long)i, ctx);
      coeffs[v] = Scalar::one(ctx);
      g = g * HomogPoly::linear_form(coeffs);
    }
    gens.push_back(std::move(g));
  }
  gens.push_back(HomogPoly::term(Monomial({0, 1, 1, 1}), Scalar::one(ctx)));
  return IdealPresentation(4, ctx, std::move(gens));
}

PointSet point_set(unsigned t, const FieldCtx& ctx) {
  if (t == 0) throw InvalidParameter("family parameter t must be positive");
  if (!ctx.is_rational() && ctx.characteristic <= t) throw NotTrueLifting();
  PointSet ps;
  for (unsigned a = 0; a <= t; ++a)
    for (unsigned b = 0; b <= t; ++b)
      for (unsigned c = 0; c <= t; ++c) {
        if (a != 0 && b != 0 && c != 0) continue;
        ps.points.push_back({Scalar::one(ctx), Scalar::from_integer(a, ctx),
                             Scalar::from_integer(b, ctx),
                             Scalar::from_integer(c, ctx)});
      }
  return ps;
}

IdealPresentation hyperplane_section(const IdealPresentation& ideal4,
                                     const Scalar& a) {
  if (ideal4.nvars != 4)
    throw InvalidParameter("hyperplane section expects four variables");
  if (a.ctx() != ideal4.ctx) throw ContextMismatch();

  unsigned degree_bound = 0;
  std::vector<HomogPoly> gens;
  for (const auto& g : ideal4.generators) {
    degree_bound += g.degree();
    HomogPoly s(3, g.degree(), ideal4.ctx);
    for (const auto& [m, c] : g.terms()) {
      const Scalar coeff = c * (-a).pow(m[0]);
      s.add_term(Monomial({m[0] + m[1], m[2], m[3]}), coeff);
    }
    gens.push_back(std::move(s));
  }
  IdealPresentation section(3, ideal4.ctx, std::move(gens));

  // A section that misses a power of some variable is never Artinian; if the
  // Hilbert function has not hit zero by the summed generator degrees it
  // never will.
  bool artinian = false;
  for (unsigned d = 0; d <= degree_bound; ++d) {
    if (hilbert_function(section, d) == 0) {
      artinian = true;
      break;
    }
  }
  if (!artinian) throw NonArtinianSection();
  return section;
}

std::string PointSet::to_string() const {
  std::string s;
  for (const auto& pt : points) {
    s += "[" + pt[0].to_short_string();
    for (int i = 1; i < 4; ++i) s += " : " + pt[i].to_short_string();
    s += "]\n";
  }
  return s;
}

}  // namespace lef
