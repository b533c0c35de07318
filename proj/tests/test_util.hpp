#pragma once

#include <random>
#include <vector>

#include "lef/graded.hpp"
#include "lef/linalg.hpp"

namespace leftest {

inline lef::Scalar random_scalar(std::mt19937& rng, const lef::FieldCtx& ctx) {
  if (ctx.is_rational()) {
    std::uniform_int_distribution<long long> num(-20, 20);
    std::uniform_int_distribution<long long> den(1, 12);
    return lef::Scalar::from_integer(num(rng), ctx) /
           lef::Scalar::from_integer(den(rng), ctx);
  }
  std::uniform_int_distribution<long long> res(0, ctx.characteristic - 1);
  return lef::Scalar::from_integer(res(rng), ctx);
}

inline lef::Scalar random_nonzero(std::mt19937& rng, const lef::FieldCtx& ctx) {
  for (;;) {
    lef::Scalar s = random_scalar(rng, ctx);
    if (!s.is_zero()) return s;
  }
}

inline lef::DenseMatrix random_matrix(std::mt19937& rng, size_t rows,
                                      size_t cols, const lef::FieldCtx& ctx) {
  lef::DenseMatrix m(rows, cols, ctx);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) m.set(r, c, random_scalar(rng, ctx));
  return m;
}

// Cofactor expansion along the first row; exponential, the determinant
// oracle for tiny matrices.
inline lef::Scalar cofactor_det(const lef::DenseMatrix& m) {
  const size_t n = m.rows();
  if (n == 0) return lef::Scalar::one(m.ctx());
  if (n == 1) return m.at(0, 0);
  lef::Scalar acc = lef::Scalar::zero(m.ctx());
  for (size_t c = 0; c < n; ++c) {
    if (m.at(0, c).is_zero()) continue;
    lef::DenseMatrix minor(n - 1, n - 1, m.ctx());
    for (size_t i = 1; i < n; ++i) {
      size_t jj = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor.set(i - 1, jj++, m.at(i, j));
      }
    }
    lef::Scalar term = m.at(0, c) * cofactor_det(minor);
    if (c % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

// Sum over all k-subsets of {i*a + b : 0 <= i < n} of the subset product,
// by explicit bitmask enumeration. Oracle for d_subset_sum, n <= 20.
inline lef::Scalar subset_sum_bruteforce(unsigned n, unsigned k,
                                         const lef::Scalar& a,
                                         const lef::Scalar& b) {
  const lef::FieldCtx& ctx = a.ctx();
  std::vector<lef::Scalar> v;
  for (unsigned i = 0; i < n; ++i)
    v.push_back(lef::Scalar::from_integer(i, ctx) * a + b);
  lef::Scalar acc = lef::Scalar::zero(ctx);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountl(mask)) != k) continue;
    lef::Scalar prod = lef::Scalar::one(ctx);
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1ul << i)) prod *= v[i];
    acc += prod;
  }
  return acc;
}

// Rank of ell^k : [A]_d -> [A]_{d+k} for a quotient by a MONOMIAL ideal,
// computed on the standard monomial bases: reduction is just dropping the
// monomials that lie in the ideal. Independent of the span-difference route
// and of the parallel kernels (serial rank underneath).
inline size_t monomial_quotient_map_rank(const lef::IdealPresentation& ideal,
                                         const lef::HomogPoly& ell, unsigned k,
                                         unsigned d) {
  auto standard = [&ideal](const lef::Monomial& m) {
    for (const auto& g : ideal.generators)
      if (g.terms().begin()->first.divides(m)) return false;
    return true;
  };
  std::vector<lef::Monomial> source, target;
  for (const auto& m : lef::monomial_basis(ideal.nvars, d))
    if (standard(m)) source.push_back(m);
  for (const auto& m : lef::monomial_basis(ideal.nvars, d + k))
    if (standard(m)) target.push_back(m);
  if (source.empty() || target.empty()) return 0;

  const lef::HomogPoly lk = ell.pow(k);
  lef::DenseMatrix m(source.size(), target.size(), ideal.ctx);
  for (size_t r = 0; r < source.size(); ++r) {
    const lef::HomogPoly image =
        lk * lef::HomogPoly::term(source[r], lef::Scalar::one(ideal.ctx));
    for (size_t c = 0; c < target.size(); ++c)
      m.set(r, c, image.coeff(target[c]));
  }
  return lef::serial::rank(m);
}

}  // namespace leftest
