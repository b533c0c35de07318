#include "lef/combinatorics.hpp"

#include <mutex>

namespace lef {

StirlingTable::StirlingTable(unsigned max_n) {
  rows_.push_back({mpz_class(1)});  // s(1, 1) = 1
  if (max_n > 1) grow(max_n);
}

void StirlingTable::grow(unsigned n) {
  std::unique_lock lock(mu_);
  while (rows_.size() < n) {
    const unsigned m = static_cast<unsigned>(rows_.size());  // building row m+1
    const auto& prev = rows_.back();
    std::vector<mpz_class> row(m + 1);
    for (unsigned k = 1; k <= m + 1; ++k) {
      // s(m+1, k) = s(m, k-1) + m * s(m, k)
      mpz_class v = (k >= 2 && k - 2 < prev.size()) ? prev[k - 2] : mpz_class(0);
      if (k - 1 < prev.size()) v += m * prev[k - 1];
      row[k - 1] = v;
    }
    rows_.push_back(std::move(row));
  }
}

mpz_class StirlingTable::at(unsigned n, long long k) {
  if (n < 1) throw InvalidParameter("stirling: n must be positive");
  if (k < 1 || k > n) return 0;
  {
    std::shared_lock lock(mu_);
    if (n <= rows_.size()) return rows_[n - 1][static_cast<size_t>(k) - 1];
  }
  grow(n);
  std::shared_lock lock(mu_);
  return rows_[n - 1][static_cast<size_t>(k) - 1];
}

unsigned StirlingTable::max_n() const {
  std::shared_lock lock(mu_);
  return static_cast<unsigned>(rows_.size());
}

mpz_class stirling_unsigned(unsigned n, long long k) {
  static StirlingTable table(32);
  return table.at(n, k);
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<Scalar> expand_linear_product(std::span<const LinearFactor> factors,
                                          const FieldCtx& ctx) {
  std::vector<Scalar> coeffs{Scalar::one(ctx)};
  for (const auto& f : factors) {
    if (f.slope.ctx() != ctx || f.intercept.ctx() != ctx)
      throw ContextMismatch();
    std::vector<Scalar> next(coeffs.size() + 1, Scalar::zero(ctx));
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i] += coeffs[i] * f.intercept;
      next[i + 1] += coeffs[i] * f.slope;
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

Scalar d_subset_sum(unsigned n, unsigned k, const Scalar& a, const Scalar& b) {
  if (a.ctx() != b.ctx()) throw ContextMismatch();
  if (k > n)
    throw IndexOutOfRange("subset-sum coefficient: k exceeds the multiset size");
  const FieldCtx& ctx = a.ctx();
  std::vector<Scalar> e(k + 1, Scalar::zero(ctx));
  e[0] = Scalar::one(ctx);
  for (unsigned i = 0; i < n; ++i) {
    const Scalar v = Scalar::from_integer(i, ctx) * a + b;
    for (unsigned j = std::min(k, i + 1); j >= 1; --j) e[j] += v * e[j - 1];
  }
  return e[k];
}

}  // namespace lef
