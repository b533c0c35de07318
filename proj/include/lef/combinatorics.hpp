#pragma once

#include <gmpxx.h>

#include <shared_mutex>
#include <span>
#include <vector>

#include "lef/scalar.hpp"

namespace lef {

// Triangular table of unsigned Stirling numbers of the first kind, grown on
// demand and safe for concurrent readers. Entries are exact integers and do
// not depend on any field context.
class StirlingTable {
public:
  explicit StirlingTable(unsigned max_n = 1);

  // s(n, k); 0 whenever k < 1 or k > n. Grows the table as needed.
  mpz_class at(unsigned n, long long k);

  unsigned max_n() const;

private:
  void grow(unsigned n);

  mutable std::shared_mutex mu_;
  std::vector<std::vector<mpz_class>> rows_;  // rows_[n-1][k-1] = s(n, k)
};

// Shared process-wide table.
mpz_class stirling_unsigned(unsigned n, long long k);

mpz_class binomial(unsigned long n, unsigned long k);

// One factor slope*x + intercept of a product of linear univariate forms.
struct LinearFactor {
  Scalar slope;
  Scalar intercept;
};

// Coefficients of prod_i (slope_i x + intercept_i), ascending in the power
// of x; the empty product yields {1}.
std::vector<Scalar> expand_linear_product(std::span<const LinearFactor> factors,
                                          const FieldCtx& ctx);

// Elementary symmetric polynomial e_k of the multiset {i*a + b : 0 <= i < n},
// computed with the incremental O(nk) recurrence. e_0 = 1. Throws
// IndexOutOfRange when k > n: there is no k-subset of an n-element multiset,
// and silently returning 0 here has historically masked index bugs.
Scalar d_subset_sum(unsigned n, unsigned k, const Scalar& a, const Scalar& b);

}  // namespace lef
