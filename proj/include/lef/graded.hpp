#pragma once

#include <span>

#include "lef/linalg.hpp"
#include "lef/poly.hpp"

namespace lef {

// Coefficient matrix of the degree-d piece of the ideal: one row per product
// m * g with g a generator and m a monomial of degree d - deg g, plus one row
// per polynomial in extra (each must be homogeneous of degree d). Columns are
// indexed by monomial_basis(nvars, d).
DenseMatrix span_matrix(const IdealPresentation& ideal, unsigned d,
                        std::span<const HomogPoly> extra = {});

// dim [I]_d as a subspace of the degree-d forms.
size_t graded_span_dim(const IdealPresentation& ideal, unsigned d);

// Hilbert function of the quotient: dim [S]_d - dim [I]_d. Works directly
// with spans; no quotient bases are ever formed.
size_t hilbert_function(const IdealPresentation& ideal, unsigned d);

// Rank of multiplication by ell^k from the degree-d piece of the quotient to
// the degree-(d+k) piece, computed as the span growth
// dim(ell^k [S]_d + [I]_{d+k}) - dim [I]_{d+k}. Requires deg ell == 1, k >= 1.
size_t mult_map_rank(const IdealPresentation& ideal, const HomogPoly& ell,
                     unsigned k, unsigned d);

// True when the multiplication map has the largest rank its source and
// target allow: rank == min(h(d), h(d+k)).
bool max_rank_check(const IdealPresentation& ideal, const HomogPoly& ell,
                    unsigned k, unsigned d);

}  // namespace lef
