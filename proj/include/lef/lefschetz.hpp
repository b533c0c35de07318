#pragma once

#include <optional>
#include <utility>

#include "lef/families.hpp"
#include "lef/graded.hpp"

namespace lef {

enum class LefschetzProperty { WLP, SLP };

// One multiplication map ell^k : [A]_d -> [A]_{d+k} and whether its rank is
// the largest the dimensions allow.
struct DegreeMapData {
  unsigned d = 0;
  unsigned k = 1;
  size_t dim_source = 0;
  size_t dim_target = 0;
  size_t rank = 0;
  bool maximal = false;

  bool operator==(const DegreeMapData&) const = default;
};

struct ReportContext {
  std::optional<unsigned> t;
  std::optional<Scalar> a;
  std::uint32_t characteristic = 0;

  bool operator==(const ReportContext&) const = default;
};

// Outcome of a Lefschetz decision. Invariant: verdict is true exactly when
// every degree_data entry is maximal.
struct LefschetzReport {
  LefschetzProperty property = LefschetzProperty::WLP;
  bool verdict = false;
  std::optional<std::pair<Scalar, Scalar>> witness;  // (b, c) when found
  std::optional<HomogPoly> ell;
  std::vector<DegreeMapData> degree_data;
  ReportContext context;
  std::string note;

  bool operator==(const LefschetzReport&) const = default;
};

// Decision matrix for weak Lefschetz of the two-variable reduction: row one
// carries the Stirling coefficients of prod_i (iax + y), row two the
// subset-sum coefficients of prod_i ((ia+b)x + cy), and the remaining rows a
// [b c] band. Size (t+1) x (t+1).
DenseMatrix matrix_M(unsigned t, const Scalar& a, const Scalar& b,
                     const Scalar& c);

// (-1)^t c^t (prod_{i=1..t} (ai + b) - prod_{i=1..t} (aci - b)). Agrees with
// det_gauss(matrix_M(...)) whenever b and c are both nonzero; for b = 0 or
// c = 0 only det_gauss is authoritative.
Scalar det_M_closed(unsigned t, const Scalar& a, const Scalar& b,
                    const Scalar& c);

// The sampling schedule used by wlp_via_det: (b, c) = (ac, c) for
// c in {1, 2, 3} with every i + c nonzero in the field (those c make the
// closed form provably nonzero for usable a), then (1, 1) and (1, -1).
// Duplicates are removed.
std::vector<std::pair<Scalar, Scalar>> default_bc_samples(unsigned t,
                                                          const Scalar& a);

// Decide weak Lefschetz of the hyperplane-section family through the
// decision matrix: search the samples for (b, c) with nonzero determinant.
// A true verdict carries the witness; a false verdict means no sampled pair
// succeeded, which is a proof only when the determinant vanishes identically
// (a = 0 with t even or characteristic 2), and the note says which.
LefschetzReport wlp_via_det(unsigned t, const Scalar& a, const FieldCtx& ctx);
LefschetzReport wlp_via_det(unsigned t, const Scalar& a, const FieldCtx& ctx,
                            std::span<const std::pair<Scalar, Scalar>> samples);

// Full rank scan of x ell : [A]_d -> [A]_{d+1} over every degree with
// h(d) > 0 or h(d+1) > 0. The quotient must become Artinian within the
// summed generator degrees; NotArtinianInRange otherwise.
LefschetzReport wlp_full(const IdealPresentation& ideal, const HomogPoly& ell);

// Same scan over all powers k >= 1 with h(d) > 0 and d + k inside the socle
// bound.
LefschetzReport slp_full(const IdealPresentation& ideal, const HomogPoly& ell);

// Degree-(2t-1) membership certificate against strong Lefschetz of the
// monomial family, t >= 3: with f = p(x^2+y^2+z^2) + q(xy+xz+yz) and
// p(2t-2) + qt = 0, checks (x+y+z)^{2t-3} f lies in the ideal, so the map
// ell^{2t-3} : [A]_2 -> [A]_{2t-1} between equal-dimension pieces is not
// injective. The ideal is fixed by coordinate sign changes, so the
// certificate transports to any linear form with unit coefficients.
// InvalidParameter when t < 3 or the pair (t, 2-2t) vanishes, which happens
// exactly in characteristic 2 with even t.
bool witness_check(unsigned t, const FieldCtx& ctx);

// Conjectured strong Lefschetz of the section family in characteristic 0:
// checks ell^{2i-1} : [A]_{t-i+1} -> [A]_{t+i} is an isomorphism for
// i = 1..t with ell = x + y - z. InvalidParameter unless char 0, a != 0,
// a not in N.
LefschetzReport slp_conjecture_check(unsigned t, const Scalar& a);

}  // namespace lef
