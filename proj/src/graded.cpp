#include "lef/graded.hpp"

#include <map>

#include "lef/combinatorics.hpp"

namespace lef {

namespace {

void check_extra(const IdealPresentation& ideal, unsigned d,
                 const HomogPoly& p) {
  if (p.nvars() != ideal.nvars)
    throw InvalidParameter("extra row has the wrong number of variables");
  if (p.degree() != d)
    throw InvalidParameter("extra row is not homogeneous of the span degree");
  if (p.ctx() != ideal.ctx) throw ContextMismatch();
}

size_t dim_forms(unsigned nvars, unsigned d) {
  return binomial(d + nvars - 1, nvars - 1).get_ui();
}

}  // namespace

DenseMatrix span_matrix(const IdealPresentation& ideal, unsigned d,
                        std::span<const HomogPoly> extra) {
  const auto basis = monomial_basis(ideal.nvars, d);
  std::map<Monomial, size_t> col;
  for (size_t i = 0; i < basis.size(); ++i) col.emplace(basis[i], i);

  size_t nrows = extra.size();
  for (const auto& g : ideal.generators)
    if (g.degree() <= d) nrows += dim_forms(ideal.nvars, d - g.degree());

  DenseMatrix m(nrows, basis.size(), ideal.ctx);
  size_t r = 0;
  for (const auto& g : ideal.generators) {
    if (g.degree() > d) continue;
    for (const auto& mono : monomial_basis(ideal.nvars, d - g.degree())) {
      for (const auto& [gm, gc] : g.terms()) m.set(r, col.at(mono * gm), gc);
      ++r;
    }
  }
  for (const auto& p : extra) {
    check_extra(ideal, d, p);
    for (const auto& [pm, pc] : p.terms()) m.set(r, col.at(pm), pc);
    ++r;
  }
  return m;
}

size_t graded_span_dim(const IdealPresentation& ideal, unsigned d) {
  return rank(span_matrix(ideal, d));
}

size_t hilbert_function(const IdealPresentation& ideal, unsigned d) {
  return dim_forms(ideal.nvars, d) - graded_span_dim(ideal, d);
}

size_t mult_map_rank(const IdealPresentation& ideal, const HomogPoly& ell,
                     unsigned k, unsigned d) {
  if (ell.degree() != 1)
    throw InvalidParameter("multiplication map: ell must be a linear form");
  if (ell.nvars() != ideal.nvars)
    throw InvalidParameter("multiplication map: variable counts differ");
  if (ell.ctx() != ideal.ctx) throw ContextMismatch();
  if (k < 1) throw InvalidParameter("multiplication map: k must be positive");

  const HomogPoly lk = ell.pow(k);
  std::vector<HomogPoly> image;
  for (const auto& mono : monomial_basis(ideal.nvars, d))
    image.push_back(lk * HomogPoly::term(mono, Scalar::one(ideal.ctx)));
  const size_t joint = rank(span_matrix(ideal, d + k, image));
  return joint - graded_span_dim(ideal, d + k);
}

bool max_rank_check(const IdealPresentation& ideal, const HomogPoly& ell,
                    unsigned k, unsigned d) {
  const size_t r = mult_map_rank(ideal, ell, k, d);
  return r == std::min(hilbert_function(ideal, d),
                       hilbert_function(ideal, d + k));
}

}  // namespace lef
