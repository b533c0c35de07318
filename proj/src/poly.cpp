#include "lef/poly.hpp"

namespace lef {

HomogPoly HomogPoly::term(Monomial m, Scalar c) {
  HomogPoly p(m.nvars(), m.degree(), c.ctx());
  p.add_term(m, c);
  return p;
}

HomogPoly HomogPoly::one(unsigned nvars, const FieldCtx& ctx) {
  return term(Monomial::one(nvars), Scalar::one(ctx));
}

HomogPoly HomogPoly::linear_form(const std::vector<Scalar>& coeffs) {
  if (coeffs.empty()) throw InvalidParameter("linear form: no variables");
  const unsigned n = static_cast<unsigned>(coeffs.size());
  HomogPoly p(n, 1, coeffs.front().ctx());
  for (unsigned i = 0; i < n; ++i) {
    std::vector<unsigned> e(n, 0);
    e[i] = 1;
    p.add_term(Monomial(std::move(e)), coeffs[i]);
  }
  return p;
}

Scalar HomogPoly::coeff(const Monomial& m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Scalar::zero(ctx_) : it->second;
}

void HomogPoly::add_term(const Monomial& m, const Scalar& c) {
  if (m.nvars() != nvars_)
    throw InvalidParameter("term has the wrong number of variables");
  if (m.degree() != degree_)
    throw InvalidParameter("term degree breaks homogeneity");
  if (c.ctx() != ctx_) throw ContextMismatch();
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
  if (nvars_ != o.nvars_ || degree_ != o.degree_)
    throw InvalidParameter("polynomial sum: degree or variables differ");
  if (ctx_ != o.ctx_) throw ContextMismatch();
  HomogPoly r = *this;
  for (const auto& [m, c] : o.coeffs_) r.add_term(m, c);
  return r;
}

HomogPoly HomogPoly::operator-(const HomogPoly& o) const {
  return *this + o.scaled(-Scalar::one(ctx_));
}

HomogPoly HomogPoly::operator*(const HomogPoly& o) const {
  if (nvars_ != o.nvars_)
    throw InvalidParameter("polynomial product: variable counts differ");
  if (ctx_ != o.ctx_) throw ContextMismatch();
  HomogPoly r(nvars_, degree_ + o.degree_, ctx_);
  for (const auto& [m1, c1] : coeffs_)
    for (const auto& [m2, c2] : o.coeffs_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

HomogPoly HomogPoly::scaled(const Scalar& c) const {
  if (c.ctx() != ctx_) throw ContextMismatch();
  HomogPoly r(nvars_, degree_, ctx_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : coeffs_) r.add_term(m, v * c);
  return r;
}

HomogPoly HomogPoly::pow(unsigned e) const {
  HomogPoly acc = HomogPoly::one(nvars_, ctx_);
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool HomogPoly::operator==(const HomogPoly& o) const {
  return nvars_ == o.nvars_ && degree_ == o.degree_ && ctx_ == o.ctx_ &&
         coeffs_ == o.coeffs_;
}

Scalar HomogPoly::eval(std::span<const Scalar> point) const {
  if (point.size() != nvars_)
    throw InvalidParameter("evaluation point has the wrong dimension");
  Scalar acc = Scalar::zero(ctx_);
  for (const auto& [m, c] : coeffs_) {
    Scalar v = c;
    for (unsigned i = 0; i < nvars_; ++i)
      if (m[i] != 0) v *= point[i].pow(m[i]);
    acc += v;
  }
  return acc;
}

std::string HomogPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mag;
    bool negative = false;
    if (ctx_.is_rational()) {
      mpq_class q = c.rational();
      negative = q < 0;
      mag = mpq_class(abs(q)).get_str();
    } else {
      mag = std::to_string(c.residue());
    }
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    const std::string mono = monomial_to_string(m);
    if (mag != "1" || mono == "1") {
      s += mag;
      if (mono != "1") s += "*";
    }
    if (mono != "1") s += mono;
  }
  return s;
}

IdealPresentation::IdealPresentation(unsigned nvars_, const FieldCtx& ctx_,
                                     std::vector<HomogPoly> gens)
    : nvars(nvars_), ctx(ctx_) {
  for (auto& g : gens) {
    if (g.nvars() != nvars)
      throw InvalidParameter("generator has the wrong number of variables");
    if (g.ctx() != ctx) throw ContextMismatch();
    if (!g.is_zero()) generators.push_back(std::move(g));
  }
}

}  // namespace lef
