#include "lef/monomial.hpp"

namespace lef {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (unsigned e : e_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (nvars() != o.nvars())
    throw InvalidParameter("monomial product: variable counts differ");
  std::vector<unsigned> e(e_);
  for (size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
  if (nvars() != o.nvars())
    throw InvalidParameter("monomial divisibility: variable counts differ");
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

namespace {

void fill_basis(unsigned nvars, unsigned degree, std::vector<unsigned>& acc,
                std::vector<Monomial>& out) {
  if (acc.size() + 1 == nvars) {
    acc.push_back(degree);
    out.emplace_back(acc);
    acc.pop_back();
    return;
  }
  for (unsigned e = degree; e + 1 != 0; --e) {
    acc.push_back(e);
    fill_basis(nvars, degree - e, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(unsigned nvars, unsigned degree) {
  if (nvars == 0) throw InvalidParameter("monomial basis: no variables");
  std::vector<Monomial> out;
  std::vector<unsigned> acc;
  acc.reserve(nvars);
  fill_basis(nvars, degree, acc, out);
  return out;
}

std::vector<std::string> variable_names(unsigned nvars) {
  switch (nvars) {
    case 1: return {"x"};
    case 2: return {"x", "y"};
    case 3: return {"x", "y", "z"};
    case 4: return {"w", "x", "y", "z"};
    default: {
      std::vector<std::string> names;
      for (unsigned i = 1; i <= nvars; ++i)
        names.push_back("x" + std::to_string(i));
      return names;
    }
  }
}

std::string monomial_to_string(const Monomial& m) {
  const auto names = variable_names(m.nvars());
  std::string s;
  for (unsigned i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace lef
