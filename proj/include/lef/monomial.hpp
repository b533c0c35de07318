#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lef/errors.hpp"

namespace lef {

// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}

  static Monomial one(unsigned nvars) {
    return Monomial(std::vector<unsigned>(nvars, 0));
  }

  unsigned nvars() const { return static_cast<unsigned>(e_.size()); }
  unsigned degree() const;
  unsigned operator[](size_t i) const { return e_[i]; }
  const std::vector<unsigned>& exponents() const { return e_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;

  // Lexicographic on exponent vectors; with equal degrees this realizes the
  // graded-lex order with the first variable heaviest.
  auto operator<=>(const Monomial& o) const { return e_ <=> o.e_; }
  bool operator==(const Monomial& o) const = default;

private:
  std::vector<unsigned> e_;
};

// All monomials of the given total degree, in decreasing graded-lex order
// with the first variable heaviest: x^2, xy, xz, y^2, yz, z^2 for (3, 2).
std::vector<Monomial> monomial_basis(unsigned nvars, unsigned degree);

// Print names: x | x,y | x,y,z | w,x,y,z; x1..xn beyond four variables.
std::vector<std::string> variable_names(unsigned nvars);

std::string monomial_to_string(const Monomial& m);

}  // namespace lef
