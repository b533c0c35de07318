#include "lef/linalg.hpp"

#include <cassert>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace lef {

namespace {

constexpr std::int64_t kParallelRowThreshold = 16;

struct IntegerRows {
  size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;   // row-major
  mpz_class row_scale = 1;    // det(a) = row_scale * det(input)
};

// Scale each row by the lcm of its denominators; exact, and det bookkeeping
// stays a single integer factor.
IntegerRows clear_denominators(const DenseMatrix& m) {
  IntegerRows out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.a.resize(out.rows * out.cols);
  for (size_t r = 0; r < out.rows; ++r) {
    mpz_class l = 1;
    for (size_t c = 0; c < out.cols; ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              m.at(r, c).rational().get_den_mpz_t());
    for (size_t c = 0; c < out.cols; ++c) {
      const mpq_class& q = m.at(r, c).rational();
      mpz_class f = l / q.get_den();
      out.a[r * out.cols + c] = q.get_num() * f;
    }
    out.row_scale *= l;
  }
  return out;
}

struct EliminationResult {
  size_t rank = 0;
  int sign = 1;
  mpz_class last_pivot = 1;  // det of the leading rank x rank minor, up to sign
};

// Fraction-free Bareiss elimination, in place. After step k every entry is a
// (k+1)-minor of the input, so mpz_divexact by the previous pivot is exact.
EliminationResult bareiss_eliminate(std::vector<mpz_class>& a, size_t rows,
                                    size_t cols) {
  EliminationResult res;
  mpz_class prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // Pivot on the shortest nonzero entry to slow coefficient growth;
    // deterministic, and exactness does not depend on the choice.
    size_t piv = rows;
    size_t best = std::numeric_limits<size_t>::max();
    for (size_t i = r; i < rows; ++i) {
      const mpz_class& v = a[i * cols + c];
      if (sgn(v) == 0) continue;
      const size_t limbs = mpz_size(v.get_mpz_t());
      if (limbs < best) {
        best = limbs;
        piv = i;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      for (size_t j = c; j < cols; ++j)
        std::swap(a[piv * cols + j], a[r * cols + j]);
      res.sign = -res.sign;
    }
    const mpz_class pivot = a[r * cols + c];
#pragma omp parallel for schedule(static) \
    if (static_cast<std::int64_t>(rows - r) > kParallelRowThreshold)
    for (std::int64_t i = static_cast<std::int64_t>(r) + 1;
         i < static_cast<std::int64_t>(rows); ++i) {
      mpz_class* row = &a[static_cast<size_t>(i) * cols];
      const mpz_class* prow = &a[r * cols];
      mpz_class f = row[c];
      mpz_class t;
      for (size_t j = c + 1; j < cols; ++j) {
        t = pivot * row[j];
        if (sgn(f) != 0) t -= f * prow[j];
        assert(mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()));
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = pivot;
    res.last_pivot = pivot;
    ++r;
  }
  res.rank = r;
  return res;
}

struct ModRows {
  size_t rows = 0, cols = 0;
  std::int64_t p = 0;
  std::vector<std::int64_t> a;
};

ModRows to_residues(const DenseMatrix& m) {
  ModRows out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.p = m.ctx().characteristic;
  out.a.resize(out.rows * out.cols);
  for (size_t r = 0; r < out.rows; ++r)
    for (size_t c = 0; c < out.cols; ++c)
      out.a[r * out.cols + c] = m.at(r, c).residue();
  return out;
}

std::int64_t mod_inverse64(std::int64_t v, std::int64_t p) {
  std::int64_t old_r = v, r = p, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return old_s >= 0 ? old_s : old_s + p;
}

struct ModResult {
  size_t rank = 0;
  std::int64_t det = 1;  // product of pivots, sign included
};

ModResult mod_eliminate(ModRows& m) {
  const std::int64_t p = m.p;
  const size_t rows = m.rows, cols = m.cols;
  auto& a = m.a;
  ModResult res;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i) {
      if (a[i * cols + c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      for (size_t j = c; j < cols; ++j)
        std::swap(a[piv * cols + j], a[r * cols + j]);
      res.det = p - res.det;  // sign flip
    }
    const std::int64_t pivot = a[r * cols + c];
    const std::int64_t inv = mod_inverse64(pivot, p);
    res.det = static_cast<std::int64_t>(
        (static_cast<__int128>(res.det) * pivot) % p);
#pragma omp parallel for schedule(static) \
    if (static_cast<std::int64_t>(rows - r) > kParallelRowThreshold)
    for (std::int64_t i = static_cast<std::int64_t>(r) + 1;
         i < static_cast<std::int64_t>(rows); ++i) {
      std::int64_t* row = &a[static_cast<size_t>(i) * cols];
      const std::int64_t* prow = &a[r * cols];
      const std::int64_t f = row[c];
      if (f == 0) continue;
      const std::int64_t fi = (f * inv) % p;  // both < 2^31, product < 2^62
      for (size_t j = c; j < cols; ++j) {
        std::int64_t v = row[j] - (fi * prow[j]) % p;
        if (v < 0) v += p;
        row[j] = v;
      }
    }
    ++r;
  }
  res.rank = r;
  res.det %= p;
  return res;
}

}  // namespace

size_t rank(const DenseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.ctx().is_rational()) {
    IntegerRows ir = clear_denominators(m);
    return bareiss_eliminate(ir.a, ir.rows, ir.cols).rank;
  }
  ModRows mr = to_residues(m);
  return mod_eliminate(mr).rank;
}

Scalar det_gauss(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw NotSquare();
  const size_t n = m.rows();
  if (n == 0) return Scalar::one(m.ctx());
  if (m.ctx().is_rational()) {
    IntegerRows ir = clear_denominators(m);
    EliminationResult e = bareiss_eliminate(ir.a, n, n);
    if (e.rank < n) return Scalar::zero(m.ctx());
    mpq_class det(e.sign < 0 ? mpz_class(-e.last_pivot) : e.last_pivot,
                  ir.row_scale);
    det.canonicalize();
    return Scalar::from_rational(det);
  }
  ModRows mr = to_residues(m);
  ModResult e = mod_eliminate(mr);
  if (e.rank < n) return Scalar::zero(m.ctx());
  return Scalar::from_integer(e.det, m.ctx());
}

namespace serial {

namespace {

struct ScalarElim {
  size_t rank = 0;
  Scalar det;
  bool full = false;
};

ScalarElim eliminate(const DenseMatrix& m) {
  const size_t rows = m.rows(), cols = m.cols();
  std::vector<Scalar> a(rows * cols, Scalar::zero(m.ctx()));
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) a[r * cols + c] = m.at(r, c);

  ScalarElim res;
  res.det = Scalar::one(m.ctx());
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i) {
      if (!a[i * cols + c].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      for (size_t j = c; j < cols; ++j)
        std::swap(a[piv * cols + j], a[r * cols + j]);
      res.det = -res.det;
    }
    const Scalar pivot = a[r * cols + c];
    res.det *= pivot;
    const Scalar inv = pivot.inverse();
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i * cols + c].is_zero()) continue;
      const Scalar f = a[i * cols + c] * inv;
      for (size_t j = c; j < cols; ++j)
        a[i * cols + j] -= f * a[r * cols + j];
    }
    ++r;
  }
  res.rank = r;
  res.full = (r == rows && r == cols);
  return res;
}

}  // namespace

size_t rank(const DenseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return eliminate(m).rank;
}

Scalar det_gauss(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw NotSquare();
  if (m.rows() == 0) return Scalar::one(m.ctx());
  ScalarElim e = eliminate(m);
  return e.full ? e.det : Scalar::zero(m.ctx());
}

}  // namespace serial

}  // namespace lef
