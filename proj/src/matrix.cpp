#include "lef/matrix.hpp"

namespace lef {

DenseMatrix DenseMatrix::identity(size_t n, const FieldCtx& ctx) {
  DenseMatrix m(n, n, ctx);
  for (size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(ctx));
  return m;
}

void DenseMatrix::set(size_t r, size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_)
    throw IndexOutOfRange("matrix index out of range");
  if (v.ctx() != ctx_) throw ContextMismatch();
  e_[r * cols_ + c] = v;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && ctx_ == o.ctx_ && e_ == o.e_;
}

}  // namespace lef
