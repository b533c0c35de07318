#pragma once

#include <cstddef>
#include <vector>

#include "lef/scalar.hpp"

namespace lef {

// Row-major dense matrix whose entries all live in one field context.
class DenseMatrix {
public:
  DenseMatrix(size_t rows, size_t cols, const FieldCtx& ctx)
      : rows_(rows), cols_(cols), ctx_(ctx),
        e_(rows * cols, Scalar::zero(ctx)) {}

  static DenseMatrix identity(size_t n, const FieldCtx& ctx);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldCtx& ctx() const { return ctx_; }

  const Scalar& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
  void set(size_t r, size_t c, const Scalar& v);

  bool operator==(const DenseMatrix& o) const;

private:
  size_t rows_, cols_;
  FieldCtx ctx_;
  std::vector<Scalar> e_;
};

}  // namespace lef
