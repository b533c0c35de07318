#pragma once

#include "lef/matrix.hpp"

namespace lef {

// Production elimination kernels. Characteristic 0 clears denominators row
// by row and runs fraction-free Bareiss elimination over Z, so intermediate
// values stay integral (they are minors of the scaled matrix); prime fields
// use ordinary elimination on int64 residues. Row updates are OpenMP
// parallel; with exact arithmetic the result is identical on any thread
// count.
size_t rank(const DenseMatrix& m);
Scalar det_gauss(const DenseMatrix& m);  // NotSquare unless rows == cols

namespace serial {

// Textbook single-threaded Gaussian elimination on Scalar values. Slower on
// purpose; the reference the parallel kernels are tested against.
size_t rank(const DenseMatrix& m);
Scalar det_gauss(const DenseMatrix& m);

}  // namespace serial

}  // namespace lef
