#pragma once

#include "voaforge/rat.hpp"

#include <vector>

namespace voaforge {

using IntMat = std::vector<std::vector<mpz_class>>;
using QMat = std::vector<std::vector<Rat>>;

/** Rank by fraction-free (Bareiss) elimination. The matrix is taken by value. */
size_t bareiss_rank(IntMat m);
/** Clear denominators row by row. */
IntMat to_integer_rows(const QMat& m);
size_t rank(const QMat& m);
/** Basis of {x : m x = 0}, in reduced echelon form with unit pivots. */
QMat nullspace(const QMat& m, size_t ncols);

} // namespace voaforge
