#ifndef MONRES_LINALG_HPP
#define MONRES_LINALG_HPP

#include <cstddef>
#include <vector>

#include "monres/util.hpp"

namespace monres {

using IntMatrix = std::vector<std::vector<Int>>;

/// Determinant of a square integer matrix, exact (Bareiss elimination).
Int determinant(IntMatrix m);

/// Rank over the rationals, exact.
std::size_t rankExact(const IntMatrix& m);

/// Kernel vector of an (n-1) x n integer matrix of rank n-1, computed as
/// the vector of signed maximal minors. Returns the zero vector when the
/// rank is deficient. Not normalized.
std::vector<Int> kernelVectorOfCorankOne(const IntMatrix& m);

/// Diagonal entries of the Smith normal form, nonzero ones only, each
/// dividing the next.
std::vector<Int> smithInvariants(IntMatrix m);

/// Solves m * x = rhs exactly for square nonsingular m.
std::vector<Rat> solveSquare(const IntMatrix& m, const std::vector<Int>& rhs);

}  // namespace monres

#endif
