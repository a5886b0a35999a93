#pragma once

#include <array>
#include <vector>

#include "gdua/rational.hpp"

namespace gdua {

using IntVec = std::vector<Integer>;
using IntMat = std::vector<IntVec>;  // row major

/// Basis of { x : A x = 0 } as a list of integer column vectors.
IntMat integer_kernel(const IntMat& a, std::size_t ncols);

/// Hermite normal form of the lattice in Z^2 spanned by the given rows.
/// Zero rows are dropped; the result has 0, 1 or 2 rows.
/// Rank 2: [[a, b], [0, c]] with a > 0, c > 0, 0 <= b < c.
/// Rank 1: [(a, b)] with a > 0, or a = 0 and b > 0.
std::vector<std::array<Integer, 2>> hnf2(
    const std::vector<std::array<Integer, 2>>& rows);

/// Elementary divisors (Smith normal form diagonal, nonzero entries only).
std::vector<Integer> snf_divisors(const std::vector<std::array<Integer, 2>>& rows);

}  // namespace gdua
