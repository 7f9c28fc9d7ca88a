#pragma once

#include <vector>

#include "petristruct/arith.hpp"

namespace petristruct {

// Non-negative integer solutions of homogeneous systems written with one
// row per variable: x >= 0, sum_i x[i] * coefficients[i][j] = 0 for every
// column j. For a net, passing the incidence matrix (places x transitions)
// yields place semiflows.

/// Every <=-minimal non-zero solution (a Hilbert basis of the solution
/// monoid), sorted lexicographically. The columns are absorbed one at a
/// time: the current generators are recombined through the minimal
/// solutions of the single new equation and then reduced to their
/// <=-minimal elements.
std::vector<IntVector> hilbert_basis(const IntMatrix& coefficients);

/// One primitive solution per minimal support (the extreme rays of the
/// solution cone), sorted lexicographically. Classical Farkas elimination:
/// pairwise combination of rows with opposite signs, rows divided by their
/// gcd, rows with non-minimal support dropped after every column.
std::vector<IntVector> extreme_rays(const IntMatrix& coefficients);

/// Minimal non-zero solutions (c, d) of sum_i pos[i]*c[i] = sum_j neg[j]*d[j]
/// with all weights > 0. Returned as concatenated vectors (c then d).
std::vector<IntVector> minimal_balanced_solutions(const IntVector& pos, const IntVector& neg);

}  // namespace petristruct
