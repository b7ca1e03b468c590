#pragma once

#include <cstddef>

#include "spinal/abelian_group.hpp"
#include "spinal/int_matrix.hpp"

namespace spinal {

/// U * M * V == S, with U and V unimodular and S the Smith normal form of M.
struct SnfResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
};

/// Smith normal form by unimodular row and column operations.
///
/// The pivot is the nonzero entry of least absolute value in the working
/// submatrix, ties broken by lowest (row, col). Diagonal entries come out
/// nonnegative; signs are absorbed into U.
SnfResult snf(const IntMatrix& m);

/// Diagonal of S (length min(rows, cols)).
std::vector<Integer> snf_diagonal(const SnfResult& r);

/// Exact determinant by fraction-free (Bareiss) elimination. det of the
/// 0 x 0 matrix is 1. Throws InputError on non-square input.
Integer det(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Z^rows / image(m) in invariant-factor form.
AbelianGroup cokernel_group(const IntMatrix& m);

/// Rank of the (free) integer kernel: cols - rank.
std::size_t kernel_rank(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// Exact inverse of a unimodular matrix. Throws InputError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace spinal
