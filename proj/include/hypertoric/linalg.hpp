#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypertoric/abelian_group.hpp"
#include "hypertoric/int_matrix.hpp"

// Exact integer linear algebra. Every function is pure and works on any
// shape, including matrices with zero rows or columns.
namespace hypertoric::linalg {

struct HermiteForm {
  IntMatrix H;  ///< M * U, column-style Hermite normal form
  IntMatrix U;  ///< unimodular column transform
};

struct SmithForm {
  IntMatrix S;  ///< P * M * Q, diagonal with a divisibility chain
  IntMatrix P;  ///< unimodular row transform
  IntMatrix Q;  ///< unimodular column transform
};

/// Column-style Hermite normal form: M * U = H with U unimodular. Pivots are
/// positive and move strictly right as their rows move down, everything to
/// the right of a pivot is zero and entries left of a pivot lie in
/// [0, pivot). Nonzero columns come first.
HermiteForm hnf_column(const IntMatrix& M);

/// Column HNF without tracking the transform. Returns only the nonzero
/// columns, i.e. the canonical basis of the column lattice.
IntMatrix column_lattice_basis(const IntMatrix& M);

SmithForm snf(const IntMatrix& M);

/// Diagonal of the Smith normal form (length min(rows, cols)), without
/// building the transforms. Suitable for very wide relation matrices.
std::vector<Integer> smith_diagonal(const IntMatrix& M);

/// Saturated basis of {x : M x = 0} as columns, in column HNF.
IntMatrix kernel_basis(const IntMatrix& M);

/// Rank over Q (fraction-free elimination).
std::size_t rank(const IntMatrix& M);

Integer determinant(const IntMatrix& M);

/// Full rank and every maximal minor in {-1, 0, 1}.
bool is_unimodular(const IntMatrix& M);

/// First maximal minor (by lexicographic index set) whose value lies outside
/// {-1, 0, 1}, given as the column indices when rows <= cols and as row
/// indices otherwise. nullopt when none exists.
std::optional<std::vector<std::size_t>> find_bad_minor(const IntMatrix& M);

/// Some integer x with M x = v, or nullopt when none exists.
std::optional<IntVector> solve_integral(const IntMatrix& M, const IntVector& v);

/// Z^rows / (column span of M) in invariant-factor form.
AbelianGroup cokernel(const IntMatrix& M);

/// Row lattice in canonical form; two matrices with the same row lattice
/// give equal results.
IntMatrix row_lattice_canonical(const IntMatrix& M);

}  // namespace hypertoric::linalg
