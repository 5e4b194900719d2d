#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypertoric/int_matrix.hpp"

namespace hypertoric::gale {

/// A (d x n) and B (n x (n-d)) with 0 -> Z^{n-d} -B-> Z^n -A-> Z^d -> 0
/// exact, A unimodular and no zero row in B.
struct GalePair {
  IntMatrix A;
  IntMatrix B;

  std::size_t n() const noexcept { return A.cols(); }
  std::size_t d() const noexcept { return A.rows(); }
};

/// B = kernel_basis(A). Throws RankDeficient, NotUnimodular,
/// NotSurjective or ZeroBRow; n == d counts as ZeroBRow.
GalePair gale_dual_of_A(const IntMatrix& A);

/// A = kernel_basis(B^T)^T. Throws RankDeficient, ZeroBRow or NotUnimodular.
GalePair gale_dual_of_B(const IntMatrix& B);

struct Diagnostic {
  std::string code;    ///< e.g. "NotComplex"
  std::string detail;  ///< human-readable, 1-based indices
};

/// One entry per violated invariant, empty for a valid pair. Codes:
/// ShapeMismatch, NotComplex, RankDeficient, NotExact, NotSurjective,
/// NotSaturated, NotUnimodular, ZeroBRow.
std::vector<Diagnostic> verify_gale_pair(const IntMatrix& A, const IntMatrix& B);

struct Essential {
  IntMatrix B;
  std::vector<std::size_t> removed;  ///< 0-based rows that were zero
};

/// Drops the zero rows of B.
Essential essentialize(const IntMatrix& B);

}  // namespace hypertoric::gale
