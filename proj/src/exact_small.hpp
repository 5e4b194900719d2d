#pragma once

// Machine-word fraction-free elimination shared by linalg and the matroid
// kernels. Intermediate products use 128-bit arithmetic; an intermediate
// that leaves the int64 range aborts with nullopt and callers fall back to
// the GMP path.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypertoric/int_matrix.hpp"

namespace hypertoric::detail {

struct SmallElimination {
  std::size_t rank = 0;
  std::int64_t determinant = 0;  ///< only meaningful for square input
};

/// Bareiss elimination on a row-major rows x cols buffer, destroyed in place.
std::optional<SmallElimination> bareiss_i64(std::span<std::int64_t> a, std::size_t rows,
                                            std::size_t cols);

/// Same on GMP integers; never fails.
struct BigElimination {
  std::size_t rank = 0;
  Integer determinant = 0;
};
BigElimination bareiss_big(std::vector<Integer> a, std::size_t rows, std::size_t cols);

/// Row-major int64 copy of M when every entry fits.
std::optional<std::vector<std::int64_t>> to_i64_buffer(const IntMatrix& M);

}  // namespace hypertoric::detail
