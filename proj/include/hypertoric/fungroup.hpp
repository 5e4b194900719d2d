#pragma once

#include <cstdint>

#include "hypertoric/abelian_group.hpp"
#include "hypertoric/arrangement.hpp"
#include "hypertoric/gale.hpp"
#include "hypertoric/int_matrix.hpp"

// Fundamental group of the regular locus of Y_A(0). With multiplicities
// l_1..l_s, L = prod l_k and Gamma = prod Z/l_k, the group is Gamma modulo the
// image of ker(B~^T), where column k of B~^T is m_k b^(k), m_k = L / l_k.
namespace hypertoric::fungroup {

inline constexpr std::uint64_t kDefaultOracleBound = 100000;

struct BTilde {
  IntMatrix matrix;  ///< B~^T, (n-d) x s
  IntVector m;       ///< m_k = prod_{i != k} l_i
  Integer L;         ///< prod l_k
};

BTilde b_tilde(const arrangement::ParallelData& data);

/// coker [diag(l) | kernel_basis(B~^T)].
AbelianGroup pi1(const gale::GalePair& pair);
AbelianGroup pi1(const arrangement::ParallelData& data);

/// Same group computed as image(B~^T) / L Z^{n-d}.
AbelianGroup pi1_image_presentation(const arrangement::ParallelData& data);

/// Enumerates Gamma and tests membership of each element directly. Throws
/// OracleBoundExceeded when L > bound.
AbelianGroup pi1_oracle(const gale::GalePair& pair, std::uint64_t bound = kDefaultOracleBound);
AbelianGroup pi1_oracle(const arrangement::ParallelData& data,
                        std::uint64_t bound = kDefaultOracleBound);

Integer pi1_order(const gale::GalePair& pair);

}  // namespace hypertoric::fungroup
