#pragma once

// Data-parallel kernels and their serial reference implementations.
//
// Every kernel below has a `*_reference` twin: a plain serial loop written
// independently of the parallel version. The references are what the unit
// tests check the OpenMP paths against and what bench/ compares timings
// with. Results never depend on thread count or scheduling.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypertoric/int_matrix.hpp"

namespace hypertoric::kernels {

/// rank_table[mask] is the rank of the columns selected by `mask`.
using RankTable = std::vector<std::uint8_t>;
using Mask = std::uint32_t;

/// Largest ground set for which a full rank table is materialized.
inline constexpr std::size_t kMaxTableGround = 24;

/// Incremental echelon walk over all subsets, parallel over the least
/// element. Falls back to the reference when an intermediate overflows.
RankTable rank_table(const IntMatrix& columns);
/// One fraction-free elimination per subset.
RankTable rank_table_reference(const IntMatrix& columns);

inline Mask closure_mask(const RankTable& table, std::size_t n, Mask set) {
  Mask out = set;
  for (std::size_t i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    if (!(set & bit) && table[set | bit] == table[set]) out |= bit;
  }
  return out;
}

/// All flats covering some flat of `level`, sorted and deduplicated.
std::vector<Mask> expand_flats(const RankTable& table, std::size_t n,
                               const std::vector<Mask>& level);
std::vector<Mask> expand_flats_reference(const RankTable& table, std::size_t n,
                                         const std::vector<Mask>& level);

/// Elements (k_1, ..., k_s) of prod Z/l_k whose rational lift k_j / l_j is
/// sent into Z^rows by `representatives` (rows x s, entries already reduced
/// mod `modulus` = prod l_k). Returned in mixed-radix order.
std::vector<std::vector<std::int64_t>> gamma_members(
    const std::vector<std::vector<std::int64_t>>& representatives,
    const std::vector<std::int64_t>& multiplicities, std::int64_t modulus);
std::vector<std::vector<std::int64_t>> gamma_members_reference(
    const std::vector<std::vector<std::int64_t>>& representatives,
    const std::vector<std::int64_t>& multiplicities, std::int64_t modulus);

/// Lexicographically least bijection p with
/// table_a[S] == table_b[p(S)] for every subset S, restricted to
/// p(i) in candidates[i]. Parallel over the image of element 0.
std::optional<std::vector<std::size_t>> find_isomorphism(
    const RankTable& table_a, const RankTable& table_b, std::size_t n,
    const std::vector<std::vector<std::size_t>>& candidates);
std::optional<std::vector<std::size_t>> find_isomorphism_reference(
    const RankTable& table_a, const RankTable& table_b, std::size_t n,
    const std::vector<std::vector<std::size_t>>& candidates);

}  // namespace hypertoric::kernels
