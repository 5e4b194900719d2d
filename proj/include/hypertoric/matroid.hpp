#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hypertoric/int_matrix.hpp"
#include "hypertoric/kernels.hpp"

namespace hypertoric::matroid {

inline constexpr std::size_t kDefaultFlatLimit = 16;
inline constexpr std::size_t kDefaultIsoLimit = 12;

using IndexSet = std::vector<std::size_t>;

/// Closed set with its rank. Elements are sorted, 0-based.
struct Flat {
  IndexSet elements;
  std::size_t rank = 0;
  friend bool operator==(const Flat&, const Flat&) = default;
};

/// Column matroid of an integer matrix over Q.
///
/// Rank queries run fraction-free elimination on a row-reduced copy of the
/// matrix. Whole-lattice queries (flats, circuits, isomorphism) share a rank
/// table over all 2^n subsets, built once on first use; copies share it.
class VectorMatroid {
 public:
  explicit VectorMatroid(IntMatrix columns);

  std::size_t ground_size() const noexcept { return columns_.cols(); }
  std::size_t rank() const noexcept { return rank_; }
  const IntMatrix& columns() const noexcept { return columns_; }

  /// Throws Error(IndexOutOfRange) for indices >= ground_size().
  std::size_t rank_of(std::span<const std::size_t> subset) const;
  std::size_t rank_of_mask(kernels::Mask mask) const;

  /// Throws Error(GroundTooLarge) above kernels::kMaxTableGround.
  const kernels::RankTable& rank_table() const;

 private:
  struct TableCache;

  IntMatrix columns_;
  IntMatrix reduced_;  // rank x n, same column matroid
  std::size_t rank_ = 0;
  std::shared_ptr<TableCache> cache_;
};

IndexSet closure(const VectorMatroid& m, std::span<const std::size_t> subset);

/// Every flat sorted by (rank, elements). Throws GroundTooLarge when
/// ground_size() > limit.
std::vector<Flat> all_flats(const VectorMatroid& m, std::size_t limit = kDefaultFlatLimit);

/// Minimal dependent sets sorted by (size, elements).
std::vector<IndexSet> circuits(const VectorMatroid& m, std::size_t limit = kDefaultFlatLimit);

IndexSet loops(const VectorMatroid& m);

/// Loops as singletons plus the connected components of the rest, ordered
/// by least element.
std::vector<IndexSet> components(const VectorMatroid& m);

bool is_uniform(const VectorMatroid& m, std::size_t limit = kDefaultFlatLimit);

/// Lexicographically least bijection p (element i of a goes to p[i] of b)
/// preserving the rank of every subset. nullopt when none exists or the
/// ground sizes differ. Throws GroundTooLarge above `limit`.
std::optional<std::vector<std::size_t>> is_isomorphic(const VectorMatroid& a,
                                                      const VectorMatroid& b,
                                                      std::size_t limit = kDefaultIsoLimit);

}  // namespace hypertoric::matroid
