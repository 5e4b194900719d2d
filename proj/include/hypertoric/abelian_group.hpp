#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypertoric/int_matrix.hpp"

namespace hypertoric {

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_t with
/// d_1 | d_2 | ... | d_t and every d_i >= 2. The trivial group has no torsion
/// and free rank 0.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Accepts any list of nonnegative diagonal entries: zeros become free
  /// rank, ones are dropped, and the rest are brought into a divisibility
  /// chain. Negative entries are taken by absolute value.
  static AbelianGroup from_diagonal(const std::vector<Integer>& diagonal,
                                    std::size_t extra_free_rank = 0);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  /// Product of the invariant factors; nullopt when the group is infinite.
  std::optional<Integer> order() const;

  /// "0" for the trivial group, otherwise e.g. "Z^2 x Z/2 x Z/6".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

}  // namespace hypertoric
