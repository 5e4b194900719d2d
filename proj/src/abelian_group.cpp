#include "hypertoric/abelian_group.hpp"

#include <algorithm>

namespace hypertoric {

AbelianGroup AbelianGroup::from_diagonal(const std::vector<Integer>& diagonal,
                                         std::size_t extra_free_rank) {
  AbelianGroup g;
  g.free_rank_ = extra_free_rank;
  std::vector<Integer> factors;
  for (const auto& x : diagonal) {
    Integer a = abs(x);
    if (a == 0) {
      ++g.free_rank_;
    } else if (a != 1) {
      factors.push_back(a);
    }
  }
  // Pairwise (gcd, lcm) replacement turns any list into a divisibility chain.
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      Integer gcd_ij = gcd(factors[i], factors[j]);
      Integer lcm_ij = lcm(factors[i], factors[j]);
      factors[i] = gcd_ij;
      factors[j] = lcm_ij;
    }
  }
  std::erase_if(factors, [](const Integer& x) { return x == 1; });
  g.torsion_ = std::move(factors);
  return g;
}

std::optional<Integer> AbelianGroup::order() const {
  if (free_rank_ != 0) return std::nullopt;
  Integer product = 1;
  for (const auto& d : torsion_) product *= d;
  return product;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank_ == 1) {
    out = "Z";
  } else if (free_rank_ > 1) {
    out = "Z^" + std::to_string(free_rank_);
  }
  for (const auto& d : torsion_) {
    if (!out.empty()) out += " x ";
    out += "Z/" + d.get_str();
  }
  return out;
}

}  // namespace hypertoric
