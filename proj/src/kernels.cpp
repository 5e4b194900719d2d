#include "hypertoric/kernels.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "exact_small.hpp"
#include "hypertoric/error.hpp"

namespace hypertoric::kernels {

namespace {

constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();
constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

void check_ground(std::size_t n) {
  if (n > kMaxTableGround) {
    throw Error(ErrorCode::GroundTooLarge, "rank table needs ground size <= " +
                                               std::to_string(kMaxTableGround));
  }
}

// Depth-first walk over the subsets with a fixed least element, carrying a
// fraction-free echelon basis of the columns chosen so far. Basis slot k
// holds a primitive vector that vanishes at the pivots of slots < k.
class EchelonWalk {
 public:
  EchelonWalk(const std::vector<std::int64_t>& col_major, std::size_t n, std::size_t r,
              RankTable& table)
      : cols_(col_major), n_(n), r_(r), table_(table), basis_(r * r + r), pivots_(r + 1) {}

  bool run_from(std::size_t first) {
    step(0, first, 0);
    return !overflow_;
  }

 private:
  void step(Mask mask, std::size_t e, std::size_t count) {
    const Mask next_mask = mask | (Mask{1} << e);
    const bool grew = reduce_into(e, count);
    if (overflow_) return;
    const std::size_t next_count = grew ? count + 1 : count;
    table_[next_mask] = static_cast<std::uint8_t>(next_count);
    for (std::size_t f = e + 1; f < n_ && !overflow_; ++f) step(next_mask, f, next_count);
  }

  // Reduces column e against slots [0, count) into slot `count`. Returns
  // whether the result is nonzero.
  bool reduce_into(std::size_t e, std::size_t count) {
    std::int64_t* v = &basis_[count * r_];
    const std::int64_t* col = &cols_[e * r_];
    std::copy(col, col + r_, v);
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t p = pivots_[k];
      if (v[p] == 0) continue;
      const std::int64_t* b = &basis_[k * r_];
      std::int64_t g = std::gcd(b[p], v[p]);
      const std::int64_t scale_v = b[p] / g;
      const std::int64_t scale_b = v[p] / g;
      for (std::size_t i = 0; i < r_; ++i) {
        __int128 x = static_cast<__int128>(scale_v) * v[i] - static_cast<__int128>(scale_b) * b[i];
        if (x < kMin || x > kMax) {
          overflow_ = true;
          return false;
        }
        v[i] = static_cast<std::int64_t>(x);
      }
    }
    std::int64_t content = 0;
    std::size_t pivot = r_;
    for (std::size_t i = 0; i < r_; ++i) {
      if (v[i] == 0) continue;
      if (pivot == r_) pivot = i;
      content = std::gcd(content, v[i]);
    }
    if (pivot == r_) return false;
    if (content > 1)
      for (std::size_t i = 0; i < r_; ++i) v[i] /= content;
    pivots_[count] = pivot;
    return true;
  }

  const std::vector<std::int64_t>& cols_;
  std::size_t n_;
  std::size_t r_;
  RankTable& table_;
  std::vector<std::int64_t> basis_;
  std::vector<std::size_t> pivots_;
  bool overflow_ = false;
};

class IsoSearch {
 public:
  IsoSearch(const RankTable& a, const RankTable& b, std::size_t n,
            const std::vector<std::vector<std::size_t>>& candidates)
      : a_(a), b_(b), n_(n), candidates_(candidates), image_(std::size_t{1} << n), perm_(n) {}

  // Search with element 0 already sent to `first`.
  bool run_with_first(std::size_t first) {
    if (!assign(0, first)) return false;
    perm_[0] = first;
    used_ = Mask{1} << first;
    return dfs(1);
  }

  bool run() { return dfs(0); }

  const std::vector<std::size_t>& permutation() const { return perm_; }

 private:
  bool assign(std::size_t k, std::size_t j) {
    const Mask bit_k = Mask{1} << k;
    const Mask bit_j = Mask{1} << j;
    const Mask limit = bit_k;
    for (Mask t = 0; t < limit; ++t) {
      const Mask img = image_[t] | bit_j;
      if (a_[t | bit_k] != b_[img]) return false;
      image_[t | bit_k] = img;
    }
    return true;
  }

  bool dfs(std::size_t k) {
    if (k == n_) return true;
    for (std::size_t j : candidates_[k]) {
      if (used_ & (Mask{1} << j)) continue;
      if (!assign(k, j)) continue;
      perm_[k] = j;
      used_ |= Mask{1} << j;
      if (dfs(k + 1)) return true;
      used_ &= ~(Mask{1} << j);
    }
    return false;
  }

  const RankTable& a_;
  const RankTable& b_;
  std::size_t n_;
  const std::vector<std::vector<std::size_t>>& candidates_;
  std::vector<Mask> image_;
  std::vector<std::size_t> perm_;
  Mask used_ = 0;
};

bool member_of_gamma_subgroup(const std::vector<std::vector<std::int64_t>>& reps,
                              const std::vector<std::int64_t>& weights, std::int64_t modulus,
                              const std::vector<std::int64_t>& digits) {
  for (const auto& row : reps) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < digits.size(); ++j)
      acc += static_cast<__int128>(row[j]) * digits[j] % modulus * weights[j];
    if (acc % modulus != 0) return false;
  }
  return true;
}

}  // namespace

RankTable rank_table(const IntMatrix& columns) {
  const std::size_t n = columns.cols();
  check_ground(n);
  const std::size_t r = columns.rows();
  auto buf = detail::to_i64_buffer(columns.transpose());  // column-major view
  if (!buf) return rank_table_reference(columns);
  RankTable table(std::size_t{1} << n, 0);
  if (r == 0 || n == 0) return table;

  int overflowed = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(| : overflowed)
  for (std::size_t first = 0; first < n; ++first) {
    EchelonWalk walk(*buf, n, r, table);
    if (!walk.run_from(first)) overflowed |= 1;
  }
  if (overflowed) return rank_table_reference(columns);
  return table;
}

RankTable rank_table_reference(const IntMatrix& columns) {
  const std::size_t n = columns.cols();
  check_ground(n);
  RankTable table(std::size_t{1} << n, 0);
  std::vector<std::size_t> idx;
  for (Mask mask = 1; mask < (Mask{1} << n); ++mask) {
    idx.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (Mask{1} << i)) idx.push_back(i);
    IntMatrix sub = columns.select_columns(idx);
    std::vector<Integer> data;
    data.reserve(sub.rows() * sub.cols());
    for (std::size_t i = 0; i < sub.rows(); ++i)
      for (std::size_t j = 0; j < sub.cols(); ++j) data.push_back(sub(i, j));
    table[mask] = static_cast<std::uint8_t>(detail::bareiss_big(std::move(data), sub.rows(), sub.cols()).rank);
  }
  return table;
}

std::vector<Mask> expand_flats(const RankTable& table, std::size_t n,
                               const std::vector<Mask>& level) {
  std::vector<Mask> out;
#pragma omp parallel
  {
    std::vector<Mask> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::size_t f = 0; f < level.size(); ++f) {
      const Mask flat = level[f];
      for (std::size_t e = 0; e < n; ++e) {
        const Mask bit = Mask{1} << e;
        if (flat & bit) continue;
        local.push_back(closure_mask(table, n, flat | bit));
      }
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Mask> expand_flats_reference(const RankTable& table, std::size_t n,
                                         const std::vector<Mask>& level) {
  std::vector<Mask> out;
  for (Mask flat : level) {
    for (std::size_t e = 0; e < n; ++e) {
      if (flat & (Mask{1} << e)) continue;
      Mask grown = flat | (Mask{1} << e);
      // Close by repeatedly adding anything that does not raise the rank.
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
          const Mask bit = Mask{1} << i;
          if (!(grown & bit) && table[grown | bit] == table[grown]) {
            grown |= bit;
            changed = true;
          }
        }
      }
      if (std::find(out.begin(), out.end(), grown) == out.end()) out.push_back(grown);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::int64_t>> gamma_members(
    const std::vector<std::vector<std::int64_t>>& representatives,
    const std::vector<std::int64_t>& multiplicities, std::int64_t modulus) {
  const std::size_t s = multiplicities.size();
  std::vector<std::int64_t> weights(s);
  for (std::size_t j = 0; j < s; ++j) weights[j] = modulus / multiplicities[j];

  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> found;
#pragma omp parallel
  {
    std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> local;
    std::vector<std::int64_t> digits(s);
#pragma omp for schedule(static) nowait
    for (std::int64_t t = 0; t < modulus; ++t) {
      // Mixed radix with the last coordinate varying fastest.
      std::int64_t rest = t;
      for (std::size_t j = s; j-- > 0;) {
        digits[j] = rest % multiplicities[j];
        rest /= multiplicities[j];
      }
      if (member_of_gamma_subgroup(representatives, weights, modulus, digits))
        local.emplace_back(t, digits);
    }
#pragma omp critical
    found.insert(found.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
  }
  std::sort(found.begin(), found.end());
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(found.size());
  for (auto& [t, digits] : found) out.push_back(std::move(digits));
  return out;
}

std::vector<std::vector<std::int64_t>> gamma_members_reference(
    const std::vector<std::vector<std::int64_t>>& representatives,
    const std::vector<std::int64_t>& multiplicities, std::int64_t modulus) {
  const std::size_t s = multiplicities.size();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> digits(s, 0);
  // Odometer over prod [0, l_j), exact rational test via the common denominator.
  for (;;) {
    bool member = true;
    for (const auto& row : representatives) {
      __int128 numerator = 0;
      for (std::size_t j = 0; j < s; ++j)
        numerator += static_cast<__int128>(row[j]) * digits[j] * (modulus / multiplicities[j]);
      if (numerator % modulus != 0) {
        member = false;
        break;
      }
    }
    if (member) out.push_back(digits);
    std::size_t j = s;
    while (j > 0) {
      --j;
      if (++digits[j] < multiplicities[j]) break;
      digits[j] = 0;
      if (j == 0) return out;
    }
    if (s == 0) return out;
  }
}

std::optional<std::vector<std::size_t>> find_isomorphism(
    const RankTable& table_a, const RankTable& table_b, std::size_t n,
    const std::vector<std::vector<std::size_t>>& candidates) {
  if (n == 0) return std::vector<std::size_t>{};
  const auto& firsts = candidates[0];
  std::vector<std::optional<std::vector<std::size_t>>> results(firsts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t c = 0; c < firsts.size(); ++c) {
    IsoSearch search(table_a, table_b, n, candidates);
    if (search.run_with_first(firsts[c])) results[c] = search.permutation();
  }
  for (auto& r : results)
    if (r) return r;
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> find_isomorphism_reference(
    const RankTable& table_a, const RankTable& table_b, std::size_t n,
    const std::vector<std::vector<std::size_t>>& candidates) {
  IsoSearch search(table_a, table_b, n, candidates);
  if (search.run()) return search.permutation();
  return std::nullopt;
}

}  // namespace hypertoric::kernels
