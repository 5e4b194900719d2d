#include "hypertoric/matroid.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <string>

#include "exact_small.hpp"
#include "hypertoric/error.hpp"
#include "hypertoric/linalg.hpp"

namespace hypertoric::matroid {

using kernels::Mask;

struct VectorMatroid::TableCache {
  std::once_flag once;
  kernels::RankTable table;
};

namespace {

std::size_t rank_of_columns(const IntMatrix& M, std::span<const std::size_t> idx) {
  if (idx.empty() || M.rows() == 0) return 0;
  IntMatrix sub = M.select_columns(idx);
  if (auto buf = detail::to_i64_buffer(sub)) {
    if (auto small = detail::bareiss_i64(*buf, sub.rows(), sub.cols())) return small->rank;
  }
  std::vector<Integer> data;
  data.reserve(sub.rows() * sub.cols());
  for (std::size_t i = 0; i < sub.rows(); ++i)
    for (std::size_t j = 0; j < sub.cols(); ++j) data.push_back(sub(i, j));
  return detail::bareiss_big(std::move(data), sub.rows(), sub.cols()).rank;
}

void require_ground(const VectorMatroid& m, std::size_t limit, const char* what) {
  const std::size_t cap = std::min(limit, kernels::kMaxTableGround);
  if (m.ground_size() > cap) {
    throw Error(ErrorCode::GroundTooLarge, std::string(what) + " needs ground size <= " +
                                               std::to_string(cap) + ", got " +
                                               std::to_string(m.ground_size()));
  }
}

IndexSet mask_to_set(Mask mask) {
  IndexSet out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

std::vector<Mask> flat_masks(const VectorMatroid& m) {
  const auto& table = m.rank_table();
  const std::size_t n = m.ground_size();
  std::vector<Mask> all;
  std::vector<Mask> level{kernels::closure_mask(table, n, 0)};
  for (;;) {
    all.insert(all.end(), level.begin(), level.end());
    if (table[level.front()] >= m.rank()) break;
    level = kernels::expand_flats(table, n, level);
  }
  return all;
}

std::vector<Mask> circuit_masks(const VectorMatroid& m) {
  const auto& table = m.rank_table();
  const std::size_t n = m.ground_size();
  std::vector<Mask> out;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (std::size_t{table[s]} + 1 != size) continue;
    bool minimal = true;
    for (Mask rest = s; rest && minimal; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      if (table[s & ~bit] != table[s]) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

// Per-element data preserved by every isomorphism.
struct Signature {
  bool loop = false;
  std::size_t parallel = 0;
  std::vector<std::size_t> circuits_by_size;
  std::vector<std::size_t> flats_by_rank;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct IsoData {
  std::size_t rank = 0;
  std::size_t loop_count = 0;
  std::vector<std::size_t> circuit_sizes;
  std::vector<std::size_t> flats_per_rank;
  std::vector<Signature> signatures;
};

IsoData iso_data(const VectorMatroid& m) {
  const std::size_t n = m.ground_size();
  const auto& table = m.rank_table();
  IsoData d;
  d.rank = m.rank();
  d.circuit_sizes.assign(n + 2, 0);
  d.flats_per_rank.assign(d.rank + 1, 0);
  d.signatures.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    auto& sig = d.signatures[e];
    sig.loop = table[Mask{1} << e] == 0;
    if (sig.loop) ++d.loop_count;
    sig.parallel = static_cast<std::size_t>(
        std::popcount(kernels::closure_mask(table, n, Mask{1} << e)));
    sig.circuits_by_size.assign(n + 2, 0);
    sig.flats_by_rank.assign(d.rank + 1, 0);
  }
  for (Mask c : circuit_masks(m)) {
    const auto size = static_cast<std::size_t>(std::popcount(c));
    ++d.circuit_sizes[size];
    for (std::size_t e : mask_to_set(c)) ++d.signatures[e].circuits_by_size[size];
  }
  for (Mask f : flat_masks(m)) {
    const std::size_t r = table[f];
    ++d.flats_per_rank[r];
    for (std::size_t e : mask_to_set(f)) ++d.signatures[e].flats_by_rank[r];
  }
  return d;
}

}  // namespace

VectorMatroid::VectorMatroid(IntMatrix columns)
    : columns_(std::move(columns)), cache_(std::make_shared<TableCache>()) {
  reduced_ = linalg::row_lattice_canonical(columns_);
  rank_ = reduced_.rows();
}

std::size_t VectorMatroid::rank_of(std::span<const std::size_t> subset) const {
  for (std::size_t i : subset) {
    if (i >= ground_size()) {
      throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(i + 1) +
                                                  " outside ground set of size " +
                                                  std::to_string(ground_size()));
    }
  }
  return rank_of_columns(reduced_, subset);
}

std::size_t VectorMatroid::rank_of_mask(Mask mask) const {
  const IndexSet s = mask_to_set(mask);
  return rank_of(s);
}

const kernels::RankTable& VectorMatroid::rank_table() const {
  require_ground(*this, kernels::kMaxTableGround, "rank table");
  std::call_once(cache_->once, [this] { cache_->table = kernels::rank_table(reduced_); });
  return cache_->table;
}

IndexSet closure(const VectorMatroid& m, std::span<const std::size_t> subset) {
  const std::size_t base = m.rank_of(subset);
  IndexSet out(subset.begin(), subset.end());
  IndexSet probe(subset.begin(), subset.end());
  for (std::size_t i = 0; i < m.ground_size(); ++i) {
    if (std::find(subset.begin(), subset.end(), i) != subset.end()) continue;
    probe.push_back(i);
    if (m.rank_of(probe) == base) out.push_back(i);
    probe.pop_back();
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Flat> all_flats(const VectorMatroid& m, std::size_t limit) {
  require_ground(m, limit, "flat enumeration");
  const auto& table = m.rank_table();
  std::vector<Flat> out;
  for (Mask f : flat_masks(m)) out.push_back(Flat{mask_to_set(f), table[f]});
  std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.elements < b.elements;
  });
  return out;
}

std::vector<IndexSet> circuits(const VectorMatroid& m, std::size_t limit) {
  require_ground(m, limit, "circuit enumeration");
  std::vector<IndexSet> out;
  for (Mask c : circuit_masks(m)) out.push_back(mask_to_set(c));
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

IndexSet loops(const VectorMatroid& m) {
  IndexSet out;
  for (std::size_t j = 0; j < m.ground_size(); ++j)
    if (m.columns().column_is_zero(j)) out.push_back(j);
  return out;
}

std::vector<IndexSet> components(const VectorMatroid& m) {
  const std::size_t n = m.ground_size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  IndexSet basis;
  std::vector<bool> in_basis(n, false);
  for (std::size_t j = 0; j < n && basis.size() < m.rank(); ++j) {
    basis.push_back(j);
    if (m.rank_of(basis) == basis.size()) {
      in_basis[j] = true;
    } else {
      basis.pop_back();
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (in_basis[e] || m.columns().column_is_zero(e)) continue;
    // Fundamental circuit of e: the basis elements it can replace.
    for (std::size_t k = 0; k < basis.size(); ++k) {
      IndexSet swapped = basis;
      swapped[k] = e;
      if (m.rank_of(swapped) == basis.size()) unite(e, basis[k]);
    }
  }
  std::vector<IndexSet> classes;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t root = find(j);
    if (slot[root] == n) {
      slot[root] = classes.size();
      classes.emplace_back();
    }
    classes[slot[root]].push_back(j);
  }
  return classes;
}

bool is_uniform(const VectorMatroid& m, std::size_t limit) {
  require_ground(m, limit, "uniformity test");
  const auto& table = m.rank_table();
  const std::size_t r = m.rank();
  for (Mask s = 0; s < (Mask{1} << m.ground_size()); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= r && table[s] != size) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> is_isomorphic(const VectorMatroid& a,
                                                      const VectorMatroid& b, std::size_t limit) {
  const std::size_t n = a.ground_size();
  if (b.ground_size() != n) return std::nullopt;
  require_ground(a, limit, "isomorphism search");
  if (a.rank() != b.rank()) return std::nullopt;

  const IsoData da = iso_data(a);
  const IsoData db = iso_data(b);
  if (da.loop_count != db.loop_count || da.circuit_sizes != db.circuit_sizes ||
      da.flats_per_rank != db.flats_per_rank) {
    return std::nullopt;
  }
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (da.signatures[i] == db.signatures[j]) candidates[i].push_back(j);
    if (candidates[i].empty()) return std::nullopt;
  }
  return kernels::find_isomorphism(a.rank_table(), b.rank_table(), n, candidates);
}

}  // namespace hypertoric::matroid
