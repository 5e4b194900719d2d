// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hypertoric/kernels.hpp"

namespace {

using namespace hypertoric;

IntMatrix bench_matrix(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<long> entry(-3, 3);
  IntMatrix m(5, n);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

void BM_RankTable(benchmark::State& state) {
  const IntMatrix M = bench_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank_table(M));
}
void BM_RankTableReference(benchmark::State& state) {
  const IntMatrix M = bench_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rank_table_reference(M));
}
BENCHMARK(BM_RankTable)->Arg(10)->Arg(14)->Arg(16);
BENCHMARK(BM_RankTableReference)->Arg(10)->Arg(14)->Arg(16);

template <bool Parallel>
void BM_AllFlats(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const kernels::RankTable table = kernels::rank_table(bench_matrix(n));
  for (auto _ : state) {
    std::vector<kernels::Mask> level{kernels::closure_mask(table, n, 0)};
    std::size_t total = 1;
    while (!level.empty()) {
      level = Parallel ? kernels::expand_flats(table, n, level)
                       : kernels::expand_flats_reference(table, n, level);
      total += level.size();
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_AllFlats<true>)->Name("BM_ExpandFlats")->Arg(12)->Arg(16);
BENCHMARK(BM_AllFlats<false>)->Name("BM_ExpandFlatsReference")->Arg(12)->Arg(16);

struct GammaInput {
  std::vector<std::vector<std::int64_t>> reps;
  std::vector<std::int64_t> ls;
  std::int64_t L = 1;
};

GammaInput gamma_input() {
  // Four classes of multiplicity 7..10 over a rank-3 simplification.
  GammaInput in;
  in.ls = {7, 8, 9, 10};
  for (auto l : in.ls) in.L *= l;
  const std::vector<std::vector<std::int64_t>> rep{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}};
  for (const auto& row : rep) {
    std::vector<std::int64_t> r;
    for (std::size_t k = 0; k < 4; ++k) r.push_back(row[k] * (in.L / in.ls[k]) % in.L);
    in.reps.push_back(r);
  }
  return in;
}

void BM_GammaMembers(benchmark::State& state) {
  const GammaInput in = gamma_input();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::gamma_members(in.reps, in.ls, in.L));
}
void BM_GammaMembersReference(benchmark::State& state) {
  const GammaInput in = gamma_input();
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::gamma_members_reference(in.reps, in.ls, in.L));
}
BENCHMARK(BM_GammaMembers);
BENCHMARK(BM_GammaMembersReference);

template <bool Parallel>
void BM_Isomorphism(benchmark::State& state) {
  // U_{2,n} against a relabeling of itself: many automorphisms, deep search.
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  IntMatrix a(2, n);
  for (std::size_t j = 0; j < n; ++j) {
    a(0, j) = 1;
    a(1, j) = static_cast<long>(j);
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  IntMatrix b(2, n);
  for (std::size_t j = 0; j < n; ++j) {
    b(0, perm[j]) = a(0, j);
    b(1, perm[j]) = a(1, j);
  }
  const auto ta = kernels::rank_table(a), tb = kernels::rank_table(b);
  std::vector<std::vector<std::size_t>> cand(n, std::vector<std::size_t>(n));
  for (auto& c : cand) std::iota(c.begin(), c.end(), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? kernels::find_isomorphism(ta, tb, n, cand)
                                      : kernels::find_isomorphism_reference(ta, tb, n, cand));
  }
}
BENCHMARK(BM_Isomorphism<true>)->Name("BM_FindIsomorphism")->Arg(8)->Arg(10);
BENCHMARK(BM_Isomorphism<false>)->Name("BM_FindIsomorphismReference")->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
