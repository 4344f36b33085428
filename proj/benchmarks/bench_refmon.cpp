#include <benchmark/benchmark.h>

#include "refmon/approx.hpp"
#include "refmon/limits.hpp"
#include "refmon/monoid.hpp"
#include "refmon/regular.hpp"
#include "refmon/triple.hpp"

using namespace refmon;

namespace {

// (Z/n ⊔ 0)^k, 2 <= n
Monoid block_power(std::uint32_t n, std::size_t k) {
  return BlockSum(std::vector<std::uint32_t>(k, n)).expand();
}

// G_e spanned by the coordinates in e
StructureTriple cube_triple() {
  AbelianGroup const    g({2, 2, 2});
  std::vector<Subgroup> subs;
  for (Elem e = 0; e < 8; ++e) {
    std::vector<GroupElem> gens;
    for (std::uint32_t i = 0; i < 3; ++i) {
      if (e & (1u << i)) {
        Tuple t(3, 0);
        t[i] = 1;
        gens.push_back(g.encode(t));
      }
    }
    subs.push_back(Subgroup::generated(g, gens));
  }
  return StructureTriple{semilattices::boolean(3), g, subs};
}

}  // namespace

static void BM_HasRefinement(benchmark::State& state) {
  auto const m = block_power(static_cast<std::uint32_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(has_refinement(m, m.size()));
  }
  state.SetLabel(std::to_string(m.size()) + " elements");
}
BENCHMARK(BM_HasRefinement)->DenseRange(1, 5);

static void BM_CharacterizeRefinement(benchmark::State& state) {
  auto const m = block_power(static_cast<std::uint32_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(characterize_refinement(m, m.size()));
  }
}
BENCHMARK(BM_CharacterizeRefinement)->DenseRange(1, 5);

static void BM_CheckMvp(benchmark::State& state) {
  auto const m = realize_from_triple(cube_triple()).monoid();
  auto const d = decompose_regular(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_mvp(d).holds);
  }
}
BENCHMARK(BM_CheckMvp);

static void BM_BlocksRetract(benchmark::State& state) {
  auto const m = block_power(static_cast<std::uint32_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(blocks_retract(m, m.size()).eps.size());
  }
}
BENCHMARK(BM_BlocksRetract)->DenseRange(1, 4);

static void BM_Approximate(benchmark::State& state) {
  auto const                              t = cube_triple();
  std::vector<std::pair<Elem, GroupElem>> x;
  for (Elem e = 1; e <= static_cast<Elem>(state.range(0)); ++e) {
    Tuple bits(3, 0);
    for (std::uint32_t i = 0; i < 3; ++i) {
      bits[i] = (e >> i) & 1u;
    }
    x.emplace_back(e, t.group.encode(bits));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(approximate(t, x).n_size);
  }
}
BENCHMARK(BM_Approximate)->DenseRange(1, 3);
BENCHMARK_MAIN();
