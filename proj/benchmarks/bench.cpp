#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "sigmagrp/checks.hpp"
#include "sigmagrp/perm_group.hpp"
#include "sigmagrp/section.hpp"
#include "sigmagrp/toolbox.hpp"

namespace {

using namespace sigmagrp;

PermGroup symmetric(int m) {
  std::vector<int> cycle(m);
  std::iota(cycle.begin(), cycle.end(), 0);
  std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
  std::vector<int> swap01(m);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  return PermGroup(m, {Permutation::from_images(swap01), Permutation::from_images(cycle)});
}

PermGroup dihedral(int m) {
  std::vector<int> rot(m);
  for (int i = 0; i < m; ++i) rot[i] = (i + 1) % m;
  std::vector<int> flip(m);
  for (int i = 0; i < m; ++i) flip[i] = (m - i) % m;
  return PermGroup(m, {Permutation::from_images(rot), Permutation::from_images(flip)});
}

void BM_chain_symmetric(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PermGroup g = symmetric(m);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_chain_symmetric)->Arg(10)->Arg(20)->Arg(40);

void BM_chain_dihedral(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PermGroup g = dihedral(m);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_chain_dihedral)->Arg(100)->Arg(400)->Arg(1600);

void BM_membership(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const PermGroup g = symmetric(m);
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 0);
  std::reverse(images.begin(), images.end());
  const Permutation probe = Permutation::from_images(images);
  g.order();  // force the chain before timing sifts
  for (auto _ : state) benchmark::DoNotOptimize(g.contains(probe));
}
BENCHMARK(BM_membership)->Arg(10)->Arg(20)->Arg(40);

void BM_nilpotent_check(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const PermGroup g = dihedral(m);
  const Section s(g, PermGroup::trivial(m));
  const Partition sigma = Partition::singletons(g.prime_set());
  for (auto _ : state) benchmark::DoNotOptimize(is_sigma_nilpotent(s, sigma).verdict);
}
BENCHMARK(BM_nilpotent_check)->Arg(100)->Arg(400)->Arg(1600);

void BM_normal_closure(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const PermGroup g = symmetric(m);
  std::vector<int> tr(m);
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  const PermGroup h(m, {Permutation::from_images(tr)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_closure(g, h).order());
  }
}
BENCHMARK(BM_normal_closure)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
