/*
   Copyright 2026 The prange authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>

#include "prange/action.hpp"
#include "prange/gf.hpp"
#include "prange/msets.hpp"
#include "prange/polyrange.hpp"
#include "prange/search.hpp"

using namespace prange;

namespace {

std::vector<Elem> random_elems(const Field& fq, std::size_t n,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> d(0, fq.q() - 1);
  std::vector<Elem> out(n);
  for (auto& e : out) e = fq.elem(d(rng));
  return out;
}

void FieldMulTable(benchmark::State& state) {
  Field fq(3, 3);  // q = 27, table path
  auto xs = random_elems(fq, 4096, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    Elem r = fq.mul(xs[i & 4095], xs[(i + 1) & 4095]);
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(FieldMulTable);

void FieldMulFormula(benchmark::State& state) {
  // q = 8192 sits above the table threshold
  Field fq(2, 13,
           std::vector<std::uint16_t>{1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1});
  auto xs = random_elems(fq, 4096, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    Elem r = fq.mul(xs[i & 4095], xs[(i + 1) & 4095]);
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(FieldMulFormula);

void ShortcutValues(benchmark::State& state) {
  Field fq(13);
  PointedSupport ps{fq.elem(5),
                    SupportSet::checked({fq.elem(0), fq.elem(2), fq.elem(6),
                                         fq.elem(11)},
                                        fq)};
  for (auto _ : state) {
    auto vals = fast_values(ps, fq);
    benchmark::DoNotOptimize(vals);
  }
}
BENCHMARK(ShortcutValues);

void ExpandAndEvaluate(benchmark::State& state) {
  Field fq(13);
  PointedSupport ps{fq.elem(5),
                    SupportSet::checked({fq.elem(0), fq.elem(2), fq.elem(6),
                                         fq.elem(11)},
                                        fq)};
  for (auto _ : state) {
    Poly f = minimal_poly(ps, fq);
    for (Elem s : ps.support.elems) {
      benchmark::DoNotOptimize(eval(f, s, fq));
    }
  }
}
BENCHMARK(ExpandAndEvaluate);

void EnumerateImage(benchmark::State& state) {
  Field fq(13);
  EnumOptions opts;
  opts.prune = state.range(0) != 0;
  for (auto _ : state) {
    auto image = enumerate_range_F(4, fq, opts);
    benchmark::DoNotOptimize(image.ranges.data());
  }
}
BENCHMARK(EnumerateImage)->Arg(0)->Arg(1);

void CountAdmissible(benchmark::State& state) {
  Field fq(13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_M_exact(4, fq));
  }
}
BENCHMARK(CountAdmissible);

void OrbitUnionFind(benchmark::State& state) {
  Field fq(11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_orbits_enumerated(3, fq));
  }
}
BENCHMARK(OrbitUnionFind);

}  // namespace

BENCHMARK_MAIN();
