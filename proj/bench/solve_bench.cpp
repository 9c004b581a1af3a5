/*
 * Copyright 2026 The arck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial vs OpenMP root-split solves on compiled positions.

#include <benchmark/benchmark.h>

#include "arck/arck_compiler.hpp"
#include "arck/cl_compiler.hpp"
#include "arck/verifier.hpp"

namespace {

using namespace arck;

ArcKPosition compiled(const char* formula, Backend b)
{
    return compile_poscnf_to_arck(parse_formula(formula), b).position;
}

void BM_SolveArcK(benchmark::State& state, const char* formula, Backend b, bool parallel)
{
    ArcKPosition pos = compiled(formula, b);
    SolveOptions opts;
    opts.parallel = parallel;
    for (auto _ : state) benchmark::DoNotOptimize(solve(pos, opts));
    state.counters["edges"] = static_cast<double>(pos.graph.edge_count());
}

void BM_SolveCL(benchmark::State& state, CLVariant v, bool parallel)
{
    CLInstance inst = compile_variant(parse_formula("p poscnf 2 1\n1 2 0\n"), v).instance;
    SolveOptions opts;
    opts.parallel = parallel;
    for (auto _ : state) benchmark::DoNotOptimize(solve_cl(inst, opts));
}

void BM_VerifyMatrix(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(verify_matrix());
}

} // namespace

BENCHMARK_CAPTURE(BM_SolveArcK, x_or_y_general_serial, "p poscnf 2 1\n1 2 0\n", Backend::General, false);
BENCHMARK_CAPTURE(BM_SolveArcK, x_or_y_general_parallel, "p poscnf 2 1\n1 2 0\n", Backend::General, true);
BENCHMARK_CAPTURE(BM_SolveArcK, x_or_y_cartesian_serial, "p poscnf 2 1\n1 2 0\n", Backend::Cartesian, false);
BENCHMARK_CAPTURE(BM_SolveArcK, x_or_y_cartesian_parallel, "p poscnf 2 1\n1 2 0\n", Backend::Cartesian, true);
BENCHMARK_CAPTURE(BM_SolveCL, mp_serial, CLVariant::MiserePlay, false);
BENCHMARK_CAPTURE(BM_SolveCL, mp_parallel, CLVariant::MiserePlay, true);
BENCHMARK(BM_VerifyMatrix);

BENCHMARK_MAIN();
