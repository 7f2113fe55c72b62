// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "dimalg/bracket.hpp"
#include "dimalg/sampling.hpp"

namespace {

using namespace dimalg;

ModelPtr contact_model() {
    return make_model({"q", "p", "z"}, {}, {"u"});
}

JacobiData contact_data(const ModelPtr& m) {
    const auto& vars = m->vars();
    auto zero = Poly::zero(vars);
    std::vector<std::vector<Poly>> lambda(3, std::vector<Poly>(3, zero));
    lambda[0][1] = Poly::constant(vars, 1);
    lambda[1][0] = Poly::constant(vars, -1);
    lambda[2][1] = Poly::variable(vars, "p");
    lambda[1][2] = -lambda[2][1];
    std::vector<Poly> reeb{zero, zero, Poly::constant(vars, 1)};
    return JacobiData(m, lambda, reeb);
}

void BM_PolyMul(benchmark::State& state) {
    auto table = make_var_table({"x", "y", "z"}, {"t"});
    Sampler s(1);
    Poly a = s.poly(table, 4, 6);
    Poly b = s.poly(table, 4, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul);

void BM_EvaluateContact(benchmark::State& state) {
    ModelPtr m = contact_model();
    BracketSpec spec = from_jacobi(contact_data(m));
    Sampler s(2);
    DimElement a = s.element(m, 3, 3);
    DimElement b = s.element(m, 3, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate(spec, a, b));
}
BENCHMARK(BM_EvaluateContact);

void BM_VerifyContact(benchmark::State& state) {
    ModelPtr m = contact_model();
    BracketSpec spec = from_jacobi(contact_data(m));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_poisson(spec, kDefaultSeed, 25));
}
BENCHMARK(BM_VerifyContact);

} // namespace

BENCHMARK_MAIN();
