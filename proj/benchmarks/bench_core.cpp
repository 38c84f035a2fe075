#include <benchmark/benchmark.h>

#include "kleinian/covergraph.hpp"
#include "kleinian/permgroup.hpp"
#include "kleinian/registry.hpp"
#include "kleinian/residue.hpp"
#include "kleinian/wordsearch.hpp"

using namespace kleinian;

static void BM_FieldMul(benchmark::State& state) {
    FieldElem x(Rational(3, 7), Rational(-2, 5), Rational(1, 3), Rational(4, 9));
    FieldElem y(Rational(-1, 2), Rational(5, 11), Rational(2, 7), Rational(-3, 4));
    for (auto _ : state) {
        FieldElem z = x * y;
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_FieldMul);

static void BM_MatrixMul(benchmark::State& state) {
    const ProjectiveMatrix& g = registry().mat("g");
    const ProjectiveMatrix& h = registry().mat("h");
    for (auto _ : state) {
        ProjectiveMatrix m = g * h;
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_MatrixMul);

static void BM_EnumerateBallDelta0(benchmark::State& state) {
    GeneratedGroup delta0 = GeneratedGroup::delta0();
    for (auto _ : state) {
        BallIndex ball = enumerate_ball(delta0, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(ball.size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateBallDelta0)->DenseRange(2, 8, 2);

static void BM_ExpressMutationConjugate(benchmark::State& state) {
    GeneratedGroup delta0 = GeneratedGroup::delta0();
    ExtendedIsometry target = evaluate_registry_word("m1*t*m1^-1");
    for (auto _ : state) {
        auto w = express(target, delta0, 10);
        benchmark::DoNotOptimize(w.has_value());
    }
}
BENCHMARK(BM_ExpressMutationConjugate);

static void BM_PermClosure660(benchmark::State& state) {
    const auto& phi = phi_images();
    for (auto _ : state) {
        PermGroup g = PermGroup::closure({phi.at("a0"), phi.at("a1"), phi.at("f0")});
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_PermClosure660);

static void BM_ReduceMatrix(benchmark::State& state) {
    const ProjectiveMatrix& t = registry().mat("t");
    for (auto _ : state) {
        PSL2F5 r = reduce_matrix(t);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ReduceMatrix);

static void BM_BuildClosedCover(benchmark::State& state) {
    for (auto _ : state) {
        CoverGraph g = build_closed(3, 3);
        benchmark::DoNotOptimize(g.pieces.size());
    }
}
BENCHMARK(BM_BuildClosedCover);

BENCHMARK_MAIN();
