#include <benchmark/benchmark.h>

#include <random>

#include "chemtree/encoding.hpp"
#include "chemtree/enumeration.hpp"
#include "chemtree/extremal.hpp"
#include "chemtree/huffman.hpp"
#include "chemtree/indices.hpp"

namespace {

using namespace chemtree;

void BM_EnumerateFree(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        for_each_chemical_tree(order, 4, [&](const ChemicalTree&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateFree)->Arg(10)->Arg(12)->Arg(14);

void BM_EnumerateRooted(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        for_each_pendent_rooted(order, 4, [&](const PendentRootedTree&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateRooted)->Arg(10)->Arg(12);

void BM_CanonicalForm(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<ChemicalTree> trees;
    EnumerationRequest req;
    req.order = static_cast<int>(state.range(0));
    for (const ChemicalTree& t : enumerate_chemical_trees(req)) trees.push_back(t);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(trees[i++ % trees.size()]));
    }
}
BENCHMARK(BM_CanonicalForm)->Arg(10)->Arg(14);

void BM_WienerEdgeDecomposition(benchmark::State& state) {
    EnumerationRequest req;
    req.order = static_cast<int>(state.range(0));
    auto trees = enumerate_chemical_trees(req);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wiener(trees[i++ % trees.size()]));
    }
}
BENCHMARK(BM_WienerEdgeDecomposition)->Arg(12);

void BM_VwwiPairwise(benchmark::State& state) {
    EnumerationRequest req;
    req.order = static_cast<int>(state.range(0));
    auto trees = enumerate_chemical_trees(req);
    std::vector<VertexWeightedTree> weighted;
    for (const ChemicalTree& t : trees)
        weighted.emplace_back(t, std::vector<double>(t.order(), 1.0));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vertex_weighted_wiener_pairwise(weighted[i++ % weighted.size()]));
    }
}
BENCHMARK(BM_VwwiPairwise)->Arg(12);

void BM_Huffman(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<GeneratingTuple> tuples;
    for (int i = 0; i < 64; ++i) tuples.push_back(random_degree_monotone_tuple(rng, 8, 9));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(generalized_huffman(tuples[i++ % tuples.size()]));
    }
}
BENCHMARK(BM_Huffman);

void BM_MinimizeBruteComposite(benchmark::State& state) {
    Objective composite = Objective::ad_hoc(DegreeCostVector{0.0, 14.534, 20.172, 17.015}, 1.0);
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimize_brute(order, composite, false));
    }
}
BENCHMARK(BM_MinimizeBruteComposite)->Arg(12)->Arg(14);

void BM_PruferOracle(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(prufer_oracle_count(order, 4));
    }
}
BENCHMARK(BM_PruferOracle)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
