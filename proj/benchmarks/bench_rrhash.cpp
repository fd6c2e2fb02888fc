#include "desk_corpus.hpp"

#include "rrhash/attacks.hpp"
#include "rrhash/hash.hpp"
#include "rrhash/imaging.hpp"
#include "rrhash/texture.hpp"

#include <benchmark/benchmark.h>

using namespace rrhash;

namespace {

const SecretKeys kKeys{1, 2};

const RgbImage& desk() {
    static const RgbImage img = testing::desk_image(0);
    return img;
}

const CcaModel& model() {
    static const CcaModel m = [] {
        const Config c = preset("cca-default");
        std::vector<FeatureBundle> bundles;
        for (int i = 0; i < 120; ++i) bundles.push_back(extract_features(testing::training_image(i), c, 1));
        return fit_model(bundles, c);
    }();
    return m;
}

void BM_HashConcat(benchmark::State& state) {
    const Config c = preset("concat-default");
    for (auto _ : state) benchmark::DoNotOptimize(generate_hash(desk(), c, nullptr, kKeys));
}
BENCHMARK(BM_HashConcat)->Unit(benchmark::kMillisecond);

void BM_HashCca(benchmark::State& state) {
    const Config c = preset("cca-default");
    const CcaModel& m = model();
    for (auto _ : state) benchmark::DoNotOptimize(generate_hash(desk(), c, &m, kKeys));
}
BENCHMARK(BM_HashCca)->Unit(benchmark::kMillisecond);

void BM_Preprocess(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(preprocess(desk(), side, 3, 1.0));
}
BENCHMARK(BM_Preprocess)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_LocalTexture(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const LumaImage lum = luminance(preprocess(desk(), side, 3, 1.0));
    const RibbonMap m = make_ribbons(side, n);
    QuadtreeParams p;
    for (auto _ : state) benchmark::DoNotOptimize(local_texture_vector(lum, m, p));
}
BENCHMARK(BM_LocalTexture)->Args({256, 32})->Args({512, 67})->Unit(benchmark::kMillisecond);

void BM_Glcm(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const LumaImage lum = luminance(preprocess(desk(), side, 3, 1.0));
    for (auto _ : state) benchmark::DoNotOptimize(glcm_scalars(glcm(lum, 1, GlcmDirection::deg0, 16)));
}
BENCHMARK(BM_Glcm)->Arg(256)->Arg(512)->Unit(benchmark::kMicrosecond);

void BM_AttackMatrix(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(full_attack_matrix(desk(), 1));
}
BENCHMARK(BM_AttackMatrix)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
