#include <benchmark/benchmark.h>

#include <random>

#include "ppsbreak/attack.hpp"
#include "ppsbreak/cipher.hpp"
#include "ppsbreak/diffusion.hpp"
#include "ppsbreak/stats.hpp"

using namespace ppsbreak;

namespace {

RgbImage random_image(std::mt19937_64& rng, std::size_t h, std::size_t w) {
    RgbImage img(h, w);
    std::uniform_int_distribution<int> byte(0, 255);
    for (Pixel& p : img.pixels()) {
        p = Pixel{static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
                  static_cast<std::uint8_t>(byte(rng))};
    }
    return img;
}

SecretKey bench_key() {
    std::mt19937_64 rng(1);
    return sample_secret_key(rng);
}

void BM_HorizontalDiffuse(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto side = static_cast<std::size_t>(state.range(0));
    const RgbImage img = random_image(rng, side, side);
    for (auto _ : state) {
        benchmark::DoNotOptimize(horizontal_diffuse(img));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * 3 * side * side);
}
BENCHMARK(BM_HorizontalDiffuse)->Arg(64)->Arg(256)->Arg(512);

void BM_VerticalDiffuse(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto side = static_cast<std::size_t>(state.range(0));
    const RgbImage img = random_image(rng, side, side);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vertical_diffuse(img));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * 3 * side * side);
}
BENCHMARK(BM_VerticalDiffuse)->Arg(64)->Arg(256)->Arg(512);

void BM_KeystreamImage(benchmark::State& state) {
    const SecretKey key = bench_key();
    const auto side = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cks_image(key, side, side));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * side * side);
}
BENCHMARK(BM_KeystreamImage)->Arg(64)->Arg(256)->Arg(512);

void BM_EncryptPps09(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const SecretKey key = bench_key();
    const auto side = static_cast<std::size_t>(state.range(0));
    const RgbImage plain = random_image(rng, side, side);
    for (auto _ : state) {
        benchmark::DoNotOptimize(encrypt_pps09(plain, key));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * 3 * side * side);
}
BENCHMARK(BM_EncryptPps09)->Arg(64)->Arg(256)->Arg(512);

void BM_EncryptMpps09(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const SecretKey key = bench_key();
    const auto side = static_cast<std::size_t>(state.range(0));
    const RgbImage plain = random_image(rng, side, side);
    for (auto _ : state) {
        benchmark::DoNotOptimize(encrypt_mpps09(plain, key));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * 3 * side * side);
}
BENCHMARK(BM_EncryptMpps09)->Arg(64)->Arg(256)->Arg(512);

void BM_DeriveEquivalentKey(benchmark::State& state) {
    std::mt19937_64 rng(6);
    const SecretKey key = bench_key();
    const auto side = static_cast<std::size_t>(state.range(0));
    const RgbImage plain = random_image(rng, side, side);
    const RgbImage cipher = encrypt_mpps09(plain, key);
    for (auto _ : state) {
        benchmark::DoNotOptimize(derive_equivalent_key(plain, cipher));
    }
}
BENCHMARK(BM_DeriveEquivalentKey)->Arg(256)->Arg(512);

void BM_RandomnessBatterySingleKey(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_randomness_battery(1, side, side, seed++, 1));
    }
}
BENCHMARK(BM_RandomnessBatterySingleKey)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
