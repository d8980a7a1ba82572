#include "ppsbreak/attack.hpp"

#include <random>

#include "ppsbreak/cipher.hpp"
#include "ppsbreak/diffusion.hpp"
#include "ppsbreak/error.hpp"

namespace ppsbreak {

namespace {

void require_same_size(const RgbImage& a, const RgbImage& b, const char* what) {
    if (!a.same_size(b)) {
        throw DimensionError(std::string(what) + ": images must have identical dimensions");
    }
}

std::uint64_t splitmix64(std::uint64_t state) {
    std::uint64_t z = state + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

RgbImage random_image(std::mt19937_64& rng, std::size_t h, std::size_t w) {
    RgbImage img(h, w);
    std::uniform_int_distribution<int> byte(0, 255);
    for (Pixel& p : img.pixels()) {
        p = Pixel{static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
                  static_cast<std::uint8_t>(byte(rng))};
    }
    return img;
}

DiffusionKeySet random_diffusion_keys(std::mt19937_64& rng) {
    DiffusionKeySet dk;
    std::uniform_int_distribution<int> byte(0, 255);
    for (auto& v : dk.bytes) v = static_cast<std::uint8_t>(byte(rng));
    return dk;
}

} // namespace

EquivalentKey derive_equivalent_key(const RgbImage& plain, const RgbImage& cipher) {
    require_same_size(plain, cipher, "derive_equivalent_key");
    return EquivalentKey{vertical_diffuse(horizontal_diffuse(plain)) ^ cipher};
}

RgbImage decrypt_with_equivalent_key(const RgbImage& cipher, const EquivalentKey& ek) {
    require_same_size(cipher, ek.image, "decrypt_with_equivalent_key");
    return horizontal_undiffuse(vertical_undiffuse(cipher ^ ek.image));
}

RgbImage encrypt_with_equivalent_key(const RgbImage& plain, const EquivalentKey& ek) {
    require_same_size(plain, ek.image, "encrypt_with_equivalent_key");
    return vertical_diffuse(horizontal_diffuse(plain)) ^ ek.image;
}

RgbImage equivalent_key_from_secret(const SecretKey& key, std::size_t height,
                                    std::size_t width) {
    const DiffusionKeySet dk = diffusion_keys(key);
    const RgbImage zero(height, width);
    return vertical_diffuse(horizontal_diffuse(xkey_image(key, height, width))) ^
           vertical_diffuse(keyed_horizontal_diffuse(zero, dk)) ^
           keyed_vertical_diffuse(zero, dk) ^ cks_image(key, height, width);
}

RgbImage differential_pattern(const RgbImage& delta) {
    return vertical_diffuse(horizontal_diffuse(delta));
}

BitplaneDiffReport bitplane_diff_report(const RgbImage& a, const RgbImage& b) {
    require_same_size(a, b, "bitplane_diff_report");
    BitplaneDiffReport report;
    for (std::size_t k = 0; k < a.pixel_count(); ++k) {
        const std::array<std::uint8_t, 3> diff = {
            static_cast<std::uint8_t>(a[k].r ^ b[k].r),
            static_cast<std::uint8_t>(a[k].g ^ b[k].g),
            static_cast<std::uint8_t>(a[k].b ^ b[k].b)};
        if (diff[0] || diff[1] || diff[2]) ++report.changed_pixels;
        for (std::size_t channel = 0; channel < 3; ++channel) {
            for (int bit = 0; bit < 8; ++bit) {
                report.bit_counts[channel][bit] += (diff[channel] >> bit) & 1;
            }
        }
    }
    return report;
}

LemmaCheckReport verify_lemmas(int trials, std::uint64_t rng_seed) {
    if (trials < 1) {
        throw Error("verify_lemmas requires at least one trial");
    }
    // Fixed palette covering the degenerate shapes, then random sizes.
    static constexpr std::array<std::pair<std::size_t, std::size_t>, 8> palette = {{
        {1, 1}, {1, 7}, {5, 1}, {4, 4}, {16, 16}, {3, 8}, {2, 2}, {17, 9},
    }};

    LemmaCheckReport report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(rng_seed + static_cast<std::uint64_t>(t)));
        std::size_t h, w;
        if (static_cast<std::size_t>(t) < palette.size()) {
            h = palette[static_cast<std::size_t>(t)].first;
            w = palette[static_cast<std::size_t>(t)].second;
        } else {
            std::uniform_int_distribution<std::size_t> dim(1, 24);
            h = dim(rng);
            w = dim(rng);
        }
        const RgbImage x = random_image(rng, h, w);
        const RgbImage zero(h, w);
        const DiffusionKeySet dk = random_diffusion_keys(rng);

        if (keyed_horizontal_diffuse(x, dk) ==
            (horizontal_diffuse(x) ^ keyed_horizontal_diffuse(zero, dk))) {
            ++report.keyed_hd_separation_passes;
        }
        if (keyed_vertical_diffuse(x, dk) ==
            (vertical_diffuse(x) ^ keyed_vertical_diffuse(zero, dk))) {
            ++report.keyed_vd_separation_passes;
        }

        const SecretKey key = sample_secret_key(rng);
        if (encrypt_mpps09(x, key) ==
            (vertical_diffuse(horizontal_diffuse(x)) ^ equivalent_key_from_secret(key, h, w))) {
            ++report.equivalent_form_passes;
        }
    }
    return report;
}

} // namespace ppsbreak
