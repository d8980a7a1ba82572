#include "ppsbreak/chaos.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "ppsbreak/error.hpp"
#include "ppsbreak/keyspec.hpp"

namespace ppsbreak {

namespace {

double wrap_two_pi(double v) {
    double r = std::fmod(v, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // r + 2*pi can round up to exactly 2*pi for tiny negative r.
    if (r >= kTwoPi) r = 0.0;
    return r;
}

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw InvalidStateError(std::string("non-finite ") + name + " in chaotic map input");
    }
}

} // namespace

StandardMapState standard_map_step(double x, double y, double k) {
    const double kick = k * std::sin(y);
    const double xn = wrap_two_pi(x + kick);
    const double yn = wrap_two_pi(y + xn + kick);
    return StandardMapState{xn, yn};
}

std::vector<StandardMapState> iterate_standard_map(double x, double y, double k,
                                                   std::size_t n) {
    require_finite(x, "x");
    require_finite(y, "y");
    require_finite(k, "K");
    if (n == 0) {
        throw Error("orbit length must be at least 1");
    }
    std::vector<StandardMapState> orbit;
    orbit.reserve(n);
    StandardMapState s{x, y};
    for (std::size_t i = 0; i < n; ++i) {
        s = standard_map_step(s.x, s.y, k);
        orbit.push_back(s);
    }
    return orbit;
}

std::vector<double> iterate_logistic(double z, std::size_t n) {
    require_finite(z, "z");
    if (z < 0.0 || z > 1.0) {
        throw InvalidStateError("logistic state outside [0, 1]");
    }
    if (n == 0) {
        throw Error("orbit length must be at least 1");
    }
    std::vector<double> orbit;
    orbit.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        z = 4.0 * z * (1.0 - z);
        orbit.push_back(z);
    }
    return orbit;
}

std::uint8_t byte_from_angle(double v) {
    const long q = static_cast<long>(std::floor(256.0 * v / kTwoPi));
    return static_cast<std::uint8_t>(q > 255 ? 255 : q);
}

std::uint8_t byte_from_unit(double z) {
    const long q = static_cast<long>(std::floor(256.0 * z));
    return static_cast<std::uint8_t>(q > 255 ? 255 : q);
}

void validate_secret_key(const SecretKey& key) {
    if (!std::isfinite(key.x0) || key.x0 <= 0.0 || key.x0 >= kTwoPi) {
        throw KeyFormatError("x0 must lie strictly inside (0, 2*pi)");
    }
    if (!std::isfinite(key.y0) || key.y0 <= 0.0 || key.y0 >= kTwoPi) {
        throw KeyFormatError("y0 must lie strictly inside (0, 2*pi)");
    }
    if (!std::isfinite(key.k) || key.k <= 18.0) {
        throw KeyFormatError("K must be greater than 18");
    }
    if (key.n <= 100 || key.n >= 1100) {
        throw KeyFormatError("N must satisfy 100 < N < 1100");
    }
    for (const auto* digits : {&key.x0_digits, &key.y0_digits, &key.k_digits}) {
        for (std::uint8_t d : *digits) {
            if (d > 9) {
                throw KeyFormatError("digit list entries must be decimal digits 0..9");
            }
        }
    }
}

XorKeySet xor_keys(const SecretKey& key) {
    validate_secret_key(key);
    XorKeySet out;
    out.bytes[0] = byte_from_angle(key.x0);
    out.bytes[1] = byte_from_angle(key.y0);
    out.bytes[2] = static_cast<std::uint8_t>(std::floor(std::fmod(key.k, 256.0)));
    out.bytes[3] = static_cast<std::uint8_t>(key.n % 256);
    return out;
}

DiffusionKeySet diffusion_keys(const SecretKey& key) {
    validate_secret_key(key);
    DiffusionKeySet out;
    const std::array<const std::array<std::uint8_t, 15>*, 3> lists = {
        &key.x0_digits, &key.y0_digits, &key.k_digits};
    for (std::size_t part = 0; part < 3; ++part) {
        const auto& d = *lists[part];
        for (std::size_t group = 0; group < 5; ++group) {
            const int value = 100 * d[3 * group] + 10 * d[3 * group + 1] + d[3 * group + 2];
            out.bytes[5 * part + group] = static_cast<std::uint8_t>(value % 256);
        }
    }
    out.bytes[15] = static_cast<std::uint8_t>(key.n % 256);
    return out;
}

RgbImage xkey_image(const XorKeySet& keys, std::size_t height, std::size_t width) {
    RgbImage img(height, width);
    const auto& kb = keys.bytes;
    for (std::size_t k = 0; k < img.pixel_count(); ++k) {
        img[k] = Pixel{kb[(3 * k) % 4], kb[(3 * k + 1) % 4], kb[(3 * k + 2) % 4]};
    }
    return img;
}

RgbImage xkey_image(const SecretKey& key, std::size_t height, std::size_t width) {
    return xkey_image(xor_keys(key), height, width);
}

RgbImage cks_image(const SecretKey& key, std::size_t height, std::size_t width) {
    validate_secret_key(key);
    RgbImage img(height, width);
    const std::size_t pixels = img.pixel_count();

    StandardMapState s{key.x0, key.y0};
    for (int i = 0; i < key.n; ++i) {
        s = standard_map_step(s.x, s.y, key.k);
    }
    // The logistic seed comes from the post-throwaway state, before any
    // recorded standard-map step.
    double z = std::fmod(s.x + s.y, 1.0);
    for (int i = 0; i < key.n; ++i) {
        z = 4.0 * z * (1.0 - z);
    }
    for (std::size_t k = 0; k < pixels; ++k) {
        s = standard_map_step(s.x, s.y, key.k);
        z = 4.0 * z * (1.0 - z);
        img[k] = Pixel{byte_from_angle(s.x), byte_from_angle(s.y), byte_from_unit(z)};
    }
    return img;
}

SecretKey sample_secret_key(std::mt19937_64& rng, double k_max) {
    // Margins keep 14-digit decimal rounding away from the open endpoints.
    std::uniform_real_distribution<double> angle(1e-6, kTwoPi - 1e-6);
    std::uniform_real_distribution<double> kick(18.0 + 1e-6, k_max);
    std::uniform_int_distribution<int> offset(101, 1099);

    char x0_buf[40], y0_buf[40], k_buf[48];
    std::snprintf(x0_buf, sizeof x0_buf, "%.14f", angle(rng));
    std::snprintf(y0_buf, sizeof y0_buf, "%.14f", angle(rng));
    std::snprintf(k_buf, sizeof k_buf, "%.14f", kick(rng));
    return parse_key(KeySpec{x0_buf, y0_buf, k_buf, std::to_string(offset(rng))});
}

} // namespace ppsbreak
