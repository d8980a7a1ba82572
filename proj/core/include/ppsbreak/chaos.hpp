#ifndef PPSBREAK_CHAOS_HPP
#define PPSBREAK_CHAOS_HPP

#include <array>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "ppsbreak/image.hpp"

namespace ppsbreak {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Secret key of the PPS09/mPPS09 ciphers: the standard-map seed (x0, y0),
/// its kick strength K, and the iteration offset N, together with the exact
/// 15-digit decimal expansions used by the keyed diffusion schedule.
///
/// Digit conventions: for x0 and y0, digit 1 is the single integer-part
/// digit and digits 2..15 are the first 14 fractional digits. For K, digit 1
/// is the digit immediately left of the decimal point. Shorter decimal inputs
/// are right-padded with zeros. Keys are built from decimal strings (see
/// parse_key) so the digit lists are exact rather than recovered from floats.
struct SecretKey {
    double x0 = 0.0;           // in (0, 2*pi)
    double y0 = 0.0;           // in (0, 2*pi)
    double k = 0.0;            // kick strength, > 18
    int n = 0;                 // iteration offset, 100 < n < 1100
    std::array<std::uint8_t, 15> x0_digits{};
    std::array<std::uint8_t, 15> y0_digits{};
    std::array<std::uint8_t, 15> k_digits{};
};

/// Throws KeyFormatError naming the violated bound.
void validate_secret_key(const SecretKey& key);

/// The four masking bytes of the first confusion stage.
/// bytes[0..3] correspond to schedule positions 1..4.
struct XorKeySet {
    std::array<std::uint8_t, 4> bytes{};
};

/// The sixteen bytes feeding the keyed diffusion passes.
/// bytes[0..15] correspond to schedule positions 1..16.
struct DiffusionKeySet {
    std::array<std::uint8_t, 16> bytes{};
};

struct StandardMapState {
    double x = 0.0;
    double y = 0.0;
};

/// One step of the chaotic standard map, sequential update: the new x is
/// computed first and the y update uses the new x with the old y inside sin.
/// Both components are wrapped into [0, 2*pi).
StandardMapState standard_map_step(double x, double y, double k);

/// n successive standard-map states from (x, y). The seed itself is not
/// part of the orbit. Non-finite inputs raise InvalidStateError.
std::vector<StandardMapState> iterate_standard_map(double x, double y, double k,
                                                   std::size_t n);

/// n successive logistic-map values z <- 4z(1-z) from z. Requires z in [0,1].
std::vector<double> iterate_logistic(double z, std::size_t n);

/// Quantizes an angle in [0, 2*pi) to a byte, floor(256*v / 2*pi), clamped to
/// 255 when rounding pushes the quotient to 256.
std::uint8_t byte_from_angle(double v);

/// Quantizes a unit-interval value to a byte, floor(256*z), clamped to 255.
std::uint8_t byte_from_unit(double z);

/// The four XORing bytes derived from the key:
/// (floor(256*x0/2pi), floor(256*y0/2pi), floor(K mod 256), N mod 256).
XorKeySet xor_keys(const SecretKey& key);

/// The sixteen diffusion bytes: positions 1..5 from consecutive triples of
/// the x0 digits as (100*d1 + 10*d2 + d3) mod 256, 6..10 from y0, 11..15
/// from K, and position 16 = N mod 256.
DiffusionKeySet diffusion_keys(const SecretKey& key);

/// Pseudo-image tiling the four XORing bytes over an H x W canvas:
/// with k = i*W + j, channels take schedule positions
/// (3k mod 4)+1, (3k+1 mod 4)+1, (3k+2 mod 4)+1.
RgbImage xkey_image(const XorKeySet& keys, std::size_t height, std::size_t width);
RgbImage xkey_image(const SecretKey& key, std::size_t height, std::size_t width);

/// Keystream pseudo-image: the standard map is iterated N throwaway steps
/// from (x0, y0), then H*W recorded steps fill R and G; the logistic map is
/// seeded with (x' + y') mod 1 from the post-throwaway state, iterated N
/// throwaway steps, and H*W recorded steps fill B.
RgbImage cks_image(const SecretKey& key, std::size_t height, std::size_t width);

/// Uniformly samples a valid key: x0, y0 in (0, 2*pi), K in (18, k_max],
/// N in (100, 1100). The sampled values are formatted as decimal strings and
/// parsed through the canonical key path, so digit lists match the values.
SecretKey sample_secret_key(std::mt19937_64& rng, double k_max = 2000.0);

} // namespace ppsbreak

#endif
