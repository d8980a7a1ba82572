#ifndef PPSBREAK_STATS_HPP
#define PPSBREAK_STATS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ppsbreak/chaos.hpp"

namespace ppsbreak {

/// Ordered bit sequence; each element is 0 or 1.
using BitSequence = std::vector<std::uint8_t>;

/// Serializes bytes to bits, most-significant bit of each byte first.
BitSequence bits_msb_first(std::span<const std::uint8_t> bytes);

/// Blue channel of cks_image(key, h, w) in raster order, 8 bits per byte
/// MSB first; the result has 8*h*w bits.
BitSequence extract_blue_bits(const SecretKey& key, std::size_t height,
                              std::size_t width);

/// Monobit test: p = erfc(|sum(2b-1)| / sqrt(n) / sqrt(2)).
double frequency_test(const BitSequence& s);

/// Ones-proportion chi-square over floor(n/m) disjoint m-bit blocks;
/// p from the regularized upper incomplete gamma function.
double block_frequency_test(const BitSequence& s, std::size_t block_len = 100);

/// Total-run-count test. When the ones proportion fails the prerequisite
/// |pi - 1/2| < 2/sqrt(n), returns 0 by convention.
double runs_test(const BitSequence& s);

/// Maximum partial-sum excursion of the +/-1 walk, forward direction;
/// p from the two-sided normal-CDF series.
double cusum_forward_test(const BitSequence& s);

/// Approximate-entropy test with overlapping wraparound templates of lengths
/// m and m+1; p = Q(2^(m-1), chi2/2) with chi2 = 2n(ln 2 - ApEn(m)).
double approximate_entropy_test(const BitSequence& s, std::size_t template_len = 10);

inline constexpr double kSignificanceLevel = 0.01;

inline constexpr std::array<const char*, 5> kRandomnessTestNames = {
    "frequency",
    "block_frequency",
    "runs",
    "cumulative_sums_forward",
    "approximate_entropy",
};

/// Batch report: one p-value per (key, test) plus pass tallies at
/// significance 0.01 (pass means p >= 0.01).
struct RandomnessReport {
    std::size_t key_count = 0;
    std::size_t height = 0;
    std::size_t width = 0;
    std::size_t sequence_bits = 0;
    std::uint64_t seed = 0;
    std::vector<std::array<double, 5>> p_values;  // [key][test]
    std::array<std::size_t, 5> pass_counts{};
};

/// Samples key_count secret keys deterministically from rng_seed, extracts
/// each key's blue-channel bit sequence at the given dimensions, and applies
/// the five tests. Per-key sub-seeds make the report independent of the
/// worker count (threads = 0 picks hardware concurrency).
RandomnessReport run_randomness_battery(std::size_t key_count, std::size_t height,
                                        std::size_t width, std::uint64_t rng_seed,
                                        unsigned threads = 0);

/// CSV serialization. Columns: key_index,test_name,p_value,pass — one row
/// per key per test, then one "summary,<test_name>,<pass_count>,<key_count>"
/// row per test. A leading '#' comment line records the run parameters.
void write_randomness_csv(const RandomnessReport& report, std::ostream& out);

} // namespace ppsbreak

#endif
