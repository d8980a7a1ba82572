#include "ppsbreak/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include "ppsbreak/error.hpp"
#include "ppsbreak/special_functions.hpp"

namespace ppsbreak {

namespace {

std::uint64_t splitmix64(std::uint64_t state) {
    std::uint64_t z = state + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void require_nonempty(const BitSequence& s) {
    if (s.empty()) {
        throw InsufficientDataError("bit sequence must not be empty");
    }
}

// Sum over overlapping wraparound templates of C*ln(C) with C = count/n.
double apen_phi(const BitSequence& s, std::size_t len) {
    const std::size_t n = s.size();
    std::vector<std::uint32_t> counts(std::size_t{1} << len, 0);
    const std::uint32_t mask = static_cast<std::uint32_t>((std::size_t{1} << len) - 1);
    std::uint32_t window = 0;
    for (std::size_t i = 0; i + 1 < len; ++i) {
        window = ((window << 1) | s[i]) & mask;
    }
    for (std::size_t i = 0; i < n; ++i) {
        window = ((window << 1) | s[(i + len - 1) % n]) & mask;
        ++counts[window];
    }
    double phi = 0.0;
    for (std::uint32_t c : counts) {
        if (c == 0) continue;
        const double frac = static_cast<double>(c) / static_cast<double>(n);
        phi += frac * std::log(frac);
    }
    return phi;
}

} // namespace

BitSequence bits_msb_first(std::span<const std::uint8_t> bytes) {
    BitSequence bits;
    bits.reserve(bytes.size() * 8);
    for (std::uint8_t byte : bytes) {
        for (int t = 7; t >= 0; --t) {
            bits.push_back(static_cast<std::uint8_t>((byte >> t) & 1));
        }
    }
    return bits;
}

BitSequence extract_blue_bits(const SecretKey& key, std::size_t height,
                              std::size_t width) {
    const RgbImage stream = cks_image(key, height, width);
    std::vector<std::uint8_t> bytes;
    bytes.reserve(stream.pixel_count());
    for (const Pixel& p : stream.pixels()) {
        bytes.push_back(p.b);
    }
    return bits_msb_first(bytes);
}

double frequency_test(const BitSequence& s) {
    require_nonempty(s);
    const double n = static_cast<double>(s.size());
    long long sum = 0;
    for (std::uint8_t b : s) {
        sum += b ? 1 : -1;
    }
    const double s_obs = std::fabs(static_cast<double>(sum)) / std::sqrt(n);
    return ppsbreak::erfc(s_obs / std::numbers::sqrt2);
}

double block_frequency_test(const BitSequence& s, std::size_t block_len) {
    require_nonempty(s);
    if (block_len == 0) {
        throw Error("block length must be positive");
    }
    if (block_len > s.size()) {
        throw InsufficientDataError("block length exceeds sequence length");
    }
    const std::size_t blocks = s.size() / block_len;
    double chi2 = 0.0;
    for (std::size_t i = 0; i < blocks; ++i) {
        std::size_t ones = 0;
        for (std::size_t j = 0; j < block_len; ++j) {
            ones += s[i * block_len + j];
        }
        const double pi = static_cast<double>(ones) / static_cast<double>(block_len);
        chi2 += (pi - 0.5) * (pi - 0.5);
    }
    chi2 *= 4.0 * static_cast<double>(block_len);
    return regularized_gamma_q(static_cast<double>(blocks) / 2.0, chi2 / 2.0);
}

double runs_test(const BitSequence& s) {
    require_nonempty(s);
    const double n = static_cast<double>(s.size());
    std::size_t ones = 0;
    for (std::uint8_t b : s) ones += b;
    const double pi = static_cast<double>(ones) / n;
    // Prerequisite frequency check; degenerate proportions fail it for any
    // n where the denominator below would vanish.
    if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(n) || pi == 0.0 || pi == 1.0) {
        return 0.0;
    }
    std::size_t runs = 1;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        runs += s[k] != s[k + 1];
    }
    const double expected = 2.0 * n * pi * (1.0 - pi);
    const double denom = 2.0 * std::sqrt(2.0 * n) * pi * (1.0 - pi);
    return ppsbreak::erfc(std::fabs(static_cast<double>(runs) - expected) / denom);
}

double cusum_forward_test(const BitSequence& s) {
    require_nonempty(s);
    const double n = static_cast<double>(s.size());
    long long sum = 0;
    long long z = 0;
    for (std::uint8_t b : s) {
        sum += b ? 1 : -1;
        z = std::max(z, std::llabs(sum));
    }
    const double zd = static_cast<double>(z);
    const double sqrt_n = std::sqrt(n);
    const double nz = n / zd;

    // Terms with both CDF arguments beyond +/-45 are exactly 0 or 1 in
    // double precision and cancel; clamp the index ranges accordingly.
    const double span = (45.0 * sqrt_n / zd + 3.0) / 4.0;
    const long long clamp_lo = static_cast<long long>(-std::ceil(span));
    const long long clamp_hi = static_cast<long long>(std::ceil(span));

    const long long k1_lo = std::max(static_cast<long long>(std::ceil((-nz + 1.0) / 4.0)), clamp_lo);
    const long long k1_hi = std::min(static_cast<long long>(std::floor((nz - 1.0) / 4.0)), clamp_hi);
    const long long k2_lo = std::max(static_cast<long long>(std::ceil((-nz - 3.0) / 4.0)), clamp_lo);
    const long long k2_hi = k1_hi;

    double sum1 = 0.0;
    for (long long k = k1_lo; k <= k1_hi; ++k) {
        sum1 += normal_cdf((4.0 * k + 1.0) * zd / sqrt_n) -
                normal_cdf((4.0 * k - 1.0) * zd / sqrt_n);
    }
    double sum2 = 0.0;
    for (long long k = k2_lo; k <= k2_hi; ++k) {
        sum2 += normal_cdf((4.0 * k + 3.0) * zd / sqrt_n) -
                normal_cdf((4.0 * k + 1.0) * zd / sqrt_n);
    }
    const double p = 1.0 - sum1 + sum2;
    return std::clamp(p, 0.0, 1.0);
}

double approximate_entropy_test(const BitSequence& s, std::size_t template_len) {
    require_nonempty(s);
    if (template_len == 0 || template_len > 24) {
        throw Error("template length must be in 1..24");
    }
    if (template_len + 1 > s.size()) {
        throw InsufficientDataError("sequence too short for the template length");
    }
    const double n = static_cast<double>(s.size());
    const double apen = apen_phi(s, template_len) - apen_phi(s, template_len + 1);
    const double chi2 = 2.0 * n * (std::numbers::ln2 - apen);
    const double dof_half = static_cast<double>(std::size_t{1} << (template_len - 1));
    return regularized_gamma_q(dof_half, std::max(chi2, 0.0) / 2.0);
}

RandomnessReport run_randomness_battery(std::size_t key_count, std::size_t height,
                                        std::size_t width, std::uint64_t rng_seed,
                                        unsigned threads) {
    if (key_count == 0) {
        throw Error("key count must be at least 1");
    }
    RandomnessReport report;
    report.key_count = key_count;
    report.height = height;
    report.width = width;
    report.sequence_bits = 8 * height * width;
    report.seed = rng_seed;
    report.p_values.resize(key_count);

    auto run_key = [&](std::size_t index) {
        std::mt19937_64 rng(splitmix64(rng_seed + index));
        const SecretKey key = sample_secret_key(rng);
        const BitSequence bits = extract_blue_bits(key, height, width);
        report.p_values[index] = {
            frequency_test(bits),
            block_frequency_test(bits, 100),
            runs_test(bits),
            cusum_forward_test(bits),
            approximate_entropy_test(bits, 10),
        };
    };

    unsigned worker_count = threads == 0 ? std::thread::hardware_concurrency() : threads;
    worker_count = std::max(1u, std::min<unsigned>(worker_count,
                                                   static_cast<unsigned>(key_count)));
    if (worker_count == 1) {
        for (std::size_t i = 0; i < key_count; ++i) run_key(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (unsigned t = 0; t < worker_count; ++t) {
            pool.emplace_back([&] {
                try {
                    for (std::size_t i = next.fetch_add(1); i < key_count;
                         i = next.fetch_add(1)) {
                        run_key(i);
                    }
                } catch (...) {
                    const std::scoped_lock lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& worker : pool) worker.join();
        if (failure) std::rethrow_exception(failure);
    }

    for (const auto& row : report.p_values) {
        for (std::size_t t = 0; t < row.size(); ++t) {
            report.pass_counts[t] += row[t] >= kSignificanceLevel;
        }
    }
    return report;
}

void write_randomness_csv(const RandomnessReport& report, std::ostream& out) {
    out << "# keys=" << report.key_count << " height=" << report.height
        << " width=" << report.width << " bits=" << report.sequence_bits
        << " seed=" << report.seed << " significance=" << kSignificanceLevel << "\n";
    out << "key_index,test_name,p_value,pass\n";
    const std::streamsize old_precision = out.precision(10);
    for (std::size_t i = 0; i < report.p_values.size(); ++i) {
        for (std::size_t t = 0; t < kRandomnessTestNames.size(); ++t) {
            const double p = report.p_values[i][t];
            out << i << ',' << kRandomnessTestNames[t] << ',' << p << ','
                << (p >= kSignificanceLevel ? 1 : 0) << "\n";
        }
    }
    for (std::size_t t = 0; t < kRandomnessTestNames.size(); ++t) {
        out << "summary," << kRandomnessTestNames[t] << ',' << report.pass_counts[t]
            << ',' << report.key_count << "\n";
    }
    out.precision(old_precision);
}

} // namespace ppsbreak
