// Command-line front end for the PPS09/mPPS09 cipher workbench: encryption,
// decryption, the equivalent-key attack, differential analysis, and the
// keystream randomness battery. Images are binary portable pixmaps (P6).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ppsbreak/attack.hpp"
#include "ppsbreak/chaos.hpp"
#include "ppsbreak/cipher.hpp"
#include "ppsbreak/error.hpp"
#include "ppsbreak/keyspec.hpp"
#include "ppsbreak/ppm_io.hpp"
#include "ppsbreak/stats.hpp"

namespace {

using namespace ppsbreak;

struct FlipSpec {
    int channel = 0;  // 0=R, 1=G, 2=B
    std::size_t row = 0;
    std::size_t col = 0;
    int bit = 0;
};

FlipSpec parse_flip(const std::string& text) {
    FlipSpec flip;
    char channel = 0;
    unsigned long row = 0, col = 0;
    int bit = 0;
    char trailing = 0;
    if (std::sscanf(text.c_str(), "%c,%lu,%lu,%d%c", &channel, &row, &col, &bit,
                    &trailing) != 4) {
        throw Error("--flip expects CH,row,col,bit (e.g. R,127,127,7)");
    }
    switch (channel) {
        case 'R': case 'r': flip.channel = 0; break;
        case 'G': case 'g': flip.channel = 1; break;
        case 'B': case 'b': flip.channel = 2; break;
        default: throw Error("--flip channel must be R, G or B");
    }
    if (bit < 0 || bit > 7) {
        throw Error("--flip bit index must be in 0..7");
    }
    flip.row = row;
    flip.col = col;
    flip.bit = bit;
    return flip;
}

void print_bitplane_report(const BitplaneDiffReport& report, std::size_t pixels) {
    static constexpr const char* channels[3] = {"R", "G", "B"};
    std::printf("channel  %6s %6s %6s %6s %6s %6s %6s %6s\n", "bit0", "bit1", "bit2",
                "bit3", "bit4", "bit5", "bit6", "bit7");
    for (std::size_t c = 0; c < 3; ++c) {
        std::printf("%-7s ", channels[c]);
        for (int bit = 0; bit < 8; ++bit) {
            std::printf(" %6llu",
                        static_cast<unsigned long long>(report.bit_counts[c][bit]));
        }
        std::printf("\n");
    }
    std::printf("changed pixels: %llu / %llu\n",
                static_cast<unsigned long long>(report.changed_pixels),
                static_cast<unsigned long long>(pixels));
}

int run(int argc, char** argv) {
    CLI::App app{"PPS09/mPPS09 image cipher workbench"};
    app.require_subcommand(1);

    std::string key_flag, cipher_name = "pps09";
    std::string in_path, out_path;

    auto add_key_option = [&](CLI::App* cmd) {
        cmd->add_option("--key", key_flag, "secret key as x0,y0,K,N (decimal)")
            ->required();
        cmd->add_option("--cipher", cipher_name, "cipher variant")
            ->check(CLI::IsMember({"pps09", "mpps09"}));
    };

    CLI::App* encrypt = app.add_subcommand("encrypt", "encrypt a P6 image");
    add_key_option(encrypt);
    encrypt->add_option("--in", in_path, "plaintext image")->required();
    encrypt->add_option("--out", out_path, "ciphertext image")->required();

    CLI::App* decrypt = app.add_subcommand("decrypt", "decrypt a P6 image");
    add_key_option(decrypt);
    decrypt->add_option("--in", in_path, "ciphertext image")->required();
    decrypt->add_option("--out", out_path, "recovered image")->required();

    std::string plain_path, cipher_img_path, eqkey_path;
    CLI::App* attack_derive = app.add_subcommand(
        "attack-derive", "derive the equivalent key from one known pair");
    attack_derive->add_option("--plain", plain_path, "known plaintext")->required();
    attack_derive->add_option("--cipher-img", cipher_img_path, "matching ciphertext")
        ->required();
    attack_derive->add_option("--out-eqkey", eqkey_path, "equivalent-key image")
        ->required();

    CLI::App* attack_decrypt = app.add_subcommand(
        "attack-decrypt", "decrypt a ciphertext with an equivalent key");
    attack_decrypt->add_option("--eqkey", eqkey_path, "equivalent-key image")->required();
    attack_decrypt->add_option("--in", in_path, "ciphertext image")->required();
    attack_decrypt->add_option("--out", out_path, "recovered image")->required();

    CLI::App* attack_encrypt = app.add_subcommand(
        "attack-encrypt", "forge a ciphertext with an equivalent key");
    attack_encrypt->add_option("--eqkey", eqkey_path, "equivalent-key image")->required();
    attack_encrypt->add_option("--in", in_path, "plaintext image")->required();
    attack_encrypt->add_option("--out", out_path, "forged ciphertext")->required();

    std::string delta_path, flip_spec;
    std::size_t height = 0, width = 0;
    CLI::App* diff_pattern = app.add_subcommand(
        "diff-pattern", "ciphertext change pattern for a plaintext difference");
    diff_pattern->add_option("--delta", delta_path, "plaintext difference image");
    diff_pattern->add_option("--flip", flip_spec,
                             "build a one-bit difference: CH,row,col,bit");
    diff_pattern->add_option("--height", height, "canvas height for --flip");
    diff_pattern->add_option("--width", width, "canvas width for --flip");
    diff_pattern->add_option("--out", out_path, "pattern image")->required();

    std::string a_path, b_path;
    CLI::App* bitplane = app.add_subcommand(
        "bitplane-report", "per-channel per-bitplane difference counts");
    bitplane->add_option("--a", a_path, "first image")->required();
    bitplane->add_option("--b", b_path, "second image")->required();

    int trials = 100;
    std::uint64_t seed = 1;
    CLI::App* verify = app.add_subcommand(
        "verify-lemmas", "randomized check of the structural identities");
    verify->add_option("--trials", trials, "number of random trials");
    verify->add_option("--seed", seed, "RNG seed");

    std::size_t keys = 100;
    std::size_t rnd_height = 512, rnd_width = 512;
    std::string csv_path;
    unsigned threads = 0;
    CLI::App* randomness = app.add_subcommand(
        "randomness", "keystream randomness battery over sampled keys");
    randomness->add_option("--keys", keys, "number of sampled keys");
    randomness->add_option("--height", rnd_height, "keystream image height");
    randomness->add_option("--width", rnd_width, "keystream image width");
    randomness->add_option("--seed", seed, "RNG seed");
    randomness->add_option("--csv-out", csv_path, "CSV report path");
    randomness->add_option("--threads", threads, "worker threads (0 = auto)");

    CLI11_PARSE(app, argc, argv);

    if (encrypt->parsed() || decrypt->parsed()) {
        const SecretKey key = parse_key(split_key_flag(key_flag));
        const RgbImage in = load_ppm(in_path);
        RgbImage out = encrypt->parsed()
                           ? (cipher_name == "pps09" ? encrypt_pps09(in, key)
                                                     : encrypt_mpps09(in, key))
                           : (cipher_name == "pps09" ? decrypt_pps09(in, key)
                                                     : decrypt_mpps09(in, key));
        save_ppm(out, out_path);
    } else if (attack_derive->parsed()) {
        const RgbImage plain = load_ppm(plain_path);
        const RgbImage cipher = load_ppm(cipher_img_path);
        save_ppm(derive_equivalent_key(plain, cipher).image, eqkey_path);
    } else if (attack_decrypt->parsed()) {
        const EquivalentKey ek{load_ppm(eqkey_path)};
        save_ppm(decrypt_with_equivalent_key(load_ppm(in_path), ek), out_path);
    } else if (attack_encrypt->parsed()) {
        const EquivalentKey ek{load_ppm(eqkey_path)};
        save_ppm(encrypt_with_equivalent_key(load_ppm(in_path), ek), out_path);
    } else if (diff_pattern->parsed()) {
        if (delta_path.empty() == flip_spec.empty()) {
            throw Error("diff-pattern needs exactly one of --delta or --flip");
        }
        RgbImage delta = [&] {
            if (!delta_path.empty()) return load_ppm(delta_path);
            if (height == 0 || width == 0) {
                throw Error("--flip requires --height and --width");
            }
            const FlipSpec flip = parse_flip(flip_spec);
            RgbImage img(height, width);
            if (flip.row >= height || flip.col >= width) {
                throw Error("--flip position outside the canvas");
            }
            Pixel& p = img.at(flip.row, flip.col);
            const std::uint8_t mask = static_cast<std::uint8_t>(1u << flip.bit);
            (flip.channel == 0 ? p.r : flip.channel == 1 ? p.g : p.b) ^= mask;
            return img;
        }();
        save_ppm(differential_pattern(delta), out_path);
    } else if (bitplane->parsed()) {
        const RgbImage a = load_ppm(a_path);
        const RgbImage b = load_ppm(b_path);
        print_bitplane_report(bitplane_diff_report(a, b), a.pixel_count());
    } else if (verify->parsed()) {
        const LemmaCheckReport report = verify_lemmas(trials, seed);
        std::printf("keyed-horizontal separation: %d/%d\n",
                    report.keyed_hd_separation_passes, report.trials);
        std::printf("keyed-vertical separation:   %d/%d\n",
                    report.keyed_vd_separation_passes, report.trials);
        std::printf("equivalent encryption form:  %d/%d\n",
                    report.equivalent_form_passes, report.trials);
        if (!report.all_passed()) {
            throw Error("structural identity check failed");
        }
        std::printf("all identities held\n");
    } else if (randomness->parsed()) {
        const RandomnessReport report =
            run_randomness_battery(keys, rnd_height, rnd_width, seed, threads);
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            if (!csv) {
                throw Error("cannot open " + csv_path + " for writing");
            }
            write_randomness_csv(report, csv);
        }
        std::printf("%-26s passes/keys\n", "test");
        for (std::size_t t = 0; t < kRandomnessTestNames.size(); ++t) {
            std::printf("%-26s %zu/%zu\n", kRandomnessTestNames[t],
                        report.pass_counts[t], report.key_count);
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "ppsbreak: " << e.what() << "\n";
        return 1;
    }
}
