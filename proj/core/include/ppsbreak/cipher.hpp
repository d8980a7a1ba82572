#ifndef PPSBREAK_CIPHER_HPP
#define PPSBREAK_CIPHER_HPP

#include "ppsbreak/chaos.hpp"
#include "ppsbreak/image.hpp"

namespace ppsbreak {

/// PPS09: confusion with the XOR-key image, horizontal then vertical
/// diffusion, confusion with the keystream image.
RgbImage encrypt_pps09(const RgbImage& plain, const SecretKey& key);
RgbImage decrypt_pps09(const RgbImage& cipher, const SecretKey& key);

/// mPPS09: PPS09 with the keyed diffusion passes, diffusion bytes taken
/// from diffusion_keys(key).
RgbImage encrypt_mpps09(const RgbImage& plain, const SecretKey& key);
RgbImage decrypt_mpps09(const RgbImage& cipher, const SecretKey& key);

} // namespace ppsbreak

#endif
