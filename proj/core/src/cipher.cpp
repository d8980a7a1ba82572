#include "ppsbreak/cipher.hpp"

#include "ppsbreak/diffusion.hpp"

namespace ppsbreak {

RgbImage encrypt_pps09(const RgbImage& plain, const SecretKey& key) {
    const RgbImage mask = xkey_image(key, plain.height(), plain.width());
    const RgbImage stream = cks_image(key, plain.height(), plain.width());
    return vertical_diffuse(horizontal_diffuse(plain ^ mask)) ^ stream;
}

RgbImage decrypt_pps09(const RgbImage& cipher, const SecretKey& key) {
    const RgbImage mask = xkey_image(key, cipher.height(), cipher.width());
    const RgbImage stream = cks_image(key, cipher.height(), cipher.width());
    return horizontal_undiffuse(vertical_undiffuse(cipher ^ stream)) ^ mask;
}

RgbImage encrypt_mpps09(const RgbImage& plain, const SecretKey& key) {
    const RgbImage mask = xkey_image(key, plain.height(), plain.width());
    const RgbImage stream = cks_image(key, plain.height(), plain.width());
    const DiffusionKeySet dk = diffusion_keys(key);
    return keyed_vertical_diffuse(keyed_horizontal_diffuse(plain ^ mask, dk), dk) ^ stream;
}

RgbImage decrypt_mpps09(const RgbImage& cipher, const SecretKey& key) {
    const RgbImage mask = xkey_image(key, cipher.height(), cipher.width());
    const RgbImage stream = cks_image(key, cipher.height(), cipher.width());
    const DiffusionKeySet dk = diffusion_keys(key);
    return keyed_horizontal_undiffuse(keyed_vertical_undiffuse(cipher ^ stream, dk), dk) ^ mask;
}

} // namespace ppsbreak
