#include "ppsbreak/diffusion.hpp"

namespace ppsbreak {

namespace {

// Columnwise scan position -> row-major index (row = k mod H, col = k / H).
inline std::size_t column_scan_index(std::size_t k, std::size_t height,
                                     std::size_t width) {
    return (k % height) * width + k / height;
}

// Gray schedule pixel for the keyed horizontal pass at scan step k.
inline Pixel horizontal_key_pixel(const DiffusionKeySet& dk, std::size_t k) {
    const std::uint8_t v = dk.bytes[(k - 1) % 16];
    return Pixel{v, v, v};
}

// Schedule triple for the keyed vertical pass at processing step m = HW-2-k.
inline Pixel vertical_key_pixel(const DiffusionKeySet& dk, std::size_t m) {
    return Pixel{dk.bytes[(3 * m) % 16], dk.bytes[(3 * m + 1) % 16],
                 dk.bytes[(3 * m + 2) % 16]};
}

} // namespace

RgbImage horizontal_diffuse(const RgbImage& img) {
    RgbImage out = img;
    for (std::size_t k = 1; k < out.pixel_count(); ++k) {
        out[k] = img[k] ^ out[k - 1];
    }
    return out;
}

RgbImage horizontal_undiffuse(const RgbImage& img) {
    RgbImage out = img;
    for (std::size_t k = 1; k < out.pixel_count(); ++k) {
        out[k] = img[k] ^ img[k - 1];
    }
    return out;
}

RgbImage vertical_diffuse(const RgbImage& img) {
    RgbImage out = img;
    const std::size_t h = img.height(), w = img.width();
    for (std::size_t k = img.pixel_count() - 1; k-- > 0;) {
        out[column_scan_index(k, h, w)] =
            img[column_scan_index(k, h, w)] ^ overline(out[column_scan_index(k + 1, h, w)]);
    }
    return out;
}

RgbImage vertical_undiffuse(const RgbImage& img) {
    RgbImage out = img;
    const std::size_t h = img.height(), w = img.width();
    for (std::size_t k = img.pixel_count() - 1; k-- > 0;) {
        out[column_scan_index(k, h, w)] =
            img[column_scan_index(k, h, w)] ^ overline(img[column_scan_index(k + 1, h, w)]);
    }
    return out;
}

RgbImage keyed_horizontal_diffuse(const RgbImage& img, const DiffusionKeySet& dk) {
    RgbImage out = img;
    for (std::size_t k = 1; k < out.pixel_count(); ++k) {
        out[k] = img[k] ^ out[k - 1] ^ horizontal_key_pixel(dk, k);
    }
    return out;
}

RgbImage keyed_horizontal_undiffuse(const RgbImage& img, const DiffusionKeySet& dk) {
    RgbImage out = img;
    for (std::size_t k = 1; k < out.pixel_count(); ++k) {
        out[k] = img[k] ^ img[k - 1] ^ horizontal_key_pixel(dk, k);
    }
    return out;
}

RgbImage keyed_vertical_diffuse(const RgbImage& img, const DiffusionKeySet& dk) {
    RgbImage out = img;
    const std::size_t h = img.height(), w = img.width();
    const std::size_t last = img.pixel_count() - 1;
    for (std::size_t k = last; k-- > 0;) {
        out[column_scan_index(k, h, w)] = img[column_scan_index(k, h, w)] ^
                                          overline(out[column_scan_index(k + 1, h, w)]) ^
                                          vertical_key_pixel(dk, last - 1 - k);
    }
    return out;
}

RgbImage keyed_vertical_undiffuse(const RgbImage& img, const DiffusionKeySet& dk) {
    RgbImage out = img;
    const std::size_t h = img.height(), w = img.width();
    const std::size_t last = img.pixel_count() - 1;
    for (std::size_t k = last; k-- > 0;) {
        out[column_scan_index(k, h, w)] = img[column_scan_index(k, h, w)] ^
                                          overline(img[column_scan_index(k + 1, h, w)]) ^
                                          vertical_key_pixel(dk, last - 1 - k);
    }
    return out;
}

} // namespace ppsbreak
