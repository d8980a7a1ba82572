#ifndef PPSBREAK_DIFFUSION_HPP
#define PPSBREAK_DIFFUSION_HPP

#include "ppsbreak/chaos.hpp"
#include "ppsbreak/image.hpp"

namespace ppsbreak {

/// Channel mixer applied to the predecessor pixel inside the vertical
/// passes: (r, g, b) -> (g^b, r^b, r^g). Idempotent, XOR-linear, and fixes
/// exactly the pixels with r^g^b = 0.
constexpr Pixel overline(Pixel p) {
    return Pixel{static_cast<std::uint8_t>(p.g ^ p.b),
                 static_cast<std::uint8_t>(p.r ^ p.b),
                 static_cast<std::uint8_t>(p.r ^ p.g)};
}

/// Horizontal diffusion: scan rowwise from the upper-left pixel and XOR each
/// pixel (except the anchor) with its already-diffused predecessor.
RgbImage horizontal_diffuse(const RgbImage& img);

/// Exact inverse of horizontal_diffuse; predecessors are read from the input.
RgbImage horizontal_undiffuse(const RgbImage& img);

/// Vertical diffusion: scan columnwise from the bottom-right pixel toward
/// the upper-left and XOR each pixel (except the anchor) with the overline
/// of its already-diffused predecessor. Scan position k maps to
/// row = k mod H, col = floor(k / H).
RgbImage vertical_diffuse(const RgbImage& img);

/// Exact inverse of vertical_diffuse; predecessors are read from the input,
/// so invertibility does not rely on overline being invertible.
RgbImage vertical_undiffuse(const RgbImage& img);

/// Keyed horizontal diffusion: as horizontal_diffuse with an extra XOR of the
/// schedule byte dk[((k-1) mod 16)+1] on all three channels at scan step k.
/// The anchor takes no key material.
RgbImage keyed_horizontal_diffuse(const RgbImage& img, const DiffusionKeySet& dk);
RgbImage keyed_horizontal_undiffuse(const RgbImage& img, const DiffusionKeySet& dk);

/// Keyed vertical diffusion: as vertical_diffuse with an extra XOR of the
/// schedule triple (dk[(3m mod 16)+1], dk[(3m+1 mod 16)+1], dk[(3m+2 mod 16)+1])
/// at processing step m = HW-2-k.
RgbImage keyed_vertical_diffuse(const RgbImage& img, const DiffusionKeySet& dk);
RgbImage keyed_vertical_undiffuse(const RgbImage& img, const DiffusionKeySet& dk);

} // namespace ppsbreak

#endif
