#ifndef PPSBREAK_IMAGE_HPP
#define PPSBREAK_IMAGE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ppsbreak/error.hpp"

namespace ppsbreak {

/// One RGB true-color pixel. XOR acts componentwise on the three channels.
struct Pixel {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend constexpr bool operator==(Pixel, Pixel) = default;

    friend constexpr Pixel operator^(Pixel a, Pixel b) {
        return Pixel{static_cast<std::uint8_t>(a.r ^ b.r),
                     static_cast<std::uint8_t>(a.g ^ b.g),
                     static_cast<std::uint8_t>(a.b ^ b.b)};
    }

    constexpr Pixel& operator^=(Pixel other) {
        r ^= other.r;
        g ^= other.g;
        b ^= other.b;
        return *this;
    }
};

/// H x W matrix of pixels, stored row-major. Dimensions are fixed at
/// construction and always at least 1x1.
class RgbImage {
public:
    RgbImage(std::size_t height, std::size_t width, Pixel fill = Pixel{})
        : height_(height), width_(width) {
        if (height == 0 || width == 0) {
            throw DimensionError("image dimensions must be at least 1x1");
        }
        pixels_.assign(height * width, fill);
    }

    static RgbImage from_pixels(std::size_t height, std::size_t width,
                                std::vector<Pixel> pixels) {
        RgbImage img(height, width);
        if (pixels.size() != img.pixel_count()) {
            throw DimensionError("pixel buffer does not match image dimensions");
        }
        img.pixels_ = std::move(pixels);
        return img;
    }

    std::size_t height() const { return height_; }
    std::size_t width() const { return width_; }
    std::size_t pixel_count() const { return pixels_.size(); }

    Pixel& at(std::size_t row, std::size_t col) { return pixels_[row * width_ + col]; }
    const Pixel& at(std::size_t row, std::size_t col) const { return pixels_[row * width_ + col]; }

    /// Row-major linear access (k = row * W + col).
    Pixel& operator[](std::size_t k) { return pixels_[k]; }
    const Pixel& operator[](std::size_t k) const { return pixels_[k]; }

    std::vector<Pixel>& pixels() { return pixels_; }
    const std::vector<Pixel>& pixels() const { return pixels_; }

    bool same_size(const RgbImage& other) const {
        return height_ == other.height_ && width_ == other.width_;
    }

    friend bool operator==(const RgbImage&, const RgbImage&) = default;

private:
    std::size_t height_;
    std::size_t width_;
    std::vector<Pixel> pixels_;
};

/// Componentwise XOR of two same-size images.
inline RgbImage operator^(const RgbImage& a, const RgbImage& b) {
    if (!a.same_size(b)) {
        throw DimensionError("XOR of images with mismatched dimensions");
    }
    RgbImage out = a;
    for (std::size_t k = 0; k < out.pixel_count(); ++k) {
        out[k] ^= b[k];
    }
    return out;
}

} // namespace ppsbreak

#endif
