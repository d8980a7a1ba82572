#ifndef PPSBREAK_PPM_IO_HPP
#define PPSBREAK_PPM_IO_HPP

#include <filesystem>
#include <iosfwd>

#include "ppsbreak/image.hpp"

namespace ppsbreak {

/// Reads a binary portable pixmap (magic "P6", maxval 255). Header comments
/// are tolerated. Malformed input raises ImageFormatError with the byte
/// offset of the defect.
RgbImage read_ppm(std::istream& in);
RgbImage load_ppm(const std::filesystem::path& path);

/// Writes the canonical header "P6\n<W> <H>\n255\n" followed by the raw
/// pixel payload. Comments are never emitted.
void write_ppm(const RgbImage& img, std::ostream& out);
void save_ppm(const RgbImage& img, const std::filesystem::path& path);

} // namespace ppsbreak

#endif
