#include "ppsbreak/ppm_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "ppsbreak/error.hpp"

namespace ppsbreak {

static_assert(sizeof(Pixel) == 3, "pixel payload I/O relies on packed RGB triples");

namespace {

[[noreturn]] void fail(const std::string& what, std::size_t offset) {
    throw ImageFormatError(what + " (byte offset " + std::to_string(offset) + ")");
}

int get_byte(std::istream& in, std::size_t& offset) {
    const int c = in.get();
    if (c != std::char_traits<char>::eof()) ++offset;
    return c;
}

// Skips whitespace and '#' comments, then reads one unsigned decimal token.
std::size_t read_header_value(std::istream& in, std::size_t& offset, const char* field) {
    int c = get_byte(in, offset);
    while (true) {
        if (c == '#') {
            while (c != '\n' && c != std::char_traits<char>::eof()) {
                c = get_byte(in, offset);
            }
        } else if (c != std::char_traits<char>::eof() && std::isspace(c)) {
            c = get_byte(in, offset);
            continue;
        } else {
            break;
        }
    }
    if (c == std::char_traits<char>::eof()) {
        fail(std::string("unexpected end of header while reading ") + field, offset);
    }
    if (!std::isdigit(c)) {
        fail(std::string("expected digit in ") + field, offset - 1);
    }
    const std::size_t value_offset = offset - 1;
    unsigned long long value = 0;
    while (c != std::char_traits<char>::eof() && std::isdigit(c)) {
        value = value * 10 + static_cast<unsigned long long>(c - '0');
        if (value > 1000000000ULL) {
            fail(std::string(field) + " out of range", value_offset);
        }
        c = get_byte(in, offset);
    }
    // The terminating byte must be whitespace (or EOF, caught by the caller).
    if (c != std::char_traits<char>::eof()) {
        if (!std::isspace(c)) {
            fail(std::string("expected whitespace after ") + field, offset - 1);
        }
        in.unget();
        --offset;
    }
    return static_cast<std::size_t>(value);
}

} // namespace

RgbImage read_ppm(std::istream& in) {
    std::size_t offset = 0;
    const int m0 = get_byte(in, offset);
    const int m1 = get_byte(in, offset);
    if (m0 != 'P' || m1 != '6') {
        fail("not a binary pixmap: expected magic \"P6\"", 0);
    }
    const std::size_t width = read_header_value(in, offset, "width");
    const std::size_t height = read_header_value(in, offset, "height");
    const std::size_t maxval_offset = offset;
    const std::size_t maxval = read_header_value(in, offset, "maxval");
    if (maxval != 255) {
        fail("maxval must be 255, got " + std::to_string(maxval), maxval_offset + 1);
    }
    if (width == 0 || height == 0) {
        fail("image dimensions must be at least 1x1", 2);
    }
    if (width * height > (std::size_t{1} << 28)) {
        fail("image too large", 2);
    }
    const int sep = get_byte(in, offset);
    if (sep == std::char_traits<char>::eof() || !std::isspace(sep)) {
        fail("expected single whitespace byte before pixel payload", offset);
    }

    const std::size_t payload = height * width * 3;
    std::vector<Pixel> pixels(height * width);
    in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(payload));
    const std::size_t got = static_cast<std::size_t>(in.gcount());
    if (got != payload) {
        fail("truncated pixel payload: expected " + std::to_string(payload) +
                 " bytes, got " + std::to_string(got),
             offset + got);
    }
    return RgbImage::from_pixels(height, width, std::move(pixels));
}

RgbImage load_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ImageFormatError("cannot open " + path.string() + " for reading");
    }
    return read_ppm(in);
}

void write_ppm(const RgbImage& img, std::ostream& out) {
    out << "P6\n" << img.width() << ' ' << img.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels().data()),
              static_cast<std::streamsize>(img.pixel_count() * 3));
}

void save_ppm(const RgbImage& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ImageFormatError("cannot open " + path.string() + " for writing");
    }
    write_ppm(img, out);
    out.flush();
    if (!out) {
        throw ImageFormatError("write failed for " + path.string());
    }
}

} // namespace ppsbreak
