#include "scf/ppm.hpp"

#include <fstream>
#include <sstream>

#include "scf/errors.hpp"

namespace scf {

namespace {

// Skips whitespace and '#' comments between header tokens.
int readHeaderInt(std::istream& in) {
    int ch = in.get();
    while (ch != std::istream::traits_type::eof()) {
        if (ch == '#') {
            while (ch != '\n' && ch != std::istream::traits_type::eof()) ch = in.get();
        } else if (!std::isspace(ch)) {
            break;
        }
        ch = in.get();
    }
    if (ch < '0' || ch > '9') throw IoError("malformed PPM header");
    long value = 0;
    while (ch >= '0' && ch <= '9') {
        value = value * 10 + (ch - '0');
        if (value > 1u << 20) throw IoError("PPM header value out of range");
        ch = in.get();
    }
    if (ch != std::istream::traits_type::eof() && !std::isspace(ch) && ch != '#')
        throw IoError("malformed PPM header");
    if (ch == '#') in.unget();
    return int(value);
}

} // namespace

Image readPpm(std::istream& in) {
    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (!in || m0 != 'P' || m1 != '6') throw IoError("not a P6 PPM file");

    int width = readHeaderInt(in);
    int height = readHeaderInt(in);
    int maxval = readHeaderInt(in);
    if (maxval != 255)
        throw IoError("unsupported PPM maxval " + std::to_string(maxval) +
                      " (only 255 supported)");
    // readHeaderInt consumed the single whitespace byte after maxval.

    Image img(uint32_t(width), uint32_t(height), 8);
    std::vector<uint8_t> row(size_t(width) * 3);
    for (uint32_t j = 0; j < img.height(); ++j) {
        in.read(reinterpret_cast<char*>(row.data()), std::streamsize(row.size()));
        if (size_t(in.gcount()) != row.size()) throw IoError("truncated PPM pixel data");
        for (uint32_t i = 0; i < img.width(); ++i)
            img.at(i, j) = Color{row[i * 3], row[i * 3 + 1], row[i * 3 + 2]};
    }
    return img;
}

Image readPpm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return readPpm(in);
}

void writePpm(std::ostream& out, const Image& img) {
    if (img.depth() != 8) throw IoError("PPM output requires 8-bit images");
    out << "P6\n" << img.width() << " " << img.height() << "\n255\n";
    std::vector<uint8_t> row(size_t(img.width()) * 3);
    for (uint32_t j = 0; j < img.height(); ++j) {
        for (uint32_t i = 0; i < img.width(); ++i) {
            const Color& c = img.at(i, j);
            row[i * 3] = uint8_t(c.r);
            row[i * 3 + 1] = uint8_t(c.g);
            row[i * 3 + 2] = uint8_t(c.b);
        }
        out.write(reinterpret_cast<const char*>(row.data()), std::streamsize(row.size()));
    }
    if (!out) throw IoError("PPM write failed");
}

void writePpm(const std::filesystem::path& path, const Image& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    writePpm(out, img);
}

std::vector<uint8_t> writePpmToBytes(const Image& img) {
    std::ostringstream out(std::ios::binary);
    writePpm(out, img);
    std::string s = out.str();
    return std::vector<uint8_t>(s.begin(), s.end());
}

Image readPpmFromBytes(const std::vector<uint8_t>& bytes) {
    std::istringstream in(std::string(bytes.begin(), bytes.end()), std::ios::binary);
    return readPpm(in);
}

} // namespace scf
