#ifndef SCF_PPM_HPP
#define SCF_PPM_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "scf/image.hpp"

namespace scf {

// Binary PPM (P6), maxval 255 only. Pixels pass through untouched; a
// read/write round trip is byte-exact.
Image readPpm(std::istream& in);
Image readPpm(const std::filesystem::path& path);

void writePpm(std::ostream& out, const Image& img);
void writePpm(const std::filesystem::path& path, const Image& img);

std::vector<uint8_t> writePpmToBytes(const Image& img);
Image readPpmFromBytes(const std::vector<uint8_t>& bytes);

} // namespace scf

#endif
