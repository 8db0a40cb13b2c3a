#include "scf/image.hpp"

namespace scf {

Image::Image(uint32_t width, uint32_t height, int depth)
    : w_(width), h_(height), depth_(depth) {
    if (width == 0 || height == 0)
        throw IoError("image dimensions must be at least 1x1");
    if (depth < 1 || depth > 16)
        throw IoError("unsupported bit depth " + std::to_string(depth));
    if (uint64_t(width) * height > kMaxPixels)
        throw IoError("image too large");
    px_.assign(size_t(width) * height, Color{});
}

SidePlanes::SidePlanes(uint32_t width, uint32_t height) : w_(width), h_(height) {
    for (auto& plane : err_) plane.assign(size_t(width) * height, 0);
    newColor_.assign(size_t(width) * height, 0);
}

} // namespace scf
