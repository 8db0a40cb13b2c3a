#ifndef SCF_IMAGE_HPP
#define SCF_IMAGE_HPP

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "scf/errors.hpp"

namespace scf {

struct Color {
    uint16_t r = 0;
    uint16_t g = 0;
    uint16_t b = 0;

    friend bool operator==(const Color&, const Color&) = default;

    uint16_t component(int k) const {
        assert(k >= 0 && k < 3);
        return k == 0 ? r : (k == 1 ? g : b);
    }
    void setComponent(int k, uint16_t v) {
        assert(k >= 0 && k < 3);
        (k == 0 ? r : (k == 1 ? g : b)) = v;
    }
};

// Packs a color into one integer. Integer order == lexicographic (r,g,b).
constexpr uint64_t colorKey(Color c) {
    return (uint64_t(c.r) << 32) | (uint64_t(c.g) << 16) | uint64_t(c.b);
}

constexpr Color colorFromKey(uint64_t k) {
    return Color{uint16_t((k >> 32) & 0xFFFF), uint16_t((k >> 16) & 0xFFFF),
                 uint16_t(k & 0xFFFF)};
}

// Row-major RGB plane. Component values live in [0, 2^depth - 1].
class Image {
public:
    static constexpr uint64_t kMaxPixels = 1ull << 28;

    Image(uint32_t width, uint32_t height, int depth = 8);

    uint32_t width() const { return w_; }
    uint32_t height() const { return h_; }
    int depth() const { return depth_; }
    uint16_t maxValue() const { return uint16_t((1u << depth_) - 1); }
    uint64_t pixelCount() const { return uint64_t(w_) * h_; }

    Color& at(uint32_t i, uint32_t j) {
        assert(i < w_ && j < h_);
        return px_[size_t(j) * w_ + i];
    }
    const Color& at(uint32_t i, uint32_t j) const {
        assert(i < w_ && j < h_);
        return px_[size_t(j) * w_ + i];
    }

    // Total function: positions outside the image read as component value 0.
    Color neighbor(uint32_t i, uint32_t j, int dx, int dy) const {
        int64_t x = int64_t(i) + dx;
        int64_t y = int64_t(j) + dy;
        if (x < 0 || y < 0 || x >= int64_t(w_) || y >= int64_t(h_)) return Color{};
        return px_[size_t(y) * w_ + size_t(x)];
    }

    const std::vector<Color>& pixels() const { return px_; }
    std::vector<Color>& pixels() { return px_; }

    friend bool operator==(const Image& a, const Image& b) {
        return a.w_ == b.w_ && a.h_ == b.h_ && a.depth_ == b.depth_ && a.px_ == b.px_;
    }

private:
    uint32_t w_;
    uint32_t h_;
    int depth_;
    std::vector<Color> px_;
};

// Left-to-right / top-to-bottom position sequence.
class RasterScan {
public:
    RasterScan(uint32_t width, uint32_t height) : w_(width), h_(height) {}

    class iterator {
    public:
        iterator(uint32_t w, uint32_t pos) : w_(w), pos_(pos) {}
        std::pair<uint32_t, uint32_t> operator*() const {
            return {uint32_t(pos_ % w_), uint32_t(pos_ / w_)};
        }
        iterator& operator++() {
            ++pos_;
            return *this;
        }
        friend bool operator==(const iterator&, const iterator&) = default;

    private:
        uint32_t w_;
        uint64_t pos_;
    };

    iterator begin() const { return iterator(w_, 0); }
    iterator end() const { return iterator(w_, uint64_t(w_) * h_); }

private:
    uint32_t w_;
    uint32_t h_;
};

// Per-pixel bookkeeping written exactly once, right after the pixel is coded.
// mapError holds the med-predictor residual per component; newColor is set iff
// the pixel's color was absent from the palette at coding time. Off-image
// reads are 0 / false.
class SidePlanes {
public:
    SidePlanes(uint32_t width, uint32_t height);

    int32_t mapError(int k, int64_t i, int64_t j) const {
        if (i < 0 || j < 0 || i >= int64_t(w_) || j >= int64_t(h_)) return 0;
        return err_[k][size_t(j) * w_ + size_t(i)];
    }
    void setMapError(int k, uint32_t i, uint32_t j, int32_t e) {
        err_[k][size_t(j) * w_ + i] = e;
    }

    bool newColor(int64_t i, int64_t j) const {
        if (i < 0 || j < 0 || i >= int64_t(w_) || j >= int64_t(h_)) return false;
        return newColor_[size_t(j) * w_ + size_t(i)] != 0;
    }
    void setNewColor(uint32_t i, uint32_t j, bool v) {
        newColor_[size_t(j) * w_ + i] = v ? 1 : 0;
    }

    uint32_t width() const { return w_; }
    uint32_t height() const { return h_; }

private:
    uint32_t w_;
    uint32_t h_;
    std::vector<int32_t> err_[3];
    std::vector<uint8_t> newColor_;
};

} // namespace scf

#endif
