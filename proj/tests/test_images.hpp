#ifndef SCF_TEST_IMAGES_HPP
#define SCF_TEST_IMAGES_HPP

#include "scf/corpus.hpp"
#include "scf/image.hpp"

namespace scf::testimg {

inline Image uniform(uint32_t w, uint32_t h, Color c) {
    Image img(w, h, 8);
    for (auto& px : img.pixels()) px = c;
    return img;
}

inline Image noise(uint32_t w, uint32_t h, uint64_t seed) {
    Image img(w, h, 8);
    Rng rng(seed);
    for (auto& px : img.pixels())
        px = Color{uint16_t(rng.below(256)), uint16_t(rng.below(256)),
                   uint16_t(rng.below(256))};
    return img;
}

inline Image stripes(uint32_t w, uint32_t h, uint64_t seed) {
    Image img(w, h, 8);
    Rng rng(seed);
    Color a{uint16_t(rng.below(256)), uint16_t(rng.below(256)), uint16_t(rng.below(256))};
    Color b{uint16_t(rng.below(256)), uint16_t(rng.below(256)), uint16_t(rng.below(256))};
    uint32_t period = 1 + rng.below(6);
    for (auto [i, j] : RasterScan(w, h)) img.at(i, j) = (j / period) % 2 ? a : b;
    return img;
}

inline Image checker(uint32_t w, uint32_t h, uint64_t seed) {
    Image img(w, h, 8);
    Rng rng(seed);
    Color a{uint16_t(rng.below(256)), uint16_t(rng.below(256)), uint16_t(rng.below(256))};
    Color b{uint16_t(rng.below(256)), uint16_t(rng.below(256)), uint16_t(rng.below(256))};
    for (auto [i, j] : RasterScan(w, h)) img.at(i, j) = (i + j) % 2 ? a : b;
    return img;
}

inline Image gradient(uint32_t w, uint32_t h, uint64_t seed) {
    Image img(w, h, 8);
    Rng rng(seed);
    int base = int(rng.below(128));
    for (auto [i, j] : RasterScan(w, h)) {
        int v = base + int(i) + int(j);
        img.at(i, j) = Color{uint16_t(v % 256), uint16_t((v * 2) % 256),
                             uint16_t((255 - v % 256))};
    }
    return img;
}

// A repeated random row: ideal Stage-1 material after warm-up.
inline Image repeatedRow(uint32_t w, uint32_t h, uint64_t seed, uint32_t colors = 24) {
    Image img(w, h, 8);
    Rng rng(seed);
    std::vector<Color> row(w);
    std::vector<Color> palette(colors);
    for (auto& c : palette)
        c = Color{uint16_t(rng.below(256)), uint16_t(rng.below(256)),
                  uint16_t(rng.below(256))};
    for (auto& c : row) c = palette[rng.below(colors)];
    for (auto [i, j] : RasterScan(w, h)) img.at(i, j) = row[i];
    return img;
}

// Sparse random recolors on a flat background.
inline Image sparse(uint32_t w, uint32_t h, uint64_t seed) {
    Image img = uniform(w, h, Color{32, 64, 96});
    Rng rng(seed);
    uint32_t dots = (w * h) / 16 + 1;
    for (uint32_t n = 0; n < dots; ++n) {
        img.at(rng.below(w), rng.below(h)) =
            Color{uint16_t(rng.below(256)), uint16_t(rng.below(256)),
                  uint16_t(rng.below(256))};
    }
    return img;
}

// Deterministic mixed test image by index, sized 1..maxSide.
inline Image randomImage(int index, uint32_t maxSide = 128) {
    Rng rng(0xC0FFEEull + uint64_t(index));
    uint32_t w = 1 + rng.below(maxSide);
    uint32_t h = 1 + rng.below(maxSide);
    switch (index % 7) {
    case 0: return noise(w, h, rng.next());
    case 1: return uniform(w, h, Color{uint16_t(rng.below(256)), uint16_t(rng.below(256)),
                                       uint16_t(rng.below(256))});
    case 2: return stripes(w, h, rng.next());
    case 3: return checker(w, h, rng.next());
    case 4: return gradient(w, h, rng.next());
    case 5: return repeatedRow(w, h, rng.next());
    default: return sparse(w, h, rng.next());
    }
}

} // namespace scf::testimg

#endif
