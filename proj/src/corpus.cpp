#include "scf/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <unordered_set>

#include "scf/errors.hpp"
#include "scf/ppm.hpp"

namespace scf {

namespace {

struct Rect {
    uint32_t x, y, w, h;
};

Color randomColor(Rng& rng) {
    return Color{uint16_t(rng.below(256)), uint16_t(rng.below(256)),
                 uint16_t(rng.below(256))};
}

void fillRect(Image& img, const Rect& r, Color c) {
    for (uint32_t j = r.y; j < r.y + r.h; ++j)
        for (uint32_t i = r.x; i < r.x + r.w; ++i) img.at(i, j) = c;
}

// Tiles 5x7 random glyphs on a cell grid, two colors per block.
void drawTextBlock(Image& img, const Rect& r, Rng& rng, const std::vector<Color>& palette) {
    constexpr int kGlyphW = 5, kGlyphH = 7, kCellW = 6, kCellH = 9;
    uint64_t glyphs[16];
    for (auto& g : glyphs) g = rng.next() & ((1ull << (kGlyphW * kGlyphH)) - 1);
    Color bg = palette[rng.below(uint32_t(palette.size()))];
    Color fg = palette[rng.below(uint32_t(palette.size()))];
    if (fg == bg) fg = Color{uint16_t(255 - bg.r), uint16_t(255 - bg.g), uint16_t(255 - bg.b)};
    fillRect(img, r, bg);
    for (uint32_t cy = 0; cy + kCellH <= r.h; cy += kCellH) {
        for (uint32_t cx = 0; cx + kCellW <= r.w; cx += kCellW) {
            uint64_t g = glyphs[rng.below(16)];
            if (rng.below(8) == 0) continue; // word gaps
            for (int gy = 0; gy < kGlyphH; ++gy)
                for (int gx = 0; gx < kGlyphW; ++gx)
                    if ((g >> (gy * kGlyphW + gx)) & 1)
                        img.at(r.x + cx + uint32_t(gx), r.y + cy + uint32_t(gy)) = fg;
        }
    }
}

// Linear two-color ramp, posterized to `levels` steps per component.
void drawGradient(Image& img, const Rect& r, Rng& rng, int levels) {
    Color a = randomColor(rng);
    Color b = randomColor(rng);
    bool horizontal = rng.below(2) == 0;
    uint32_t span = horizontal ? r.w : r.h;
    if (span < 2) span = 2;
    for (uint32_t j = 0; j < r.h; ++j) {
        for (uint32_t i = 0; i < r.w; ++i) {
            uint32_t pos = horizontal ? i : j;
            // fixed-point interpolation, then posterize
            uint32_t t = pos * 255u / (span - 1);
            Color c;
            for (int k = 0; k < 3; ++k) {
                int va = a.component(k), vb = b.component(k);
                int v = va + (vb - va) * int(t) / 255;
                int step = 256 / levels;
                if (step > 1) v = (v / step) * step;
                c.setComponent(k, uint16_t(v));
            }
            img.at(r.x + i, r.y + j) = c;
        }
    }
}

// Value noise: coarse random lattice, bilinear interpolation, plus optional
// per-pixel jitter. High jitter makes nearly every pixel a new color.
void drawNoise(Image& img, const Rect& r, Rng& rng, int jitter) {
    constexpr uint32_t kCell = 8;
    uint32_t gw = r.w / kCell + 2, gh = r.h / kCell + 2;
    std::vector<Color> lattice(size_t(gw) * gh);
    for (auto& c : lattice) c = randomColor(rng);
    for (uint32_t j = 0; j < r.h; ++j) {
        for (uint32_t i = 0; i < r.w; ++i) {
            uint32_t gx = i / kCell, gy = j / kCell;
            uint32_t fx = i % kCell, fy = j % kCell;
            Color c;
            for (int k = 0; k < 3; ++k) {
                int v00 = lattice[size_t(gy) * gw + gx].component(k);
                int v10 = lattice[size_t(gy) * gw + gx + 1].component(k);
                int v01 = lattice[size_t(gy + 1) * gw + gx].component(k);
                int v11 = lattice[size_t(gy + 1) * gw + gx + 1].component(k);
                int top = v00 * int(kCell - fx) + v10 * int(fx);
                int bot = v01 * int(kCell - fx) + v11 * int(fx);
                int v = (top * int(kCell - fy) + bot * int(fy)) / int(kCell * kCell);
                if (jitter > 0) v += int(rng.below(uint32_t(2 * jitter + 1))) - jitter;
                v = std::clamp(v, 0, 255);
                c.setComponent(k, uint16_t(v));
            }
            img.at(r.x + i, r.y + j) = c;
        }
    }
}

enum PanelKind { kFlat = 0, kText, kGradient, kNoise };

// Per-slot multipliers steering consecutive images toward the four
// unique-color buckets. Zero user weights stay zero.
constexpr double kStyleMult[4][4] = {
    {3.0, 2.0, 0.25, 0.05},
    {1.5, 1.5, 1.0, 0.25},
    {0.8, 0.8, 2.0, 1.0},
    {0.3, 0.3, 1.5, 3.0},
};

int samplePanelKind(Rng& rng, const double* w) {
    double total = w[0] + w[1] + w[2] + w[3];
    double x = rng.real() * total;
    for (int k = 0; k < 3; ++k) {
        if (x < w[k]) return k;
        x -= w[k];
    }
    return 3;
}

} // namespace

Image generateCorpusImage(const CorpusSpec& spec, int index) {
    if (spec.weightFlat <= 0 && spec.weightText <= 0 && spec.weightGradient <= 0 &&
        spec.weightNoise <= 0)
        throw IoError("corpus spec: all content weights are zero");
    if (spec.minSize < 16 || spec.maxSize < spec.minSize || spec.maxSize > 1024)
        throw IoError("corpus spec: bad size range");

    Rng rng(spec.seed * 0x517CC1B727220A95ull + uint64_t(index) + 1);
    uint32_t w = uint32_t(rng.range(int(spec.minSize), int(spec.maxSize)));
    uint32_t h = uint32_t(rng.range(int(spec.minSize), int(spec.maxSize)));
    Image img(w, h, 8);

    // Small shared palette for flat and text content.
    std::vector<Color> palette;
    for (int n = 0; n < 8; ++n) palette.push_back(randomColor(rng));

    const int style = index % 4;
    double weights[4] = {
        spec.weightFlat * kStyleMult[style][0],
        spec.weightText * kStyleMult[style][1],
        spec.weightGradient * kStyleMult[style][2],
        spec.weightNoise * kStyleMult[style][3],
    };

    fillRect(img, Rect{0, 0, w, h}, palette[0]);

    int panels = rng.range(5, 11);
    for (int n = 0; n < panels; ++n) {
        Rect r;
        r.w = uint32_t(rng.range(int(w / 5), int(std::max(w / 5, w * 3 / 4))));
        r.h = uint32_t(rng.range(int(h / 5), int(std::max(h / 5, h * 3 / 4))));
        r.x = rng.below(w - r.w + 1);
        r.y = rng.below(h - r.h + 1);
        switch (samplePanelKind(rng, weights)) {
        case kFlat:
            fillRect(img, r, palette[rng.below(uint32_t(palette.size()))]);
            break;
        case kText:
            drawTextBlock(img, r, rng, palette);
            break;
        case kGradient:
            drawGradient(img, r, rng, style <= 1 ? 16 : 128);
            break;
        case kNoise:
            drawNoise(img, r, rng, style == 3 ? 24 : (style == 2 ? 6 : 2));
            break;
        }
    }

    // Thin separator lines, a screen-content staple.
    int lines = rng.range(1, 4);
    for (int n = 0; n < lines; ++n) {
        Color c = palette[rng.below(uint32_t(palette.size()))];
        if (rng.below(2) == 0)
            fillRect(img, Rect{0, rng.below(h), w, 1}, c);
        else
            fillRect(img, Rect{rng.below(w), 0, 1, h}, c);
    }
    return img;
}

uint64_t countUniqueColors(const Image& img) {
    std::unordered_set<uint64_t> seen;
    seen.reserve(img.pixels().size());
    for (const Color& c : img.pixels()) seen.insert(colorKey(c));
    return seen.size();
}

std::vector<CorpusEntry> generateCorpus(const CorpusSpec& spec,
                                        const std::filesystem::path& outDir) {
    std::filesystem::create_directories(outDir);
    std::vector<CorpusEntry> entries;
    for (int n = 0; n < spec.imageCount; ++n) {
        Image img = generateCorpusImage(spec, n);
        char name[32];
        std::snprintf(name, sizeof name, "img_%03d.ppm", n);
        writePpm(outDir / name, img);
        CorpusEntry e;
        e.name = name;
        e.width = img.width();
        e.height = img.height();
        e.uniqueColors = countUniqueColors(img);
        e.uniqueFraction = double(e.uniqueColors) / double(img.pixelCount());
        entries.push_back(std::move(e));
    }
    std::ofstream manifest(outDir / "manifest.txt");
    if (!manifest) throw IoError("cannot write corpus manifest");
    manifest << "# name width height unique_colors unique_fraction\n";
    char line[128];
    for (const CorpusEntry& e : entries) {
        std::snprintf(line, sizeof line, "%s %u %u %llu %.6f\n", e.name.c_str(), e.width,
                      e.height, (unsigned long long)e.uniqueColors, e.uniqueFraction);
        manifest << line;
    }
    return entries;
}

} // namespace scf
