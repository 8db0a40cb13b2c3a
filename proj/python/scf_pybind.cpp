#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scf/codec.hpp"
#include "scf/corpus.hpp"
#include "scf/ppm.hpp"

namespace py = pybind11;

namespace {

scf::Image imageFromBuffer(uint32_t width, uint32_t height, py::bytes data) {
    std::string_view view = data;
    if (view.size() != size_t(width) * height * 3)
        throw py::value_error("rgb buffer must hold width*height*3 bytes");
    scf::Image img(width, height, 8);
    const uint8_t* p = reinterpret_cast<const uint8_t*>(view.data());
    for (uint32_t j = 0; j < height; ++j)
        for (uint32_t i = 0; i < width; ++i) {
            img.at(i, j) = scf::Color{p[0], p[1], p[2]};
            p += 3;
        }
    return img;
}

py::bytes bufferFromImage(const scf::Image& img) {
    std::string out;
    out.reserve(size_t(img.pixelCount()) * 3);
    for (const scf::Color& c : img.pixels()) {
        out.push_back(char(uint8_t(c.r)));
        out.push_back(char(uint8_t(c.g)));
        out.push_back(char(uint8_t(c.b)));
    }
    return py::bytes(out);
}

scf::CodecConfig makeConfig(bool stage3Pruning, bool escapeCtx, int tolerance) {
    scf::CodecConfig cfg;
    cfg.enableStage3Pruning = stage3Pruning;
    cfg.enableEscapeContextModel = escapeCtx;
    cfg.similarityTolerance = tolerance;
    return cfg;
}

py::dict statsToDict(const scf::StageStats& s) {
    py::dict d;
    d["pixels"] = s.pixels;
    d["unique_colors"] = s.uniqueColors;
    d["unique_fraction"] = s.uniqueColorFraction;
    d["stage_pixels"] = py::make_tuple(s.stagePixels[0], s.stagePixels[1], s.stagePixels[2]);
    d["stage_bits"] = py::make_tuple(s.stageBits[0], s.stageBits[1], s.stageBits[2]);
    d["coder_overhead_bits"] = s.coderOverheadBits;
    d["header_bytes"] = s.headerBytes;
    d["payload_bytes"] = s.payloadBytes;
    d["bpp"] = s.bitsPerPixel();
    return d;
}

} // namespace

PYBIND11_MODULE(_scfcodec, m) {
    m.doc() = "Lossless screen-content codec (soft context formation)";

    m.def(
        "encode_rgb8",
        [](uint32_t width, uint32_t height, py::bytes rgb, bool stage3_pruning,
           bool escape_ctx, int tolerance) {
            scf::Image img = imageFromBuffer(width, height, rgb);
            std::vector<uint8_t> out =
                scf::encode(img, makeConfig(stage3_pruning, escape_ctx, tolerance));
            return py::bytes(reinterpret_cast<const char*>(out.data()), out.size());
        },
        py::arg("width"), py::arg("height"), py::arg("rgb"),
        py::arg("stage3_pruning") = true, py::arg("escape_ctx") = true,
        py::arg("tolerance") = 0,
        "Compress an 8-bit RGB buffer (row-major, 3 bytes per pixel).");

    m.def(
        "encode_rgb8_with_stats",
        [](uint32_t width, uint32_t height, py::bytes rgb, bool stage3_pruning,
           bool escape_ctx, int tolerance) {
            scf::Image img = imageFromBuffer(width, height, rgb);
            scf::StageStats stats;
            std::vector<uint8_t> out = scf::encodeWithStats(
                img, makeConfig(stage3_pruning, escape_ctx, tolerance), stats);
            return py::make_tuple(
                py::bytes(reinterpret_cast<const char*>(out.data()), out.size()),
                statsToDict(stats));
        },
        py::arg("width"), py::arg("height"), py::arg("rgb"),
        py::arg("stage3_pruning") = true, py::arg("escape_ctx") = true,
        py::arg("tolerance") = 0,
        "Compress and return (bytes, per-stage statistics dict).");

    m.def(
        "decode_rgb8",
        [](py::bytes blob) {
            std::string_view view = blob;
            scf::Image img = scf::decode(std::span<const uint8_t>(
                reinterpret_cast<const uint8_t*>(view.data()), view.size()));
            return py::make_tuple(img.width(), img.height(), bufferFromImage(img));
        },
        py::arg("data"), "Decompress to (width, height, rgb bytes).");

    m.def(
        "read_ppm",
        [](const std::string& path) {
            scf::Image img = scf::readPpm(path);
            return py::make_tuple(img.width(), img.height(), bufferFromImage(img));
        },
        py::arg("path"));

    m.def(
        "write_ppm",
        [](const std::string& path, uint32_t width, uint32_t height, py::bytes rgb) {
            scf::writePpm(path, imageFromBuffer(width, height, rgb));
        },
        py::arg("path"), py::arg("width"), py::arg("height"), py::arg("rgb"));

    py::register_exception<scf::IoError>(m, "IoError");
    py::register_exception<scf::CorruptStreamError>(m, "CorruptStreamError");
}
