#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "scf/ppm.hpp"
#include "test_images.hpp"

using namespace scf;

namespace {

// End-to-end checks against the installed binary; skipped when the harness
// does not provide SCF_CLI_BIN.
const char* cliBin() { return std::getenv("SCF_CLI_BIN"); }

int runCli(const std::string& args) {
    std::string cmd = std::string(cliBin()) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const char* tag) {
        path = std::filesystem::temp_directory_path() / (std::string("scf_cli_") + tag);
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("cli encode/decode round trip and exit codes") {
    if (!cliBin()) {
        MESSAGE("SCF_CLI_BIN not set; skipping CLI tests");
        return;
    }
    TempDir dir("roundtrip");
    auto ppm = dir.path / "in.ppm";
    auto scfFile = dir.path / "out.scf";
    auto outPpm = dir.path / "back.ppm";
    Image img = testimg::randomImage(3, 40);
    writePpm(ppm, img);

    CHECK(runCli("encode " + ppm.string() + " " + scfFile.string()) == 0);
    CHECK(runCli("decode " + scfFile.string() + " " + outPpm.string()) == 0);
    CHECK(readPpm(outPpm) == img);

    SUBCASE("baseline flags still round-trip") {
        CHECK(runCli("encode --no-stage3-pruning --no-escape-ctx " + ppm.string() + " " +
                     scfFile.string()) == 0);
        CHECK(runCli("decode " + scfFile.string() + " " + outPpm.string()) == 0);
        CHECK(readPpm(outPpm) == img);
    }

    SUBCASE("stats flag writes a csv") {
        auto csv = dir.path / "stats.csv";
        CHECK(runCli("encode --stats " + csv.string() + " " + ppm.string() + " " +
                     scfFile.string()) == 0);
        std::ifstream in(csv);
        std::string header;
        std::getline(in, header);
        CHECK(header.find("stage1_bits") != std::string::npos);
    }

    SUBCASE("inspect prints statistics") {
        CHECK(runCli("inspect " + ppm.string()) == 0);
    }

    SUBCASE("usage errors exit 1") {
        CHECK(runCli("") == 1);
        CHECK(runCli("encode onlyone.ppm") == 1);
        CHECK(runCli("frobnicate x y") == 1);
    }

    SUBCASE("missing input exits 2") {
        CHECK(runCli("encode /no/such/file.ppm " + scfFile.string()) == 2);
        CHECK(runCli("decode /no/such/file.scf " + outPpm.string()) == 2);
    }

    SUBCASE("decoding a non-scf file exits 3") {
        CHECK(runCli("decode " + ppm.string() + " " + outPpm.string()) == 3);
    }

    SUBCASE("decoding a truncated stream exits 3") {
        REQUIRE(runCli("encode " + ppm.string() + " " + scfFile.string()) == 0);
        auto truncated = dir.path / "cut.scf";
        std::ifstream in(scfFile, std::ios::binary);
        std::string data((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        std::ofstream out(truncated, std::ios::binary);
        out.write(data.data(), std::streamsize(data.size() / 2));
        out.close();
        CHECK(runCli("decode " + truncated.string() + " " + outPpm.string()) == 3);
    }
}

TEST_CASE("cli gen-corpus and bench work end to end") {
    if (!cliBin()) {
        MESSAGE("SCF_CLI_BIN not set; skipping CLI tests");
        return;
    }
    TempDir dir("corpus");
    auto corpus = dir.path / "corpus";
    CHECK(runCli("gen-corpus " + corpus.string() +
                 " --count 4 --seed 9 --min-size 32 --max-size 48") == 0);
    CHECK(std::filesystem::exists(corpus / "img_000.ppm"));
    CHECK(std::filesystem::exists(corpus / "manifest.txt"));

    auto csv = dir.path / "bench.csv";
    CHECK(runCli("bench " + corpus.string() + " --stats " + csv.string() +
                 " --threads 2") == 0);
    std::ifstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line.find("bytes_both") != std::string::npos);
}
