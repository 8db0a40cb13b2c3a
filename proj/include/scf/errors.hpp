#ifndef SCF_ERRORS_HPP
#define SCF_ERRORS_HPP

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace scf {

// File and format problems on the way in or out (missing file, bad PPM, ...).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The bitstream cannot be decoded: bad magic, truncation, impossible symbol.
class CorruptStreamError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Always-on contract check for coding-path invariants. A violation is a
// programming error, not a recoverable condition.
inline void contractCheck(bool ok, const char* what) {
    if (!ok) {
        std::fprintf(stderr, "scf: contract violation: %s\n", what);
        std::abort();
    }
}

} // namespace scf

#endif
