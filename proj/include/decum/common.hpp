#pragma once

#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace decum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments or malformed input data.
struct InvalidInput : Error {
    using Error::Error;
};

// Evaluation outside a function's domain (e.g. interpolation abscissa).
struct OutOfRange : Error {
    using Error::Error;
};

// No admissible action exists for an optimization problem.
struct InfeasibleAction : Error {
    using Error::Error;
};

// File-system and parse failures.
struct IoError : Error {
    using Error::Error;
};

// Internal consistency violation (model assumptions broken at runtime).
struct ModelError : Error {
    using Error::Error;
};

inline std::string strprintf(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    char buf[512];
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    return std::string(buf);
}

#define DECUM_REQUIRE(cond, extype, ...)                    \
    do {                                                    \
        if (!(cond)) throw extype(strprintf(__VA_ARGS__));  \
    } while (0)

// Canonical decimal formatting used by every file the toolkit writes.
// 12 significant digits; round-trips through load/save byte-identically.
inline std::string format_value(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::string(buf);
}

constexpr double neg_inf() { return -std::numeric_limits<double>::infinity(); }

// FNV-1a, used for config/solution fingerprints.
inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 14695981039346656037ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace decum
