#pragma once

#include <cstdio>
#include <string>

namespace memetrack {

// All floating-point values in TSV/JSON outputs go through this: 12
// significant digits, so golden files compare byte-equal across runs,
// thread counts, and platforms.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace memetrack
