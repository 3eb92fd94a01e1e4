#pragma once

#include <cstdio>
#include <string>

namespace hdcap {

// All human-facing numeric output uses 9 significant digits.
inline std::string fmt9(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

}  // namespace hdcap
