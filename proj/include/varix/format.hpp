// SPDX-License-Identifier: MIT
#pragma once

#include <cstdio>
#include <string>

namespace varix {

/// Doubles rendered with 17 significant digits so reports are diff-stable.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace varix
