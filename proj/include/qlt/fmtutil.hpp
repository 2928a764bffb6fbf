#pragma once

#include <cstdio>
#include <string>

namespace qlt {

// Shortest-faithful decimal rendering of a double; locale-independent and
// byte-stable across runs.
inline std::string fp(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace qlt
