#pragma once
#include <charconv>
#include <string>

namespace zrpsim {

// Shortest decimal form that parses back to the same double; integral values
// print without a fractional part. Keeps CSV output compact and lossless.
inline std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

}  // namespace zrpsim
