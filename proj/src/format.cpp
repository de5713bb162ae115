#include "qcoherence/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qcoh {

std::string fmt12(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[48];
    auto res = std::to_chars(buf, buf + sizeof(buf), value,
                             std::chars_format::general, 12);
    if (res.ec != std::errc{}) throw std::runtime_error("fmt12: to_chars failed");
    return std::string(buf, res.ptr);
}

nlohmann::ordered_json json12(double value) {
    if (!std::isfinite(value)) return fmt12(value);
    const std::string text = fmt12(value);
    double rounded = 0.0;
    // to_chars output is plain "[-]d.dddde[+-]dd"; sscanf round-trips it exactly.
    if (std::sscanf(text.c_str(), "%lf", &rounded) != 1)
        throw std::runtime_error("json12: reparse failed");
    return rounded;
}

}  // namespace qcoh
