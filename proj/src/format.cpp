#include "mvroute/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace mvroute {

std::string format_sig(double value, int significant) {
    if (value == 0.0) {
        return "0";  // also folds -0
    }
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, significant);
    if (ec != std::errc{}) {
        return "nan";
    }
    return {buf.data(), end};
}

std::string format_roundtrip(double value) {
    if (value == 0.0) {
        return "0";
    }
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) {
        return "nan";
    }
    return {buf.data(), end};
}

bool parse_number(std::string_view text, double& out, bool allow_suffix) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) {
        return false;
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{}) {
        return false;
    }
    std::string_view rest(ptr, static_cast<std::size_t>(text.data() + text.size() - ptr));
    if (!rest.empty()) {
        if (!allow_suffix || rest.size() != 1) {
            return false;
        }
        double scale = 1.0;
        switch (rest.front()) {
            case 'f': scale = 1e-15; break;
            case 'p': scale = 1e-12; break;
            case 'n': scale = 1e-9; break;
            case 'u': scale = 1e-6; break;
            case 'm': scale = 1e-3; break;
            case 'k': scale = 1e3; break;
            case 'M': scale = 1e6; break;
            case 'G': scale = 1e9; break;
            default: return false;
        }
        value *= scale;
    }
    if (!std::isfinite(value)) {
        return false;
    }
    out = value;
    return true;
}

}  // namespace mvroute
