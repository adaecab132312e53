#include "pairpack/format.hpp"

#include <charconv>
#include <cmath>

namespace pairpack {

std::string fmt_num(double v, int sig) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0) v = 0;  // drop the sign of -0
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, sig);
    (void)ec;
    return std::string(buf, end);
}

std::string csv_row(const std::vector<double>& values, int sig) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += fmt_num(values[i], sig);
    }
    return s;
}

}  // namespace pairpack
