#pragma once

#include <string>
#include <vector>

namespace pairpack {

/// Shortest locale-free rendering with at most `sig` significant digits.
std::string fmt_num(double v, int sig = 12);

std::string csv_row(const std::vector<double>& values, int sig = 12);

}  // namespace pairpack
