#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pairpack {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass;
    double measured;
    double tolerance;
};

/// Suites: kernels, appendix, constants, oracle, formfactor, bounds, all.
std::vector<std::string> verify_suites();

/// Runs the named suite with a fixed seed; the report is byte-identical across runs.
std::vector<CheckResult> run_verify(const std::string& suite);

std::string format_report(const std::vector<CheckResult>& results);

/// Uniform double in [0, 1) from 53 bits of a 64-bit engine output.
inline double unit_from_bits(std::uint64_t bits) { return double(bits >> 11) * 0x1.0p-53; }

}  // namespace pairpack
