#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "towel/maps.hpp"

namespace towel::cli {

// Exit codes of towel-certify.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;   // verdict false, refused consequence, divergent sample
inline constexpr int kExitUsage = 2;  // malformed flags or input files

// Runs towel-certify with args (args[0] is the program name). Writes
// human-readable progress to out and diagnostics to err.
int run_certify(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct AttractorSampleResult {
    std::size_t rows_written = 0;
    bool diverged = false;
};

// Writes "# NON-RIGOROUS SAMPLE\nx,y,z" and then `count` orbit points after
// `transient` discarded steps, each coordinate with 17 significant digits.
AttractorSampleResult write_attractor_sample(const Point3& seed, std::size_t transient, std::size_t count,
                                             std::ostream& csv);

} // namespace towel::cli
