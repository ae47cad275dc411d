#pragma once

#include <string>
#include <vector>

namespace gwzero {

struct VerifyLine {
    std::string name;
    bool pass = false;
    std::string detail;  // empty on pass
};

// Suites: matrix, loop, lambda-g, string-dilaton, theorem-a, eisenstein.
// "all" runs every suite. Throws std::invalid_argument on unknown names.
std::vector<std::string> verify_suite_names();
std::vector<VerifyLine> verify_suite(const std::string& suite, int gmax);

} // namespace gwzero
