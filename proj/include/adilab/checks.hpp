#pragma once

#include <string>
#include <vector>

#include "adilab/prec.hpp"

namespace adi {

struct CheckRow {
    std::string name;
    std::string measured;
    std::string target;
    bool pass = false;
};

// Named suites behind `verify <suite>`; every row is self-describing.
std::vector<CheckRow> run_check_suite(const std::string& suite, const PrecisionConfig& ctx);
std::vector<std::string> check_suite_names();

}  // namespace adi
