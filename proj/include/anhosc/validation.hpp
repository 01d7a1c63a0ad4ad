#pragma once

#include <string>
#include <vector>

namespace anhosc {

struct Check {
    std::string name;
    bool passed;
    double measured;   // error metric, compared against tolerance
    double tolerance;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    bool all_passed() const;
};

// Known suite names, "all" excluded.
const std::vector<std::string>& suite_names();
bool is_known_suite(const std::string& name);

// Runs one suite or every suite for "all". Throws DomainError on an unknown name.
SuiteReport run_suite(const std::string& name);

}  // namespace anhosc
