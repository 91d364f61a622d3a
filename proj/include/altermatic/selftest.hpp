#pragma once

#include <string>
#include <vector>

namespace altermatic {

struct SelftestCase {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Fast built-in checks: worked examples, small exhaustive cross-checks, one audit.
std::vector<SelftestCase> run_selftest();

} // namespace altermatic
