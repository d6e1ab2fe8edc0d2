#pragma once

#include <string>
#include <vector>

namespace pr::checks {

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string detail;
};

// The named oracle, limit and normalization checks behind `prsim validate`.
// quick drops the waveguide comparisons that take more than a few seconds.
std::vector<CheckResult> run_all(bool quick);

} // namespace pr::checks
