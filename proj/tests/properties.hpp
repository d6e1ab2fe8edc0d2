#pragma once

#include <string>
#include <vector>

namespace pr::properties {

struct Outcome
{
    std::string name;
    bool passed = false;
    std::string detail;     // worst case found
};

// Each property evaluated on `sets` randomized rate sets drawn from a fixed seed.
std::vector<Outcome> run(int sets, unsigned seed);

} // namespace pr::properties
