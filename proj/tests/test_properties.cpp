#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"

TEST_CASE("invariants hold on 20 randomized rate sets")
{
    for (const auto& o : pr::properties::run(20, 7)) {
        CAPTURE(o.name);
        CAPTURE(o.detail);
        CHECK(o.passed);
    }
}
