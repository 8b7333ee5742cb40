#include <catch2/catch_amalgamated.hpp>
TEST_CASE("placeholder formulas_test") { SUCCEED(); }
