#include <catch2/catch_amalgamated.hpp>
TEST_CASE("placeholder suites_test") { SUCCEED(); }
