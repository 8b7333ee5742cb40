#include <catch2/catch_amalgamated.hpp>
TEST_CASE("placeholder primitives_test") { SUCCEED(); }
