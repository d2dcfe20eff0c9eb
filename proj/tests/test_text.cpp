#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "pinnacle/text.hpp"

using namespace pinnacle;
using namespace pinnacle::text;

namespace {

bool mentions(const std::exception& e, const std::string& needle) {
    return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("canonical forms") {
    CHECK(format_set(parse_set("3,5,8,9,13,14")) == "3,5,8,9,13,14");
    CHECK(format_ordering(parse_ordering("10,6,4,11,8")) == "10,6,4,11,8");
    CHECK(format_permutation(parse_permutation("9 10 3 6 1 4 2 11 5 8 7")) ==
          "9 10 3 6 1 4 2 11 5 8 7");

    CHECK(parse_set("").empty());
    CHECK(format_set(PinnacleSet{}) == "");
    CHECK(parse_ordering("").empty());
    CHECK(parse_permutation("").size() == 0);

    CHECK(parse_ordering("10,6,4,11,8").base() == parse_set("4,6,8,10,11"));
}

TEST_CASE("parse errors name the offending token") {
    try {
        parse_set("3,x,7");
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(mentions(e, "\"x\""));
    }

    try {
        parse_set("5,3");
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(mentions(e, "3"));
        CHECK(mentions(e, "increasing"));
    }

    CHECK_THROWS_AS(parse_set("3,,5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_set("3, 5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_set("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_set("-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_set("3,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ordering("5,3,5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("1 3 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("2 3"), std::invalid_argument);
}

TEST_CASE("random round trips") {
    std::mt19937 rng(987123);
    for (int trial = 0; trial < 500; ++trial) {
        const int limit = 1 + static_cast<int>(rng() % 30);
        std::vector<int> elems;
        for (int v = 1; v <= limit; ++v)
            if (rng() % 3 == 0) elems.push_back(v);
        const PinnacleSet s(elems);
        CHECK(parse_set(format_set(s)) == s);

        std::vector<int> seq = elems;
        std::shuffle(seq.begin(), seq.end(), rng);
        const PinnacleOrdering a(seq, s);
        CHECK(parse_ordering(format_ordering(a)) == a);
    }

    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng() % 12);
        std::vector<int> word(static_cast<std::size_t>(n));
        std::iota(word.begin(), word.end(), 1);
        std::shuffle(word.begin(), word.end(), rng);
        const Permutation w(word);
        CHECK(parse_permutation(format_permutation(w)) == w);
    }
}
