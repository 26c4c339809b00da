#include "doctest.h"

#include <set>

#include "chrobak/errors.hpp"
#include "chrobak/nfa.hpp"
#include "chrobak/random_nfa.hpp"
#include "fixtures.hpp"

using namespace chrobak;
namespace fx = chrobak::fixtures;

TEST_CASE("parse_nfa reads the minimal automaton") {
    UnaryNfa nfa = parse_nfa("states 1\ninitial 0\nfinal 0\n");
    CHECK(nfa == fx::single_state());
    CHECK(member(nfa, 0));
    CHECK_FALSE(member(nfa, 1));
}

TEST_CASE("parse_nfa reads the two-state cycle") {
    UnaryNfa nfa = parse_nfa("states 2\ninitial 0\nfinal 0\nedge 0 1\nedge 1 0\n");
    CHECK(nfa == fx::two_cycle());
    CHECK(member(nfa, 4));
    CHECK_FALSE(member(nfa, 5));
}

TEST_CASE("parse_nfa ignores comments and blank lines, merges final lines") {
    UnaryNfa nfa = parse_nfa("# header\nstates 4\n\ninitial 0\nfinal 1\nfinal 3 1\n"
                             "edge 0 1\nedge 0 2\nedge 2 3\n");
    CHECK(nfa == fx::two_finals());
}

TEST_CASE("parse_nfa reports semantic errors with line numbers") {
    CHECK_THROWS_WITH_AS(parse_nfa("states 2\ninitial 0\nfinal 5\n"),
                         "line 3: state index 5 out of range [0, 2)", ParseError);
    try {
        parse_nfa("states 2\ninitial 0\nedge 0 2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("parse_nfa reports syntax errors") {
    CHECK_THROWS_AS(parse_nfa("states x\n"), ParseError);
    CHECK_THROWS_AS(parse_nfa("states 2\ninitial 0\nedge 0\n"), ParseError);
    CHECK_THROWS_AS(parse_nfa("states 2\ninitial 0\nhop 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_nfa("initial 0\nstates 2\n"), ParseError);
    CHECK_THROWS_AS(parse_nfa("states 2\n"), ParseError);
    CHECK_THROWS_AS(parse_nfa(""), ParseError);
    CHECK_THROWS_AS(parse_nfa("states 2\ninitial 0\ninitial 1\n"), ParseError);
}

TEST_CASE("serialize then parse is the identity") {
    for (const auto& [name, nfa] : fx::named_fixtures()) {
        CAPTURE(name);
        CHECK(parse_nfa(serialize_nfa(nfa)) == nfa);
    }
    for (int i = 0; i < 50; ++i) {
        UnaryNfa nfa = random_nfa(7, i, 9);
        CHECK(parse_nfa(serialize_nfa(nfa)) == nfa);
    }
}

TEST_CASE("serializing a canonical rendering reproduces it byte for byte") {
    std::string canonical = "states 2\ninitial 0\nfinal 0\nedge 0 1\nedge 1 0\n";
    CHECK(serialize_nfa(parse_nfa(canonical)) == canonical);
}

TEST_CASE("member on the example1 fixture matches the closed-form language") {
    UnaryNfa nfa = example1_graph();
    // {10 + 7x : x >= 0} ∪ {10 + 7x + 5y : x >= 1, y >= 0}
    auto in_language = [](std::int64_t len) {
        for (std::int64_t x = 0; 10 + 7 * x <= len; ++x)
            for (std::int64_t y = 0; 10 + 7 * x + 5 * y <= len; ++y)
                if (10 + 7 * x + 5 * y == len && (y == 0 || x >= 1))
                    return true;
        return false;
    };
    CHECK(member(nfa, 10));
    CHECK_FALSE(member(nfa, 15));
    CHECK(member(nfa, 17));
    for (std::int64_t len = 0; len <= 60; ++len) {
        CAPTURE(len);
        CHECK(member(nfa, len) == in_language(len));
    }
}

TEST_CASE("accepted_up_to enumerates small lengths") {
    CHECK(accepted_up_to(fx::single_state(), 3) == std::set<std::int64_t>{0});
    CHECK(accepted_up_to(fx::two_cycle(), 5) == std::set<std::int64_t>{0, 2, 4});
    CHECK(accepted_up_to(example1_graph(), 35) ==
          std::set<std::int64_t>{10, 17, 22, 24, 27, 29, 31, 32, 34});
}

TEST_CASE("accepted_up_to agrees with member") {
    for (int i = 0; i < 40; ++i) {
        UnaryNfa nfa = random_nfa(11, i, 6);
        std::int64_t bound = 10 * nfa.state_count * nfa.state_count;
        auto accepted = accepted_up_to(nfa, bound);
        for (std::int64_t x = 0; x <= bound; x += 1 + x / 7) {
            CAPTURE(i); CAPTURE(x);
            CHECK(member(nfa, x) == (accepted.count(x) > 0));
        }
    }
}

TEST_CASE("exact_length_path_exists on a chain") {
    NormalizedNfa norm = fx::as_normalized(fx::chain3());
    CHECK(exact_length_path_exists(norm, 2));
    CHECK_FALSE(exact_length_path_exists(norm, 1));
    CHECK_FALSE(exact_length_path_exists(norm, 0));
}

TEST_CASE("exact_length_path_exists on a cycle with an exit") {
    UnaryNfa nfa{3, 0, {2}, {{0, 1}, {1, 0}, {1, 2}}};
    CHECK(exact_length_path_exists(nfa, 2));
    CHECK_FALSE(exact_length_path_exists(nfa, 3));
    CHECK(exact_length_path_exists(nfa, 4));
}

TEST_CASE("trim drops unreachable and dead states without changing the language") {
    // two island states tacked onto the two-state cycle
    UnaryNfa padded{4, 0, {0}, {{0, 1}, {1, 0}, {2, 3}, {3, 0}}};
    auto trimmed = trim(padded);
    REQUIRE(trimmed.has_value());
    CHECK(*trimmed == fx::two_cycle());
    std::int64_t bound = 2 * padded.state_count * padded.state_count;
    for (std::int64_t x = 0; x <= bound; ++x)
        CHECK(member(padded, x) == member(*trimmed, x));
}

TEST_CASE("trim returns the empty-language marker when no final is reachable") {
    CHECK_FALSE(trim(fx::empty_language()).has_value());
    UnaryNfa dead{3, 0, {2}, {{2, 0}}};
    CHECK_FALSE(trim(dead).has_value());
}

TEST_CASE("trim is idempotent") {
    for (const auto& [name, nfa] : fx::named_fixtures()) {
        CAPTURE(name);
        auto once = trim(nfa);
        if (!once)
            continue;
        auto twice = trim(*once);
        REQUIRE(twice.has_value());
        CHECK(*once == *twice);
    }
}

TEST_CASE("normalize on the minimal automaton leaves no positive part") {
    auto result = normalize(fx::single_state());
    CHECK(result.zero_accepted);
    CHECK_FALSE(result.positive_part.has_value());
}

TEST_CASE("normalize on the two-state cycle") {
    auto result = normalize(fx::two_cycle());
    CHECK(result.zero_accepted);
    REQUIRE(result.positive_part.has_value());
    const NormalizedNfa& norm = *result.positive_part;
    CHECK(norm.n_prime == 4);
    for (std::int64_t x = 1; x <= 20; ++x)
        CHECK(exact_length_path_exists(norm, x) == (x % 2 == 0));
}

TEST_CASE("normalize merges multiple finals into one sink") {
    auto result = normalize(fx::two_finals());
    CHECK_FALSE(result.zero_accepted);
    REQUIRE(result.positive_part.has_value());
    for (std::int64_t x = 1; x <= 20; ++x)
        CHECK(exact_length_path_exists(*result.positive_part, x) ==
              member(fx::two_finals(), x));
}

TEST_CASE("normalized automata satisfy the structural invariants") {
    for (int i = 0; i < 60; ++i) {
        UnaryNfa nfa = random_nfa(23, i, 8);
        auto result = normalize(nfa);
        CHECK(result.zero_accepted == member(nfa, 0));
        if (!result.positive_part)
            continue;
        const NormalizedNfa& norm = *result.positive_part;
        CAPTURE(i);
        CHECK(norm.automaton.finals == std::set<State>{norm.final_state});
        CHECK(norm.n_prime == norm.automaton.state_count);
        CHECK(norm.n_prime <= nfa.state_count + 2);
        CHECK_FALSE(exact_length_path_exists(norm, 0)); // fresh initial != fresh final
        for (const auto& [u, v] : norm.automaton.edges) {
            CHECK(v != norm.automaton.initial);
            CHECK(u != norm.final_state);
        }
        auto trimmed = trim(norm.automaton);
        REQUIRE(trimmed.has_value());
        CHECK(*trimmed == norm.automaton);
    }
}

TEST_CASE("normalize preserves the language") {
    for (int i = 0; i < 60; ++i) {
        UnaryNfa nfa = random_nfa(29, i, 8);
        auto result = normalize(nfa);
        for (std::int64_t x = 1; x <= 25; ++x) {
            bool expected = member(nfa, x);
            bool actual = result.positive_part &&
                          exact_length_path_exists(*result.positive_part, x);
            CAPTURE(i); CAPTURE(x);
            CHECK(expected == actual);
        }
    }
}
