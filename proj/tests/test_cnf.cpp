#include "doctest.h"

#include <random>
#include <stdexcept>

#include "chrobak/cnf.hpp"
#include "fixtures.hpp"

using namespace chrobak;
namespace fx = chrobak::fixtures;

namespace {

ProgressionSet random_progressions(std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    ProgressionSet ps;
    int terms = 1 + static_cast<int>(engine() % 6);
    for (int t = 0; t < terms; ++t)
        ps.insert({static_cast<std::int64_t>(engine() % 51),
                   static_cast<std::int64_t>(engine() % 11)});
    return ps;
}

} // namespace

TEST_CASE("progressions_to_cnf on the empty set denotes the empty language") {
    ChrobakNfa cnf = progressions_to_cnf({});
    CHECK(cnf.tail_length == 0);
    CHECK(cnf.tail_finals.empty());
    CHECK(cnf.cycles.empty());
    for (std::int64_t x = 0; x <= 10; ++x)
        CHECK_FALSE(cnf_member(cnf, x));
}

TEST_CASE("progressions_to_cnf places the worked example exactly") {
    ChrobakNfa cnf = progressions_to_cnf(fx::worked_example_progressions());
    CHECK(cnf.tail_length == 6);
    CHECK(cnf.tail_finals == std::set<std::int64_t>{1, 2, 4, 5, 6});
    REQUIRE(cnf.cycles.size() == 3);
    CHECK(cnf.cycles[0] == ChrobakCycle{2, {1}});
    CHECK(cnf.cycles[1] == ChrobakCycle{3, {1}});
    CHECK(cnf.cycles[2] == ChrobakCycle{4, {2, 3}});
    for (std::int64_t x = 0; x <= 60; ++x)
        CHECK(cnf_member(cnf, x) == ps_member(fx::worked_example_progressions(), x));
}

TEST_CASE("progressions_to_cnf turns (0, 1) into the all-accepting automaton") {
    ChrobakNfa cnf = progressions_to_cnf({{0, 1}});
    CHECK(cnf.tail_length == 0);
    CHECK(cnf.tail_finals == std::set<std::int64_t>{0});
    REQUIRE(cnf.cycles.size() == 1);
    CHECK(cnf.cycles[0] == ChrobakCycle{1, {0}});
    for (std::int64_t x = 0; x <= 10; ++x)
        CHECK(cnf_member(cnf, x));
}

TEST_CASE("cnf_member matches the source progressions on random sets") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        ProgressionSet ps = random_progressions(seed);
        ChrobakNfa cnf = progressions_to_cnf(ps);
        for (std::int64_t x = 0; x <= 200; ++x) {
            CAPTURE(seed); CAPTURE(x);
            CHECK(cnf_member(cnf, x) == ps_member(ps, x));
        }
    }
}

TEST_CASE("cnf_to_progressions on basic shapes") {
    CHECK(cnf_to_progressions({0, {0}, {}}) == ProgressionSet{{0, 0}});
    CHECK(cnf_to_progressions({2, {0, 2}, {{3, {0}}}}) ==
          ProgressionSet{{0, 0}, {2, 0}, {3, 3}});
}

TEST_CASE("round trip through cnf preserves the denoted set") {
    ProgressionSet worked = fx::worked_example_progressions();
    ProgressionSet back = cnf_to_progressions(progressions_to_cnf(worked));
    CHECK(eps_equal(eps_from_progressions(back), eps_from_progressions(worked)));
    for (std::int64_t x = 0; x <= 60; ++x)
        CHECK(ps_member(back, x) == ps_member(worked, x));

    for (std::uint64_t seed = 200; seed < 260; ++seed) {
        ProgressionSet ps = random_progressions(seed);
        ProgressionSet round = cnf_to_progressions(progressions_to_cnf(ps));
        CAPTURE(seed);
        CHECK(eps_equal(eps_from_progressions(round), eps_from_progressions(ps)));
    }
}

TEST_CASE("cnf_to_nfa materializes the structure") {
    ChrobakNfa trivial{0, {0}, {}};
    UnaryNfa one = cnf_to_nfa(trivial);
    CHECK(one.state_count == 1);
    CHECK(member(one, 0));
    CHECK_FALSE(member(one, 1));

    ChrobakNfa small{1, {}, {{2, {0}}}};
    UnaryNfa four = cnf_to_nfa(small);
    CHECK(four.state_count == 4);
    for (std::int64_t x = 0; x <= 8; ++x)
        CHECK(member(four, x) == (x >= 2 && x % 2 == 0));

    UnaryNfa worked = cnf_to_nfa(progressions_to_cnf(fx::worked_example_progressions()));
    CHECK(worked.state_count == 7 + 2 + 3 + 4);
    CHECK(is_cnf(worked));
}

TEST_CASE("cnf_to_nfa agrees with cnf_member") {
    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        ChrobakNfa cnf = progressions_to_cnf(random_progressions(seed));
        UnaryNfa nfa = cnf_to_nfa(cnf);
        CHECK(is_cnf(nfa));
        for (std::int64_t x = 0; x <= 150; ++x) {
            CAPTURE(seed); CAPTURE(x);
            CHECK(member(nfa, x) == cnf_member(cnf, x));
        }
    }
}

TEST_CASE("is_cnf accepts chains and rejects initial states on cycles") {
    CHECK(is_cnf(fx::chain3()));
    CHECK(is_cnf(fx::single_state()));
    CHECK_FALSE(is_cnf(fx::two_cycle()));
    CHECK(is_cnf(fx::self_loop()) == false); // initial sits on the loop
    CHECK(is_cnf(fx::cycle_with_tail3()));
    CHECK_FALSE(is_cnf(fx::branch23())); // junk edges off the cycles
}

TEST_CASE("is_cnf rejects structural violations") {
    // unreachable extra state
    CHECK_FALSE(is_cnf({4, 0, {1}, {{0, 1}, {1, 2}, {2, 1}}}));
    // two entries into the same cycle
    CHECK_FALSE(is_cnf({3, 0, {}, {{0, 1}, {0, 2}, {1, 2}, {2, 1}}}));
    // branching tail
    CHECK_FALSE(is_cnf({3, 0, {}, {{0, 1}, {0, 2}}}));
    // edge leaving a cycle
    CHECK_FALSE(is_cnf({4, 0, {}, {{0, 1}, {1, 2}, {2, 1}, {2, 3}}}));
    // two disjoint cycles entered from one fan-out state
    CHECK(is_cnf({5, 0, {2}, {{0, 1}, {0, 3}, {1, 2}, {2, 1}, {3, 4}, {4, 3}}}));
}

TEST_CASE("validate rejects malformed records") {
    CHECK_THROWS_AS(validate(ChrobakNfa{1, {2}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(ChrobakNfa{0, {}, {{0, {}}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(ChrobakNfa{0, {}, {{3, {3}}}}), std::invalid_argument);
}
