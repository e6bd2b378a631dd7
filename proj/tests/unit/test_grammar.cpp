#include <random>

#include "doctest.h"
#include "fibgram/lsystem.hpp"
#include "test_util.hpp"

using namespace fibgram;
using test_util::word;

TEST_CASE("built-in grammars") {
    CHECK(to_string(LSystem::fib().axiom()) == "0");
    CHECK(to_string(LSystem::fib().rule(Symbol::Zero)) == "1");
    CHECK(to_string(LSystem::fib().rule(Symbol::One)) == "01");
    CHECK(to_string(LSystem::bif().rule(Symbol::One)) == "10");
    CHECK_THROWS_AS(LSystem({}, word("1"), word("01")), std::invalid_argument);
    CHECK_THROWS_AS(LSystem(word("0"), {}, word("01")), std::invalid_argument);
}

TEST_CASE("derive_step examples") {
    CHECK(derive_step(LSystem::fib(), word("1")) == word("01"));
    CHECK(derive_step(LSystem::fib(), word("101")) == word("01101"));
    CHECK(derive_step(LSystem::fib(), {}) == Word{});
    CHECK(derive_step(LSystem::bif(), word("10")) == word("101"));
}

TEST_CASE("derive_step is a morphism") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        const LSystem ls = iter % 3 == 0   ? LSystem::fib()
                           : iter % 3 == 1 ? LSystem::bif()
                                           : test_util::random_lsystem(rng);
        const Word s = test_util::random_word(rng, rng() % 48);
        const Word t = test_util::random_word(rng, rng() % 48);
        Word both = s;
        both.insert(both.end(), t.begin(), t.end());
        Word expected = derive_step(ls, s);
        const Word tail = derive_step(ls, t);
        expected.insert(expected.end(), tail.begin(), tail.end());
        CHECK(derive_step(ls, both) == expected);
    }
}

TEST_CASE("generate examples") {
    CHECK(to_string(generate(LSystem::fib(), 0)) == "0");
    CHECK(to_string(generate(LSystem::fib(), 4)) == "01101");
    CHECK(to_string(generate(LSystem::fib(), 7)) == "101011010110110101101");
    CHECK(to_string(generate(LSystem::bif(), 3)) == "101");
}

TEST_CASE("generation lengths follow the Fibonacci recurrence") {
    std::vector<std::size_t> lens;
    for (unsigned n = 0; n <= 25; ++n) lens.push_back(generate(LSystem::fib(), n).size());
    CHECK(lens[0] == 1);
    CHECK(lens[1] == 1);
    for (std::size_t n = 2; n < lens.size(); ++n) CHECK(lens[n] == lens[n - 1] + lens[n - 2]);
    const std::vector<std::size_t> head(lens.begin(), lens.begin() + 8);
    CHECK(head == std::vector<std::size_t>{1, 1, 2, 3, 5, 8, 13, 21});
}

TEST_CASE("generation shape: no forbidden n-grams, zeros pair with ones, ends in one") {
    Word g = LSystem::fib().axiom();
    for (unsigned n = 0; n <= 25; ++n) {
        CAPTURE(n);
        CHECK(!find_forbidden_ngram(g).has_value());
        if (n >= 1) CHECK(g.back() == Symbol::One);
        if (n >= 2) {
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (g[i] != Symbol::Zero) continue;
                REQUIRE(i + 1 < g.size());
                CHECK(g[i + 1] == Symbol::One);
            }
        }
        g = derive_step(LSystem::fib(), g);
    }
}

TEST_CASE("fibonacci_index_of_length") {
    CHECK(fibonacci_index_of_length(13) == 6);
    CHECK(!fibonacci_index_of_length(4).has_value());
    CHECK(fibonacci_index_of_length(1) == 0);  // smaller index wins the 1/1 tie
    CHECK(fibonacci_index_of_length(2) == 2);
    CHECK(!fibonacci_index_of_length(0).has_value());
    CHECK(fibonacci_index_of_length(121393) == 25);
    CHECK(!fibonacci_index_of_length(121394).has_value());

    Word g = LSystem::fib().axiom();
    for (unsigned n = 0; n <= 25; ++n) {
        CHECK(fibonacci_index_of_length(g.size()).has_value());
        g = derive_step(LSystem::fib(), g);
    }
}

TEST_CASE("first_symbol_ambiguity") {
    CHECK(first_symbol_ambiguity(LSystem::fib()).empty());
    CHECK(first_symbol_ambiguity(LSystem::bif()) == std::set<Symbol>{Symbol::One});
    const LSystem identity(word("0"), word("0"), word("1"));
    CHECK(first_symbol_ambiguity(identity).empty());
}

TEST_CASE("find_forbidden_ngram") {
    CHECK(!find_forbidden_ngram(word("0110110101101")).has_value());
    CHECK(!find_forbidden_ngram({}).has_value());
    CHECK(!find_forbidden_ngram(word("01")).has_value());

    const auto hit00 = find_forbidden_ngram(word("100"));
    REQUIRE(hit00.has_value());
    CHECK(hit00->position == 1);
    CHECK(hit00->ngram == "00");

    const auto hit111 = find_forbidden_ngram(word("0111"));
    REQUIRE(hit111.has_value());
    CHECK(hit111->position == 1);
    CHECK(hit111->ngram == "111");

    // leftmost occurrence wins across the two patterns
    const auto early111 = find_forbidden_ngram(word("11100"));
    REQUIRE(early111.has_value());
    CHECK(early111->position == 0);
    CHECK(early111->ngram == "111");
    const auto early00 = find_forbidden_ngram(word("10011"));
    REQUIRE(early00.has_value());
    CHECK(early00->position == 1);
    CHECK(early00->ngram == "00");
}

TEST_CASE("parallel rewriting step matches the serial reference") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 6; ++iter) {
        const LSystem ls = iter % 3 == 0   ? LSystem::fib()
                           : iter % 3 == 1 ? LSystem::bif()
                                           : test_util::random_lsystem(rng);
        // make sure the parallel path actually engages
        const Word s = test_util::random_word(rng, derive_parallel_threshold * 3 + 17);
        CHECK(derive_step_parallel(ls, s) == derive_step(ls, s));
    }
    // threshold boundary and small inputs
    std::mt19937 rng2(13);
    for (std::size_t len : {std::size_t{0}, std::size_t{1}, derive_parallel_threshold - 1,
                            derive_parallel_threshold, derive_parallel_threshold + 1}) {
        const Word s = test_util::random_word(rng2, len);
        CHECK(derive_step_parallel(LSystem::fib(), s) == derive_step(LSystem::fib(), s));
    }
}

TEST_CASE("symbol parsing") {
    CHECK(!parse_word("0120").has_value());
    CHECK(!parse_word(" 01").has_value());
    CHECK(parse_word("")->empty());
    CHECK(to_string(word("0110")) == "0110");
}
