#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lss/closure.hpp"
#include "lss/error.hpp"
#include "lss/oracle.hpp"
#include "lss/witness.hpp"
#include "support.hpp"

using namespace lss;
using namespace lss::testing;

namespace {

bool in_plus(const Automaton& a, const Word& x) { return !oracle::power_k_set(x, a, x.size() + 1).empty(); }

bool in_star(const Automaton& a, const Word& x) { return x.empty() || in_plus(a, x); }

bool nothing_enters_start(const Automaton& a) {
    for (const Transition& t : a.transitions()) {
        if (t.to == a.start()) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("plus closure of {ab}") {
    const Alphabet ab({"a", "b"});
    const Automaton a = single_word(ab, {0, 1});
    const Automaton p = plus_closure(a);
    CHECK(p.state_count() == a.state_count());
    CHECK(p.epsilon_count() == a.finals().size());
    const auto words = oracle::enumerate_accepted(p, 6);
    CHECK(words == std::vector<Word>{{0, 1}, {0, 1, 0, 1}, {0, 1, 0, 1, 0, 1}});
}

TEST_CASE("plus closure of a language with the empty word equals its star") {
    const Alphabet ab({"a", "b"});
    const Automaton a(ab, 2, 0, {0, 1}, {{0, 1, 1}});
    const Automaton p = plus_closure(a);
    for (const Word& w : all_words(2, 6)) {
        CHECK(accepts(p, w) == in_star(a, w));
    }
}

TEST_CASE("the counter language is closed under concatenation") {
    const Automaton m1 = mod_counter_dfa(3);
    const Automaton p = plus_closure(m1);
    for (const Word& w : all_words(2, 8)) {
        CHECK(accepts(p, w) == accepts(m1, w));
    }
}

TEST_CASE("star normalisation") {
    SUBCASE("acceptor of {a}") {
        const Automaton a = single_word(unary_alphabet(), {0});
        const Automaton s = star_normalized(a);
        CHECK(s.state_count() == a.state_count());
        CHECK(s.finals() == std::vector<State>{s.start()});
        for (std::size_t n = 0; n <= 6; ++n) {
            CHECK(accepts(s, Word(n, 0)));
        }
    }
    SUBCASE("tail machine m=2 n=3") {
        const Automaton m2 = tail_dfa(2, 3);
        const Automaton s = star_normalized(m2);
        CHECK(s.state_count() <= 4);
        CHECK(nothing_enters_start(normalize_start(m2)));
        for (const Word& w : all_words(2, 6)) {
            CHECK(accepts(s, w) == in_star(m2, w));
        }
    }
    SUBCASE("normalize_start keeps the language and adds at most one state") {
        Rng rng(3);
        for (int it = 0; it < 30; ++it) {
            const Automaton a = random_nfa(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), binary_alphabet(), 0.35, 0.1);
            const Automaton n = normalize_start(a);
            CHECK(n.state_count() <= a.state_count() + 1);
            CHECK(nothing_enters_start(n));
            for (const Word& w : all_words(2, 6)) {
                REQUIRE(accepts(n, w) == accepts(a, w));
            }
        }
    }
}

TEST_CASE("eps_product examples") {
    const Automaton m1 = mod_counter_dfa(2);
    const Automaton m2 = tail_dfa(2, 3);
    const LssResult r = shortest_string(eps_product(plus_closure(m1), plus_closure(m2)));
    CHECK(r.length() == 4);

    const LssResult r33 = plus_intersection_lss(mod_counter_dfa(3), tail_dfa(3, 3));
    CHECK(r33.length() == 6);
    CHECK(r33.word == Word(6, 1));

    const Automaton p = eps_product(m1, m2);
    const Automaton q = product_intersection(m1, m2);
    for (const Word& w : all_words(2, 6)) {
        CHECK(accepts(p, w) == accepts(q, w));
    }
    CHECK_THROWS_AS(eps_product(m1, single_word(unary_alphabet(), {0})), PreconditionError);
}

TEST_CASE("property: eps_product accepts the intersection within the size bounds") {
    Rng rng(21);
    const auto words = all_words(2, 8);
    for (int it = 0; it < 40; ++it) {
        const Automaton a = random_nfa(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), binary_alphabet(), 0.3, 0.2);
        const Automaton b = random_nfa(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), binary_alphabet(), 0.3, 0.2);
        const Automaton full = eps_product(a, b, ProductMode::Full);
        const std::size_t s1 = a.state_count();
        const std::size_t s2 = b.state_count();
        CHECK(full.state_count() == s1 * s2);
        CHECK(full.transition_count() <= a.transition_count() * b.transition_count() + 2 * s1 * s2);
        const Automaton p = eps_product(a, b);
        for (const Word& w : words) {
            const bool both = accepts(a, w) && accepts(b, w);
            REQUIRE(accepts(p, w) == both);
            REQUIRE(accepts(full, w) == both);
        }
    }
}

TEST_CASE("property: plus closure matches factorisation") {
    Rng rng(22);
    const auto words = all_words(2, 8);
    for (int it = 0; it < 30; ++it) {
        const Automaton a = random_nfa(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), binary_alphabet(), 0.3, 0.1);
        const Automaton p = plus_closure(a);
        const Automaton s = star_normalized(a);
        for (const Word& w : words) {
            REQUIRE(accepts(p, w) == in_plus(a, w));
            REQUIRE(accepts(s, w) == in_star(a, w));
        }
    }
}

TEST_CASE("property: plus intersections of complete DFAs stay below mn-1") {
    Rng rng(23);
    int nonempty = 0;
    for (int it = 0; it < 150; ++it) {
        const int m = uniform(rng, 2, 5);
        const int n = uniform(rng, 2, 5);
        const Automaton a = random_dfa(rng, static_cast<std::size_t>(m), binary_alphabet());
        const Automaton b = random_dfa(rng, static_cast<std::size_t>(n), binary_alphabet());
        const LssResult r = plus_intersection_lss(a, b);
        if (r.found()) {
            ++nonempty;
            CHECK(static_cast<int>(r.length()) < m * n - 1);
            CHECK(in_plus(a, r.word));
            CHECK(in_plus(b, r.word));
        }
    }
    CHECK(nonempty > 50);
}
