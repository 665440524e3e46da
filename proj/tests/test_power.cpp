#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lss/closure.hpp"
#include "lss/error.hpp"
#include "lss/oracle.hpp"
#include "lss/power.hpp"
#include "lss/witness.hpp"
#include "support.hpp"

using namespace lss;
using namespace lss::testing;

namespace {

const Alphabet kAb({"a", "b"});
const Alphabet kAbc({"a", "b", "c"});

Automaton unary_words(std::vector<std::size_t> lengths) {
    std::size_t top = 0;
    for (std::size_t l : lengths) {
        top = std::max(top, l);
    }
    std::vector<Transition> t;
    for (std::size_t q = 0; q < top; ++q) {
        t.push_back({static_cast<State>(q), 0, static_cast<State>(q + 1)});
    }
    std::vector<State> finals;
    for (std::size_t l : lengths) {
        finals.push_back(static_cast<State>(l));
    }
    return Automaton(unary_alphabet(), top + 1, 0, std::move(finals), std::move(t));
}

std::vector<Automaton> remark_pair() { return {exactly_one(kAb, 0), exactly_one(kAb, 1)}; }

std::vector<Automaton> remark_triple() {
    return {exactly_one(kAbc, 0), exactly_one(kAbc, 1), exactly_one(kAbc, 2)};
}

GrammarSymbol t(std::uint32_t id) { return {true, id}; }
GrammarSymbol n(std::uint32_t id) { return {false, id}; }

} // namespace

TEST_CASE("counter PDA membership") {
    const Automaton one = unary_words({1});
    const Pda same = build_pda(one, one);
    CHECK_NOTHROW(same.validate());
    CHECK(same.state_count == one.state_count() * one.state_count() * 3);
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(pda_accepts(same, Word(k, 0), 8));
    }
    CHECK_FALSE(pda_accepts(same, {}, 8));

    const auto ab = remark_pair();
    const Pda p = build_pda(ab[0], ab[1]);
    CHECK(pda_accepts(p, {0, 1}, 8));
    CHECK(pda_accepts(p, {1, 0}, 8));
    CHECK_FALSE(pda_accepts(p, {0}, 8));
    CHECK_FALSE(pda_accepts(p, {1}, 8));
    CHECK_FALSE(pda_accepts(p, {0, 0, 1}, 8));
    const Pda e = normalize_to_empty_stack(p);
    CHECK(e.acceptance == PdaAcceptance::EmptyStack);
    CHECK(e.state_count == p.state_count + 1);
    for (const Word& w : all_words(2, 6)) {
        REQUIRE(pda_accepts(p, w, 10) == pda_accepts(e, w, 10));
    }

    const Pda disjoint = build_pda(one, unary_words({2}));
    for (std::size_t len = 0; len <= 8; ++len) {
        CHECK_FALSE(pda_accepts(disjoint, Word(len, 0), 12));
    }

    const Automaton with_eps(unary_alphabet(), 2, 0, {1}, {{0, kEpsilon, 1}});
    CHECK_THROWS_AS(build_pda(one, with_eps), PreconditionError);
    CHECK_THROWS_AS(build_pda(one, ab[0]), PreconditionError);
}

TEST_CASE("PDA validation") {
    Pda bad;
    bad.alphabet = unary_alphabet();
    bad.state_count = 1;
    bad.transitions.push_back({0, 0, StackSymbol::C, 0, {StackSymbol::Z0}});
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
    bad.transitions = {{0, 0, StackSymbol::Z0, 0, {}}};
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
    bad.transitions = {{0, 0, StackSymbol::C, 0, {StackSymbol::C, StackSymbol::C, StackSymbol::C}}};
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
    bad.transitions = {{0, 0, StackSymbol::C, 3, {}}};
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
}

TEST_CASE("grammar emptiness") {
    Cfg loop(unary_alphabet());
    const auto s = loop.add_nonterminal("S");
    loop.set_start(s);
    loop.add_production(s, {t(0), n(s)});
    CHECK(cfg_is_empty(loop));
    CHECK(loop.dump() == "S -> a S\n");

    Cfg single(unary_alphabet());
    const auto s2 = single.add_nonterminal("S");
    single.set_start(s2);
    single.add_production(s2, {t(0)});
    CHECK_FALSE(cfg_is_empty(single));

    Cfg eps(unary_alphabet());
    const auto s3 = eps.add_nonterminal("S");
    eps.set_start(s3);
    eps.add_production(s3, {});
    CHECK_FALSE(cfg_is_empty(eps));
    CHECK(eps.dump() == "S ->\n");

    CHECK_THROWS_AS(single.add_production(7, {}), PreconditionError);
    CHECK_THROWS_AS(single.add_production(s2, {n(9)}), PreconditionError);
    CHECK_THROWS_AS(single.add_production(s2, {t(4)}), PreconditionError);
}

TEST_CASE("triple construction") {
    const Automaton one = unary_words({1});
    CHECK_THROWS_AS(pda_to_cfg(build_pda(one, one)), PreconditionError);

    const Cfg g = power_grammar(one, one);
    CHECK_FALSE(cfg_is_empty(g));
    const auto words = oracle::cfg_words(g, 5);
    CHECK(words == std::set<Word>{{0}, {0, 0}, {0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0, 0}});

    CHECK(cfg_is_empty(power_grammar(one, unary_words({2}))));

    const auto ab = remark_pair();
    const Cfg r = power_grammar(ab[0], ab[1]);
    CHECK_FALSE(cfg_is_empty(r));
    const auto generated = oracle::cfg_words(r, 6);
    for (const Word& w : all_words(2, 6)) {
        const std::size_t a = count_symbol(w, 0);
        const std::size_t b = count_symbol(w, 1);
        REQUIRE(generated.count(w) == (a == b && a >= 1 ? 1u : 0u));
    }

    // empty language PDA
    const Automaton none(unary_alphabet(), 1, 0, {}, {{0, 0, 0}});
    CHECK(cfg_is_empty(power_grammar(none, one)));
    const auto gen = generating_nonterminals(power_grammar(none, one));
    CHECK_FALSE(gen.at(power_grammar(none, one).start()));
}

TEST_CASE("counter product") {
    const Automaton one = unary_words({1});
    const std::vector<Automaton> pair{one, one};
    const CounterProduct cp = build_counter_product(pair);
    CHECK(cp.graph.dimension() == 1);
    CHECK(cp.graph.vertex_count() <= 4);
    WalkOptions opts;
    opts.clip = 4;
    opts.every_edge_is_step = false;
    const auto walk = zero_walk_search(cp.graph, cp.start, opts);
    REQUIRE(walk.walk);
    CHECK(walk.walk->word == Word{0});
    CHECK(validate_cycle(cp.graph, walk.walk->cycle));

    const auto ab = remark_pair();
    const CounterProduct r = build_counter_product(ab);
    CHECK(r.graph.vertex_count() <= 9);
    const auto w = zero_walk_search(r.graph, r.start, {4, std::nullopt, false});
    REQUIRE(w.walk);
    CHECK(w.walk->word == Word{0, 1});

    const std::vector<Automaton> lone{one};
    CHECK_THROWS_AS(build_counter_product(lone), PreconditionError);
    const std::vector<Automaton> mixed{one, ab[0]};
    CHECK_THROWS_AS(build_counter_product(mixed), PreconditionError);
}

TEST_CASE("decide and shortest balanced string examples") {
    const auto ab = remark_pair();
    const PowerVerdict v = decide_power_nonempty(ab);
    REQUIRE(v.status == PowerStatus::Nonempty);
    CHECK(v.witness->word == Word{0, 1});
    CHECK(v.witness->k == 1);
    CHECK(validate_balanced(ab, *v.witness));

    const std::vector<Automaton> disjoint{unary_words({1}), unary_words({2})};
    CHECK(decide_power_nonempty(disjoint).status == PowerStatus::Empty);
    CHECK_FALSE(shortest_balanced_string(disjoint));

    const auto abc = remark_triple();
    const PowerVerdict v3 = decide_power_nonempty(abc, 8);
    REQUIRE(v3.status == PowerStatus::Nonempty);
    CHECK(v3.witness->word.size() == 3);
    CHECK(v3.witness->k == 1);
    CHECK(validate_balanced(abc, *v3.witness));
    CHECK_THROWS_AS(decide_power_nonempty(abc), PreconditionError);

    const std::vector<Automaton> eps_only{unary_words({0}), unary_words({0})};
    const auto e = shortest_balanced_string(eps_only);
    REQUIRE(e);
    CHECK(e->word.empty());
    CHECK(e->k == 1);
    CHECK(validate_balanced(eps_only, *e));

    const std::vector<Automaton> counter_tail{mod_counter_dfa(2), tail_dfa(2, 3)};
    const auto ct = shortest_balanced_string(counter_tail);
    REQUIRE(ct);
    CHECK(ct->word.size() == 4);
    CHECK(oracle::brute_power_lss(counter_tail, 6) == ct->word);
}

TEST_CASE("bounded verdicts for three or more languages") {
    const std::vector<Automaton> triple{unary_words({1}), unary_words({2}), unary_words({3})};
    const PowerVerdict v = decide_power_nonempty(triple, 10);
    CHECK(v.status == PowerStatus::EmptyWithinCap);
    REQUIRE(v.cap);
    CHECK(*v.cap == 10);
    REQUIRE(v.sound_bound);
    CHECK(*v.sound_bound > 10);

    const Automaton none(unary_alphabet(), 1, 0, {}, {{0, 0, 0}});
    const std::vector<Automaton> empty3{none, none, none};
    const BigInt sound = power_length_bound(std::vector<std::int64_t>{1, 1, 1});
    const PowerVerdict full = decide_power_nonempty(empty3, static_cast<std::int64_t>(sound));
    CHECK(full.status == PowerStatus::Empty);
    CHECK_THROWS_AS(decide_power_nonempty(empty3, 0), PreconditionError);
}

TEST_CASE("Remark languages: membership by factorisation") {
    const auto ab = remark_pair();
    for (const Word& w : all_words(2, 6)) {
        const std::size_t a = count_symbol(w, 0);
        const std::size_t b = count_symbol(w, 1);
        REQUIRE(oracle::balanced(w, ab) == (a == b && a >= 1));
    }
    const auto abc = remark_triple();
    for (const Word& w : all_words(3, 6)) {
        const std::size_t a = count_symbol(w, 0);
        const std::size_t b = count_symbol(w, 1);
        const std::size_t c = count_symbol(w, 2);
        REQUIRE(oracle::balanced(w, abc) == (a == b && b == c && a >= 1));
    }
}

TEST_CASE("property: grammar, counter search and enumeration agree for two languages") {
    Rng rng(51);
    for (int it = 0; it < 80; ++it) {
        const Alphabet sigma = letters(static_cast<std::size_t>(uniform(rng, 1, 2)));
        const std::vector<Automaton> pair{random_nfa(rng, static_cast<std::size_t>(uniform(rng, 1, 3)), sigma, 0.35),
                                          random_nfa(rng, static_cast<std::size_t>(uniform(rng, 1, 3)), sigma, 0.35)};
        const bool grammar_empty = cfg_is_empty(power_grammar(pair[0], pair[1]));
        const auto witness = shortest_balanced_string(pair);
        const auto brute = oracle::brute_power_lss(pair, 8);
        REQUIRE(grammar_empty == !witness.has_value());
        REQUIRE(brute.has_value() == witness.has_value());
        if (witness) {
            CHECK(validate_balanced(pair, *witness));
            CHECK(witness->word == *brute);
            const std::vector<std::int64_t> counts{static_cast<std::int64_t>(pair[0].state_count()),
                                                   static_cast<std::int64_t>(pair[1].state_count())};
            CHECK(BigInt(witness->word.size()) <= power_length_bound(counts));
        }
    }
}

TEST_CASE("property: three-language search matches enumeration within the cap") {
    Rng rng(52);
    for (int it = 0; it < 30; ++it) {
        const Alphabet sigma = letters(2);
        std::vector<Automaton> triple;
        for (int i = 0; i < 3; ++i) {
            triple.push_back(random_nfa(rng, static_cast<std::size_t>(uniform(rng, 1, 2)), sigma, 0.4));
        }
        const auto witness = shortest_balanced_string(triple, 6);
        const auto brute = oracle::brute_power_lss(triple, 6);
        REQUIRE(brute.has_value() == witness.has_value());
        if (witness) {
            CHECK(validate_balanced(triple, *witness));
            CHECK(witness->word == *brute);
        }
    }
}
