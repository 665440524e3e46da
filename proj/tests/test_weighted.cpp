#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lss/error.hpp"
#include "lss/oracle.hpp"
#include "lss/weighted.hpp"
#include "support.hpp"

using namespace lss;
using namespace lss::testing;

namespace {

bool is_zero(const WeightVector& w) {
    return std::all_of(w.begin(), w.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t as_int(const BigInt& b) { return b.convert_to<std::int64_t>(); }

} // namespace

TEST_CASE("digraph construction and text format") {
    CHECK_THROWS_AS(WeightedDigraph(0, 1, {}), PreconditionError);
    CHECK_THROWS_AS(WeightedDigraph(1, 0, {}), PreconditionError);
    CHECK_THROWS_AS(WeightedDigraph(1, 1, {{0, 1, {0}}}), PreconditionError);
    CHECK_THROWS_AS(WeightedDigraph(1, 2, {{0, 0, {0}}}), PreconditionError);
    const WeightedDigraph g(3, 2, {{0, 1, {1, -2}}, {1, 2, {0, 3}}, {2, 0, {-1, 0}}});
    CHECK(g.max_weight() == 3);
    CHECK(g.out_edges(0).size() == 1);
    const std::string text = serialize_digraph(g);
    CHECK(text == "vertices 3\nedge 0 1 1 -2\nedge 1 2 0 3\nedge 2 0 -1 0\n");
    const WeightedDigraph h = parse_digraph("# c\nvertices 3\n\nedge 0 1 1 -2\nedge 1 2 0 3\nedge 2 0 -1 0\n");
    CHECK(serialize_digraph(h) == text);
    CHECK(h.dimension() == 2);
    CHECK_THROWS_AS(parse_digraph("vertices 2\nedge 0 1 1\nedge 1 0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("edge 0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("vertices 2\nedge 0 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("vertices 2\nedge 0 1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("vertices 2\narc 0 1 1\n"), ParseError);
    CHECK(parse_digraph("vertices 4\n").dimension() == 1);
}

TEST_CASE("zero cycle examples") {
    const WeightedDigraph loop(1, 1, {{0, 0, {0}}});
    const auto c1 = find_zero_cycle(loop, 0, 5);
    REQUIRE(c1);
    CHECK(c1->length() == 1);
    CHECK(validate_cycle(loop, *c1));

    const WeightedDigraph pm(1, 1, {{0, 0, {1}}, {0, 0, {-1}}});
    const auto c2 = find_zero_cycle(pm, 0, 5);
    REQUIRE(c2);
    CHECK(c2->length() == 2);
    CHECK(validate_cycle(pm, *c2));

    const WeightedDigraph pos(2, 1, {{0, 1, {1}}, {1, 0, {1}}, {1, 1, {2}}});
    CHECK_FALSE(find_zero_cycle(pos, std::nullopt, 20));
    CHECK_FALSE(oracle::brute_zero_cycle(pos, 0, 12));
    CHECK_FALSE(oracle::has_zero_cycle_scalar(pos, 0));
    CHECK_THROWS_AS(find_zero_cycle(pos, 0, 0), PreconditionError);
    CHECK_THROWS_AS(find_zero_cycle(pos, 7, 3), PreconditionError);
}

TEST_CASE("two signed cycles joined by a zero connector") {
    // 0 -> 1 -> 0 has weight +1, 2 -> 3 -> 2 has weight -1, connector 0 <-> 2 weighs 0
    const WeightedDigraph g(4, 1,
                            {{0, 1, {1}}, {1, 0, {0}}, {2, 3, {-1}}, {3, 2, {0}}, {0, 2, {0}}, {2, 0, {0}}});
    const auto c = find_zero_cycle(g, 0, 12);
    REQUIRE(c);
    CHECK(validate_cycle(g, *c));
    CHECK(is_zero(c->total));
    const auto brute = oracle::brute_zero_cycle(g, 0, 12);
    REQUIRE(brute);
    CHECK(brute->length() == c->length());
    // the connector pair alone is a zero cycle
    CHECK(c->length() == 2);
    CHECK(BigInt(c->length()) <= scalar_bound(4, g.max_weight()));
    CHECK(oracle::has_zero_cycle_scalar(g, 0));
    // through vertex 1 both signed cycles are needed: 1 0 2 3 2 0 1
    const auto via1 = find_zero_cycle(g, 1, 12);
    REQUIRE(via1);
    CHECK(via1->length() == 6);
    CHECK(oracle::brute_zero_cycle(g, 1, 12)->length() == 6);
}

TEST_CASE("validate_cycle rejects broken walks") {
    const WeightedDigraph g(2, 1, {{0, 1, {1}}, {1, 0, {-1}}});
    CycleWitness c{{0, 1, 0}, {0, 1}, {0}};
    CHECK(validate_cycle(g, c));
    CycleWitness bad_total = c;
    bad_total.total = {1};
    CHECK_FALSE(validate_cycle(g, bad_total));
    CycleWitness open{{0, 1}, {0}, {1}};
    CHECK_FALSE(validate_cycle(g, open));
    CycleWitness wrong_edge{{0, 1, 0}, {1, 0}, {0}};
    CHECK_FALSE(validate_cycle(g, wrong_edge));
}

TEST_CASE("property: anchored search agrees with exhaustive enumeration") {
    Rng rng(41);
    int found = 0;
    for (int it = 0; it < 150; ++it) {
        const auto v = static_cast<std::size_t>(uniform(rng, 1, 5));
        const auto d = static_cast<std::size_t>(uniform(rng, 1, 2));
        const int k = uniform(rng, 1, 2);
        const WeightedDigraph g = random_digraph(rng, v, d, k, 0.3);
        const std::size_t budget = 8;
        const auto brute = oracle::brute_zero_cycle(g, 0, budget);
        std::size_t max_len = budget;
        const BigInt lb = lemma_bound(static_cast<std::int64_t>(v), g.max_weight(), static_cast<std::int64_t>(d));
        if (lb < BigInt(max_len)) {
            max_len = static_cast<std::size_t>(as_int(lb));
        }
        const auto c = find_zero_cycle(g, 0, max_len);
        if (brute) {
            ++found;
            REQUIRE(c);
            CHECK(validate_cycle(g, *c));
            CHECK(is_zero(c->total));
            CHECK(c->vertices.front() == 0);
            CHECK(c->length() == brute->length());
            CHECK(validate_cycle(g, *brute));
        } else {
            CHECK_FALSE(c);
        }
        if (d == 1) {
            if (brute) {
                CHECK(oracle::has_zero_cycle_scalar(g, 0));
            }
            if (oracle::has_zero_cycle_scalar(g, 0)) {
                const std::size_t scalar = static_cast<std::size_t>(as_int(scalar_bound(static_cast<std::int64_t>(v), g.max_weight())));
                CHECK(find_zero_cycle(g, 0, scalar));
            }
        }
    }
    CHECK(found > 20);
}

TEST_CASE("property: unanchored search returns the shortest over all anchors") {
    Rng rng(42);
    for (int it = 0; it < 60; ++it) {
        const WeightedDigraph g = random_digraph(rng, static_cast<std::size_t>(uniform(rng, 1, 5)), 1, 2, 0.3);
        const auto any = find_zero_cycle(g, std::nullopt, 8);
        std::optional<std::size_t> best;
        for (Vertex a = 0; a < g.vertex_count(); ++a) {
            const auto b = oracle::brute_zero_cycle(g, a, 8);
            if (b && (!best || b->length() < *best)) {
                best = b->length();
            }
        }
        REQUIRE(bool(any) == bool(best));
        if (any) {
            CHECK(any->length() == *best);
            CHECK(validate_cycle(g, *any));
        }
    }
}
