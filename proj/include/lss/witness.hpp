#ifndef LSS_WITNESS_HPP
#define LSS_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lss/automaton.hpp"
#include "lss/unary.hpp"

namespace lss {

enum class WitnessFamily { Intersect, UnaryIntersect, Plus, UnaryPlus, UnaryFinite };

std::string_view family_name(WitnessFamily f);
/// intersect | unary-intersect | plus | unary-plus | unary-finite
WitnessFamily parse_family(std::string_view name);

/// Machines of a tightness family together with the value they are claimed to attain
/// and the value recomputed by search.
struct WitnessBundle {
    WitnessFamily family = WitnessFamily::Intersect;
    std::vector<Automaton> machines;
    std::size_t claimed_lss = 0;
    std::optional<Word> claimed_word;
    /// Minimal factor count (unary-finite only).
    std::optional<int> claimed_k;
    /// Exponent sets A, B (unary-finite only).
    std::vector<UnaryFiniteLang> languages;

    /// lss of the family's combined language, recomputed by shortest-string search.
    std::size_t certified_lss = 0;
    std::optional<int> certified_k;
};

/// DFA over {0,1} counting 1s modulo m; accepts |x|_1 ≡ 0 (mod m).
Automaton mod_counter_dfa(int m);
/// The n-state companion DFA (m <= n) whose intersection with mod_counter_dfa(m) has lss mn - 1.
Automaton tail_dfa(int m, int n);

/// Unary DFA with a tail of `tail` states followed by a cycle of `cycle` states.
Automaton unary_dfa(int tail, int cycle, std::vector<State> finals);
/// Unary partial DFA accepting exactly {a^e : e in lang}.
Automaton unary_finite_dfa(const UnaryFiniteLang& lang);

/// lss of the family's combined language for the bundle's machines:
/// intersection for Intersect/UnaryIntersect, plus-intersection for Plus/UnaryPlus,
/// equal-power language for UnaryFinite.
std::size_t certify(WitnessBundle& bundle);

WitnessBundle intersect_witness(int m, int n);
WitnessBundle unary_intersect_witness(int m, int n);
WitnessBundle plus_intersect_witness(int m, int n);
WitnessBundle unary_plus_witness(int m, int n);
WitnessBundle unary_finite_witness(int n);

namespace kernels {

/// Unary DFA pairs are numbered ((t1 * m + f1) * n + t2) * n + f2 where t is the tail
/// length (cycle = states - t) and f the single final state. Returns the smallest index
/// whose intersection has lss exactly `target`.
std::optional<std::size_t> first_unary_pair(int m, int n, std::int64_t target);
std::optional<std::size_t> first_unary_pair_serial(int m, int n, std::int64_t target);

/// The two automata described by a candidate index.
std::pair<Automaton, Automaton> unary_pair(int m, int n, std::size_t index);

/// lss of the intersection of a candidate pair, -1 when empty.
std::int64_t unary_pair_lss(int m, int n, std::size_t index);

} // namespace kernels

} // namespace lss

#endif
