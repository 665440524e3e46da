#ifndef LSS_AUTOMATON_HPP
#define LSS_AUTOMATON_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lss/error.hpp"

namespace lss {

using State = std::uint32_t;
using Symbol = std::uint32_t;

/// Label of an epsilon transition. Sorts after every real symbol.
inline constexpr Symbol kEpsilon = std::numeric_limits<Symbol>::max();

/// A word is a sequence of symbol indices into some alphabet; the empty word is {}.
using Word = std::vector<Symbol>;

/// Number of occurrences of `s` in `w`.
std::size_t count_symbol(const Word& w, Symbol s);

/// Ordered list of distinct symbol tokens. The order defines the lexicographic order of words.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> tokens);

    std::size_t size() const noexcept { return tokens_.size(); }
    const std::string& token(Symbol s) const { return tokens_.at(s); }
    const std::vector<std::string>& tokens() const noexcept { return tokens_; }
    std::optional<Symbol> find(std::string_view token) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> tokens_;
};

/// The binary alphabet {0, 1} used by the intersection witness families.
Alphabet binary_alphabet();
/// The one-letter alphabet {a}.
Alphabet unary_alphabet();

/// Space-separated tokens, e.g. "1 0 0 1 0". Empty string is the empty word.
std::string format_word(const Alphabet& alphabet, const Word& w);
/// Inverse of format_word. Throws ParseError on unknown tokens.
Word parse_word(const Alphabet& alphabet, std::string_view text);

struct Transition {
    State from = 0;
    Symbol label = 0;
    State to = 0;

    bool is_epsilon() const noexcept { return label == kEpsilon; }
    auto operator<=>(const Transition&) const = default;
};

/// Outgoing edge stored in the per-state adjacency.
struct Arc {
    Symbol label;
    State to;
};

/// NFA with optional epsilon transitions. DFAs are automata for which is_deterministic() holds.
/// Immutable after construction; transitions are kept sorted and duplicate-free.
class Automaton {
public:
    Automaton(Alphabet alphabet, std::size_t state_count, State start, std::vector<State> finals,
              std::vector<Transition> transitions);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return state_count_; }
    State start() const noexcept { return start_; }
    const std::vector<State>& finals() const noexcept { return finals_; }
    bool is_final(State q) const { return final_mask_.at(q); }
    const std::vector<Transition>& transitions() const noexcept { return transitions_; }
    std::size_t transition_count() const noexcept { return transitions_.size(); }
    std::span<const Arc> arcs(State q) const;

    bool has_epsilon() const noexcept { return epsilon_count_ > 0; }
    std::size_t epsilon_count() const noexcept { return epsilon_count_; }

    /// No epsilon labels and exactly one successor per (state, symbol).
    bool is_deterministic() const;

    bool operator==(const Automaton& other) const;

private:
    Alphabet alphabet_;
    std::size_t state_count_;
    State start_;
    std::vector<State> finals_;
    std::vector<bool> final_mask_;
    std::vector<Transition> transitions_;
    std::vector<std::size_t> arc_offsets_;
    std::vector<Arc> arcs_;
    std::size_t epsilon_count_ = 0;
};

struct LssResult {
    enum class Status { Empty, Found };

    Status status = Status::Empty;
    Word word;

    bool found() const noexcept { return status == Status::Found; }
    std::size_t length() const noexcept { return word.size(); }
};

enum class ProductMode {
    Reachable, ///< only pairs reachable from the start pair, numbered in discovery order
    Full,      ///< all s1*s2 pairs, pair (p, q) numbered p*s2 + q
};

Automaton parse_automaton(std::string_view text);
std::string serialize_automaton(const Automaton& aut);

/// Epsilon closure of a set of states (sorted, duplicate-free result).
std::vector<State> epsilon_closure(const Automaton& aut, std::vector<State> states);

bool accepts(const Automaton& aut, const Word& x);

/// Length-lexicographically least accepted word, or Empty.
LssResult shortest_string(const Automaton& aut);

/// Direct product for epsilon-free automata over the same alphabet.
Automaton product_intersection(const Automaton& a1, const Automaton& a2,
                               ProductMode mode = ProductMode::Reachable);

/// Subset construction with epsilon closures folded in. Output is total and only holds reachable subsets.
Automaton determinize(const Automaton& aut);

/// Swaps final and non-final states of a total DFA.
Automaton complement(const Automaton& dfa);

} // namespace lss

#endif
