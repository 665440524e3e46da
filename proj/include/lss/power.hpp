#ifndef LSS_POWER_HPP
#define LSS_POWER_HPP

// Equal-power intersections: words in the union over k >= 1 of L1^k ∩ ... ∩ Ld^k.
//
// Two independent routes are provided for d = 2:
//   * a one-counter pushdown automaton whose stack holds |#factors(L1) - #factors(L2)|,
//     converted to a grammar by the triple construction and tested for emptiness;
//   * a breadth-first search over the product of star-normalised machines, where
//     factor-closing epsilon edges carry +1/-1 weights and balanced words are
//     zero-weight closed walks through the all-starts vertex.
// For d >= 3 only the weighted search applies; it is exact up to a length cap.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lss/automaton.hpp"
#include "lss/bounds.hpp"
#include "lss/weighted.hpp"

namespace lss {

// ---------------------------------------------------------------------------
// Pushdown automata

enum class StackSymbol : std::uint8_t { Z0 = 0, C = 1 };

std::string_view stack_symbol_name(StackSymbol s);

struct PdaTransition {
    State from = 0;
    Symbol input = kEpsilon;
    StackSymbol top = StackSymbol::Z0;
    State to = 0;
    /// Replaces the popped top; push.front() becomes the new top. At most two symbols.
    std::vector<StackSymbol> push;
};

enum class PdaAcceptance {
    /// Accept in an accepting state with the stack holding only Z0.
    FinalStateBottom,
    /// Accept when the stack is empty after the input is consumed.
    EmptyStack,
};

struct Pda {
    Alphabet alphabet;
    std::size_t state_count = 0;
    State start = 0;
    std::vector<State> accepting;
    std::vector<PdaTransition> transitions;
    PdaAcceptance acceptance = PdaAcceptance::FinalStateBottom;

    /// Z0 stays at the bottom, pushes are at most two symbols, states and symbols in range.
    void validate() const;
};

/// Counter PDA for two epsilon-free NFAs. States are (p, q, sign) with sign in {0, +, -}
/// numbered ((p * s2) + q) * 3 + sign, sign 0 = balanced, 1 = machine one ahead, 2 = behind.
Pda build_pda(const Automaton& a1, const Automaton& a2);

/// Adds a drain state and an epsilon move popping Z0 from every accepting state,
/// turning final-state-with-bottom acceptance into empty-stack acceptance.
Pda normalize_to_empty_stack(const Pda& pda);

/// Configuration search with the stack height limited to max_stack (test helper).
bool pda_accepts(const Pda& pda, const Word& x, std::size_t max_stack);

// ---------------------------------------------------------------------------
// Grammars

struct GrammarSymbol {
    bool terminal = false;
    std::uint32_t id = 0;

    auto operator<=>(const GrammarSymbol&) const = default;
};

struct Production {
    std::uint32_t head = 0;
    std::vector<GrammarSymbol> body;
};

class Cfg {
public:
    explicit Cfg(Alphabet terminals) : terminals_(std::move(terminals)) {}

    std::uint32_t add_nonterminal(std::string name);
    void add_production(std::uint32_t head, std::vector<GrammarSymbol> body);
    void set_start(std::uint32_t start) { start_ = start; }

    const Alphabet& terminals() const noexcept { return terminals_; }
    const std::vector<std::string>& nonterminals() const noexcept { return nonterminals_; }
    const std::vector<Production>& productions() const noexcept { return productions_; }
    std::uint32_t start() const noexcept { return start_; }

    /// One production per line, "NT -> sym sym ...", epsilon bodies as "NT ->".
    std::string dump() const;

private:
    Alphabet terminals_;
    std::vector<std::string> nonterminals_;
    std::vector<Production> productions_;
    std::uint32_t start_ = 0;
};

/// Triple construction; nonterminals are S and [q,X,p]. Requires empty-stack acceptance.
Cfg pda_to_cfg(const Pda& pda);

/// Nonterminals that derive some terminal string (least fixpoint).
std::vector<bool> generating_nonterminals(const Cfg& g);

/// True iff the start symbol derives no terminal string.
bool cfg_is_empty(const Cfg& g);

/// build_pda -> normalize_to_empty_stack -> pda_to_cfg.
Cfg power_grammar(const Automaton& a1, const Automaton& a2);

// ---------------------------------------------------------------------------
// Weighted counter product

struct CounterProduct {
    WeightedDigraph graph;
    Vertex start = 0;                       ///< the all-starts vertex, both initial and final
    std::vector<Automaton> machines;        ///< star-normalised inputs
    std::vector<std::vector<State>> tuples; ///< machine states per vertex
    std::vector<int> factor_machine;        ///< per edge: machine whose factor it closes, or -1
};

/// Requires d >= 2 automata over one alphabet. Weight dimension is d - 1: closing a factor
/// of machine 0 adds +1 to every coordinate, closing one of machine i >= 1 adds -1 to coordinate i-1.
CounterProduct build_counter_product(std::span<const Automaton> automata);

/// A balanced word with one factorisation per language, all with k factors.
struct BalancedWitness {
    Word word;
    std::size_t k = 0;
    /// factor_ends[i][j] is the end position of factor j of language i; the last entry is |word|.
    std::vector<std::vector<std::size_t>> factor_ends;
};

/// Each factorisation has k factors that reassemble the word and are accepted by the matching automaton.
bool validate_balanced(std::span<const Automaton> automata, const BalancedWitness& w);

struct CounterSearchResult {
    std::optional<BalancedWitness> witness;
    bool exhaustive = true;
};

/// Weighted search over the counter product: weight components clipped at +-clip and
/// walks limited to max_symbols symbols (unbounded when absent).
CounterSearchResult counter_search(std::span<const Automaton> automata, std::int64_t clip,
                                   std::optional<std::size_t> max_symbols);

/// Clip used for two languages: 2 s^2 with s the counter product's vertex count.
std::int64_t two_language_clip(std::span<const Automaton> automata);

/// Largest sound bound that is explored without an explicit cap (d >= 3).
inline constexpr std::int64_t kPowerSearchBudget = 20'000;

enum class PowerStatus { Nonempty, Empty, EmptyWithinCap };

struct PowerVerdict {
    PowerStatus status = PowerStatus::Empty;
    std::optional<BalancedWitness> witness;
    /// Length cap actually explored (d >= 3 only).
    std::optional<std::int64_t> cap;
    /// Sound length bound derived from the state counts (d >= 3 only).
    std::optional<BigInt> sound_bound;
};

/// d = 2: the grammar route and the counter search must agree (std::logic_error otherwise).
/// d >= 3: bounded search; Empty is reported only when the cap covers the sound bound.
PowerVerdict decide_power_nonempty(std::span<const Automaton> automata, std::optional<std::int64_t> cap = {});

/// Length-lexicographically least balanced word with its factorisations.
std::optional<BalancedWitness> shortest_balanced_string(std::span<const Automaton> automata,
                                                        std::optional<std::int64_t> cap = {});

} // namespace lss

#endif
