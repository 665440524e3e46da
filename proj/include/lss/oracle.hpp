#ifndef LSS_ORACLE_HPP
#define LSS_ORACLE_HPP

// Brute-force ground truth. Nothing here calls the search engine, the product
// constructions or the counter machinery; only direct membership simulation.

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "lss/automaton.hpp"
#include "lss/power.hpp"
#include "lss/weighted.hpp"

namespace lss::oracle {

/// Largest number of candidate words any enumeration oracle will generate.
inline constexpr std::size_t kMaxWords = std::size_t{1} << 24;
/// Largest number of DFS steps brute_zero_cycle will take.
inline constexpr std::size_t kMaxWalkSteps = 200'000'000;

/// The index-th word of length `len` in lexicographic order.
Word nth_word(std::size_t alphabet_size, std::size_t len, std::size_t index);

/// All accepted words of length <= max_len, length-lexicographically ordered.
std::vector<Word> enumerate_accepted(const Automaton& aut, std::size_t max_len);
std::vector<Word> enumerate_accepted_serial(const Automaton& aut, std::size_t max_len);

/// Length-lexicographically least word of length <= max_len satisfying pred. Lengths are
/// scanned in order; BudgetError once more than kMaxWords candidates would be needed.
std::optional<Word> first_word(std::size_t alphabet_size, std::size_t max_len,
                               const std::function<bool(const Word&)>& pred);

std::optional<Word> brute_lss(const Automaton& aut, std::size_t max_len);
/// Least word accepted by every automaton.
std::optional<Word> brute_common_lss(std::span<const Automaton> automata, std::size_t max_len);
/// Least word rejected by the automaton.
std::optional<Word> brute_rejected(const Automaton& aut, std::size_t max_len);

/// { k <= cap : x in L(aut)^k }.
std::set<std::size_t> power_k_set(const Word& x, const Automaton& aut, std::size_t cap);

/// True iff some k is shared by power_k_set(x, a_i, |x| + 1) for every i.
bool balanced(const Word& x, std::span<const Automaton> automata);

std::optional<Word> brute_power_lss(std::span<const Automaton> automata, std::size_t max_len);
std::optional<Word> brute_power_lss_serial(std::span<const Automaton> automata, std::size_t max_len);

/// Shortest zero-weight closed walk through `anchor` by iterative-deepening DFS over edge sequences.
std::optional<CycleWitness> brute_zero_cycle(const WeightedDigraph& g, Vertex anchor, std::size_t max_len);

/// Exact test for a zero-weight closed walk through `anchor` in a dimension-one digraph, with no
/// length bound: restrict to the anchor's strongly connected component; with cycles of both signs
/// the answer is yes, otherwise shortest-path potentials make every closed walk a sum of
/// nonnegative reduced weights and the anchor must lie on a cycle of tight edges.
bool has_zero_cycle_scalar(const WeightedDigraph& g, Vertex anchor);

/// Terminal words of length <= max_len derivable from the start symbol, by set fixpoint.
std::set<Word> cfg_words(const Cfg& g, std::size_t max_len);

} // namespace lss::oracle

#endif
