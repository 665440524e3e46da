#include "lss/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <limits>
#include <string>

#include "lss/error.hpp"

namespace lss::oracle {

namespace {

std::size_t words_of_length(std::size_t alphabet_size, std::size_t len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) {
        if (alphabet_size != 0 && total > kMaxWords / alphabet_size) {
            throw BudgetError("oracle enumeration over more than " + std::to_string(kMaxWords) + " words refused");
        }
        total *= alphabet_size;
    }
    return total;
}

void check_budget(std::size_t alphabet_size, std::size_t max_len) {
    std::size_t sum = 0;
    for (std::size_t len = 0; len <= max_len; ++len) {
        sum += words_of_length(alphabet_size, len);
        if (sum > kMaxWords) {
            throw BudgetError("oracle enumeration over more than " + std::to_string(kMaxWords) + " words refused");
        }
    }
}

/// Smallest index in [0, total) satisfying pred, in parallel.
template <typename Pred>
std::optional<std::size_t> first_index(std::size_t total, Pred pred) {
    std::int64_t first = std::numeric_limits<std::int64_t>::max();
    const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 256) reduction(min : first)
    for (std::int64_t i = 0; i < n; ++i) {
        if (i < first && pred(static_cast<std::size_t>(i))) {
            first = i;
        }
    }
    if (first == std::numeric_limits<std::int64_t>::max()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(first);
}

} // namespace

Word nth_word(std::size_t alphabet_size, std::size_t len, std::size_t index) {
    Word w(len, 0);
    for (std::size_t i = len; i-- > 0;) {
        w[i] = static_cast<Symbol>(index % alphabet_size);
        index /= alphabet_size;
    }
    return w;
}

std::vector<Word> enumerate_accepted(const Automaton& aut, std::size_t max_len) {
    const std::size_t sigma = aut.alphabet().size();
    check_budget(sigma, max_len);
    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_len; ++len) {
        const std::size_t total = words_of_length(sigma, len);
        std::vector<char> hit(total, 0);
        const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 256)
        for (std::int64_t i = 0; i < n; ++i) {
            hit[static_cast<std::size_t>(i)] = accepts(aut, nth_word(sigma, len, static_cast<std::size_t>(i))) ? 1 : 0;
        }
        for (std::size_t i = 0; i < total; ++i) {
            if (hit[i]) {
                out.push_back(nth_word(sigma, len, i));
            }
        }
    }
    return out;
}

std::vector<Word> enumerate_accepted_serial(const Automaton& aut, std::size_t max_len) {
    const std::size_t sigma = aut.alphabet().size();
    check_budget(sigma, max_len);
    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_len; ++len) {
        const std::size_t total = words_of_length(sigma, len);
        for (std::size_t i = 0; i < total; ++i) {
            Word w = nth_word(sigma, len, i);
            if (accepts(aut, w)) {
                out.push_back(std::move(w));
            }
        }
    }
    return out;
}

std::optional<Word> first_word(std::size_t alphabet_size, std::size_t max_len,
                              const std::function<bool(const Word&)>& pred) {
    std::size_t seen = 0;
    for (std::size_t len = 0; len <= max_len; ++len) {
        const std::size_t total = words_of_length(alphabet_size, len);
        seen += total;
        if (seen > kMaxWords) {
            throw BudgetError("oracle enumeration over more than " + std::to_string(kMaxWords) + " words refused");
        }
        const auto idx = first_index(total, [&](std::size_t i) { return pred(nth_word(alphabet_size, len, i)); });
        if (idx) {
            return nth_word(alphabet_size, len, *idx);
        }
    }
    return std::nullopt;
}

std::optional<Word> brute_lss(const Automaton& aut, std::size_t max_len) {
    return first_word(aut.alphabet().size(), max_len, [&](const Word& w) { return accepts(aut, w); });
}

std::optional<Word> brute_common_lss(std::span<const Automaton> automata, std::size_t max_len) {
    if (automata.empty()) {
        throw PreconditionError("brute_common_lss needs at least one automaton");
    }
    return first_word(automata.front().alphabet().size(), max_len, [&](const Word& w) {
        return std::all_of(automata.begin(), automata.end(), [&](const Automaton& a) { return accepts(a, w); });
    });
}

std::optional<Word> brute_rejected(const Automaton& aut, std::size_t max_len) {
    return first_word(aut.alphabet().size(), max_len, [&](const Word& w) { return !accepts(aut, w); });
}

std::set<std::size_t> power_k_set(const Word& x, const Automaton& aut, std::size_t cap) {
    if (cap < 1) {
        throw PreconditionError("power_k_set needs cap >= 1");
    }
    const std::size_t n = x.size();
    const bool empty_word = accepts(aut, Word{});
    // reach[i][k]: the prefix of length i splits into k words of L.
    std::vector<std::vector<char>> reach(n + 1, std::vector<char>(cap + 1, 0));
    reach[0][0] = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        if (empty_word) {
            for (std::size_t k = 0; k < cap; ++k) {
                if (reach[i][k]) {
                    reach[i][k + 1] = 1;
                }
            }
        }
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (!accepts(aut, Word(x.begin() + static_cast<std::ptrdiff_t>(i), x.begin() + static_cast<std::ptrdiff_t>(j)))) {
                continue;
            }
            for (std::size_t k = 0; k < cap; ++k) {
                if (reach[i][k]) {
                    reach[j][k + 1] = 1;
                }
            }
        }
    }
    std::set<std::size_t> ks;
    for (std::size_t k = 1; k <= cap; ++k) {
        if (reach[n][k]) {
            ks.insert(k);
        }
    }
    return ks;
}

bool balanced(const Word& x, std::span<const Automaton> automata) {
    if (automata.empty()) {
        throw PreconditionError("balanced needs at least one automaton");
    }
    std::set<std::size_t> common = power_k_set(x, automata[0], x.size() + 1);
    for (std::size_t i = 1; i < automata.size() && !common.empty(); ++i) {
        const auto ks = power_k_set(x, automata[i], x.size() + 1);
        std::set<std::size_t> next;
        std::set_intersection(common.begin(), common.end(), ks.begin(), ks.end(), std::inserter(next, next.end()));
        common = std::move(next);
    }
    return !common.empty();
}

std::optional<Word> brute_power_lss(std::span<const Automaton> automata, std::size_t max_len) {
    if (automata.empty()) {
        throw PreconditionError("brute_power_lss needs at least one automaton");
    }
    return first_word(automata[0].alphabet().size(), max_len, [&](const Word& w) { return balanced(w, automata); });
}

std::optional<Word> brute_power_lss_serial(std::span<const Automaton> automata, std::size_t max_len) {
    if (automata.empty()) {
        throw PreconditionError("brute_power_lss needs at least one automaton");
    }
    const std::size_t sigma = automata[0].alphabet().size();
    std::size_t seen = 0;
    for (std::size_t len = 0; len <= max_len; ++len) {
        const std::size_t total = words_of_length(sigma, len);
        seen += total;
        if (seen > kMaxWords) {
            throw BudgetError("oracle enumeration over more than " + std::to_string(kMaxWords) + " words refused");
        }
        for (std::size_t i = 0; i < total; ++i) {
            Word w = nth_word(sigma, len, i);
            if (balanced(w, automata)) {
                return w;
            }
        }
    }
    return std::nullopt;
}

namespace {

struct CycleDfs {
    const WeightedDigraph& g;
    Vertex anchor;
    std::size_t depth;
    std::size_t steps = 0;
    std::vector<std::size_t> path;
    WeightVector sum;

    bool run(Vertex v) {
        if (path.size() == depth) {
            return v == anchor && std::all_of(sum.begin(), sum.end(), [](std::int64_t c) { return c == 0; });
        }
        for (std::size_t e : g.out_edges(v)) {
            if (++steps > kMaxWalkSteps) {
                throw BudgetError("brute_zero_cycle exceeded " + std::to_string(kMaxWalkSteps) + " steps");
            }
            const auto& edge = g.edges()[e];
            for (std::size_t c = 0; c < sum.size(); ++c) {
                sum[c] += edge.weight[c];
            }
            path.push_back(e);
            if (run(edge.target)) {
                return true;
            }
            path.pop_back();
            for (std::size_t c = 0; c < sum.size(); ++c) {
                sum[c] -= edge.weight[c];
            }
        }
        return false;
    }
};

} // namespace

std::optional<CycleWitness> brute_zero_cycle(const WeightedDigraph& g, Vertex anchor, std::size_t max_len) {
    if (max_len < 1) {
        throw PreconditionError("brute_zero_cycle needs max_len >= 1");
    }
    if (anchor >= g.vertex_count()) {
        throw PreconditionError("anchor out of range");
    }
    std::size_t spent = 0;
    for (std::size_t depth = 1; depth <= max_len; ++depth) {
        CycleDfs dfs{g, anchor, depth, spent, {}, WeightVector(g.dimension(), 0)};
        const bool found = dfs.run(anchor);
        spent = dfs.steps;
        if (found) {
            CycleWitness c;
            c.vertices.push_back(anchor);
            c.edges = dfs.path;
            for (std::size_t e : c.edges) {
                c.vertices.push_back(g.edges()[e].target);
            }
            c.total = dfs.sum;
            return c;
        }
    }
    return std::nullopt;
}

namespace {

std::vector<bool> reach_from(const WeightedDigraph& g, Vertex root, bool reverse) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (const WeightedEdge& e : g.edges()) {
            const Vertex from = reverse ? e.target : e.source;
            const Vertex to = reverse ? e.source : e.target;
            if (from == v && !seen[to]) {
                seen[to] = true;
                stack.push_back(to);
            }
        }
    }
    return seen;
}

/// Bellman-Ford from `root` with weights scaled by `sign`; nullopt when a negative cycle exists.
std::optional<std::vector<std::int64_t>> potentials(const WeightedDigraph& g, const std::vector<std::size_t>& edges,
                                                    Vertex root, std::int64_t sign) {
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> d(g.vertex_count(), kInf);
    d[root] = 0;
    for (std::size_t round = 0; round <= g.vertex_count(); ++round) {
        bool changed = false;
        for (std::size_t i : edges) {
            const auto& e = g.edges()[i];
            if (d[e.source] != kInf && d[e.source] + sign * e.weight[0] < d[e.target]) {
                d[e.target] = d[e.source] + sign * e.weight[0];
                changed = true;
            }
        }
        if (!changed) {
            return d;
        }
    }
    return std::nullopt;
}

} // namespace

bool has_zero_cycle_scalar(const WeightedDigraph& g, Vertex anchor) {
    if (g.dimension() != 1) {
        throw PreconditionError("has_zero_cycle_scalar needs dimension 1");
    }
    if (anchor >= g.vertex_count()) {
        throw PreconditionError("anchor out of range");
    }
    const auto fwd = reach_from(g, anchor, false);
    const auto bwd = reach_from(g, anchor, true);
    std::vector<std::size_t> inner;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        if (fwd[e.source] && bwd[e.source] && fwd[e.target] && bwd[e.target]) {
            inner.push_back(i);
        }
    }
    if (inner.empty()) {
        return false;
    }
    const auto up = potentials(g, inner, anchor, 1);
    const auto down = potentials(g, inner, anchor, -1);
    if (!up && !down) {
        return true;
    }
    const auto& d = up ? *up : *down;
    const std::int64_t sign = up ? 1 : -1;
    // Tight edges have zero reduced weight; look for a closed walk through the anchor using only them.
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> stack;
    for (std::size_t i : inner) {
        const auto& e = g.edges()[i];
        if (e.source == anchor && d[e.source] + sign * e.weight[0] == d[e.target] && !seen[e.target]) {
            seen[e.target] = true;
            stack.push_back(e.target);
        }
    }
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        if (v == anchor) {
            return true;
        }
        for (std::size_t i : inner) {
            const auto& e = g.edges()[i];
            if (e.source == v && d[e.source] + sign * e.weight[0] == d[e.target] && !seen[e.target]) {
                seen[e.target] = true;
                stack.push_back(e.target);
            }
        }
    }
    return false;
}

std::set<Word> cfg_words(const Cfg& g, std::size_t max_len) {
    std::vector<std::set<Word>> lang(g.nonterminals().size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Production& p : g.productions()) {
            std::set<Word> acc{Word{}};
            for (const GrammarSymbol& s : p.body) {
                std::set<Word> next;
                if (s.terminal) {
                    for (const Word& w : acc) {
                        if (w.size() < max_len) {
                            Word v = w;
                            v.push_back(s.id);
                            next.insert(std::move(v));
                        }
                    }
                } else {
                    for (const Word& w : acc) {
                        for (const Word& u : lang[s.id]) {
                            if (w.size() + u.size() <= max_len) {
                                Word v = w;
                                v.insert(v.end(), u.begin(), u.end());
                                next.insert(std::move(v));
                            }
                        }
                    }
                }
                acc = std::move(next);
                if (acc.empty()) {
                    break;
                }
            }
            for (const Word& w : acc) {
                if (lang[p.head].insert(w).second) {
                    changed = true;
                }
            }
        }
    }
    return lang.empty() ? std::set<Word>{} : lang[g.start()];
}

} // namespace lss::oracle
