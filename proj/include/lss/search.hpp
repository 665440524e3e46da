#ifndef LSS_SEARCH_HPP
#define LSS_SEARCH_HPP

// Shortest-word search over implicitly generated labelled graphs.
//
// A search space hands out dense node ids and expands them on demand:
//
//   NodeId start();
//   bool accepting(NodeId);
//   void expand(NodeId, std::vector<search::Step>&);   // may intern new ids
//   std::size_t node_count() const;
//
// Epsilon steps cost nothing, symbol steps cost one. The result is the
// length-lexicographically least accepted word together with one path that
// spells it. The explored subgraph is limited to nodes within the optimal
// distance, so spaces that are infinite in principle (clipped counters, weight
// vectors) stay cheap when a short answer exists.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lss/automaton.hpp"
#include "lss/error.hpp"

namespace lss::search {

using NodeId = std::uint32_t;

struct Step {
    Symbol label;       ///< kEpsilon for free moves
    NodeId target;
    std::uint32_t tag;  ///< caller-defined, returned along the path
};

struct Path {
    Word word;
    std::vector<NodeId> nodes;         ///< nodes.front() is the start node
    std::vector<Symbol> labels;        ///< labels[i] is the label of nodes[i] -> nodes[i+1]
    std::vector<std::uint32_t> tags;   ///< tags[i] is the tag of nodes[i] -> nodes[i+1]
};

struct Limits {
    /// Paths spelling more than this many symbols are not explored.
    std::optional<std::size_t> max_symbols;
    /// Hard cap on interned nodes; exceeding it raises BudgetError.
    std::size_t max_nodes = 50'000'000;
};

struct Outcome {
    std::optional<Path> path;
    /// True when every reachable node was explored (a missing path then means the language is empty).
    bool exhaustive = true;
};

namespace detail {

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

struct Entry {
    NodeId node;
    std::size_t parent; ///< index into the entry list, or npos for the root
    Symbol label;
    std::uint32_t tag;
};

inline constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

} // namespace detail

template <class Space>
Outcome shortest_word(Space& space, const Limits& limits = {}) {
    using detail::kUnreached;

    std::vector<std::uint32_t> dist;
    std::vector<char> processed;
    std::vector<std::vector<Step>> adjacency;
    std::vector<NodeId> accepting_nodes;

    auto grow = [&](std::size_t n) {
        if (n > limits.max_nodes) {
            throw BudgetError("search space exceeds " + std::to_string(limits.max_nodes) + " nodes");
        }
        if (n > dist.size()) {
            dist.resize(n, kUnreached);
            processed.resize(n, 0);
            adjacency.resize(n);
        }
    };

    const NodeId root = space.start();
    grow(space.node_count());
    dist[root] = 0;

    std::deque<NodeId> queue{root};
    std::uint32_t best = kUnreached;
    bool truncated = false;
    std::vector<Step> steps;

    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        if (processed[u]) {
            continue;
        }
        const std::uint32_t du = dist[u];
        if (du > best) {
            break;
        }
        processed[u] = 1;
        if (space.accepting(u)) {
            best = std::min(best, du);
            accepting_nodes.push_back(u);
        }

        steps.clear();
        space.expand(u, steps);
        grow(space.node_count());
        for (const Step& s : steps) {
            const bool free = s.label == kEpsilon;
            const std::uint32_t nd = du + (free ? 0U : 1U);
            if (limits.max_symbols && nd > *limits.max_symbols) {
                truncated = true;
                continue;
            }
            adjacency[u].push_back(s);
            if (nd < dist[s.target]) {
                dist[s.target] = nd;
                if (free) {
                    queue.push_front(s.target);
                } else {
                    queue.push_back(s.target);
                }
            }
        }
    }

    Outcome outcome;
    if (best == kUnreached) {
        outcome.exhaustive = !truncated;
        return outcome;
    }

    // Backward distances to an accepting node over the explored arcs.
    const std::size_t n = dist.size();
    std::vector<std::vector<std::pair<NodeId, bool>>> reverse(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (const Step& s : adjacency[u]) {
            reverse[s.target].emplace_back(static_cast<NodeId>(u), s.label == kEpsilon);
        }
    }
    std::vector<std::uint32_t> to_go(n, kUnreached);
    std::deque<NodeId> back;
    for (NodeId a : accepting_nodes) {
        to_go[a] = 0;
        back.push_back(a);
    }
    std::vector<char> settled(n, 0);
    while (!back.empty()) {
        const NodeId v = back.front();
        back.pop_front();
        if (settled[v]) {
            continue;
        }
        settled[v] = 1;
        for (auto [u, free] : reverse[v]) {
            const std::uint32_t nd = to_go[v] + (free ? 0U : 1U);
            if (nd < to_go[u]) {
                to_go[u] = nd;
                if (free) {
                    back.push_front(u);
                } else {
                    back.push_back(u);
                }
            }
        }
    }

    // Greedy forward walk through tight nodes, smallest symbol first.
    std::vector<detail::Entry> entries;
    std::unordered_map<NodeId, std::size_t> layer;
    std::vector<std::size_t> frontier;

    auto close_layer = [&](std::uint32_t remaining) {
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            const std::size_t e = frontier[i];
            const NodeId u = entries[e].node;
            for (const Step& s : adjacency[u]) {
                if (s.label != kEpsilon || to_go[s.target] != remaining || layer.contains(s.target)) {
                    continue;
                }
                layer.emplace(s.target, entries.size());
                frontier.push_back(entries.size());
                entries.push_back({s.target, e, s.label, s.tag});
            }
        }
    };

    std::uint32_t remaining = to_go[root];
    entries.push_back({root, detail::kNoParent, kEpsilon, 0});
    layer.emplace(root, 0);
    frontier.push_back(0);
    close_layer(remaining);

    while (remaining > 0) {
        Symbol chosen = kEpsilon;
        for (std::size_t e : frontier) {
            for (const Step& s : adjacency[entries[e].node]) {
                if (s.label != kEpsilon && s.label < chosen && to_go[s.target] == remaining - 1) {
                    chosen = s.label;
                }
            }
        }
        std::vector<std::size_t> previous;
        previous.swap(frontier);
        layer.clear();
        for (std::size_t e : previous) {
            for (const Step& s : adjacency[entries[e].node]) {
                if (s.label != chosen || to_go[s.target] != remaining - 1 || layer.contains(s.target)) {
                    continue;
                }
                layer.emplace(s.target, entries.size());
                frontier.push_back(entries.size());
                entries.push_back({s.target, e, s.label, s.tag});
            }
        }
        --remaining;
        close_layer(remaining);
    }

    std::size_t hit = detail::kNoParent;
    for (std::size_t e : frontier) {
        if (space.accepting(entries[e].node) && processed[entries[e].node]) {
            hit = e;
            break;
        }
    }
    if (hit == detail::kNoParent) {
        throw std::logic_error("shortest_word: greedy walk lost the accepting node");
    }

    Path path;
    std::vector<std::size_t> chain;
    for (std::size_t e = hit; e != detail::kNoParent; e = entries[e].parent) {
        chain.push_back(e);
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const detail::Entry& entry = entries[*it];
        if (entry.parent != detail::kNoParent) {
            path.labels.push_back(entry.label);
            path.tags.push_back(entry.tag);
            if (entry.label != kEpsilon) {
                path.word.push_back(entry.label);
            }
        }
        path.nodes.push_back(entry.node);
    }
    outcome.path = std::move(path);
    return outcome;
}

} // namespace lss::search

#endif
