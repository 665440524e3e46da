#ifndef LSS_WEIGHTED_HPP
#define LSS_WEIGHTED_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lss/automaton.hpp"
#include "lss/bounds.hpp"
#include "lss/search.hpp"

namespace lss {

using Vertex = std::uint32_t;
using WeightVector = std::vector<std::int64_t>;

struct WeightedEdge {
    Vertex source = 0;
    Vertex target = 0;
    WeightVector weight;
    /// Symbol read along the edge; kEpsilon for silent edges and for plain digraphs.
    Symbol label = kEpsilon;
};

/// Digraph with integer weight vectors of a fixed dimension on its edges.
class WeightedDigraph {
public:
    WeightedDigraph(std::size_t vertex_count, std::size_t dimension, std::vector<WeightedEdge> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t dimension() const noexcept { return dimension_; }
    /// Largest absolute weight component over all edges (0 for an edgeless graph).
    std::int64_t max_weight() const noexcept { return max_weight_; }
    const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
    std::span<const std::size_t> out_edges(Vertex v) const;

private:
    std::size_t vertex_count_;
    std::size_t dimension_;
    std::int64_t max_weight_ = 0;
    std::vector<WeightedEdge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> order_;
};

/// Closed walk with its summed weight.
struct CycleWitness {
    std::vector<Vertex> vertices;   ///< first == last
    std::vector<std::size_t> edges; ///< indices into WeightedDigraph::edges()
    WeightVector total;

    std::size_t length() const noexcept { return edges.size(); }
};

/// Edges exist and chain up, the walk is closed and `total` is the component-wise sum.
bool validate_cycle(const WeightedDigraph& g, const CycleWitness& c);

/// Text format: "vertices N" followed by "edge u v w1 ... wd" lines; '#' comments.
WeightedDigraph parse_digraph(std::string_view text);
std::string serialize_digraph(const WeightedDigraph& g);

/// ceil(v^(d+1) K^d d^(d/2) (v^2 + d)), with K = 0 treated as 1.
BigInt lemma_bound(std::int64_t v, std::int64_t k, std::int64_t d);
/// 2 K v^2 (dimension-one improvement), with K = 0 treated as 1.
BigInt scalar_bound(std::int64_t v, std::int64_t k);
/// lemma_bound(prod(s_i + 1), 1, d - 1) for d languages with s_i states.
BigInt power_length_bound(std::span<const std::int64_t> state_counts);

struct WalkOptions {
    /// Accumulated weight components outside [-clip, clip] are pruned.
    std::int64_t clip = 0;
    /// Maximum number of steps (edges in step mode, symbols otherwise).
    std::optional<std::size_t> max_steps;
    /// When true every edge is one step; otherwise only labelled edges are.
    bool every_edge_is_step = true;
    std::size_t max_nodes = 20'000'000;
};

struct ZeroWalk {
    CycleWitness cycle;
    Word word; ///< labels read, in label mode
};

struct ZeroWalkOutcome {
    std::optional<ZeroWalk> walk;
    bool exhaustive = true;
};

/// Shortest nonempty closed walk through `anchor` with zero total weight, searching
/// (vertex, clipped weight) configurations breadth-first. In label mode the walk
/// minimises the spelled word length-lexicographically and must read at least one symbol.
ZeroWalkOutcome zero_walk_search(const WeightedDigraph& g, Vertex anchor, const WalkOptions& options);

/// Zero-weight closed walk of length <= max_len through `anchor` (or through any vertex).
/// Weights are clipped at +-(K * max_len), which loses nothing within the length budget.
std::optional<CycleWitness> find_zero_cycle(const WeightedDigraph& g, std::optional<Vertex> anchor,
                                            std::size_t max_len);

} // namespace lss

#endif
