#include "lss/weighted.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "lss/error.hpp"

namespace lss {

WeightedDigraph::WeightedDigraph(std::size_t vertex_count, std::size_t dimension, std::vector<WeightedEdge> edges)
    : vertex_count_(vertex_count), dimension_(dimension), edges_(std::move(edges)) {
    if (vertex_count_ == 0) {
        throw PreconditionError("digraph needs at least one vertex");
    }
    if (dimension_ == 0) {
        throw PreconditionError("weight dimension must be positive");
    }
    offsets_.assign(vertex_count_ + 1, 0);
    for (const WeightedEdge& e : edges_) {
        if (e.source >= vertex_count_ || e.target >= vertex_count_) {
            throw PreconditionError("edge endpoint out of range");
        }
        if (e.weight.size() != dimension_) {
            throw PreconditionError("edge weight has dimension " + std::to_string(e.weight.size()) + ", expected " +
                                    std::to_string(dimension_));
        }
        for (std::int64_t w : e.weight) {
            max_weight_ = std::max(max_weight_, w < 0 ? -w : w);
        }
        ++offsets_[e.source + 1];
    }
    for (std::size_t v = 0; v < vertex_count_; ++v) {
        offsets_[v + 1] += offsets_[v];
    }
    order_.resize(edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        order_[fill[edges_[i].source]++] = i;
    }
}

std::span<const std::size_t> WeightedDigraph::out_edges(Vertex v) const {
    return std::span<const std::size_t>(order_).subspan(offsets_.at(v), offsets_[v + 1] - offsets_[v]);
}

bool validate_cycle(const WeightedDigraph& g, const CycleWitness& c) {
    if (c.vertices.size() != c.edges.size() + 1 || c.edges.empty() || c.vertices.front() != c.vertices.back()) {
        return false;
    }
    WeightVector sum(g.dimension(), 0);
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        if (c.edges[i] >= g.edges().size()) {
            return false;
        }
        const WeightedEdge& e = g.edges()[c.edges[i]];
        if (e.source != c.vertices[i] || e.target != c.vertices[i + 1]) {
            return false;
        }
        for (std::size_t k = 0; k < sum.size(); ++k) {
            sum[k] += e.weight[k];
        }
    }
    return sum == c.total;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

template <class Int>
Int parse_int(std::string_view tok, std::size_t line) {
    Int value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    }
    return value;
}

} // namespace

WeightedDigraph parse_digraph(std::string_view text) {
    std::optional<std::size_t> vertices;
    std::optional<std::size_t> dimension;
    std::vector<WeightedEdge> edges;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream fields(raw);
        std::vector<std::string> toks;
        for (std::string t; fields >> t;) {
            toks.push_back(t);
        }
        if (toks.empty() || toks[0].starts_with('#')) {
            continue;
        }
        if (toks[0] == "vertices") {
            if (vertices) {
                throw ParseError(line_no, "duplicate 'vertices' header");
            }
            if (toks.size() != 2) {
                throw ParseError(line_no, "'vertices' takes exactly one value");
            }
            vertices = parse_int<std::size_t>(toks[1], line_no);
            if (*vertices == 0) {
                throw ParseError(line_no, "'vertices' must be positive");
            }
        } else if (toks[0] == "edge") {
            if (!vertices) {
                throw ParseError(line_no, "'edge' before 'vertices'");
            }
            if (toks.size() < 4) {
                throw ParseError(line_no, "'edge' takes <u> <v> <w1> ... <wd>");
            }
            const std::size_t d = toks.size() - 3;
            if (dimension && *dimension != d) {
                throw ParseError(line_no, "edge weight dimension " + std::to_string(d) + " differs from " +
                                              std::to_string(*dimension));
            }
            dimension = d;
            WeightedEdge e;
            e.source = parse_int<Vertex>(toks[1], line_no);
            e.target = parse_int<Vertex>(toks[2], line_no);
            if (e.source >= *vertices || e.target >= *vertices) {
                throw ParseError(line_no, "edge endpoint out of range");
            }
            for (std::size_t i = 3; i < toks.size(); ++i) {
                e.weight.push_back(parse_int<std::int64_t>(toks[i], line_no));
            }
            edges.push_back(std::move(e));
        } else {
            throw ParseError(line_no, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!vertices) {
        throw ParseError(0, "missing 'vertices' header");
    }
    return WeightedDigraph(*vertices, dimension.value_or(1), std::move(edges));
}

std::string serialize_digraph(const WeightedDigraph& g) {
    std::ostringstream out;
    out << "vertices " << g.vertex_count() << '\n';
    for (const WeightedEdge& e : g.edges()) {
        out << "edge " << e.source << ' ' << e.target;
        for (std::int64_t w : e.weight) {
            out << ' ' << w;
        }
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Bounds

namespace {

BigInt ceil_sqrt(const BigInt& x) {
    BigInt r = boost::multiprecision::sqrt(x);
    if (r * r < x) {
        ++r;
    }
    return r;
}

BigInt pow_big(std::int64_t base, std::int64_t exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

} // namespace

BigInt lemma_bound(std::int64_t v, std::int64_t k, std::int64_t d) {
    if (v < 1 || d < 1 || k < 0) {
        throw PreconditionError("lemma bound needs v >= 1, k >= 0, d >= 1");
    }
    const std::int64_t k_eff = std::max<std::int64_t>(k, 1);
    const BigInt rational = pow_big(v, d + 1) * pow_big(k_eff, d) * (BigInt(v) * v + d);
    if (d % 2 == 0) {
        return rational * pow_big(d, d / 2);
    }
    // d^(d/2) is irrational for most odd d: ceil(P * sqrt(d^d)) = ceil(sqrt(P^2 d^d)).
    return ceil_sqrt(rational * rational * pow_big(d, d));
}

BigInt scalar_bound(std::int64_t v, std::int64_t k) {
    if (v < 1 || k < 0) {
        throw PreconditionError("scalar bound needs v >= 1, k >= 0");
    }
    return BigInt(2) * std::max<std::int64_t>(k, 1) * BigInt(v) * v;
}

BigInt power_length_bound(std::span<const std::int64_t> state_counts) {
    if (state_counts.size() < 2) {
        throw PreconditionError("power length bound needs at least two languages");
    }
    std::int64_t s = 1;
    for (std::int64_t c : state_counts) {
        if (c < 1) {
            throw PreconditionError("state counts must be positive");
        }
        s *= c + 1;
    }
    return lemma_bound(s, 1, static_cast<std::int64_t>(state_counts.size()) - 1);
}

// ---------------------------------------------------------------------------
// Zero-weight walks

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& key) const {
        return boost::hash_range(key.begin(), key.end());
    }
};

// Node key layout: [vertex, moved, w_0, ..., w_{d-1}].
class WalkSpace {
public:
    WalkSpace(const WeightedDigraph& g, Vertex anchor, const WalkOptions& options)
        : g_(g), anchor_(anchor), options_(options) {
        std::vector<std::int64_t> key(2 + g.dimension(), 0);
        key[0] = anchor;
        start_ = intern(std::move(key));
    }

    search::NodeId start() const { return start_; }
    std::size_t node_count() const { return keys_.size(); }
    const std::vector<std::int64_t>& key(search::NodeId id) const { return keys_[id]; }

    bool accepting(search::NodeId id) const {
        const auto& k = keys_[id];
        return k[0] == anchor_ && k[1] == 1 && std::all_of(k.begin() + 2, k.end(), [](std::int64_t w) { return w == 0; });
    }

    void expand(search::NodeId id, std::vector<search::Step>& out) {
        const std::vector<std::int64_t> current = keys_[id];
        for (std::size_t e : g_.out_edges(static_cast<Vertex>(current[0]))) {
            const WeightedEdge& edge = g_.edges()[e];
            std::vector<std::int64_t> next = current;
            next[0] = edge.target;
            bool inside = true;
            for (std::size_t k = 0; k < edge.weight.size(); ++k) {
                next[2 + k] += edge.weight[k];
                if (next[2 + k] > options_.clip || next[2 + k] < -options_.clip) {
                    inside = false;
                }
            }
            if (!inside) {
                continue;
            }
            Symbol label = kEpsilon;
            if (options_.every_edge_is_step) {
                label = 0;
            } else {
                label = edge.label;
            }
            if (label != kEpsilon) {
                next[1] = 1;
            }
            out.push_back({label, intern(std::move(next)), static_cast<std::uint32_t>(e)});
        }
    }

private:
    search::NodeId intern(std::vector<std::int64_t> key) {
        auto it = index_.find(key);
        if (it != index_.end()) {
            return it->second;
        }
        const auto id = static_cast<search::NodeId>(keys_.size());
        index_.emplace(key, id);
        keys_.push_back(std::move(key));
        return id;
    }

    const WeightedDigraph& g_;
    Vertex anchor_;
    WalkOptions options_;
    search::NodeId start_ = 0;
    std::vector<std::vector<std::int64_t>> keys_;
    std::unordered_map<std::vector<std::int64_t>, search::NodeId, KeyHash> index_;
};

} // namespace

ZeroWalkOutcome zero_walk_search(const WeightedDigraph& g, Vertex anchor, const WalkOptions& options) {
    if (anchor >= g.vertex_count()) {
        throw PreconditionError("anchor vertex out of range");
    }
    WalkSpace space(g, anchor, options);
    search::Limits limits;
    limits.max_symbols = options.max_steps;
    limits.max_nodes = options.max_nodes;
    auto found = search::shortest_word(space, limits);

    ZeroWalkOutcome outcome;
    outcome.exhaustive = found.exhaustive;
    if (!found.path) {
        return outcome;
    }
    ZeroWalk walk;
    for (search::NodeId id : found.path->nodes) {
        walk.cycle.vertices.push_back(static_cast<Vertex>(space.key(id)[0]));
    }
    walk.cycle.total.assign(g.dimension(), 0);
    for (std::uint32_t e : found.path->tags) {
        walk.cycle.edges.push_back(e);
        for (std::size_t k = 0; k < g.dimension(); ++k) {
            walk.cycle.total[k] += g.edges()[e].weight[k];
        }
    }
    if (!options.every_edge_is_step) {
        walk.word = std::move(found.path->word);
    }
    outcome.walk = std::move(walk);
    return outcome;
}

std::optional<CycleWitness> find_zero_cycle(const WeightedDigraph& g, std::optional<Vertex> anchor,
                                            std::size_t max_len) {
    if (max_len < 1) {
        throw PreconditionError("max_len must be at least 1");
    }
    WalkOptions options;
    options.clip = g.max_weight() * static_cast<std::int64_t>(max_len);
    options.max_steps = max_len;
    options.every_edge_is_step = true;

    std::optional<CycleWitness> best;
    auto consider = [&](Vertex v) {
        auto outcome = zero_walk_search(g, v, options);
        if (outcome.walk && (!best || outcome.walk->cycle.length() < best->length())) {
            best = std::move(outcome.walk->cycle);
        }
    };
    if (anchor) {
        consider(*anchor);
    } else {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            consider(v);
        }
    }
    return best;
}

} // namespace lss
