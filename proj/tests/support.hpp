#ifndef LSS_TESTS_SUPPORT_HPP
#define LSS_TESTS_SUPPORT_HPP

// Random instance generators and fixed example machines shared by the test binaries.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lss/automaton.hpp"
#include "lss/unary.hpp"
#include "lss/weighted.hpp"

namespace lss::testing {

using Rng = std::mt19937_64;

inline Alphabet letters(std::size_t n) {
    std::vector<std::string> t;
    for (std::size_t i = 0; i < n; ++i) {
        t.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    return Alphabet(std::move(t));
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Complete DFA with `n` states over `alphabet`, random transitions, each state final with probability p.
inline Automaton random_dfa(Rng& rng, std::size_t n, const Alphabet& alphabet, double p = 0.35) {
    std::vector<Transition> t;
    std::vector<State> finals;
    for (State q = 0; q < n; ++q) {
        for (Symbol s = 0; s < alphabet.size(); ++s) {
            t.push_back({q, s, static_cast<State>(uniform(rng, 0, static_cast<int>(n) - 1))});
        }
        if (coin(rng, p)) {
            finals.push_back(q);
        }
    }
    return Automaton(alphabet, n, 0, std::move(finals), std::move(t));
}

/// NFA with `n` states; every possible (p, s, q) arc present with probability density,
/// every possible epsilon arc with probability eps.
inline Automaton random_nfa(Rng& rng, std::size_t n, const Alphabet& alphabet, double density = 0.3,
                            double eps = 0.0, double p = 0.35) {
    std::vector<Transition> t;
    std::vector<State> finals;
    for (State a = 0; a < n; ++a) {
        for (State b = 0; b < n; ++b) {
            for (Symbol s = 0; s < alphabet.size(); ++s) {
                if (coin(rng, density)) {
                    t.push_back({a, s, b});
                }
            }
            if (eps > 0 && a != b && coin(rng, eps)) {
                t.push_back({a, kEpsilon, b});
            }
        }
        if (coin(rng, p)) {
            finals.push_back(a);
        }
    }
    return Automaton(alphabet, n, 0, std::move(finals), std::move(t));
}

/// Complete unary DFA of exactly n states: tail of random length, then a cycle, random finals.
inline Automaton random_unary_dfa(Rng& rng, int n) {
    const int tail = uniform(rng, 0, n - 1);
    std::vector<Transition> t;
    for (int q = 0; q + 1 < n; ++q) {
        t.push_back({static_cast<State>(q), 0, static_cast<State>(q + 1)});
    }
    t.push_back({static_cast<State>(n - 1), 0, static_cast<State>(tail)});
    std::vector<State> finals;
    for (int q = 0; q < n; ++q) {
        if (coin(rng, 0.3)) {
            finals.push_back(static_cast<State>(q));
        }
    }
    if (finals.empty()) {
        finals.push_back(static_cast<State>(uniform(rng, 0, n - 1)));
    }
    return Automaton(unary_alphabet(), static_cast<std::size_t>(n), 0, std::move(finals), std::move(t));
}

inline UnaryFiniteLang random_exponents(Rng& rng, int max_value) {
    std::set<int> s;
    const int size = uniform(rng, 1, 3);
    while (static_cast<int>(s.size()) < size) {
        s.insert(uniform(rng, 1, max_value));
    }
    return UnaryFiniteLang(std::move(s));
}

/// Digraph of the given dimension with random edges and weights in [-k, k].
inline WeightedDigraph random_digraph(Rng& rng, std::size_t v, std::size_t dimension, int k, double density = 0.35) {
    std::vector<WeightedEdge> edges;
    for (Vertex a = 0; a < v; ++a) {
        for (Vertex b = 0; b < v; ++b) {
            if (!coin(rng, density)) {
                continue;
            }
            WeightVector w(dimension);
            for (auto& c : w) {
                c = uniform(rng, -k, k);
            }
            edges.push_back({a, b, std::move(w)});
        }
    }
    return WeightedDigraph(v, dimension, std::move(edges));
}

/// Over `alphabet`, the 2-state NFA for (Σ \ {c})* c (Σ \ {c})*.
inline Automaton exactly_one(const Alphabet& alphabet, Symbol c) {
    std::vector<Transition> t;
    for (Symbol s = 0; s < alphabet.size(); ++s) {
        if (s == c) {
            t.push_back({0, s, 1});
        } else {
            t.push_back({0, s, 0});
            t.push_back({1, s, 1});
        }
    }
    return Automaton(alphabet, 2, 0, {1}, std::move(t));
}

/// Acceptor of exactly one word.
inline Automaton single_word(const Alphabet& alphabet, const Word& w) {
    std::vector<Transition> t;
    for (std::size_t i = 0; i < w.size(); ++i) {
        t.push_back({static_cast<State>(i), w[i], static_cast<State>(i + 1)});
    }
    return Automaton(alphabet, w.size() + 1, 0, {static_cast<State>(w.size())}, std::move(t));
}

/// Every word of length <= max_len over an alphabet of the given size, length-lex ordered.
inline std::vector<Word> all_words(std::size_t sigma, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (Symbol s = 0; s < sigma; ++s) {
                Word w = out[i];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        }
        begin = end;
    }
    return out;
}

} // namespace lss::testing

#endif
