#include "lss/witness.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "lss/closure.hpp"
#include "lss/error.hpp"
#include "lss/power.hpp"

namespace lss {

std::string_view family_name(WitnessFamily f) {
    switch (f) {
    case WitnessFamily::Intersect: return "intersect";
    case WitnessFamily::UnaryIntersect: return "unary-intersect";
    case WitnessFamily::Plus: return "plus";
    case WitnessFamily::UnaryPlus: return "unary-plus";
    case WitnessFamily::UnaryFinite: return "unary-finite";
    }
    return "?";
}

WitnessFamily parse_family(std::string_view name) {
    for (WitnessFamily f : {WitnessFamily::Intersect, WitnessFamily::UnaryIntersect, WitnessFamily::Plus,
                            WitnessFamily::UnaryPlus, WitnessFamily::UnaryFinite}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    throw PreconditionError("unknown witness family '" + std::string(name) + "'");
}

namespace {

void require_positive(int m, int n) {
    if (m < 1 || n < 1) {
        throw PreconditionError("witness sizes must be positive");
    }
}

void append(Word& w, Symbol s, int count) {
    for (int i = 0; i < count; ++i) {
        w.push_back(s);
    }
}

/// (a^i)+ on i + 1 states.
Automaton unary_plus_dfa(int i) {
    std::vector<Transition> t;
    for (int q = 0; q < i; ++q) {
        t.push_back({static_cast<State>(q), 0, static_cast<State>(q + 1)});
    }
    t.push_back({static_cast<State>(i), 0, 1});
    return Automaton(unary_alphabet(), static_cast<std::size_t>(i) + 1, 0, {static_cast<State>(i)}, std::move(t));
}

/// (a^j)* on j states.
Automaton unary_star_dfa(int j) { return unary_dfa(0, j, {0}); }

} // namespace

Automaton mod_counter_dfa(int m) {
    if (m < 1) {
        throw PreconditionError("mod_counter_dfa needs m >= 1");
    }
    std::vector<Transition> t;
    for (int a = 0; a < m; ++a) {
        for (Symbol c : {Symbol{0}, Symbol{1}}) {
            t.push_back({static_cast<State>(a), c, static_cast<State>((a + static_cast<int>(c)) % m)});
        }
    }
    return Automaton(binary_alphabet(), static_cast<std::size_t>(m), 0, {0}, std::move(t));
}

Automaton tail_dfa(int m, int n) {
    if (m < 1 || m > n) {
        throw PreconditionError("tail_dfa needs 1 <= m <= n");
    }
    std::vector<Transition> t;
    for (int a = 0; a < n; ++a) {
        const auto q = static_cast<State>(a);
        if (a < m - 1) {
            t.push_back({q, 0, q});
            t.push_back({q, 1, static_cast<State>(a + 1)});
        } else {
            t.push_back({q, 0, static_cast<State>((a + 1) % n)});
            t.push_back({q, 1, 0});
        }
    }
    return Automaton(binary_alphabet(), static_cast<std::size_t>(n), 0, {static_cast<State>(n - 1)}, std::move(t));
}

Automaton unary_dfa(int tail, int cycle, std::vector<State> finals) {
    if (tail < 0 || cycle < 1) {
        throw PreconditionError("unary_dfa needs tail >= 0 and cycle >= 1");
    }
    const int states = tail + cycle;
    std::vector<Transition> t;
    for (int q = 0; q + 1 < states; ++q) {
        t.push_back({static_cast<State>(q), 0, static_cast<State>(q + 1)});
    }
    t.push_back({static_cast<State>(states - 1), 0, static_cast<State>(tail)});
    return Automaton(unary_alphabet(), static_cast<std::size_t>(states), 0, std::move(finals), std::move(t));
}

Automaton unary_finite_dfa(const UnaryFiniteLang& lang) {
    const int top = lang.max();
    std::vector<Transition> t;
    for (int q = 0; q < top; ++q) {
        t.push_back({static_cast<State>(q), 0, static_cast<State>(q + 1)});
    }
    std::vector<State> finals;
    for (int e : lang.exponents()) {
        finals.push_back(static_cast<State>(e));
    }
    return Automaton(unary_alphabet(), static_cast<std::size_t>(top) + 1, 0, std::move(finals), std::move(t));
}

std::size_t certify(WitnessBundle& bundle) {
    const auto& ms = bundle.machines;
    if (ms.size() != 2) {
        throw PreconditionError("witness bundles hold two machines");
    }
    LssResult r;
    switch (bundle.family) {
    case WitnessFamily::Intersect:
    case WitnessFamily::UnaryIntersect:
        r = shortest_string(product_intersection(ms[0], ms[1]));
        break;
    case WitnessFamily::Plus:
    case WitnessFamily::UnaryPlus:
        r = plus_intersection_lss(ms[0], ms[1]);
        break;
    case WitnessFamily::UnaryFinite: {
        const auto w = shortest_balanced_string(ms);
        if (!w) {
            throw Error("unary-finite witness has an empty equal-power language");
        }
        bundle.certified_lss = w->word.size();
        bundle.certified_k = unary_power_decide(bundle.languages.at(0), bundle.languages.at(1));
        return bundle.certified_lss;
    }
    }
    if (!r.found()) {
        throw Error(std::string("witness family ") + std::string(family_name(bundle.family)) +
                    " produced an empty language");
    }
    bundle.certified_lss = r.length();
    return bundle.certified_lss;
}

WitnessBundle intersect_witness(int m, int n) {
    require_positive(m, n);
    const int small = std::min(m, n);
    const int large = std::max(m, n);
    WitnessBundle b;
    b.family = WitnessFamily::Intersect;
    if (m <= n) {
        b.machines = {mod_counter_dfa(small), tail_dfa(small, large)};
    } else {
        b.machines = {tail_dfa(small, large), mod_counter_dfa(small)};
    }
    b.claimed_lss = static_cast<std::size_t>(m) * static_cast<std::size_t>(n) - 1;
    // (1^{s-1} 0^{l-s+1})^{s-1} 1^{s-1} 0^{l-s}
    Word w;
    for (int r = 0; r < small - 1; ++r) {
        append(w, 1, small - 1);
        append(w, 0, large - small + 1);
    }
    append(w, 1, small - 1);
    append(w, 0, large - small);
    b.claimed_word = std::move(w);
    certify(b);
    return b;
}

namespace kernels {

std::pair<Automaton, Automaton> unary_pair(int m, int n, std::size_t index) {
    const auto um = static_cast<std::size_t>(m);
    const auto un = static_cast<std::size_t>(n);
    const std::size_t f2 = index % un;
    index /= un;
    const std::size_t t2 = index % un;
    index /= un;
    const std::size_t f1 = index % um;
    const std::size_t t1 = index / um;
    return {unary_dfa(static_cast<int>(t1), m - static_cast<int>(t1), {static_cast<State>(f1)}),
            unary_dfa(static_cast<int>(t2), n - static_cast<int>(t2), {static_cast<State>(f2)})};
}

std::int64_t unary_pair_lss(int m, int n, std::size_t index) {
    const auto [a, b] = unary_pair(m, n, index);
    const LssResult r = shortest_string(product_intersection(a, b));
    return r.found() ? static_cast<std::int64_t>(r.length()) : -1;
}

std::optional<std::size_t> first_unary_pair_serial(int m, int n, std::int64_t target) {
    require_positive(m, n);
    const std::size_t total = static_cast<std::size_t>(m) * m * n * n;
    for (std::size_t i = 0; i < total; ++i) {
        if (unary_pair_lss(m, n, i) == target) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> first_unary_pair(int m, int n, std::int64_t target) {
    require_positive(m, n);
    const auto total = static_cast<std::int64_t>(m) * m * n * n;
    std::int64_t first = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first)
    for (std::int64_t i = 0; i < total; ++i) {
        if (i < first && unary_pair_lss(m, n, static_cast<std::size_t>(i)) == target) {
            first = i;
        }
    }
    if (first == std::numeric_limits<std::int64_t>::max()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(first);
}

} // namespace kernels

WitnessBundle unary_intersect_witness(int m, int n) {
    require_positive(m, n);
    const std::int64_t target = big_f(m, n) - 1;
    const auto index = kernels::first_unary_pair(m, n, target);
    if (!index) {
        throw Error("no unary DFA pair of sizes (" + std::to_string(m) + "," + std::to_string(n) +
                    ") attains F(m,n)-1 = " + std::to_string(target));
    }
    auto [a, b] = kernels::unary_pair(m, n, *index);
    WitnessBundle bundle;
    bundle.family = WitnessFamily::UnaryIntersect;
    bundle.machines = {std::move(a), std::move(b)};
    bundle.claimed_lss = static_cast<std::size_t>(target);
    bundle.claimed_word = Word(static_cast<std::size_t>(target), 0);
    certify(bundle);
    return bundle;
}

WitnessBundle plus_intersect_witness(int m, int n) {
    require_positive(m, n);
    const int small = std::min(m, n);
    const int large = std::max(m, n);
    WitnessBundle b;
    b.family = WitnessFamily::Plus;
    if (m <= n) {
        b.machines = {mod_counter_dfa(small), tail_dfa(small, large)};
    } else {
        b.machines = {tail_dfa(small, large), mod_counter_dfa(small)};
    }
    b.claimed_lss = static_cast<std::size_t>(small) * static_cast<std::size_t>(large - 1);
    // (1^{s-1} 0^{l-s})^s : s factors of the tail machine, each closed by the plus epsilon arc.
    Word w;
    for (int r = 0; r < small; ++r) {
        append(w, 1, small - 1);
        append(w, 0, large - small);
    }
    b.claimed_word = std::move(w);
    certify(b);
    return b;
}

WitnessBundle unary_plus_witness(int m, int n) {
    require_positive(m, n);
    WitnessBundle b;
    b.family = WitnessFamily::UnaryPlus;
    const auto arg = big_g_prime_argmax(m, n);
    if (!arg) {
        // m = n = 1: both languages a*, the intersection of the closures contains the empty word.
        b.machines = {unary_star_dfa(1), unary_star_dfa(1)};
        b.claimed_lss = 0;
        b.claimed_word = Word{};
        certify(b);
        return b;
    }
    const auto [i, j] = *arg;
    if (i < m) {
        b.machines = {unary_plus_dfa(i), unary_star_dfa(j)};
    } else {
        b.machines = {unary_star_dfa(i), unary_plus_dfa(j)};
    }
    b.claimed_lss = static_cast<std::size_t>(std::lcm(i, j));
    b.claimed_word = Word(b.claimed_lss, 0);
    certify(b);
    return b;
}

WitnessBundle unary_finite_witness(int n) {
    if (n < 2) {
        throw PreconditionError("unary_finite_witness needs n >= 2");
    }
    WitnessBundle b;
    b.family = WitnessFamily::UnaryFinite;
    b.languages = {UnaryFiniteLang({1, n}), UnaryFiniteLang({n - 1})};
    b.machines = {unary_finite_dfa(b.languages[0]), unary_finite_dfa(b.languages[1])};
    b.claimed_k = n - 1;
    b.claimed_lss = static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1);
    b.claimed_word = Word(b.claimed_lss, 0);
    certify(b);
    return b;
}

} // namespace lss
