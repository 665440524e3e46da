#include "lss/power.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lss/closure.hpp"
#include "lss/error.hpp"

namespace lss {

std::string_view stack_symbol_name(StackSymbol s) { return s == StackSymbol::Z0 ? "Z0" : "C"; }

// ---------------------------------------------------------------------------
// PDA

void Pda::validate() const {
    if (state_count == 0 || start >= state_count) {
        throw PreconditionError("PDA start state out of range");
    }
    for (State a : accepting) {
        if (a >= state_count) {
            throw PreconditionError("PDA accepting state out of range");
        }
    }
    for (const PdaTransition& t : transitions) {
        if (t.from >= state_count || t.to >= state_count) {
            throw PreconditionError("PDA transition state out of range");
        }
        if (t.input != kEpsilon && t.input >= alphabet.size()) {
            throw PreconditionError("PDA transition symbol out of range");
        }
        if (t.push.size() > 2) {
            throw PreconditionError("PDA transition pushes more than two symbols");
        }
        for (std::size_t i = 0; i < t.push.size(); ++i) {
            const bool bottom = i + 1 == t.push.size() && t.top == StackSymbol::Z0;
            if ((t.push[i] == StackSymbol::Z0) != bottom) {
                throw PreconditionError("Z0 must stay at the bottom of the stack");
            }
        }
        if (t.top == StackSymbol::Z0 && t.push.empty() && acceptance != PdaAcceptance::EmptyStack) {
            throw PreconditionError("only empty-stack PDAs may pop Z0");
        }
    }
}

namespace {

enum Sign : State { kBalanced = 0, kAhead = 1, kBehind = 2 };

void require_epsilon_free_pair(const Automaton& a1, const Automaton& a2) {
    if (!(a1.alphabet() == a2.alphabet())) {
        throw PreconditionError("automata are over different alphabets");
    }
    if (a1.has_epsilon() || a2.has_epsilon()) {
        throw PreconditionError("the counter PDA needs epsilon-free automata");
    }
}

} // namespace

Pda build_pda(const Automaton& a1, const Automaton& a2) {
    require_epsilon_free_pair(a1, a2);
    const std::size_t s2 = a2.state_count();
    auto id = [&](State p, State q, State sign) { return static_cast<State>((p * s2 + q) * 3 + sign); };

    Pda pda;
    pda.alphabet = a1.alphabet();
    pda.state_count = a1.state_count() * s2 * 3;
    pda.start = id(a1.start(), a2.start(), kBalanced);
    pda.acceptance = PdaAcceptance::FinalStateBottom;

    using enum StackSymbol;
    for (State p = 0; p < a1.state_count(); ++p) {
        for (State q = 0; q < s2; ++q) {
            if (a1.is_final(p) && a2.is_final(q)) {
                pda.accepting.push_back(id(p, q, kBalanced));
            }
            for (State sign : {kBalanced, kAhead, kBehind}) {
                // The sign is kBalanced exactly when Z0 is on top.
                const StackSymbol top = sign == kBalanced ? Z0 : C;
                for (const Arc& x : a1.arcs(p)) {
                    for (const Arc& y : a2.arcs(q)) {
                        if (x.label == y.label) {
                            pda.transitions.push_back({id(p, q, sign), x.label, top, id(x.to, y.to, sign), {top}});
                        }
                    }
                }
                // Close a factor of machine one: counter moves towards "ahead".
                if (a1.is_final(p)) {
                    const State p0 = a1.start();
                    if (sign == kBalanced) {
                        pda.transitions.push_back({id(p, q, sign), kEpsilon, Z0, id(p0, q, kAhead), {C, Z0}});
                    } else if (sign == kAhead) {
                        pda.transitions.push_back({id(p, q, sign), kEpsilon, C, id(p0, q, kAhead), {C, C}});
                    } else {
                        pda.transitions.push_back({id(p, q, sign), kEpsilon, C, id(p0, q, kBehind), {}});
                        pda.transitions.push_back({id(p, q, sign), kEpsilon, C, id(p0, q, kBalanced), {}});
                    }
                }
                // Close a factor of machine two: counter moves towards "behind".
                if (a2.is_final(q)) {
                    const State q0 = a2.start();
                    if (sign == kBalanced) {
                        pda.transitions.push_back({id(p, q, sign), kEpsilon, Z0, id(p, q0, kBehind), {C, Z0}});
                    } else if (sign == kBehind) {
                        pda.transitions.push_back({id(p, q, sign), kEpsilon, C, id(p, q0, kBehind), {C, C}});
                    } else {
                        pda.transitions.push_back({id(p, q, sign), kEpsilon, C, id(p, q0, kAhead), {}});
                        pda.transitions.push_back({id(p, q, sign), kEpsilon, C, id(p, q0, kBalanced), {}});
                    }
                }
            }
        }
    }
    pda.validate();
    return pda;
}

Pda normalize_to_empty_stack(const Pda& pda) {
    if (pda.acceptance == PdaAcceptance::EmptyStack) {
        return pda;
    }
    Pda out = pda;
    const auto drain = static_cast<State>(pda.state_count);
    out.state_count = pda.state_count + 1;
    out.acceptance = PdaAcceptance::EmptyStack;
    for (State a : pda.accepting) {
        out.transitions.push_back({a, kEpsilon, StackSymbol::Z0, drain, {}});
    }
    out.accepting.clear();
    out.validate();
    return out;
}

bool pda_accepts(const Pda& pda, const Word& x, std::size_t max_stack) {
    struct Config {
        State state;
        std::size_t pos;
        std::vector<StackSymbol> stack; // back() is the top

        auto operator<=>(const Config&) const = default;
    };
    std::set<Config> seen;
    std::deque<Config> queue;
    Config init{pda.start, 0, {StackSymbol::Z0}};
    seen.insert(init);
    queue.push_back(std::move(init));

    while (!queue.empty()) {
        Config c = std::move(queue.front());
        queue.pop_front();
        if (c.pos == x.size()) {
            if (pda.acceptance == PdaAcceptance::EmptyStack && c.stack.empty()) {
                return true;
            }
            if (pda.acceptance == PdaAcceptance::FinalStateBottom && c.stack.size() == 1 &&
                std::find(pda.accepting.begin(), pda.accepting.end(), c.state) != pda.accepting.end()) {
                return true;
            }
        }
        if (c.stack.empty()) {
            continue;
        }
        for (const PdaTransition& t : pda.transitions) {
            if (t.from != c.state || t.top != c.stack.back()) {
                continue;
            }
            std::size_t pos = c.pos;
            if (t.input != kEpsilon) {
                if (pos >= x.size() || x[pos] != t.input) {
                    continue;
                }
                ++pos;
            }
            Config next{t.to, pos, c.stack};
            next.stack.pop_back();
            for (auto it = t.push.rbegin(); it != t.push.rend(); ++it) {
                next.stack.push_back(*it);
            }
            if (next.stack.size() > max_stack) {
                continue;
            }
            if (seen.insert(next).second) {
                queue.push_back(std::move(next));
            }
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Grammars

std::uint32_t Cfg::add_nonterminal(std::string name) {
    nonterminals_.push_back(std::move(name));
    return static_cast<std::uint32_t>(nonterminals_.size() - 1);
}

void Cfg::add_production(std::uint32_t head, std::vector<GrammarSymbol> body) {
    if (head >= nonterminals_.size()) {
        throw PreconditionError("production head is not a declared nonterminal");
    }
    for (const GrammarSymbol& s : body) {
        if (s.terminal ? s.id >= terminals_.size() : s.id >= nonterminals_.size()) {
            throw PreconditionError("production body uses an undeclared symbol");
        }
    }
    productions_.push_back({head, std::move(body)});
}

std::string Cfg::dump() const {
    std::ostringstream out;
    for (const Production& p : productions_) {
        out << nonterminals_[p.head] << " ->";
        for (const GrammarSymbol& s : p.body) {
            out << ' ' << (s.terminal ? terminals_.token(s.id) : nonterminals_[s.id]);
        }
        out << '\n';
    }
    return out.str();
}

Cfg pda_to_cfg(const Pda& pda) {
    if (pda.acceptance != PdaAcceptance::EmptyStack) {
        throw PreconditionError("triple construction needs an empty-stack PDA");
    }
    pda.validate();
    const std::size_t n = pda.state_count;

    Cfg g(pda.alphabet);
    g.set_start(g.add_nonterminal("S"));
    std::map<std::tuple<State, StackSymbol, State>, std::uint32_t> triples;
    auto triple = [&](State q, StackSymbol x, State p) {
        auto [it, inserted] = triples.try_emplace({q, x, p}, 0);
        if (inserted) {
            it->second = g.add_nonterminal("[" + std::to_string(q) + "," + std::string(stack_symbol_name(x)) + "," +
                                           std::to_string(p) + "]");
        }
        return GrammarSymbol{false, it->second};
    };

    for (State p = 0; p < n; ++p) {
        g.add_production(g.start(), {triple(pda.start, StackSymbol::Z0, p)});
    }
    for (const PdaTransition& t : pda.transitions) {
        std::vector<GrammarSymbol> prefix;
        if (t.input != kEpsilon) {
            prefix.push_back({true, t.input});
        }
        switch (t.push.size()) {
        case 0:
            g.add_production(triple(t.from, t.top, t.to).id, prefix);
            break;
        case 1:
            for (State p1 = 0; p1 < n; ++p1) {
                auto body = prefix;
                body.push_back(triple(t.to, t.push[0], p1));
                g.add_production(triple(t.from, t.top, p1).id, std::move(body));
            }
            break;
        case 2:
            for (State p1 = 0; p1 < n; ++p1) {
                for (State p2 = 0; p2 < n; ++p2) {
                    auto body = prefix;
                    body.push_back(triple(t.to, t.push[0], p1));
                    body.push_back(triple(p1, t.push[1], p2));
                    g.add_production(triple(t.from, t.top, p2).id, std::move(body));
                }
            }
            break;
        default:
            throw PreconditionError("PDA transition pushes more than two symbols");
        }
    }
    return g;
}

std::vector<bool> generating_nonterminals(const Cfg& g) {
    const auto& prods = g.productions();
    std::vector<bool> generating(g.nonterminals().size(), false);
    std::vector<std::size_t> pending(prods.size(), 0);
    std::vector<std::vector<std::size_t>> uses(g.nonterminals().size());
    std::vector<std::uint32_t> work;

    for (std::size_t i = 0; i < prods.size(); ++i) {
        for (const GrammarSymbol& s : prods[i].body) {
            if (!s.terminal) {
                ++pending[i];
                uses[s.id].push_back(i);
            }
        }
        if (pending[i] == 0 && !generating[prods[i].head]) {
            generating[prods[i].head] = true;
            work.push_back(prods[i].head);
        }
    }
    while (!work.empty()) {
        const std::uint32_t a = work.back();
        work.pop_back();
        for (std::size_t i : uses[a]) {
            if (--pending[i] == 0 && !generating[prods[i].head]) {
                generating[prods[i].head] = true;
                work.push_back(prods[i].head);
            }
        }
    }
    return generating;
}

bool cfg_is_empty(const Cfg& g) {
    if (g.nonterminals().empty()) {
        return true;
    }
    return !generating_nonterminals(g)[g.start()];
}

Cfg power_grammar(const Automaton& a1, const Automaton& a2) {
    return pda_to_cfg(normalize_to_empty_stack(build_pda(a1, a2)));
}

// ---------------------------------------------------------------------------
// Counter product

namespace {

void require_power_inputs(std::span<const Automaton> automata) {
    if (automata.size() < 2) {
        throw PreconditionError("equal-power problems need at least two automata");
    }
    for (const Automaton& a : automata) {
        if (!(a.alphabet() == automata[0].alphabet())) {
            throw PreconditionError("automata are over different alphabets");
        }
    }
}

bool all_accept_empty_word(std::span<const Automaton> automata) {
    return std::all_of(automata.begin(), automata.end(), [](const Automaton& a) { return accepts(a, {}); });
}

BalancedWitness empty_word_witness(std::size_t d) {
    return BalancedWitness{{}, 1, std::vector<std::vector<std::size_t>>(d, std::vector<std::size_t>{0})};
}

} // namespace

CounterProduct build_counter_product(std::span<const Automaton> automata) {
    require_power_inputs(automata);
    const std::size_t d = automata.size();

    std::vector<Automaton> machines;
    for (const Automaton& a : automata) {
        machines.push_back(star_normalized(a));
    }

    std::map<std::vector<State>, Vertex> index;
    std::vector<std::vector<State>> tuples;
    auto intern = [&](std::vector<State> t) {
        auto [it, inserted] = index.try_emplace(t, static_cast<Vertex>(tuples.size()));
        if (inserted) {
            tuples.push_back(std::move(t));
        }
        return it->second;
    };
    std::vector<State> starts;
    for (const Automaton& m : machines) {
        starts.push_back(m.start());
    }
    intern(starts);

    std::vector<WeightedEdge> edges;
    std::vector<int> factor_machine;
    const std::size_t sigma = machines[0].alphabet().size();
    const WeightVector zero(d - 1, 0);

    for (std::size_t v = 0; v < tuples.size(); ++v) {
        // Symbol edges: every machine reads the symbol.
        for (Symbol a = 0; a < sigma; ++a) {
            std::vector<std::vector<State>> options(d);
            bool possible = true;
            for (std::size_t i = 0; i < d && possible; ++i) {
                for (const Arc& arc : machines[i].arcs(tuples[v][i])) {
                    if (arc.label == a) {
                        options[i].push_back(arc.to);
                    }
                }
                possible = !options[i].empty();
            }
            if (!possible) {
                continue;
            }
            std::vector<std::size_t> choice(d, 0);
            while (true) {
                std::vector<State> next(d);
                for (std::size_t i = 0; i < d; ++i) {
                    next[i] = options[i][choice[i]];
                }
                const Vertex to = intern(std::move(next));
                edges.push_back({static_cast<Vertex>(v), to, zero, a});
                factor_machine.push_back(-1);
                std::size_t i = 0;
                while (i < d && ++choice[i] == options[i].size()) {
                    choice[i++] = 0;
                }
                if (i == d) {
                    break;
                }
            }
        }
        // Epsilon edges: exactly one machine moves. Arcs into a start close a factor.
        for (std::size_t i = 0; i < d; ++i) {
            for (const Arc& arc : machines[i].arcs(tuples[v][i])) {
                if (arc.label != kEpsilon) {
                    continue;
                }
                std::vector<State> next = tuples[v];
                next[i] = arc.to;
                WeightVector w = zero;
                int closes = -1;
                if (arc.to == machines[i].start()) {
                    closes = static_cast<int>(i);
                    if (i == 0) {
                        std::fill(w.begin(), w.end(), 1);
                    } else {
                        w[i - 1] = -1;
                    }
                }
                const Vertex to = intern(std::move(next));
                edges.push_back({static_cast<Vertex>(v), to, std::move(w), kEpsilon});
                factor_machine.push_back(closes);
            }
        }
    }

    WeightedDigraph graph(tuples.size(), d - 1, std::move(edges));
    return CounterProduct{std::move(graph), 0, std::move(machines), std::move(tuples), std::move(factor_machine)};
}

bool validate_balanced(std::span<const Automaton> automata, const BalancedWitness& w) {
    if (w.k == 0 || w.factor_ends.size() != automata.size()) {
        return false;
    }
    for (std::size_t i = 0; i < automata.size(); ++i) {
        const auto& ends = w.factor_ends[i];
        if (ends.size() != w.k || ends.back() != w.word.size()) {
            return false;
        }
        std::size_t begin = 0;
        for (std::size_t end : ends) {
            if (end < begin || end > w.word.size()) {
                return false;
            }
            const Word factor(w.word.begin() + static_cast<std::ptrdiff_t>(begin),
                              w.word.begin() + static_cast<std::ptrdiff_t>(end));
            if (!accepts(automata[i], factor)) {
                return false;
            }
            begin = end;
        }
    }
    return true;
}

std::int64_t two_language_clip(std::span<const Automaton> automata) {
    const CounterProduct product = build_counter_product(automata);
    const auto s = static_cast<std::int64_t>(product.graph.vertex_count());
    return static_cast<std::int64_t>(scalar_bound(s, 1));
}

namespace {

CounterSearchResult search_product(const CounterProduct& product, std::size_t d, std::int64_t clip,
                                   std::optional<std::size_t> max_symbols) {
    WalkOptions options;
    options.clip = clip;
    options.max_steps = max_symbols;
    options.every_edge_is_step = false;
    const ZeroWalkOutcome outcome = zero_walk_search(product.graph, product.start, options);

    CounterSearchResult result;
    result.exhaustive = outcome.exhaustive;
    if (!outcome.walk) {
        return result;
    }
    BalancedWitness w;
    w.word = outcome.walk->word;
    w.factor_ends.assign(d, {});
    std::size_t position = 0;
    for (std::size_t e : outcome.walk->cycle.edges) {
        const WeightedEdge& edge = product.graph.edges()[e];
        if (edge.label != kEpsilon) {
            ++position;
        } else if (const int m = product.factor_machine[e]; m >= 0) {
            w.factor_ends[static_cast<std::size_t>(m)].push_back(position);
        }
    }
    w.k = w.factor_ends[0].size();
    result.witness = std::move(w);
    return result;
}

} // namespace

CounterSearchResult counter_search(std::span<const Automaton> automata, std::int64_t clip,
                                   std::optional<std::size_t> max_symbols) {
    require_power_inputs(automata);
    if (all_accept_empty_word(automata)) {
        return {empty_word_witness(automata.size()), true};
    }
    const CounterProduct product = build_counter_product(automata);
    CounterSearchResult result = search_product(product, automata.size(), clip, max_symbols);
    if (result.witness && !validate_balanced(automata, *result.witness)) {
        throw std::logic_error("counter search produced an invalid factorisation");
    }
    return result;
}

namespace {

struct Plan {
    std::int64_t clip;
    std::optional<std::size_t> max_symbols;
    std::optional<std::int64_t> cap;
    std::optional<BigInt> sound;
};

Plan plan_search(std::span<const Automaton> automata, std::optional<std::int64_t> cap) {
    if (automata.size() == 2) {
        return {two_language_clip(automata), std::nullopt, std::nullopt, std::nullopt};
    }
    std::vector<std::int64_t> counts;
    for (const Automaton& a : automata) {
        counts.push_back(static_cast<std::int64_t>(a.state_count()));
    }
    const BigInt sound = power_length_bound(counts);
    if (!cap) {
        if (sound > kPowerSearchBudget) {
            throw PreconditionError("the sound length bound " + sound.str() + " exceeds the search budget " +
                                    std::to_string(kPowerSearchBudget) + "; pass an explicit cap");
        }
        cap = static_cast<std::int64_t>(sound);
    }
    if (*cap < 1) {
        throw PreconditionError("cap must be positive");
    }
    return {*cap, static_cast<std::size_t>(*cap), cap, sound};
}

} // namespace

std::optional<BalancedWitness> shortest_balanced_string(std::span<const Automaton> automata,
                                                        std::optional<std::int64_t> cap) {
    require_power_inputs(automata);
    const Plan plan = plan_search(automata, cap);
    return counter_search(automata, plan.clip, plan.max_symbols).witness;
}

PowerVerdict decide_power_nonempty(std::span<const Automaton> automata, std::optional<std::int64_t> cap) {
    require_power_inputs(automata);
    PowerVerdict verdict;
    if (all_accept_empty_word(automata)) {
        verdict.status = PowerStatus::Nonempty;
        verdict.witness = empty_word_witness(automata.size());
        return verdict;
    }

    const Plan plan = plan_search(automata, cap);
    verdict.cap = plan.cap;
    verdict.sound_bound = plan.sound;
    const CounterSearchResult found = counter_search(automata, plan.clip, plan.max_symbols);

    if (automata.size() == 2) {
        const bool grammar_empty = cfg_is_empty(power_grammar(automata[0], automata[1]));
        if (grammar_empty == found.witness.has_value()) {
            throw std::logic_error("grammar route and counter search disagree on emptiness");
        }
    }

    if (found.witness) {
        verdict.status = PowerStatus::Nonempty;
        verdict.witness = found.witness;
    } else if (automata.size() == 2 || BigInt(*plan.cap) >= *plan.sound) {
        verdict.status = PowerStatus::Empty;
    } else {
        verdict.status = PowerStatus::EmptyWithinCap;
    }
    return verdict;
}

} // namespace lss
