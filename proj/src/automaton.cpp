#include "lss/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "lss/search.hpp"
#include "product_detail.hpp"

namespace lss {

std::size_t count_symbol(const Word& w, Symbol s) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), s));
}

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    std::unordered_set<std::string_view> seen;
    for (const std::string& t : tokens_) {
        if (t.empty()) {
            throw PreconditionError("alphabet token must be non-empty");
        }
        if (t == "eps") {
            throw PreconditionError("'eps' is reserved and cannot be an alphabet token");
        }
        if (std::any_of(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c) != 0; })) {
            throw PreconditionError("alphabet token '" + t + "' contains whitespace");
        }
        if (!seen.insert(t).second) {
            throw PreconditionError("duplicate alphabet token '" + t + "'");
        }
    }
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (tokens_[i] == token) {
            return static_cast<Symbol>(i);
        }
    }
    return std::nullopt;
}

Alphabet binary_alphabet() { return Alphabet({"0", "1"}); }
Alphabet unary_alphabet() { return Alphabet({"a"}); }

std::string format_word(const Alphabet& alphabet, const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += alphabet.token(w[i]);
    }
    return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    std::istringstream in{std::string(text)};
    Word w;
    std::string tok;
    while (in >> tok) {
        auto s = alphabet.find(tok);
        if (!s) {
            throw ParseError(0, "unknown symbol '" + tok + "'");
        }
        w.push_back(*s);
    }
    return w;
}

Automaton::Automaton(Alphabet alphabet, std::size_t state_count, State start, std::vector<State> finals,
                     std::vector<Transition> transitions)
    : alphabet_(std::move(alphabet)), state_count_(state_count), start_(start), finals_(std::move(finals)),
      transitions_(std::move(transitions)) {
    if (state_count_ == 0) {
        throw PreconditionError("automaton needs at least one state");
    }
    if (start_ >= state_count_) {
        throw PreconditionError("start state " + std::to_string(start_) + " out of range");
    }
    std::sort(finals_.begin(), finals_.end());
    finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
    final_mask_.assign(state_count_, false);
    for (State f : finals_) {
        if (f >= state_count_) {
            throw PreconditionError("final state " + std::to_string(f) + " out of range");
        }
        final_mask_[f] = true;
    }
    for (const Transition& t : transitions_) {
        if (t.from >= state_count_ || t.to >= state_count_) {
            throw PreconditionError("transition state out of range");
        }
        if (t.label != kEpsilon && t.label >= alphabet_.size()) {
            throw PreconditionError("transition symbol out of range");
        }
    }
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

    arc_offsets_.assign(state_count_ + 1, 0);
    arcs_.reserve(transitions_.size());
    for (const Transition& t : transitions_) {
        ++arc_offsets_[t.from + 1];
        arcs_.push_back({t.label, t.to});
        if (t.is_epsilon()) {
            ++epsilon_count_;
        }
    }
    for (std::size_t q = 0; q < state_count_; ++q) {
        arc_offsets_[q + 1] += arc_offsets_[q];
    }
}

std::span<const Arc> Automaton::arcs(State q) const {
    return std::span<const Arc>(arcs_).subspan(arc_offsets_.at(q), arc_offsets_[q + 1] - arc_offsets_[q]);
}

bool Automaton::is_deterministic() const {
    if (has_epsilon()) {
        return false;
    }
    for (State q = 0; q < state_count_; ++q) {
        auto out = arcs(q);
        if (out.size() != alphabet_.size()) {
            return false;
        }
        // Arcs are sorted by label, so a total DFA lists labels 0..|Σ|-1 exactly once.
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (out[i].label != i) {
                return false;
            }
        }
    }
    return true;
}

bool Automaton::operator==(const Automaton& other) const {
    return alphabet_ == other.alphabet_ && state_count_ == other.state_count_ && start_ == other.start_ &&
           finals_ == other.finals_ && transitions_ == other.transitions_;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        const std::size_t j = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (j < i) {
            out.push_back(line.substr(j, i - j));
        }
    }
    return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    }
    return value;
}

} // namespace

Automaton parse_automaton(std::string_view text) {
    std::optional<Alphabet> alphabet;
    std::optional<std::size_t> states;
    std::optional<State> start;
    std::optional<std::vector<State>> finals;
    std::vector<Transition> transitions;

    auto state_in_range = [&](std::string_view tok, std::size_t line) {
        const std::size_t q = parse_count(tok, line);
        if (q >= *states) {
            throw ParseError(line, "state " + std::string(tok) + " out of range (states " +
                                       std::to_string(*states) + ")");
        }
        return static_cast<State>(q);
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        const auto toks = split_ws(raw);
        if (toks.empty() || toks[0].starts_with('#')) {
            continue;
        }
        const std::string_view key = toks[0];
        if (key == "alphabet") {
            if (alphabet) {
                throw ParseError(line_no, "duplicate 'alphabet' header");
            }
            if (toks.size() < 2) {
                throw ParseError(line_no, "'alphabet' needs at least one token");
            }
            try {
                alphabet = Alphabet(std::vector<std::string>(toks.begin() + 1, toks.end()));
            } catch (const PreconditionError& e) {
                throw ParseError(line_no, e.what());
            }
        } else if (key == "states") {
            if (states) {
                throw ParseError(line_no, "duplicate 'states' header");
            }
            if (toks.size() != 2) {
                throw ParseError(line_no, "'states' takes exactly one value");
            }
            states = parse_count(toks[1], line_no);
            if (*states == 0) {
                throw ParseError(line_no, "'states' must be positive");
            }
        } else if (key == "start" || key == "final") {
            if (!states) {
                throw ParseError(line_no, "'" + std::string(key) + "' before 'states'");
            }
            if (key == "start") {
                if (start) {
                    throw ParseError(line_no, "duplicate 'start' header");
                }
                if (toks.size() != 2) {
                    throw ParseError(line_no, "'start' takes exactly one state");
                }
                start = state_in_range(toks[1], line_no);
            } else {
                if (finals) {
                    throw ParseError(line_no, "duplicate 'final' header");
                }
                finals.emplace();
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    finals->push_back(state_in_range(toks[i], line_no));
                }
            }
        } else if (key == "trans") {
            if (!alphabet || !states || !start || !finals) {
                throw ParseError(line_no, "'trans' before all headers");
            }
            if (toks.size() != 4) {
                throw ParseError(line_no, "'trans' takes <from> <symbol|eps> <to>");
            }
            Symbol label = kEpsilon;
            if (toks[2] != "eps") {
                auto s = alphabet->find(toks[2]);
                if (!s) {
                    throw ParseError(line_no, "symbol '" + std::string(toks[2]) + "' not in alphabet");
                }
                label = *s;
            }
            transitions.push_back({state_in_range(toks[1], line_no), label, state_in_range(toks[3], line_no)});
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
        }
    }

    if (!alphabet) {
        throw ParseError(0, "missing 'alphabet' header");
    }
    if (!states) {
        throw ParseError(0, "missing 'states' header");
    }
    if (!start) {
        throw ParseError(0, "missing 'start' header");
    }
    if (!finals) {
        throw ParseError(0, "missing 'final' header");
    }
    return Automaton(std::move(*alphabet), *states, *start, std::move(*finals), std::move(transitions));
}

std::string serialize_automaton(const Automaton& aut) {
    std::ostringstream out;
    out << "alphabet";
    for (const std::string& t : aut.alphabet().tokens()) {
        out << ' ' << t;
    }
    out << "\nstates " << aut.state_count() << "\nstart " << aut.start() << "\nfinal";
    for (State f : aut.finals()) {
        out << ' ' << f;
    }
    out << '\n';
    for (const Transition& t : aut.transitions()) {
        out << "trans " << t.from << ' ' << (t.is_epsilon() ? std::string("eps") : aut.alphabet().token(t.label))
            << ' ' << t.to << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Semantics

std::vector<State> epsilon_closure(const Automaton& aut, std::vector<State> states) {
    std::vector<bool> seen(aut.state_count(), false);
    std::vector<State> stack;
    for (State q : states) {
        if (!seen.at(q)) {
            seen[q] = true;
            stack.push_back(q);
        }
    }
    std::vector<State> out;
    while (!stack.empty()) {
        const State q = stack.back();
        stack.pop_back();
        out.push_back(q);
        for (const Arc& a : aut.arcs(q)) {
            if (a.label == kEpsilon && !seen[a.to]) {
                seen[a.to] = true;
                stack.push_back(a.to);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<State> step(const Automaton& aut, const std::vector<State>& current, Symbol s) {
    std::vector<State> next;
    for (State q : current) {
        for (const Arc& a : aut.arcs(q)) {
            if (a.label == s) {
                next.push_back(a.to);
            }
        }
    }
    return epsilon_closure(aut, std::move(next));
}

class AutomatonSpace {
public:
    explicit AutomatonSpace(const Automaton& aut) : aut_(aut) {}

    search::NodeId start() const { return aut_.start(); }
    bool accepting(search::NodeId q) const { return aut_.is_final(q); }
    std::size_t node_count() const { return aut_.state_count(); }
    void expand(search::NodeId q, std::vector<search::Step>& out) const {
        for (const Arc& a : aut_.arcs(q)) {
            out.push_back({a.label, a.to, 0});
        }
    }

private:
    const Automaton& aut_;
};

void require_same_alphabet(const Automaton& a1, const Automaton& a2) {
    if (!(a1.alphabet() == a2.alphabet())) {
        throw PreconditionError("automata are over different alphabets");
    }
}

} // namespace

bool accepts(const Automaton& aut, const Word& x) {
    std::vector<State> current = epsilon_closure(aut, {aut.start()});
    for (Symbol s : x) {
        if (s >= aut.alphabet().size()) {
            throw PreconditionError("word symbol out of range");
        }
        current = step(aut, current, s);
        if (current.empty()) {
            return false;
        }
    }
    return std::any_of(current.begin(), current.end(), [&](State q) { return aut.is_final(q); });
}

LssResult shortest_string(const Automaton& aut) {
    AutomatonSpace space(aut);
    auto outcome = search::shortest_word(space);
    LssResult result;
    if (outcome.path) {
        result.status = LssResult::Status::Found;
        result.word = std::move(outcome.path->word);
    }
    return result;
}

Automaton product_intersection(const Automaton& a1, const Automaton& a2, ProductMode mode) {
    require_same_alphabet(a1, a2);
    if (a1.has_epsilon() || a2.has_epsilon()) {
        throw PreconditionError("product_intersection requires epsilon-free automata");
    }
    return detail::pair_product(a1, a2, mode, false);
}

Automaton determinize(const Automaton& aut) {
    const std::size_t sigma = aut.alphabet().size();
    std::map<std::vector<State>, State> index;
    std::vector<std::vector<State>> subsets;
    auto intern = [&](std::vector<State> subset) {
        auto [it, inserted] = index.try_emplace(subset, static_cast<State>(subsets.size()));
        if (inserted) {
            subsets.push_back(std::move(subset));
        }
        return it->second;
    };

    intern(epsilon_closure(aut, {aut.start()}));
    std::vector<Transition> out;
    std::vector<State> finals;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        const auto from = static_cast<State>(i);
        if (std::any_of(subsets[i].begin(), subsets[i].end(), [&](State q) { return aut.is_final(q); })) {
            finals.push_back(from);
        }
        for (Symbol s = 0; s < sigma; ++s) {
            // subsets may reallocate inside intern, so copy before stepping
            std::vector<State> current = subsets[i];
            out.push_back({from, s, intern(step(aut, current, s))});
        }
    }
    return Automaton(aut.alphabet(), subsets.size(), 0, std::move(finals), std::move(out));
}

Automaton complement(const Automaton& dfa) {
    if (!dfa.is_deterministic()) {
        throw PreconditionError("complement requires a total deterministic automaton");
    }
    std::vector<State> finals;
    for (State q = 0; q < dfa.state_count(); ++q) {
        if (!dfa.is_final(q)) {
            finals.push_back(q);
        }
    }
    return Automaton(dfa.alphabet(), dfa.state_count(), dfa.start(), std::move(finals), dfa.transitions());
}

} // namespace lss
