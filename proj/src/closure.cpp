#include "lss/closure.hpp"

#include <algorithm>

#include "product_detail.hpp"

namespace lss {

Automaton plus_closure(const Automaton& aut) {
    std::vector<Transition> transitions = aut.transitions();
    for (State f : aut.finals()) {
        transitions.push_back({f, kEpsilon, aut.start()});
    }
    return Automaton(aut.alphabet(), aut.state_count(), aut.start(), aut.finals(), std::move(transitions));
}

Automaton normalize_start(const Automaton& aut) {
    const State start = aut.start();
    const bool entered = std::any_of(aut.transitions().begin(), aut.transitions().end(),
                                     [&](const Transition& t) { return t.to == start; });
    if (!entered) {
        return aut;
    }
    const auto copy = static_cast<State>(aut.state_count());
    std::vector<Transition> transitions;
    for (const Transition& t : aut.transitions()) {
        const State to = t.to == start ? copy : t.to;
        transitions.push_back({t.from, t.label, to});
        if (t.from == start) {
            transitions.push_back({copy, t.label, to});
        }
    }
    std::vector<State> finals = aut.finals();
    if (aut.is_final(start)) {
        finals.push_back(copy);
    }
    return Automaton(aut.alphabet(), aut.state_count() + 1, start, std::move(finals), std::move(transitions));
}

Automaton star_normalized(const Automaton& aut) {
    const Automaton normalized = normalize_start(aut);
    std::vector<Transition> transitions = normalized.transitions();
    for (State f : normalized.finals()) {
        transitions.push_back({f, kEpsilon, normalized.start()});
    }
    return Automaton(normalized.alphabet(), normalized.state_count(), normalized.start(), {normalized.start()},
                     std::move(transitions));
}

Automaton eps_product(const Automaton& a1, const Automaton& a2, ProductMode mode) {
    if (!(a1.alphabet() == a2.alphabet())) {
        throw PreconditionError("automata are over different alphabets");
    }
    return detail::pair_product(a1, a2, mode, true);
}

LssResult plus_intersection_lss(const Automaton& a1, const Automaton& a2) {
    return shortest_string(eps_product(plus_closure(a1), plus_closure(a2)));
}

} // namespace lss
