#ifndef LSS_CLOSURE_HPP
#define LSS_CLOSURE_HPP

#include "lss/automaton.hpp"

namespace lss {

/// Accepts L(aut)+ : same states, plus an epsilon arc from every final state back to the start.
Automaton plus_closure(const Automaton& aut);

/// Start-state normalisation: if the start has incoming arcs, add one state that copies
/// the start's outgoing arcs (and finality) and redirect all incoming arcs to it.
/// The language is unchanged and afterwards nothing enters the start state.
Automaton normalize_start(const Automaton& aut);

/// Accepts L(aut)* with the start as the unique final state: normalize_start, then an
/// epsilon arc final -> start for each final, then finals := {start}.
Automaton star_normalized(const Automaton& aut);

/// Product accepting L(a1) ∩ L(a2) for automata that may contain epsilon arcs.
/// Symbol arcs are synchronised; an epsilon arc of one machine is taken while the
/// other machine stays in its state.
Automaton eps_product(const Automaton& a1, const Automaton& a2, ProductMode mode = ProductMode::Reachable);

/// lss(L(a1)+ ∩ L(a2)+) via eps_product of the two plus closures.
LssResult plus_intersection_lss(const Automaton& a1, const Automaton& a2);

} // namespace lss

#endif
