#ifndef LSS_PRODUCT_DETAIL_HPP
#define LSS_PRODUCT_DETAIL_HPP

#include <deque>
#include <unordered_map>
#include <vector>

#include "lss/automaton.hpp"

namespace lss::detail {

/// Pairwise product shared by product_intersection and eps_product.
/// Symbol arcs move both machines; with `stay_put` set, each epsilon arc of one
/// machine also yields an epsilon arc of the product in which the other machine
/// keeps its state.
inline Automaton pair_product(const Automaton& a1, const Automaton& a2, ProductMode mode, bool stay_put) {
    const std::size_t s2 = a2.state_count();
    std::vector<Transition> out;
    std::vector<State> finals;

    auto successors = [&](State p, State q, auto&& emit) {
        for (const Arc& x : a1.arcs(p)) {
            if (x.label == kEpsilon) {
                if (stay_put) {
                    emit(kEpsilon, x.to, q);
                }
                continue;
            }
            for (const Arc& y : a2.arcs(q)) {
                if (y.label == x.label) {
                    emit(x.label, x.to, y.to);
                }
            }
        }
        if (stay_put) {
            for (const Arc& y : a2.arcs(q)) {
                if (y.label == kEpsilon) {
                    emit(kEpsilon, p, y.to);
                }
            }
        }
    };

    if (mode == ProductMode::Full) {
        for (State p = 0; p < a1.state_count(); ++p) {
            for (State q = 0; q < s2; ++q) {
                const auto from = static_cast<State>(p * s2 + q);
                if (a1.is_final(p) && a2.is_final(q)) {
                    finals.push_back(from);
                }
                successors(p, q, [&](Symbol label, State p2, State q2) {
                    out.push_back({from, label, static_cast<State>(p2 * s2 + q2)});
                });
            }
        }
        return Automaton(a1.alphabet(), a1.state_count() * s2, static_cast<State>(a1.start() * s2 + a2.start()),
                         std::move(finals), std::move(out));
    }

    std::unordered_map<std::size_t, State> index;
    std::vector<std::pair<State, State>> pairs;
    auto intern = [&](State p, State q) {
        const std::size_t key = static_cast<std::size_t>(p) * s2 + q;
        auto [it, inserted] = index.try_emplace(key, static_cast<State>(pairs.size()));
        if (inserted) {
            pairs.emplace_back(p, q);
        }
        return it->second;
    };
    intern(a1.start(), a2.start());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [p, q] = pairs[i];
        const auto from = static_cast<State>(i);
        if (a1.is_final(p) && a2.is_final(q)) {
            finals.push_back(from);
        }
        successors(p, q, [&](Symbol label, State p2, State q2) { out.push_back({from, label, intern(p2, q2)}); });
    }
    return Automaton(a1.alphabet(), pairs.size(), 0, std::move(finals), std::move(out));
}

} // namespace lss::detail

#endif
