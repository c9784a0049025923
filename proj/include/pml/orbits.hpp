#pragma once

// Orbit walks and canonical orbit decompositions for the labeling and ideal
// operators.  Decompositions are deterministic: every orbit is rotated so
// its lexicographically smallest state comes first, orbits are sorted by
// (size, representative), and the result does not depend on the worker
// count.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "pml/bigint.hpp"
#include "pml/dynamics.hpp"
#include "pml/error.hpp"
#include "pml/labeling.hpp"
#include "pml/poset.hpp"

namespace pml {

// A state is a label sequence for the labeling operators and a sorted
// element list for the ideal operators.
using State = std::vector<std::uint8_t>;

namespace detail {

inline State ideal_to_state(Mask ideal) {
    State out;
    for (int x : mask_to_elements(ideal)) out.push_back(static_cast<std::uint8_t>(x));
    return out;
}

inline Mask state_to_ideal(const State& state) {
    Mask mask = 0;
    for (auto x : state) mask |= Mask{1} << x;
    return mask;
}

inline std::function<State(const State&)> make_step(const Poset& p, Operator op, int m) {
    switch (op) {
        case Operator::KPromotion:
            return [&p, m](const State& s) { return k_promote_unchecked(p, s, m); };
        case Operator::KPromotionInverse:
            return [&p, m](const State& s) { return k_promote_inverse_unchecked(p, s, m); };
        case Operator::Promotion:
            if (m != p.size())
                fail(ErrorCode::NotNatural, "promotion acts on natural labelings (m = n)");
            return [&p](const State& s) { return promote_natural(p, s); };
        case Operator::Rowmotion:
            return [&p](const State& s) {
                return ideal_to_state(rowmotion_unchecked(p, state_to_ideal(s)));
            };
        case Operator::RowmotionInverse:
            return [&p](const State& s) {
                return ideal_to_state(rowmotion_inverse_unchecked(p, state_to_ideal(s)));
            };
    }
    fail(ErrorCode::InvalidParameter, "bad operator");
}

inline void rotate_to_lex_min(std::vector<State>& cycle) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < cycle.size(); ++i)
        if (cycle[i] < cycle[best]) best = i;
    std::rotate(cycle.begin(), cycle.begin() + best, cycle.end());
}

inline std::vector<State> walk_orbit(const State& start,
                                     const std::function<State(const State&)>& step) {
    std::vector<State> cycle{start};
    State cur = step(start);
    while (cur != start) {
        State next = step(cur);
        cycle.push_back(std::move(cur));
        cur = std::move(next);
        if (cycle.size() > (std::size_t{1} << 32))
            fail(ErrorCode::LimitExceeded, "orbit did not close");
    }
    return cycle;
}

}  // namespace detail

// (size, multiplicity) pairs, ascending by size: the multiset o_m(P).
using SizeMultiset = std::vector<std::pair<std::size_t, std::size_t>>;

inline std::string multiset_to_string(const SizeMultiset& multiset) {
    std::string out;
    for (std::size_t i = 0; i < multiset.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(multiset[i].first) + "^" + std::to_string(multiset[i].second);
    }
    return out;
}

struct OrbitDecomposition {
    Operator op = Operator::KPromotion;
    std::optional<int> m;                    // absent for ideal operators
    std::vector<std::vector<State>> orbits;  // canonical order
    BigInt order = 1;                        // lcm of orbit sizes

    std::size_t total_states() const {
        std::size_t total = 0;
        for (auto& orbit : orbits) total += orbit.size();
        return total;
    }

    SizeMultiset size_multiset() const {
        std::map<std::size_t, std::size_t> counts;
        for (auto& orbit : orbits) ++counts[orbit.size()];
        return {counts.begin(), counts.end()};
    }
};

// The full cycle through `start`, rotated so its lexicographically smallest
// state comes first.
inline std::vector<State> orbit(const Poset& p, const State& start, Operator op, int m = 0) {
    if (is_ideal_operator(op)) {
        detail::require_ideal(p, detail::state_to_ideal(start));
    } else {
        detail::require_packed(p, start, m);
    }
    auto cycle = detail::walk_orbit(start, detail::make_step(p, op, m));
    detail::rotate_to_lex_min(cycle);
    return cycle;
}

inline OrbitDecomposition orbit_decomposition(const Poset& p, int m, Operator op,
                                              int threads = 1) {
    if (threads < 1) fail(ErrorCode::InvalidParameter, "threads must be >= 1");
    OrbitDecomposition result;
    result.op = op;
    if (!is_ideal_operator(op)) result.m = m;

    std::vector<State> seeds;
    if (is_ideal_operator(op)) {
        for (Mask ideal : ideals(p)) seeds.push_back(detail::ideal_to_state(ideal));
    } else {
        seeds = enumerate_packed(p, m);
    }

    auto step = detail::make_step(p, op, m);

    // Each worker walks the orbits of its slice of seeds, skipping seeds it
    // has already seen in its own walks.  An orbit straddling two slices is
    // walked twice and deduplicated by representative at merge time, so the
    // outcome is independent of the worker count.
    int nworkers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(seeds.size(), 1)));
    std::vector<std::vector<std::vector<State>>> found(nworkers);
    auto work = [&](int w) {
        std::size_t lo = seeds.size() * w / nworkers;
        std::size_t hi = seeds.size() * (w + 1) / nworkers;
        std::set<State> seen;
        for (std::size_t i = lo; i < hi; ++i) {
            if (seen.count(seeds[i])) continue;
            auto cycle = detail::walk_orbit(seeds[i], step);
            for (auto& s : cycle) seen.insert(s);
            detail::rotate_to_lex_min(cycle);
            found[w].push_back(std::move(cycle));
        }
    };
    if (nworkers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    std::map<State, std::vector<State>> merged;
    for (auto& bucket : found)
        for (auto& cycle : bucket) merged.emplace(cycle.front(), std::move(cycle));

    result.orbits.reserve(merged.size());
    for (auto& [rep, cycle] : merged) result.orbits.push_back(std::move(cycle));
    std::stable_sort(result.orbits.begin(), result.orbits.end(),
                     [](const std::vector<State>& a, const std::vector<State>& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a.front() < b.front();
                     });
    for (auto& orbit : result.orbits) result.order = big_lcm(result.order, BigInt(orbit.size()));
    return result;
}

inline BigInt order_of(const Poset& p, int m, Operator op, int threads = 1) {
    return orbit_decomposition(p, m, op, threads).order;
}

}  // namespace pml
