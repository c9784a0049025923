#pragma once

// Finite posets given by their Hasse diagram (cover relations), with the
// structural queries used by the labeling dynamics: height, ranks, trunk,
// principal subposets, ideals, and the poset families under study.
//
// Elements are dense indices 0..n-1.  Subsets are bitmasks, which caps the
// element count at 60; every enumeration in this library is hopeless long
// before that bound anyway.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pml/error.hpp"

namespace pml {

using Mask = std::uint64_t;

constexpr int kMaxElements = 60;

inline std::vector<int> mask_to_elements(Mask mask) {
    std::vector<int> out;
    for (int x = 0; mask != 0; ++x, mask >>= 1)
        if (mask & 1) out.push_back(x);
    return out;
}

template <typename Range>
Mask elements_to_mask(const Range& elements) {
    Mask mask = 0;
    for (int x : elements) mask |= Mask{1} << x;
    return mask;
}

// Lexicographic comparison of the sorted element lists two masks represent,
// e.g. {} < {0} < {0,1} < {0,2} < {1}.  This is the canonical order for
// ideals and ideal-orbit representatives.
inline bool mask_list_less(Mask a, Mask b) {
    while (a != 0 && b != 0) {
        int xa = std::countr_zero(a);
        int xb = std::countr_zero(b);
        if (xa != xb) return xa < xb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

class Poset {
public:
    Poset(int n, std::vector<std::pair<int, int>> covers) : n_(n), covers_(std::move(covers)) {
        if (n_ < 0) fail(ErrorCode::InvalidParameter, "negative element count");
        if (n_ > kMaxElements)
            fail(ErrorCode::LimitExceeded,
                 "poset has " + std::to_string(n_) + " elements, limit is " +
                     std::to_string(kMaxElements));
        validate_and_build();
    }

    int size() const { return n_; }

    // Cover pairs (lower, upper), sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    const std::vector<int>& upper_covers(int x) const { return up_covers_[x]; }
    const std::vector<int>& lower_covers(int x) const { return low_covers_[x]; }

    bool less(int x, int y) const { return (above_[x] >> y) & 1; }
    bool leq(int x, int y) const { return x == y || less(x, y); }

    Mask strictly_above(int x) const { return above_[x]; }
    Mask strictly_below(int x) const { return below_[x]; }
    Mask up_set(int x) const { return above_[x] | (Mask{1} << x); }
    Mask down_set(int x) const { return below_[x] | (Mask{1} << x); }

    Mask all_elements() const { return n_ == 0 ? 0 : (Mask{1} << n_) - 1; }

    // Length in edges of a longest chain.
    int height() const { return height_; }

    // Longest chain ending at / starting from x, in edges.
    int chain_below(int x) const { return chain_below_[x]; }
    int chain_above(int x) const { return chain_above_[x]; }

    std::vector<int> minimal_elements() const {
        std::vector<int> out;
        for (int x = 0; x < n_; ++x)
            if (low_covers_[x].empty()) out.push_back(x);
        return out;
    }

    std::vector<int> maximal_elements() const {
        std::vector<int> out;
        for (int x = 0; x < n_; ++x)
            if (up_covers_[x].empty()) out.push_back(x);
        return out;
    }

    std::optional<int> unique_minimum() const {
        auto mins = minimal_elements();
        if (mins.size() == 1) return mins[0];
        return std::nullopt;
    }

    bool operator==(const Poset& other) const {
        return n_ == other.n_ && covers_ == other.covers_;
    }

private:
    void validate_and_build() {
        for (auto& [lo, hi] : covers_) {
            if (lo < 0 || lo >= n_ || hi < 0 || hi >= n_)
                fail(ErrorCode::IndexOutOfRange,
                     "cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                         ") outside [0," + std::to_string(n_) + ")");
            if (lo == hi)
                fail(ErrorCode::CycleDetected, "self-cover at element " + std::to_string(lo));
        }
        std::sort(covers_.begin(), covers_.end());
        for (std::size_t i = 1; i < covers_.size(); ++i)
            if (covers_[i] == covers_[i - 1])
                fail(ErrorCode::DuplicateCover,
                     "cover (" + std::to_string(covers_[i].first) + "," +
                         std::to_string(covers_[i].second) + ") repeated");

        up_covers_.assign(n_, {});
        low_covers_.assign(n_, {});
        for (auto& [lo, hi] : covers_) {
            up_covers_[lo].push_back(hi);
            low_covers_[hi].push_back(lo);
        }

        // Topological order; failure means the cover digraph has a cycle.
        std::vector<int> indeg(n_, 0), order;
        order.reserve(n_);
        for (int x = 0; x < n_; ++x) indeg[x] = static_cast<int>(low_covers_[x].size());
        std::vector<int> stack;
        for (int x = n_ - 1; x >= 0; --x)
            if (indeg[x] == 0) stack.push_back(x);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            order.push_back(x);
            for (int y : up_covers_[x])
                if (--indeg[y] == 0) stack.push_back(y);
        }
        if (static_cast<int>(order.size()) != n_)
            fail(ErrorCode::CycleDetected, "cover digraph contains a cycle");

        above_.assign(n_, 0);
        below_.assign(n_, 0);
        chain_below_.assign(n_, 0);
        chain_above_.assign(n_, 0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int x = *it;
            for (int y : up_covers_[x]) {
                above_[x] |= above_[y] | (Mask{1} << y);
                chain_above_[x] = std::max(chain_above_[x], chain_above_[y] + 1);
            }
        }
        for (int x : order) {
            for (int z : low_covers_[x]) {
                below_[x] |= below_[z] | (Mask{1} << z);
                chain_below_[x] = std::max(chain_below_[x], chain_below_[z] + 1);
            }
        }

        // Hasse condition: a cover (x,y) must not admit any z with x < z < y.
        for (auto& [lo, hi] : covers_) {
            Mask between = above_[lo] & below_[hi];
            if (between != 0) {
                int z = std::countr_zero(between);
                fail(ErrorCode::NotTransitivelyReduced,
                     "cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                         ") is transitive via " + std::to_string(lo) + " < " +
                         std::to_string(z) + " < " + std::to_string(hi));
            }
        }

        height_ = 0;
        for (int x = 0; x < n_; ++x) height_ = std::max(height_, chain_below_[x]);
    }

    int n_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_covers_, low_covers_;
    std::vector<Mask> above_, below_;
    std::vector<int> chain_below_, chain_above_;
    int height_ = 0;
};

struct RankData {
    std::vector<int> ranks;
    bool is_ranked = false;
    // All maximal chains of the poset have length h(P).
    bool uniform_maximal_chain_length = false;
};

struct TrunkInfo {
    std::vector<int> trunk;  // 0-hat first
    int t = 0;
};

inline int require_unique_minimum(const Poset& p) {
    auto min = p.unique_minimum();
    if (!min) fail(ErrorCode::NoUniqueMinimum, "poset has no unique minimal element");
    return *min;
}

// Deterministic topological order: smallest available index first.
inline std::vector<int> linear_extension(const Poset& p) {
    int n = p.size();
    std::vector<int> indeg(n, 0), out;
    out.reserve(n);
    for (int x = 0; x < n; ++x) indeg[x] = static_cast<int>(p.lower_covers(x).size());
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int x = 0; x < n; ++x)
            if (!done[x] && indeg[x] == 0) {
                pick = x;
                break;
            }
        out.push_back(pick);
        done[pick] = true;
        for (int y : p.upper_covers(pick)) --indeg[y];
    }
    return out;
}

// Ranks are edge-lengths of maximal chains from the minimum.  is_ranked
// holds when that length is the same for every chain to each element,
// i.e. shortest and longest chains from 0-hat agree everywhere.
inline RankData rank_data(const Poset& p) {
    require_unique_minimum(p);
    RankData rd;
    int n = p.size();
    rd.ranks.assign(n, 0);
    for (int x = 0; x < n; ++x) rd.ranks[x] = p.chain_below(x);

    // Shortest chain lengths from the minimum, in a topological pass.
    std::vector<int> shortest(n, 0);
    for (int x : linear_extension(p)) {
        if (p.lower_covers(x).empty()) continue;
        int s = n;
        for (int z : p.lower_covers(x)) s = std::min(s, shortest[z] + 1);
        shortest[x] = s;
    }
    rd.is_ranked = true;
    for (int x = 0; x < n; ++x)
        if (shortest[x] != rd.ranks[x]) rd.is_ranked = false;

    rd.uniform_maximal_chain_length = rd.is_ranked;
    if (rd.is_ranked) {
        for (int x : p.maximal_elements())
            if (rd.ranks[x] != p.height()) rd.uniform_maximal_chain_length = false;
    }
    return rd;
}

// Maximal initial chain from 0-hat whose members are each covered by exactly
// one element.  Empty when the minimum is covered by zero (n=1) or by two or
// more elements.
inline TrunkInfo trunk(const Poset& p) {
    int x = require_unique_minimum(p);
    TrunkInfo info;
    while (p.upper_covers(x).size() == 1) {
        info.trunk.push_back(x);
        x = p.upper_covers(x)[0];
    }
    info.t = static_cast<int>(info.trunk.size());
    return info;
}

// Induced subposet on the elements of `keep` (ascending), reindexed to
// 0..keep.size()-1 preserving relative order.
inline Poset induced_subposet(const Poset& p, const std::vector<int>& keep) {
    std::vector<int> newindex(p.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) newindex[keep[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> covers;
    for (auto& [lo, hi] : p.covers())
        if (newindex[lo] >= 0 && newindex[hi] >= 0)
            covers.emplace_back(newindex[lo], newindex[hi]);
    // Covers of an induced subposet on a down-up "interval difference" can in
    // general stop being covers, but every use here removes a full down-set or
    // keeps a connected component, where induced covers stay covers.
    return Poset(static_cast<int>(keep.size()), std::move(covers));
}

inline std::pair<Poset, int> remove_trunk(const Poset& p) {
    TrunkInfo info = trunk(p);
    if (info.t == p.size()) fail(ErrorCode::EmptyResult, "trunk is the whole poset");
    std::vector<int> keep;
    Mask drop = elements_to_mask(info.trunk);
    for (int x = 0; x < p.size(); ++x)
        if (!((drop >> x) & 1)) keep.push_back(x);
    return {induced_subposet(p, keep), info.t};
}

namespace detail {

// Connected components of the cover graph restricted to P minus 0-hat,
// each as an ascending element list.
inline std::vector<std::vector<int>> principal_components(const Poset& p) {
    int zero = require_unique_minimum(p);
    int n = p.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int start = 0; start < n; ++start) {
        if (start == zero || comp[start] >= 0) continue;
        std::vector<int> stack{start};
        comp[start] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            auto visit = [&](int y) {
                if (y != zero && comp[y] < 0) {
                    comp[y] = ncomp;
                    stack.push_back(y);
                }
            };
            for (int y : p.upper_covers(x)) visit(y);
            for (int y : p.lower_covers(x)) visit(y);
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> out(ncomp);
    for (int x = 0; x < n; ++x)
        if (x != zero) out[comp[x]].push_back(x);
    return out;
}

inline bool is_chain_subset(const Poset& p, const std::vector<int>& elems) {
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (!p.less(elems[i], elems[j]) && !p.less(elems[j], elems[i])) return false;
    return true;
}

}  // namespace detail

inline std::vector<Poset> principal_subposets(const Poset& p) {
    std::vector<Poset> out;
    for (auto& elems : detail::principal_components(p)) out.push_back(induced_subposet(p, elems));
    return out;
}

// Principal subposets that are chains, as element lists in chain order
// (bottom to top).
inline std::vector<std::vector<int>> branches(const Poset& p) {
    std::vector<std::vector<int>> out;
    for (auto& elems : detail::principal_components(p)) {
        if (!detail::is_chain_subset(p, elems)) continue;
        auto sorted = elems;
        std::sort(sorted.begin(), sorted.end(),
                  [&](int a, int b) { return p.less(a, b); });
        out.push_back(std::move(sorted));
    }
    return out;
}

// P and Q side by side with a new minimum adjoined below their minimal
// elements.  Layout: new 0-hat is element 0, P occupies 1..|P|, Q follows.
inline Poset bounded_union(const Poset& p, const Poset& q) {
    std::vector<std::pair<int, int>> covers;
    int offp = 1, offq = 1 + p.size();
    for (auto& [lo, hi] : p.covers()) covers.emplace_back(lo + offp, hi + offp);
    for (auto& [lo, hi] : q.covers()) covers.emplace_back(lo + offq, hi + offq);
    for (int x : p.minimal_elements()) covers.emplace_back(0, x + offp);
    for (int x : q.minimal_elements()) covers.emplace_back(0, x + offq);
    return Poset(1 + p.size() + q.size(), std::move(covers));
}

inline bool is_ideal(const Poset& p, Mask subset) {
    for (Mask rest = subset; rest != 0; rest &= rest - 1) {
        int x = std::countr_zero(rest);
        if ((p.strictly_below(x) & ~subset) != 0) return false;
    }
    return true;
}

// All order ideals, sorted by cardinality then lexicographically on their
// sorted element lists.
inline std::vector<Mask> ideals(const Poset& p) {
    std::vector<int> ext = linear_extension(p);
    std::vector<Mask> out;
    // Decide membership element by element along a linear extension; x may
    // join only once all its lower covers are in.
    auto rec = [&](auto&& self, std::size_t i, Mask current) -> void {
        if (i == ext.size()) {
            out.push_back(current);
            return;
        }
        int x = ext[i];
        self(self, i + 1, current);
        bool allowed = true;
        for (int z : p.lower_covers(x))
            if (!((current >> z) & 1)) {
                allowed = false;
                break;
            }
        if (allowed) self(self, i + 1, current | (Mask{1} << x));
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        int ca = std::popcount(a), cb = std::popcount(b);
        if (ca != cb) return ca < cb;
        return mask_list_less(a, b);
    });
    return out;
}

// Unique minimum whose Hasse diagram is a tree: every other element has
// exactly one lower cover.
inline bool is_rooted_tree(const Poset& p) {
    if (!p.unique_minimum()) return false;
    int root = *p.unique_minimum();
    for (int x = 0; x < p.size(); ++x) {
        if (x == root) continue;
        if (p.lower_covers(x).size() != 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Poset families.
//
// Index layouts are part of the interface (labelings are reported in element
// order):
//   chain(n):           0 < 1 < ... < n-1
//   extended_star(b):   0-hat is 0; branch i occupies the next b_i indices
//                       bottom-up
//   comb(n):            spine 0..n-1 bottom-up, the leaf over spine element i
//                       is n+i
//   zipper_half(n):     comb(n) plus one extra maximal element 2n over the
//                       top spine element
//   zipper(n):          bounded_union(zipper_half(n), zipper_half(n))
//   three_leaf_tree(c): chain 0..c; leaves u=c+1, v=c+2 over c; w=c+3 over 0

inline Poset chain(int n) {
    if (n < 1) fail(ErrorCode::InvalidParameter, "chain needs n >= 1");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return Poset(n, std::move(covers));
}

inline Poset extended_star(const std::vector<int>& branch_sizes) {
    if (branch_sizes.empty()) fail(ErrorCode::InvalidParameter, "star needs k >= 1 branches");
    int n = 1;
    std::vector<std::pair<int, int>> covers;
    for (int b : branch_sizes) {
        if (b < 1) fail(ErrorCode::InvalidParameter, "star branch sizes must be >= 1");
        covers.emplace_back(0, n);
        for (int i = 0; i + 1 < b; ++i) covers.emplace_back(n + i, n + i + 1);
        n += b;
    }
    return Poset(n, std::move(covers));
}

inline Poset comb(int n) {
    if (n < 1) fail(ErrorCode::InvalidParameter, "comb needs n >= 1");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    for (int i = 0; i < n; ++i) covers.emplace_back(i, n + i);
    return Poset(2 * n, std::move(covers));
}

inline Poset zipper_half(int n) {
    if (n < 1) fail(ErrorCode::InvalidParameter, "zipper needs n >= 1");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    for (int i = 0; i < n; ++i) covers.emplace_back(i, n + i);
    covers.emplace_back(n - 1, 2 * n);
    return Poset(2 * n + 1, std::move(covers));
}

inline Poset zipper(int n) {
    Poset half = zipper_half(n);
    return bounded_union(half, half);
}

inline Poset three_leaf_tree(int c) {
    if (c < 1) fail(ErrorCode::InvalidParameter, "three_leaf_tree needs c >= 1");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 <= c; ++i) covers.emplace_back(i, i + 1);
    covers.emplace_back(c, c + 1);  // u
    covers.emplace_back(c, c + 2);  // v
    covers.emplace_back(0, c + 3);  // w
    return Poset(c + 4, std::move(covers));
}

}  // namespace pml
