#pragma once

// m-packed labelings: order-increasing maps P -> {1..m} whose image is all
// of {1..m}.  Provides validation, exhaustive enumeration in lexicographic
// order, and the tree counting formulas (hook lengths).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pml/bigint.hpp"
#include "pml/error.hpp"
#include "pml/poset.hpp"

namespace pml {

using Labels = std::vector<std::uint8_t>;

struct PackedLabeling {
    int m = 0;
    Labels labels;
};

struct ValidationResult {
    bool ok = true;
    std::string violation;
    explicit operator bool() const { return ok; }
};

inline ValidationResult validate_packed(const Poset& p, const Labels& labels, int m) {
    if (static_cast<int>(labels.size()) != p.size())
        fail(ErrorCode::LengthMismatch,
             "expected " + std::to_string(p.size()) + " labels, got " +
                 std::to_string(labels.size()));
    if (m < 0 || m > 255) return {false, "label bound m out of range"};
    std::vector<bool> seen(m + 1, false);
    for (int x = 0; x < p.size(); ++x) {
        int v = labels[x];
        if (v < 1 || v > m)
            return {false, "label " + std::to_string(v) + " at element " + std::to_string(x) +
                               " outside [1," + std::to_string(m) + "]"};
        seen[v] = true;
    }
    for (auto& [lo, hi] : p.covers())
        if (labels[lo] >= labels[hi])
            return {false, "labels not increasing on cover (" + std::to_string(lo) + "," +
                               std::to_string(hi) + ")"};
    for (int v = 1; v <= m; ++v)
        if (!seen[v]) return {false, "label " + std::to_string(v) + " missing from image"};
    return {};
}

namespace detail {

// Depth-first assignment in element-index order.  Bounds come from the
// already-assigned part of the order relation; surjectivity is pruned with a
// count argument plus a per-label coverage count over static feasibility
// intervals.
class PackedEnumerator {
public:
    PackedEnumerator(const Poset& p, int m, const std::function<bool(const Labels&)>& emit)
        : p_(p), m_(m), emit_(emit) {}

    void run() {
        if (m_ < 1 || m_ > p_.size()) return;
        int n = p_.size();
        lo_.resize(n);
        hi_.resize(n);
        for (int x = 0; x < n; ++x) {
            lo_[x] = p_.chain_below(x) + 1;
            hi_[x] = m_ - p_.chain_above(x);
            if (lo_[x] > hi_[x]) return;
        }
        labels_.assign(n, 0);
        used_count_.assign(m_ + 1, 0);
        can_take_.assign(m_ + 1, 0);
        for (int x = 0; x < n; ++x)
            for (int v = lo_[x]; v <= hi_[x]; ++v) ++can_take_[v];
        missing_ = m_;
        dead_ = 0;
        for (int v = 1; v <= m_; ++v)
            if (can_take_[v] == 0) ++dead_;
        if (dead_ == 0) descend(0);
    }

private:
    bool descend(int x) {
        if (x == p_.size()) {
            return missing_ == 0 ? emit_(labels_) : true;
        }
        int lb = lo_[x], ub = hi_[x];
        Mask assigned = (Mask{1} << x) - 1;
        for (Mask below = p_.strictly_below(x) & assigned; below != 0; below &= below - 1) {
            int z = std::countr_zero(below);
            lb = std::max(lb, labels_[z] + 1);
        }
        for (Mask above = p_.strictly_above(x) & assigned; above != 0; above &= above - 1) {
            int z = std::countr_zero(above);
            ub = std::min(ub, labels_[z] - 1);
        }

        // x drops out of the coverage counts no matter which label it takes.
        for (int v = lo_[x]; v <= hi_[x]; ++v)
            if (--can_take_[v] == 0 && used_count_[v] == 0) ++dead_;

        bool keep_going = true;
        int remaining = p_.size() - x - 1;
        for (int v = lb; v <= ub && keep_going; ++v) {
            labels_[x] = static_cast<std::uint8_t>(v);
            if (used_count_[v]++ == 0) {
                --missing_;
                if (can_take_[v] == 0) --dead_;
            }
            if (missing_ <= remaining && dead_ == 0) keep_going = descend(x + 1);
            if (--used_count_[v] == 0) {
                ++missing_;
                if (can_take_[v] == 0) ++dead_;
            }
        }
        labels_[x] = 0;

        for (int v = lo_[x]; v <= hi_[x]; ++v)
            if (can_take_[v]++ == 0 && used_count_[v] == 0) --dead_;
        return keep_going;
    }

    const Poset& p_;
    int m_;
    const std::function<bool(const Labels&)>& emit_;
    Labels labels_;
    std::vector<int> lo_, hi_, used_count_, can_take_;
    int missing_ = 0;  // labels in [1,m] not yet present
    int dead_ = 0;     // unused labels no unassigned element can still take
};

}  // namespace detail

// Visits every m-packed labeling in lexicographic order of the label
// sequence (element-index order).  Return false from the callback to stop.
inline void for_each_packed(const Poset& p, int m,
                            const std::function<bool(const Labels&)>& visit) {
    detail::PackedEnumerator(p, m, visit).run();
}

inline std::vector<Labels> enumerate_packed(const Poset& p, int m) {
    std::vector<Labels> out;
    for_each_packed(p, m, [&](const Labels& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

inline BigInt count_packed(const Poset& p, int m) {
    BigInt count = 0;
    for_each_packed(p, m, [&](const Labels&) {
        ++count;
        return true;
    });
    return count;
}

// h_x = #{ y : y >= x }, defined for rooted trees.
inline std::vector<int> hook_lengths(const Poset& t) {
    if (!is_rooted_tree(t)) fail(ErrorCode::NotRootedTree, "hook lengths need a rooted tree");
    std::vector<int> hooks(t.size());
    for (int x = 0; x < t.size(); ++x) hooks[x] = std::popcount(t.up_set(x));
    return hooks;
}

// Number of natural labelings of a rooted tree: n! / prod of hook lengths.
inline BigInt hook_count(const Poset& t) {
    std::vector<int> hooks = hook_lengths(t);
    BigInt numer = factorial(t.size());
    BigInt denom = 1;
    for (int h : hooks) denom *= h;
    BigInt q = numer / denom;
    if (q * denom != numer)
        fail(ErrorCode::NonzeroRemainder, "hook product does not divide n!");
    return q;
}

// M(L): number of elements labeled as low as the rank allows.
inline int min_labeled_count(const Poset& p, const Labels& labels) {
    if (static_cast<int>(labels.size()) != p.size())
        fail(ErrorCode::LengthMismatch, "label vector has wrong length");
    RankData rd = rank_data(p);
    if (!rd.is_ranked) fail(ErrorCode::NotRanked, "poset is not ranked");
    int count = 0;
    for (int x = 0; x < p.size(); ++x)
        if (labels[x] == rd.ranks[x] + 1) ++count;
    return count;
}

}  // namespace pml
