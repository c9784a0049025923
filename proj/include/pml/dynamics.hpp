#pragma once

// The dynamical operators: Schuetzenberger promotion on natural labelings,
// K-promotion on m-packed labelings (direct, inverse, and as a product of
// label toggles), order-ideal toggles, rowmotion, and the bijection from
// m-packed labelings to the restricted ideal set when m = h(P)+2.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "pml/error.hpp"
#include "pml/labeling.hpp"
#include "pml/poset.hpp"

namespace pml {

enum class Operator {
    KPromotion,
    KPromotionInverse,
    Promotion,
    Rowmotion,
    RowmotionInverse,
};

inline bool is_ideal_operator(Operator op) {
    return op == Operator::Rowmotion || op == Operator::RowmotionInverse;
}

inline const char* operator_name(Operator op) {
    switch (op) {
        case Operator::KPromotion:        return "kpromotion";
        case Operator::KPromotionInverse: return "kpromotion-inverse";
        case Operator::Promotion:         return "promotion";
        case Operator::Rowmotion:         return "rowmotion";
        case Operator::RowmotionInverse:  return "rowmotion-inverse";
    }
    return "?";
}

inline Operator operator_from_name(const std::string& name) {
    if (name == "kpromotion") return Operator::KPromotion;
    if (name == "kpromotion-inverse") return Operator::KPromotionInverse;
    if (name == "promotion") return Operator::Promotion;
    if (name == "rowmotion") return Operator::Rowmotion;
    if (name == "rowmotion-inverse") return Operator::RowmotionInverse;
    fail(ErrorCode::InvalidParameter, "unknown operator '" + name + "'");
}

namespace detail {

inline void require_packed(const Poset& p, const Labels& labels, int m) {
    ValidationResult v = validate_packed(p, labels, m);
    if (!v.ok) fail(ErrorCode::NotPacked, v.violation);
}

// Elements holding each label value; labels are in [1,m].
inline std::vector<std::vector<int>> label_buckets(const Labels& labels, int m) {
    std::vector<std::vector<int>> buckets(m + 1);
    for (int x = 0; x < static_cast<int>(labels.size()); ++x)
        buckets[labels[x]].push_back(x);
    return buckets;
}

// One K-promotion step without input validation (orbit walks start from
// known-packed labelings; the operator preserves packedness).
inline Labels k_promote_unchecked(const Poset& p, const Labels& labels, int m) {
    int n = p.size();
    if (m < 1) return labels;
    std::vector<std::vector<int>> bucket = label_buckets(labels, m);
    // lab[x] == 0 marks an unlabeled element.
    Labels lab = labels;
    for (int x : bucket[1]) lab[x] = 0;
    std::vector<int> gains, losses;
    for (int v = 2; v <= m; ++v) {
        // All covers x < y with x unlabeled and y labeled v fire at once:
        // v moves down to x, y becomes unlabeled.  An element with original
        // label v cannot have lost it before this step, so bucket[v] still
        // lists every candidate y.
        gains.clear();
        losses.clear();
        for (int y : bucket[v]) {
            bool moved = false;
            for (int x : p.lower_covers(y))
                if (lab[x] == 0) {
                    gains.push_back(x);
                    moved = true;
                }
            if (moved) losses.push_back(y);
        }
        for (int x : gains) lab[x] = static_cast<std::uint8_t>(v);
        for (int y : losses) lab[y] = 0;
    }
    Labels out(n);
    for (int x = 0; x < n; ++x)
        out[x] = lab[x] == 0 ? static_cast<std::uint8_t>(m)
                             : static_cast<std::uint8_t>(lab[x] - 1);
    return out;
}

// Step-by-step reversal: shift labels up, let the gap antichain fall from
// the maximal elements to the minimal ones, then fill with 1.
inline Labels k_promote_inverse_unchecked(const Poset& p, const Labels& labels, int m) {
    int n = p.size();
    if (m < 1) return labels;
    std::vector<std::vector<int>> bucket = label_buckets(labels, m);
    Labels lab(n);
    for (int x = 0; x < n; ++x) lab[x] = static_cast<std::uint8_t>(labels[x] + 1);
    for (int y : bucket[m]) lab[y] = 0;
    std::vector<int> gains, losses;
    for (int v = m; v >= 2; --v) {
        // Covers x < y with y unlabeled and x labeled v: v moves up to y.
        // Candidates x are exactly the elements with original label v-1.
        gains.clear();
        losses.clear();
        for (int x : bucket[v - 1]) {
            bool moved = false;
            for (int y : p.upper_covers(x))
                if (lab[y] == 0) {
                    gains.push_back(y);
                    moved = true;
                }
            if (moved) losses.push_back(x);
        }
        for (int y : gains) lab[y] = static_cast<std::uint8_t>(v);
        for (int x : losses) lab[x] = 0;
    }
    for (int x = 0; x < n; ++x)
        if (lab[x] == 0) lab[x] = 1;
    return lab;
}

inline Labels toggle_labeling_unchecked(const Poset& p, const Labels& labels, int i) {
    // Swap i and i+1 element-wise wherever the order relation permits,
    // judged against the input labeling; all changes land simultaneously.
    // An element labeled i is blocked exactly by an upper cover labeled
    // i+1, and one labeled i+1 by a lower cover labeled i; packedness is
    // preserved because a blocked pair blocks both ways.
    Labels out = labels;
    for (int x = 0; x < p.size(); ++x) {
        if (labels[x] == i) {
            bool blocked = false;
            for (int y : p.upper_covers(x))
                if (labels[y] == i + 1) {
                    blocked = true;
                    break;
                }
            if (!blocked) out[x] = static_cast<std::uint8_t>(i + 1);
        } else if (labels[x] == i + 1) {
            bool blocked = false;
            for (int z : p.lower_covers(x))
                if (labels[z] == i) {
                    blocked = true;
                    break;
                }
            if (!blocked) out[x] = static_cast<std::uint8_t>(i);
        }
    }
    return out;
}

inline Mask require_ideal(const Poset& p, Mask subset) {
    if (!is_ideal(p, subset)) fail(ErrorCode::NotAnIdeal, "subset is not down-closed");
    return subset;
}

inline Mask rowmotion_unchecked(const Poset& p, Mask ideal) {
    // Down-closure of the minimal elements of the complement.
    Mask out = 0;
    for (int x = 0; x < p.size(); ++x) {
        if ((ideal >> x) & 1) continue;
        if ((p.strictly_below(x) & ~ideal) == 0) out |= p.down_set(x);
    }
    return out;
}

inline Mask rowmotion_inverse_unchecked(const Poset& p, Mask ideal) {
    // Complement of the up-closure of the maximal elements of the ideal.
    Mask up = 0;
    for (Mask rest = ideal; rest != 0; rest &= rest - 1) {
        int x = std::countr_zero(rest);
        if ((p.strictly_above(x) & ideal) == 0) up |= p.up_set(x);
    }
    return p.all_elements() & ~up;
}

inline Mask toggle_ideal_unchecked(const Poset& p, Mask ideal, int x) {
    Mask bit = Mask{1} << x;
    if (ideal & bit) {
        if ((p.strictly_above(x) & ideal) == 0) return ideal & ~bit;
    } else {
        if ((p.strictly_below(x) & ~ideal) == 0) return ideal | bit;
    }
    return ideal;
}

}  // namespace detail

// Schuetzenberger promotion on a natural labeling: remove 1, repeatedly
// slide the minimum-label upper cover into the gap, decrement, place n.
inline Labels promote_natural(const Poset& p, const Labels& labels) {
    ValidationResult v = validate_packed(p, labels, p.size());
    if (!v.ok) fail(ErrorCode::NotNatural, v.violation);
    int n = p.size();
    if (n == 0) return labels;
    Labels lab = labels;
    int z = 0;
    for (int x = 0; x < n; ++x)
        if (labels[x] == 1) z = x;
    lab[z] = 0;
    while (!p.upper_covers(z).empty()) {
        int w = -1;
        for (int y : p.upper_covers(z))
            if (w < 0 || lab[y] < lab[w]) w = y;
        lab[z] = lab[w];
        lab[w] = 0;
        z = w;
    }
    Labels out(n);
    for (int x = 0; x < n; ++x)
        out[x] = x == z ? static_cast<std::uint8_t>(n)
                        : static_cast<std::uint8_t>(lab[x] - 1);
    return out;
}

inline Labels k_promote(const Poset& p, const Labels& labels, int m) {
    detail::require_packed(p, labels, m);
    return detail::k_promote_unchecked(p, labels, m);
}

inline Labels k_promote_inverse(const Poset& p, const Labels& labels, int m) {
    detail::require_packed(p, labels, m);
    return detail::k_promote_inverse_unchecked(p, labels, m);
}

// The i-th K-promotion toggle s_i, 1 <= i <= m-1.
inline Labels toggle_labeling(const Poset& p, const Labels& labels, int m, int i) {
    detail::require_packed(p, labels, m);
    if (i < 1 || i > m - 1)
        fail(ErrorCode::IndexOutOfRange,
             "toggle index " + std::to_string(i) + " outside [1," + std::to_string(m - 1) + "]");
    return detail::toggle_labeling_unchecked(p, labels, i);
}

// s_{m-1} s_{m-2} ... s_1, which equals one K-promotion step.
inline Labels k_promote_via_toggles(const Poset& p, const Labels& labels, int m) {
    detail::require_packed(p, labels, m);
    Labels out = labels;
    for (int i = 1; i <= m - 1; ++i) out = detail::toggle_labeling_unchecked(p, out, i);
    return out;
}

inline Mask toggle_ideal(const Poset& p, Mask ideal, int x) {
    detail::require_ideal(p, ideal);
    if (x < 0 || x >= p.size()) fail(ErrorCode::IndexOutOfRange, "toggle element out of range");
    return detail::toggle_ideal_unchecked(p, ideal, x);
}

inline Mask rowmotion(const Poset& p, Mask ideal) {
    detail::require_ideal(p, ideal);
    return detail::rowmotion_unchecked(p, ideal);
}

inline Mask rowmotion_inverse(const Poset& p, Mask ideal) {
    detail::require_ideal(p, ideal);
    return detail::rowmotion_inverse_unchecked(p, ideal);
}

// Toggle products along a linear extension: rowmotion toggles from top to
// bottom, its inverse from bottom to top.
inline Mask rowmotion_via_toggles(const Poset& p, Mask ideal,
                                  const std::vector<int>& extension) {
    detail::require_ideal(p, ideal);
    Mask out = ideal;
    for (auto it = extension.rbegin(); it != extension.rend(); ++it)
        out = detail::toggle_ideal_unchecked(p, out, *it);
    return out;
}

inline Mask rowmotion_inverse_via_toggles(const Poset& p, Mask ideal,
                                          const std::vector<int>& extension) {
    detail::require_ideal(p, ideal);
    Mask out = ideal;
    for (int x : extension) out = detail::toggle_ideal_unchecked(p, out, x);
    return out;
}

inline void require_equivariance_setup(const Poset& p, int m) {
    RankData rd = rank_data(p);
    if (!rd.is_ranked) fail(ErrorCode::PreconditionViolated, "poset is not ranked");
    if (!rd.uniform_maximal_chain_length)
        fail(ErrorCode::PreconditionViolated, "maximal chains have different lengths");
    if (m != p.height() + 2)
        fail(ErrorCode::PreconditionViolated,
             "need m = h+2 = " + std::to_string(p.height() + 2) + ", got " + std::to_string(m));
}

// pi: L -> { x : L(x) = rk x + 1 }, a bijection onto the restricted ideal
// set when all maximal chains have length h and m = h+2.
inline Mask pi_map(const Poset& p, const Labels& labels, int m) {
    require_equivariance_setup(p, m);
    detail::require_packed(p, labels, m);
    RankData rd = rank_data(p);
    Mask ideal = 0;
    for (int x = 0; x < p.size(); ++x)
        if (labels[x] == rd.ranks[x] + 1) ideal |= Mask{1} << x;
    return ideal;
}

// The h+2 rank ideals { x : rk x <= k } for k = -1..h; these are exactly
// the ideals missed by pi.
inline std::vector<Mask> rank_ideals(const Poset& p) {
    RankData rd = rank_data(p);
    if (!rd.is_ranked || !rd.uniform_maximal_chain_length)
        fail(ErrorCode::PreconditionViolated, "rank ideals need uniform maximal chain length");
    std::vector<Mask> out;
    for (int k = -1; k <= p.height(); ++k) {
        Mask ideal = 0;
        for (int x = 0; x < p.size(); ++x)
            if (rd.ranks[x] <= k) ideal |= Mask{1} << x;
        out.push_back(ideal);
    }
    return out;
}

// J'(P): all ideals except the rank ideals, in the canonical ideal order.
inline std::vector<Mask> restricted_ideals(const Poset& p) {
    std::vector<Mask> excluded = rank_ideals(p);
    std::vector<Mask> out;
    for (Mask ideal : ideals(p))
        if (std::find(excluded.begin(), excluded.end(), ideal) == excluded.end())
            out.push_back(ideal);
    return out;
}

}  // namespace pml
