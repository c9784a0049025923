#pragma once

// Theorem-by-theorem verification checks and reproduction of the published
// orbit tables for combs and zippers.  Checks accumulate per-clause results
// instead of aborting on the first failure, so a regression pinpoints the
// exact divergent cell.

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pml/analysis.hpp"
#include "pml/bigint.hpp"
#include "pml/dynamics.hpp"
#include "pml/labeling.hpp"
#include "pml/orbits.hpp"
#include "pml/poset.hpp"

namespace pml {

struct CheckClause {
    std::string name;
    bool pass = false;
    std::string details;
};

struct CheckReport {
    std::string check;
    std::string subject;
    std::vector<CheckClause> clauses;
    std::vector<std::string> notes;

    bool pass() const {
        for (auto& c : clauses)
            if (!c.pass) return false;
        return true;
    }

    void require(const std::string& name, bool ok, const std::string& details = "") {
        clauses.push_back({name, ok, details});
    }

    void note(const std::string& text) { notes.push_back(text); }
};

namespace detail {

inline bool exists_packed(const Poset& p, int m) {
    bool any = false;
    for_each_packed(p, m, [&](const Labels&) {
        any = true;
        return false;
    });
    return any;
}

}  // namespace detail

// Non-emptiness window: m-packed labelings exist exactly for
// h(P)+1 <= m <= #P.  Probes every m in [1, n+1].
inline CheckReport check_existence(const Poset& p, const std::string& subject = "poset") {
    CheckReport report{"existence", subject, {}, {}};
    int h = p.height(), n = p.size();
    for (int m = 1; m <= n + 1; ++m) {
        bool expected = m >= h + 1 && m <= n;
        bool actual = detail::exists_packed(p, m);
        report.require("m=" + std::to_string(m), actual == expected,
                       actual == expected
                           ? ""
                           : (actual ? "labelings exist outside the window"
                                     : "no labelings inside the window"));
    }
    return report;
}

// Trunk reduction: removing the trunk T (|T| = t) gives the same orbit
// structure at m' = m - t, and the label shift commutes with K-promotion
// pointwise.
inline CheckReport check_trunk(const Poset& p, const std::string& subject = "poset") {
    CheckReport report{"trunk", subject, {}, {}};
    TrunkInfo info = trunk(p);
    if (info.t == 0) {
        report.note("empty trunk; reduction is trivial");
        report.require("trunk-empty", true);
        return report;
    }
    auto removed = remove_trunk(p);
    const Poset& reduced = removed.first;
    const int t = removed.second;
    Mask dropped = elements_to_mask(info.trunk);
    std::vector<int> keep;
    for (int x = 0; x < p.size(); ++x)
        if (!((dropped >> x) & 1)) keep.push_back(x);
    auto shift = [&](const Labels& labels) {
        Labels out(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i)
            out[i] = static_cast<std::uint8_t>(labels[keep[i]] - t);
        return out;
    };

    for (int m = p.height() + 1; m <= p.size(); ++m) {
        auto big = orbit_decomposition(p, m, Operator::KPromotion);
        auto small = orbit_decomposition(reduced, m - t, Operator::KPromotion);
        report.require("multiset m=" + std::to_string(m),
                       big.size_multiset() == small.size_multiset(),
                       multiset_to_string(big.size_multiset()) + " vs " +
                           multiset_to_string(small.size_multiset()));
        bool commutes = true;
        for_each_packed(p, m, [&](const Labels& l) {
            commutes = shift(detail::k_promote_unchecked(p, l, m)) ==
                       detail::k_promote_unchecked(reduced, shift(l), m - t);
            return commutes;
        });
        report.require("shift commutes m=" + std::to_string(m), commutes);
    }
    return report;
}

// Branch divisibility: a branch on k <= m-2 vertices forces m-1 | o(dK),
// and when gcd(k, m-1) = 1 it divides every orbit size.
inline CheckReport check_branch_divisibility(const Poset& p, int m,
                                             const std::string& subject = "poset") {
    CheckReport report{"branch-divisibility", subject + ", m=" + std::to_string(m), {}, {}};
    std::vector<int> branch_sizes;
    for (auto& b : branches(p))
        if (1 <= static_cast<int>(b.size()) && static_cast<int>(b.size()) <= m - 2)
            branch_sizes.push_back(static_cast<int>(b.size()));
    if (branch_sizes.empty()) {
        report.note("no branch on k <= m-2 vertices; hypotheses not met");
        report.require("vacuous", true);
        return report;
    }
    if (!detail::exists_packed(p, m)) {
        report.note("no m-packed labelings; hypotheses not met");
        report.require("vacuous", true);
        return report;
    }
    auto decomp = orbit_decomposition(p, m, Operator::KPromotion);
    report.require("m-1 divides order", decomp.order % (m - 1) == 0,
                   "order = " + decomp.order.str());
    for (int k : branch_sizes) {
        if (std::gcd(k, m - 1) != 1) continue;
        bool all = true;
        for (auto& orbit : decomp.orbits)
            if (orbit.size() % (m - 1) != 0) all = false;
        report.require("m-1 divides every orbit size (branch k=" + std::to_string(k) + ")", all,
                       multiset_to_string(decomp.size_multiset()));
    }
    return report;
}

// Orbit structure of a bounded union at the minimum usable m.  A product of
// a c-cycle and a d-cycle splits into gcd(c,d) cycles of length lcm(c,d),
// so each orbit pair contributes lcm(c_i,d_j) with multiplicity gcd(c_i,d_j).
inline CheckReport check_bounded_union(const Poset& p, const Poset& q,
                                       const std::string& subject = "bounded union") {
    CheckReport report{"bounded-union", subject, {}, {}};
    if (p.height() != q.height())
        fail(ErrorCode::PreconditionViolated, "parts must have equal height");
    int m = p.height() + 1;
    auto dp = orbit_decomposition(p, m, Operator::KPromotion);
    auto dq = orbit_decomposition(q, m, Operator::KPromotion);
    std::map<std::size_t, std::size_t> predicted;
    for (auto& op : dp.orbits)
        for (auto& oq : dq.orbits) {
            std::size_t c = op.size(), d = oq.size();
            predicted[std::lcm(c, d)] += std::gcd(c, d);
        }
    auto actual = orbit_decomposition(bounded_union(p, q), m + 1, Operator::KPromotion);
    SizeMultiset predicted_ms(predicted.begin(), predicted.end());
    report.require("multiset", predicted_ms == actual.size_multiset(),
                   "predicted " + multiset_to_string(predicted_ms) + ", computed " +
                       multiset_to_string(actual.size_multiset()));
    return report;
}

// Equivariance at m = h+2 on posets whose maximal chains all have length h:
// pi is a bijection onto the restricted ideals, it intertwines K-promotion
// with inverse rowmotion, and the excluded rank ideals form one rowmotion
// orbit of size h+2.
inline CheckReport check_equivariance(const Poset& p, const std::string& subject = "poset") {
    CheckReport report{"equivariance", subject, {}, {}};
    int m = p.height() + 2;
    require_equivariance_setup(p, m);

    auto labelings = enumerate_packed(p, m);
    auto restricted = restricted_ideals(p);
    std::set<Mask> restricted_set(restricted.begin(), restricted.end());
    std::set<Mask> image;
    bool all_in = true;
    for (auto& l : labelings) {
        Mask ideal = pi_map(p, l, m);
        image.insert(ideal);
        if (!restricted_set.count(ideal)) all_in = false;
    }
    report.require("pi lands in restricted ideals", all_in);
    report.require("pi injective", image.size() == labelings.size(),
                   std::to_string(image.size()) + " images of " +
                       std::to_string(labelings.size()) + " labelings");
    report.require("pi surjective", image == restricted_set,
                   std::to_string(labelings.size()) + " labelings vs " +
                       std::to_string(restricted.size()) + " restricted ideals");

    bool pointwise = true;
    for (auto& l : labelings) {
        Mask lhs = pi_map(p, detail::k_promote_unchecked(p, l, m), m);
        Mask rhs = detail::rowmotion_inverse_unchecked(p, pi_map(p, l, m));
        if (lhs != rhs) {
            pointwise = false;
            break;
        }
    }
    report.require("pi . kpromotion = rowmotion-inverse . pi", pointwise);

    std::vector<Mask> excluded = rank_ideals(p);
    std::set<Mask> excluded_set(excluded.begin(), excluded.end());
    Mask start = excluded.front();
    std::set<Mask> visited;
    Mask cur = start;
    do {
        visited.insert(cur);
        cur = detail::rowmotion_unchecked(p, cur);
    } while (cur != start && visited.size() <= excluded_set.size() + 1);
    report.require("rank ideals form one rowmotion orbit of size h+2",
                   visited == excluded_set,
                   "orbit of the empty ideal has size " + std::to_string(visited.size()));
    return report;
}

// Order of K-promotion on an extended star: 1 when every branch has m-1
// vertices (the labeling is forced), m-1 otherwise.
inline CheckReport check_star_order(const std::vector<int>& branch_sizes, int m) {
    std::string subject = "star(";
    for (std::size_t i = 0; i < branch_sizes.size(); ++i)
        subject += (i ? "," : "") + std::to_string(branch_sizes[i]);
    subject += "), m=" + std::to_string(m);
    CheckReport report{"star-order", subject, {}, {}};

    Poset star = extended_star(branch_sizes);
    if (!detail::exists_packed(star, m)) {
        report.note("no m-packed labelings for this m; nothing to check");
        report.require("vacuous", true);
        return report;
    }
    bool forced = true;
    for (int b : branch_sizes)
        if (b != m - 1) forced = false;
    BigInt expected = forced ? 1 : m - 1;
    BigInt actual = order_of(star, m, Operator::KPromotion);
    report.require("order", actual == expected,
                   "computed " + actual.str() + ", expected " + expected.str());
    return report;
}

// Uniform stars S(b^k) at m = b+2: all orbits have size b+1, there are
// (b+1)^(k-1) - 1 of them, and the minimally-labeled-count statistic sums
// to b+1 + k*C(b+1,2) on every orbit, hence is homomesic.
inline CheckReport check_star_uniform(int b, int k) {
    CheckReport report{"star-uniform",
                       "star(" + std::to_string(b) + "^" + std::to_string(k) + "), m=" +
                           std::to_string(b + 2),
                       {},
                       {}};
    if (b < 1 || k < 1) fail(ErrorCode::InvalidParameter, "need b >= 1, k >= 1");
    Poset star = extended_star(std::vector<int>(k, b));
    int m = b + 2;
    if (m > star.size()) {
        report.note("m = b+2 exceeds the element count (k = 1); no labelings");
        report.require("vacuous", true);
        return report;
    }
    auto decomp = orbit_decomposition(star, m, Operator::KPromotion);
    bool sizes_ok = true;
    for (auto& orbit : decomp.orbits)
        if (orbit.size() != static_cast<std::size_t>(b + 1)) sizes_ok = false;
    report.require("every orbit has size b+1", sizes_ok,
                   multiset_to_string(decomp.size_multiset()));

    // The labelings correspond to the non-constant tuples of per-branch
    // omitted labels, so the source's stated count (b+1)^(k-1) overshoots by
    // the one rotation class of constant tuples.
    BigInt expected_count = 1;
    for (int i = 0; i < k - 1; ++i) expected_count *= b + 1;
    expected_count -= 1;
    report.require("orbit count is (b+1)^(k-1) - 1",
                   BigInt(decomp.orbits.size()) == expected_count,
                   "computed " + std::to_string(decomp.orbits.size()) + ", expected " +
                       expected_count.str());
    report.note("source states (b+1)^(k-1) orbits; the constant omission tuples are not "
                "m-packed, which removes exactly one orbit");

    long long expected_sum = (b + 1) + static_cast<long long>(k) * (b + 1) * b / 2;
    Statistic stat = stat_min_labeled(star);
    bool sums_ok = true;
    for (auto& orbit : decomp.orbits)
        if (statistic_sum(orbit, stat) != expected_sum) sums_ok = false;
    report.require("orbit sum of M is b+1 + k*C(b+1,2)", sums_ok,
                   "expected " + std::to_string(expected_sum));

    auto hom = homomesy_check(decomp, stat);
    Fraction expected_avg(BigInt(expected_sum), BigInt(b + 1));
    report.require("M homomesic with the stated constant",
                   hom.homomesic && hom.constant && *hom.constant == expected_avg);
    return report;
}

// Combs at the maximum m = 2n: every orbit has size (2n-1) double-falling
// ceil(n/2).
inline CheckReport check_comb_max(int n) {
    CheckReport report{"comb-max", "comb(" + std::to_string(n) + "), m=" + std::to_string(2 * n),
                       {},
                       {}};
    BigInt expected = double_falling(2 * n - 1, (n + 1) / 2);
    auto decomp = orbit_decomposition(comb(n), 2 * n, Operator::KPromotion);
    bool ok = true;
    for (auto& orbit : decomp.orbits)
        if (BigInt(orbit.size()) != expected) ok = false;
    report.require("every orbit has size (2n-1) falling-falling ceil(n/2)", ok,
                   "expected " + expected.str() + ", computed " +
                       multiset_to_string(decomp.size_multiset()));
    return report;
}

inline CheckReport check_comb_min(int n) {
    CheckReport report{"comb-min",
                       "comb(" + std::to_string(n) + "), m=" + std::to_string(n + 1),
                       {},
                       {}};
    std::size_t expected = 1;
    for (int i = 2; i <= n; ++i) expected = std::lcm(expected, static_cast<std::size_t>(i));
    auto decomp = orbit_decomposition(comb(n), n + 1, Operator::KPromotion);
    bool ok = !decomp.orbits.empty();
    for (auto& orbit : decomp.orbits)
        if (orbit.size() != expected) ok = false;
    report.require("every orbit has size lcm(1..n)", ok,
                   "expected " + std::to_string(expected) + ", computed " +
                       multiset_to_string(decomp.size_multiset()));
    return report;
}

inline CheckReport check_zipper_min(int n) {
    CheckReport report{"zipper-min",
                       "zipper(" + std::to_string(n) + "), m=" + std::to_string(n + 2),
                       {},
                       {}};
    std::size_t expected = 1;
    for (int i = 2; i <= n; ++i) expected = std::lcm(expected, static_cast<std::size_t>(i));
    auto decomp = orbit_decomposition(zipper(n), n + 2, Operator::KPromotion);
    bool ok = !decomp.orbits.empty();
    for (auto& orbit : decomp.orbits)
        if (orbit.size() != expected) ok = false;
    report.require("every orbit has size lcm(1..n)", ok,
                   "expected " + std::to_string(expected) + ", computed " +
                       multiset_to_string(decomp.size_multiset()));
    return report;
}

// Orbit structure of the three-leaf tree T(c) for the top three values of m.
inline CheckReport check_three_leaf(int c) {
    CheckReport report{"three-leaf", "t3(" + std::to_string(c) + ")", {}, {}};
    Poset t = three_leaf_tree(c);
    int n = t.size();
    bool even = c % 2 == 0;
    auto expect = [&](int m) -> SizeMultiset {
        std::size_t len = static_cast<std::size_t>(m - 1);
        if (m == n - 2) return {{len, 1}};
        if (m == n - 1) {
            if (even) return {{len, 3}};
            return {{len, 1}, {2 * len, 1}};
        }
        if (even) return {{len, 2}};
        return {{2 * len, 1}};
    };
    for (int m = n - 2; m <= n; ++m) {
        auto decomp = orbit_decomposition(t, m, Operator::KPromotion);
        report.require("multiset m=" + std::to_string(m), decomp.size_multiset() == expect(m),
                       "expected " + multiset_to_string(expect(m)) + ", computed " +
                           multiset_to_string(decomp.size_multiset()));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Published-table reproduction.

enum class TableFamily { Comb, Zipper };

struct TableRow {
    std::string poset;
    int n = 0;
    int m = 0;
    SizeMultiset multiset;
    BigInt order;
    bool has_reference = false;
    bool match = false;       // meaningful when has_reference
    std::string note;         // source discrepancies
};

struct TableReport {
    std::vector<TableRow> rows;

    bool all_match() const {
        for (auto& row : rows)
            if (row.has_reference && !row.match) return false;
        return true;
    }
};

namespace detail {

struct GoldenRow {
    int n;
    int m;
    SizeMultiset multiset;
    long long order;
    const char* note;  // nullptr when the source cell is clean
};

// Comb orbit sizes and orders.  One source cell is internally inconsistent:
// the C_4, m=6 row prints order 60 next to orbit sizes whose lcm is 120; the
// corrected order is recorded here and the row is flagged.
inline const std::vector<GoldenRow>& comb_golden() {
    static const std::vector<GoldenRow> rows = {
        {3, 4, {{6, 1}}, 6, nullptr},
        {3, 5, {{8, 1}, {12, 1}}, 24, nullptr},
        {3, 6, {{15, 1}}, 15, nullptr},
        {4, 5, {{12, 2}}, 12, nullptr},
        {4, 6, {{15, 2}, {40, 1}, {60, 1}}, 120,
         "source prints order 60, but the lcm of its own orbit sizes is 120"},
        {4, 7, {{30, 3}, {48, 1}, {72, 1}}, 720, nullptr},
        {4, 8, {{35, 3}}, 35, nullptr},
        {5, 6, {{60, 2}}, 60, nullptr},
        {5, 7, {{30, 6}, {60, 6}, {72, 2}, {120, 2}}, 360, nullptr},
        {5, 8, {{35, 6}, {70, 6}, {140, 2}, {210, 3}, {336, 1}, {504, 1}}, 5040, nullptr},
        {5, 9, {{240, 3}, {280, 3}, {384, 1}, {576, 1}}, 40320, nullptr},
        {5, 10, {{315, 3}}, 315, nullptr},
        {6, 7, {{60, 12}}, 60, nullptr},
        {6, 8, {{70, 12}, {210, 6}, {420, 6}, {504, 2}, {840, 2}}, 2520, nullptr},
        {6, 9,
         {{240, 6}, {280, 26}, {336, 8}, {480, 6}, {504, 8}, {576, 2}, {840, 6}, {960, 2}},
         20160, nullptr},
        {6, 10,
         {{315, 26}, {378, 8}, {567, 8}, {576, 9}, {720, 9}, {945, 6}, {1152, 3}, {2520, 3}},
         362880, nullptr},
        {6, 11, {{630, 15}, {640, 9}, {800, 9}, {1280, 3}, {2800, 3}}, 403200, nullptr},
        {6, 12, {{693, 15}}, 693, nullptr},
    };
    return rows;
}

// Zipper orbit sizes and orders.  Two source cells carry typos: the Z_2,
// m=7 row separates two entries with a period, and the Z_2, m=10 row prints
// 2216^84 where only 216^84 is consistent with its order 216.
inline const std::vector<GoldenRow>& zipper_golden() {
    static const std::vector<GoldenRow> rows = {
        {1, 3, {{1, 1}}, 1, nullptr},
        {1, 4, {{2, 2}, {3, 2}, {6, 2}}, 6, nullptr},
        {1, 5, {{2, 1}, {4, 1}, {8, 12}}, 8, nullptr},
        {1, 6, {{10, 16}}, 10, nullptr},
        {1, 7, {{4, 2}, {12, 6}}, 12, nullptr},
        {2, 4, {{2, 2}}, 2, nullptr},
        {2, 5, {{3, 3}, {6, 12}, {8, 6}, {24, 6}}, 24, nullptr},
        {2, 6, {{8, 8}, {10, 12}, {15, 108}, {30, 36}, {40, 8}, {120, 6}}, 120, nullptr},
        {2, 7, {{4, 2}, {9, 54}, {12, 6}, {18, 378}, {36, 60}, {48, 80}, {144, 60}}, 144,
         "source separates '48^80' and '144^60' with a period; read as a comma"},
        {2, 8, {{21, 540}, {42, 30}, {56, 300}, {168, 180}}, 168, nullptr},
        {2, 9, {{6, 3}, {12, 39}, {24, 216}, {64, 588}, {192, 210}}, 192, nullptr},
        {2, 10, {{72, 560}, {216, 84}}, 216,
         "source prints 2216^84; corrected to 216^84, consistent with order 216"},
        {2, 11, {{16, 8}, {80, 200}}, 80, nullptr},
    };
    return rows;
}

inline const GoldenRow* find_golden(TableFamily family, int n, int m) {
    const auto& rows = family == TableFamily::Comb ? comb_golden() : zipper_golden();
    for (auto& row : rows)
        if (row.n == n && row.m == m) return &row;
    return nullptr;
}

}  // namespace detail

// Computes the K-promotion orbit table for a family over [n_lo, n_hi] and
// every valid m (or the given m range), comparing each cell against the
// published reference values where those exist.  Cells are independent and
// are fanned out to `threads` workers; the output is deterministic.
inline TableReport reproduce_table(TableFamily family, int n_lo, int n_hi,
                                   std::optional<std::pair<int, int>> m_range = std::nullopt,
                                   int threads = 1) {
    if (n_lo < 1 || n_hi < n_lo) fail(ErrorCode::InvalidParameter, "bad n range");
    struct Cell {
        int n, m;
    };
    std::vector<Cell> cells;
    std::vector<Poset> posets;  // one per n, indexed by n - n_lo
    for (int n = n_lo; n <= n_hi; ++n) {
        Poset p = family == TableFamily::Comb ? comb(n) : zipper(n);
        int lo = p.height() + 1, hi = p.size();
        if (m_range) {
            lo = std::max(lo, m_range->first);
            hi = std::min(hi, m_range->second);
        }
        for (int m = lo; m <= hi; ++m) cells.push_back({n, m});
        posets.push_back(std::move(p));
    }

    TableReport report;
    report.rows.resize(cells.size());
    auto compute_cell = [&](std::size_t i) {
        const auto& cell = cells[i];
        const Poset& p = posets[cell.n - n_lo];
        auto decomp = orbit_decomposition(p, cell.m, Operator::KPromotion);
        TableRow row;
        row.poset = (family == TableFamily::Comb ? "comb:" : "zipper:") + std::to_string(cell.n);
        row.n = cell.n;
        row.m = cell.m;
        row.multiset = decomp.size_multiset();
        row.order = decomp.order;
        if (const auto* golden = detail::find_golden(family, cell.n, cell.m)) {
            row.has_reference = true;
            row.match = row.multiset == golden->multiset && row.order == BigInt(golden->order);
            if (golden->note) row.note = golden->note;
        }
        report.rows[i] = std::move(row);
    };

    int nworkers = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(std::max(threads, 1)), std::max<std::size_t>(cells.size(), 1)));
    if (nworkers <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) compute_cell(i);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nworkers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < cells.size(); i += nworkers) compute_cell(i);
            });
        for (auto& t : pool) t.join();
    }
    return report;
}

}  // namespace pml
