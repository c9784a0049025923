#pragma once

// Orbit statistics and their exact averages, the homomesy and homometry
// checkers, and the cyclic sieving tester.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pml/bigint.hpp"
#include "pml/error.hpp"
#include "pml/labeling.hpp"
#include "pml/orbits.hpp"
#include "pml/polynomial.hpp"
#include "pml/poset.hpp"

namespace pml {

// Statistics are pure per-state evaluators over label sequences.
using Statistic = std::function<long long(const State&)>;

// M(L): number of minimally labeled elements.  The poset must be ranked.
inline Statistic stat_min_labeled(const Poset& p) {
    RankData rd = rank_data(p);
    if (!rd.is_ranked) fail(ErrorCode::NotRanked, "M statistic needs a ranked poset");
    std::vector<int> ranks = rd.ranks;
    return [ranks](const State& labels) {
        long long count = 0;
        for (std::size_t x = 0; x < labels.size(); ++x)
            if (labels[x] == ranks[x] + 1) ++count;
        return count;
    };
}

inline Statistic stat_label_of(int element) {
    return [element](const State& labels) {
        if (element < 0 || element >= static_cast<int>(labels.size()))
            fail(ErrorCode::IndexOutOfRange, "statistic element out of range");
        return static_cast<long long>(labels[element]);
    };
}

inline Statistic stat_label_sum() {
    return [](const State& labels) {
        long long sum = 0;
        for (auto v : labels) sum += v;
        return sum;
    };
}

inline long long statistic_sum(const std::vector<State>& orbit, const Statistic& stat) {
    long long sum = 0;
    for (auto& s : orbit) sum += stat(s);
    return sum;
}

inline Fraction orbit_average(const std::vector<State>& orbit, const Statistic& stat) {
    if (orbit.empty()) fail(ErrorCode::InvalidParameter, "empty orbit has no average");
    return Fraction(BigInt(statistic_sum(orbit, stat)), BigInt(orbit.size()));
}

struct HomomesyReport {
    bool homomesic = false;
    std::optional<Fraction> constant;  // set when homomesic
    std::vector<Fraction> averages;    // one per orbit, decomposition order
};

inline HomomesyReport homomesy_check(const OrbitDecomposition& decomp, const Statistic& stat) {
    HomomesyReport report;
    for (auto& orbit : decomp.orbits) report.averages.push_back(orbit_average(orbit, stat));
    report.homomesic = !report.averages.empty();
    for (auto& avg : report.averages)
        if (avg != report.averages.front()) report.homomesic = false;
    if (report.homomesic) report.constant = report.averages.front();
    return report;
}

struct HomometryReport {
    bool homometric = false;
    // size -> statistic sums observed over orbits of that size
    std::map<std::size_t, std::vector<long long>> sums_by_size;
};

inline HomometryReport homometry_check(const OrbitDecomposition& decomp, const Statistic& stat) {
    HomometryReport report;
    for (auto& orbit : decomp.orbits)
        report.sums_by_size[orbit.size()].push_back(statistic_sum(orbit, stat));
    report.homometric = true;
    for (auto& [size, sums] : report.sums_by_size)
        for (auto& sum : sums)
            if (sum != sums.front()) report.homometric = false;
    return report;
}

struct CspRow {
    unsigned long long d = 0;
    unsigned long long fixed_points = 0;
    std::complex<double> value;
    bool match = false;
};

struct CspReport {
    unsigned long long action_order = 1;  // N, the order of the cyclic group
    std::vector<CspRow> rows;
    bool holds = false;
};

// Fixed points of the d-th power of the action come from orbit sizes alone:
// an orbit of size s is pointwise fixed by g^d exactly when s | d.
inline CspReport csp_check(const OrbitDecomposition& decomp, const IntPolynomial& f) {
    CspReport report;
    if (decomp.order > BigInt(1000000))
        fail(ErrorCode::LimitExceeded, "action order too large for a row-by-row CSP report");
    report.action_order = decomp.order.convert_to<unsigned long long>();
    auto multiset = decomp.size_multiset();

    constexpr double kTol = 1e-6;
    const double pi = std::acos(-1.0);
    for (unsigned long long d = 0; d < report.action_order; ++d) {
        CspRow row;
        row.d = d;
        for (auto& [size, count] : multiset)
            if (d % size == 0) row.fixed_points += size * count;
        if (d == 0) {
            // Exact at the identity: f(1) against the full state count.
            BigInt value = f.eval(BigInt(1));
            row.value = {static_cast<double>(value), 0.0};
            row.match = value == BigInt(row.fixed_points);
        } else {
            double angle = 2.0 * pi * static_cast<double>(d) / static_cast<double>(report.action_order);
            row.value = f.eval(std::polar(1.0, angle));
            double rounded = std::round(row.value.real());
            row.match = std::abs(row.value.imag()) < kTol &&
                        std::abs(row.value.real() - rounded) < kTol &&
                        static_cast<long long>(rounded) ==
                            static_cast<long long>(row.fixed_points);
        }
        report.rows.push_back(row);
    }
    report.holds = true;
    for (auto& row : report.rows)
        if (!row.match) report.holds = false;
    return report;
}

}  // namespace pml
