#include <gtest/gtest.h>

#include <set>

#include "pml/dynamics.hpp"
#include "pml/labeling.hpp"
#include "pml/poset.hpp"
#include "support/oracles.hpp"
#include "support/pool.hpp"

using namespace pml;

namespace {

Poset graded_122_poset() { return Poset(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}); }

// Eight-element toggle example: bottom 0; middle 1,2,3; upper
// 4,5,6; top 7.
Poset toggle_example_poset() {
    return Poset(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {3, 6},
                     {4, 7}, {5, 7}, {6, 7}});
}

}  // namespace

TEST(Dynamics, PromoteNaturalWorkedExample) {
    EXPECT_EQ(promote_natural(graded_122_poset(), {1, 2, 3, 4, 5}), (Labels{1, 3, 2, 5, 4}));
    EXPECT_EQ(promote_natural(chain(4), {1, 2, 3, 4}), (Labels{1, 2, 3, 4}));
    EXPECT_THROW(promote_natural(graded_122_poset(), {1, 2, 2, 3, 4}), Error);
}

TEST(Dynamics, PromotionOrbitAgainstStepOracle) {
    Poset p = comb(2);
    auto naturals = enumerate_packed(p, 4);
    ASSERT_EQ(naturals.size(), 3u);
    std::set<Labels> seen;
    auto walk = pml::testsupport::oracle_walk(naturals[0],
                                          [&](const Labels& l) { return promote_natural(p, l); });
    for (auto& l : walk) seen.insert(l);
    EXPECT_EQ(seen.size(), walk.size());
    // The step-by-step walk ends where iterated application says it does.
    Labels cur = naturals[0];
    for (std::size_t i = 0; i < walk.size(); ++i) {
        EXPECT_EQ(cur, walk[i]);
        cur = promote_natural(p, cur);
    }
    EXPECT_EQ(cur, naturals[0]);
}

TEST(Dynamics, KPromoteWorkedExamples) {
    EXPECT_EQ(k_promote(graded_122_poset(), {1, 2, 2, 3, 4}, 4), (Labels{1, 2, 2, 4, 3}));
    EXPECT_EQ(k_promote(chain(5), {1, 2, 3, 4, 5}, 5), (Labels{1, 2, 3, 4, 5}));

    // First orbit of the three-leaf tree at m = 5: layout x0,x1,x2,u,v,w.
    Poset t2 = three_leaf_tree(2);
    EXPECT_EQ(k_promote(t2, {1, 2, 3, 5, 4, 5}, 5), (Labels{1, 2, 3, 4, 5, 4}));

    EXPECT_THROW(k_promote(graded_122_poset(), {1, 2, 2, 3, 3}, 4), Error);
}

TEST(Dynamics, KPromoteInverseWorkedExample) {
    EXPECT_EQ(k_promote_inverse(graded_122_poset(), {1, 2, 2, 4, 3}, 4), (Labels{1, 2, 2, 3, 4}));
    EXPECT_EQ(k_promote_inverse(chain(5), {1, 2, 3, 4, 5}, 5), (Labels{1, 2, 3, 4, 5}));
}

TEST(Dynamics, RoundtripOnFamilies) {
    std::vector<Poset> posets{chain(6),  comb(3),    comb(4),           comb(5),
                              zipper(1), zipper(2),  three_leaf_tree(2), three_leaf_tree(5),
                              extended_star({2, 3}), extended_star({1, 2, 3})};
    for (auto& p : posets) {
        for (int m = p.height() + 1; m <= p.size(); ++m) {
            for_each_packed(p, m, [&](const Labels& l) {
                Labels forward = k_promote(p, l, m);
                EXPECT_TRUE(validate_packed(p, forward, m).ok);
                EXPECT_EQ(k_promote_inverse(p, forward, m), l);
                EXPECT_EQ(k_promote(p, k_promote_inverse(p, l, m), m), l);
                return true;
            });
        }
    }
}

TEST(Dynamics, ToggleWorkedExample) {
    Poset p = toggle_example_poset();
    Labels l{1, 3, 2, 2, 5, 4, 3, 6};
    EXPECT_EQ(toggle_labeling(p, l, 6, 2), (Labels{1, 2, 3, 2, 5, 4, 3, 6}));

    // On a chain every label is forced, so toggles do nothing.
    for (int i = 1; i <= 4; ++i)
        EXPECT_EQ(toggle_labeling(chain(5), {1, 2, 3, 4, 5}, 5, i), (Labels{1, 2, 3, 4, 5}));

    EXPECT_THROW(toggle_labeling(p, l, 6, 0), Error);
    EXPECT_THROW(toggle_labeling(p, l, 6, 6), Error);
}

TEST(Dynamics, TogglesAreInvolutionsAndMatchKPromotion) {
    auto pool = pml::testsupport::posets_with_bottom(4);
    auto extra = pml::testsupport::random_bottom_pool(40, 7, 2024);
    pool.insert(pool.end(), extra.begin(), extra.end());
    for (auto& p : pool) {
        for (int m = p.height() + 1; m <= p.size(); ++m) {
            for_each_packed(p, m, [&](const Labels& l) {
                for (int i = 1; i <= m - 1; ++i) {
                    Labels once = toggle_labeling(p, l, m, i);
                    EXPECT_TRUE(validate_packed(p, once, m).ok);
                    EXPECT_EQ(toggle_labeling(p, once, m, i), l);
                }
                EXPECT_EQ(k_promote_via_toggles(p, l, m), k_promote(p, l, m));
                return true;
            });
        }
    }
}

TEST(Dynamics, IdealToggles) {
    Poset p = graded_122_poset();
    for (Mask ideal : ideals(p)) {
        for (int x = 0; x < p.size(); ++x) {
            Mask once = toggle_ideal(p, ideal, x);
            EXPECT_TRUE(is_ideal(p, once));
            EXPECT_EQ(toggle_ideal(p, once, x), ideal);
        }
    }
    EXPECT_THROW(toggle_ideal(p, Mask{1} << 3, 0), Error);  // {3} is not down-closed
}

TEST(Dynamics, RowmotionSmallCases) {
    Poset two = chain(2);
    Mask empty = 0, bottom = 1, full = 3;
    EXPECT_EQ(rowmotion(two, empty), bottom);
    EXPECT_EQ(rowmotion(two, bottom), full);
    EXPECT_EQ(rowmotion(two, full), empty);

    // On an antichain, rowmotion is complementation.
    Poset anti(4, {});
    for (Mask ideal = 0; ideal < 16; ++ideal)
        EXPECT_EQ(rowmotion(anti, ideal), 0xFu & ~ideal);
}

TEST(Dynamics, RowmotionOrbitOfEmptyContainsRankIdeals) {
    Poset p = graded_122_poset();
    std::set<Mask> orbit_set;
    Mask cur = 0;
    do {
        orbit_set.insert(cur);
        cur = rowmotion(p, cur);
    } while (cur != 0);
    std::set<Mask> expected{0, 0b00001, 0b00111, 0b11111};
    EXPECT_EQ(orbit_set, expected);
}

namespace {

// A second linear extension, breaking ties toward the largest index.
std::vector<int> extension_largest_first(const Poset& p) {
    int n = p.size();
    std::vector<int> indeg(n), out;
    for (int x = 0; x < n; ++x) indeg[x] = static_cast<int>(p.lower_covers(x).size());
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int x = n - 1; x >= 0; --x)
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

}  // namespace

TEST(Dynamics, RowmotionToggleProductsAndInverse) {
    auto pool = pml::testsupport::posets_with_bottom(4);
    pool.push_back(Poset(4, {}));
    pool.push_back(Poset(4, {{3, 1}, {1, 0}, {3, 2}}));
    for (auto& p : pool) {
        auto canonical = linear_extension(p);
        auto alternate = extension_largest_first(p);
        for (Mask ideal : ideals(p)) {
            Mask direct = rowmotion(p, ideal);
            EXPECT_EQ(rowmotion_via_toggles(p, ideal, canonical), direct);
            EXPECT_EQ(rowmotion_via_toggles(p, ideal, alternate), direct);
            Mask inv = rowmotion_inverse(p, ideal);
            EXPECT_EQ(rowmotion_inverse_via_toggles(p, ideal, canonical), inv);
            EXPECT_EQ(rowmotion_inverse_via_toggles(p, ideal, alternate), inv);
            EXPECT_EQ(rowmotion(p, inv), ideal);
            EXPECT_EQ(rowmotion_inverse(p, direct), ideal);
        }
    }
}

TEST(Dynamics, PiMapWorkedExample) {
    Poset p = graded_122_poset();
    EXPECT_EQ(pi_map(p, {1, 2, 2, 3, 4}, 4), Mask{0b01111});

    auto labelings = enumerate_packed(p, 4);
    ASSERT_EQ(labelings.size(), 4u);
    std::set<Mask> images;
    for (auto& l : labelings) images.insert(pi_map(p, l, 4));
    EXPECT_EQ(images.size(), labelings.size());

    auto restricted = restricted_ideals(p);
    EXPECT_EQ(std::set<Mask>(restricted.begin(), restricted.end()), images);

    EXPECT_THROW(pi_map(p, {1, 2, 2, 3, 4}, 5), Error);
    EXPECT_THROW(pi_map(comb(2), {1, 2, 2, 3}, 4), Error);  // chains of unequal length
}

TEST(Dynamics, RestrictedIdealsCount) {
    // |L_{h+2}(P)| = |J(P)| - (h+2) on eligible posets.
    std::vector<Poset> posets{graded_122_poset(), extended_star({2, 2}), extended_star({3, 3, 3}),
                              chain(4)};
    for (auto& p : posets) {
        int m = p.height() + 2;
        if (m > p.size()) continue;
        auto restricted = restricted_ideals(p);
        EXPECT_EQ(restricted.size(), ideals(p).size() - (p.height() + 2));
        EXPECT_EQ(BigInt(restricted.size()), count_packed(p, m));
    }
}

TEST(Dynamics, EquivariancePointwise) {
    std::vector<Poset> posets{graded_122_poset(), extended_star({2, 2}), extended_star({2, 2, 2})};
    for (auto& p : posets) {
        int m = p.height() + 2;
        for_each_packed(p, m, [&](const Labels& l) {
            EXPECT_EQ(pi_map(p, k_promote(p, l, m), m), rowmotion_inverse(p, pi_map(p, l, m)));
            return true;
        });
    }
}

TEST(Dynamics, ToggleTheoremOnFamilyPosets) {
    std::vector<Poset> posets{comb(5), zipper(2), three_leaf_tree(6), extended_star({3, 3, 3})};
    for (auto& p : posets) {
        for (int m = p.height() + 1; m <= std::min(p.size(), p.height() + 3); ++m) {
            for_each_packed(p, m, [&](const Labels& l) {
                EXPECT_EQ(k_promote_via_toggles(p, l, m), k_promote(p, l, m));
                return true;
            });
        }
    }
}

TEST(Dynamics, KPromotionRestrictsToPromotionOnNaturalLabelings) {
    // At m = n the unlabeled set stays a single element and slides to the
    // minimum-label upper cover, so the two operators walk the same path.
    auto pool = pml::testsupport::posets_with_bottom(4);
    auto extra = pml::testsupport::random_bottom_pool(30, 7, 4242);
    pool.insert(pool.end(), extra.begin(), extra.end());
    pool.push_back(comb(3));
    pool.push_back(three_leaf_tree(2));
    for (auto& p : pool) {
        for_each_packed(p, p.size(), [&](const Labels& l) {
            EXPECT_EQ(k_promote(p, l, p.size()), promote_natural(p, l));
            return true;
        });
    }
}

TEST(Dynamics, EquivarianceAcrossSmallPool) {
    // Every poset in the exhaustive pool that is eligible (uniform maximal
    // chain length, m = h+2 within range) satisfies the intertwining.
    for (auto& p : pml::testsupport::posets_with_bottom(4)) {
        RankData rd = rank_data(p);
        int m = p.height() + 2;
        if (!rd.is_ranked || !rd.uniform_maximal_chain_length || m > p.size()) continue;
        for_each_packed(p, m, [&](const Labels& l) {
            EXPECT_EQ(pi_map(p, k_promote(p, l, m), m), rowmotion_inverse(p, pi_map(p, l, m)));
            return true;
        });
        auto restricted = restricted_ideals(p);
        EXPECT_EQ(BigInt(restricted.size()), count_packed(p, m));
    }
}

TEST(Dynamics, OperatorNames) {
    EXPECT_EQ(operator_from_name("kpromotion"), Operator::KPromotion);
    EXPECT_EQ(operator_from_name("rowmotion-inverse"), Operator::RowmotionInverse);
    EXPECT_STREQ(operator_name(Operator::Promotion), "promotion");
    EXPECT_THROW(operator_from_name("nope"), Error);
}
