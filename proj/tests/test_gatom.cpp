#include "jmcalc/gatom.hpp"

#include <gtest/gtest.h>

#include <random>

using jmcalc::AtomKind;
using jmcalc::GAtom;
using jmcalc::HalfInt;
using jmcalc::RGSum;
using jmcalc::Segment;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }
Segment seg(int twice_lo, int twice_hi) { return Segment::make(h(twice_lo), h(twice_hi)); }

}  // namespace

TEST(GAtomTest, FactoriesAndCanonicalForm) {
    EXPECT_EQ(GAtom::cuspidal().kind(), AtomKind::Cuspidal);
    EXPECT_TRUE(GAtom::cuspidal().is_tempered());

    GAtom ds = GAtom::strict_ds(h(5));
    EXPECT_EQ(ds.str(), "ds(5/2)");
    EXPECT_THROW(GAtom::strict_ds(h(-1)), std::invalid_argument);
    EXPECT_THROW(GAtom::strict_ds(HalfInt(1)), std::invalid_argument);

    // Three-block parameters are stored sorted, so argument order is moot.
    GAtom t1 = GAtom::triple(h(1), h(3), h(5), AtomKind::TriplePlus);
    GAtom t2 = GAtom::triple(h(3), h(5), h(1), AtomKind::TriplePlus);
    EXPECT_EQ(t1, t2);
    EXPECT_EQ(t1.str(), "tri+(1/2,3/2,5/2)");
    EXPECT_THROW(GAtom::triple(h(1), h(1), h(5), AtomKind::TriplePlus), std::invalid_argument);

    GAtom sp = GAtom::seg_pm(h(-1), h(5), true);
    EXPECT_EQ(sp.str(), "seg+(-1/2,5/2)");
    // The boundary lo = -1/2 is legitimate signed data.
    EXPECT_NO_THROW(GAtom::seg_pm(h(-1), h(1), false));
    EXPECT_THROW(GAtom::seg_pm(h(1), h(5), true), std::invalid_argument);
    EXPECT_THROW(GAtom::seg_pm(h(-5), h(3), true), std::invalid_argument);

    // Center zero is the tempered (non-square-integrable) boundary case.
    EXPECT_EQ(GAtom::seg_pm(h(-3), h(3), true).str(), "seg+(-3/2,3/2)");
}

TEST(GAtomTest, LanglandsCanonicalOrder) {
    // Tie on centers at (1/2,3/2,5/2): both orders land on the same class.
    GAtom l1 = GAtom::langlands({seg(-1, 5), seg(1, 3)}, GAtom::cuspidal());
    GAtom l2 = GAtom::langlands({seg(1, 3), seg(-1, 5)}, GAtom::cuspidal());
    EXPECT_EQ(l1, l2);
    EXPECT_EQ(l1.str(), "L(d(-1/2,5/2),d(1/2,3/2); sigma)");
    EXPECT_FALSE(l1.is_tempered());
    EXPECT_EQ(l1.temp_part(), GAtom::cuspidal());

    // Distinct centers order by center, descending.
    GAtom l3 = GAtom::langlands({seg(1, 3), seg(-1, 7)}, GAtom::cuspidal());
    EXPECT_EQ(l3.gl_data().front(), seg(-1, 7));

    // Data with nonpositive center is rejected, as is a non-tempered anchor.
    EXPECT_THROW(GAtom::langlands({seg(-5, 5)}, GAtom::cuspidal()), std::invalid_argument);
    EXPECT_THROW(GAtom::langlands({seg(-5, 1)}, GAtom::cuspidal()), std::invalid_argument);
    EXPECT_THROW(GAtom::langlands({seg(1, 1)}, l1), std::invalid_argument);
}

TEST(GAtomTest, BlockAndSignData) {
    // ds(5/2): one block of size 6, sign +.
    auto j = jordan_of(GAtom::strict_ds(h(5)));
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0], 6);
    EXPECT_EQ(epsilon_of(GAtom::strict_ds(h(5))).at(6), 1);

    // seg-(-3/2,5/2): blocks 4 and 6, both signs -.
    GAtom sm = GAtom::seg_pm(h(-3), h(5), false);
    auto eps = epsilon_of(sm);
    EXPECT_EQ(eps.at(4), -1);
    EXPECT_EQ(eps.at(6), -1);
    auto epsp = epsilon_of(GAtom::seg_pm(h(-3), h(5), true));
    EXPECT_EQ(epsp.at(4), 1);
    EXPECT_EQ(epsp.at(6), 1);

    EXPECT_THROW(jordan_of(GAtom::cuspidal()), std::logic_error);
    EXPECT_THROW(epsilon_of(GAtom::langlands({seg(1, 1)}, GAtom::cuspidal())), std::logic_error);
}

TEST(GAtomTest, TripleSignPatternsAreDistinct) {
    GAtom plus = GAtom::triple(h(1), h(3), h(5), AtomKind::TriplePlus);
    GAtom m_bca = GAtom::triple(h(1), h(3), h(5), AtomKind::TripleMinusBCA);
    GAtom m_abc = GAtom::triple(h(1), h(3), h(5), AtomKind::TripleMinusABC);

    // Same blocks...
    EXPECT_EQ(jordan_of(plus), jordan_of(m_bca));
    EXPECT_EQ(jordan_of(plus), jordan_of(m_abc));
    // ...three different sign characters.
    auto ep = epsilon_of(plus), eb = epsilon_of(m_bca), ea = epsilon_of(m_abc);
    EXPECT_NE(ep, eb);
    EXPECT_NE(ep, ea);
    EXPECT_NE(eb, ea);
    EXPECT_EQ(ep.at(2), 1);
    EXPECT_EQ(ep.at(4), 1);
    EXPECT_EQ(ep.at(6), 1);
    EXPECT_EQ(eb.at(2), 1);
    EXPECT_EQ(eb.at(4), -1);
    EXPECT_EQ(eb.at(6), -1);
    EXPECT_EQ(ea.at(2), -1);
    EXPECT_EQ(ea.at(4), -1);
    EXPECT_EQ(ea.at(6), 1);
}

TEST(GAtomTest, DualFixesClassesAndReversesLayers) {
    GAtom l = GAtom::langlands({seg(1, 3)}, GAtom::seg_pm(h(-1), h(1), false));
    EXPECT_EQ(dual_atom(l), l);
    EXPECT_EQ(dual_atom(GAtom::strict_ds(h(3))), GAtom::strict_ds(h(3)));

    std::vector<RGSum> layers(3);
    layers[0].add(GAtom::cuspidal());
    layers[1].add(GAtom::strict_ds(h(1)));
    layers[2].add(GAtom::strict_ds(h(3)));
    auto rev = dualize_layers(layers);
    ASSERT_EQ(rev.size(), 3u);
    EXPECT_EQ(rev[0], layers[2]);
    EXPECT_EQ(rev[2], layers[0]);
    EXPECT_EQ(dualize_layers(rev), layers);
}

TEST(GAtomTest, AbsSupport) {
    EXPECT_TRUE(GAtom::cuspidal().abs_support().empty());

    auto s = GAtom::strict_ds(h(5)).abs_support();
    EXPECT_EQ(s.total(), 3);
    EXPECT_EQ(s.count(h(1)), 1);
    EXPECT_EQ(s.count(h(5)), 1);

    auto sp = GAtom::seg_pm(h(-3), h(5), true).abs_support();
    EXPECT_EQ(sp.count(h(1)), 2);
    EXPECT_EQ(sp.count(h(3)), 2);
    EXPECT_EQ(sp.count(h(5)), 1);

    auto tp = GAtom::seg_pm(h(-3), h(3), true).abs_support();
    EXPECT_EQ(tp.count(h(1)), 2);
    EXPECT_EQ(tp.count(h(3)), 2);

    auto l = GAtom::langlands({seg(-1, 5)}, GAtom::strict_ds(h(3))).abs_support();
    EXPECT_EQ(l.count(h(1)), 3);  // one from the flip side, one direct, one from ds
    EXPECT_EQ(l.count(h(3)), 2);
    EXPECT_EQ(l.count(h(5)), 1);
}

TEST(RGSumTest, BasicAccounting) {
    RGSum s;
    EXPECT_TRUE(s.empty());
    EXPECT_EQ(s.str(), "0");
    s.add(GAtom::strict_ds(h(3)));
    s.add(GAtom::strict_ds(h(3)));
    s.add(GAtom::cuspidal());
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.total(), 3);
    EXPECT_EQ(s.coeff(GAtom::strict_ds(h(3))), 2);
    EXPECT_TRUE(s.contains(GAtom::cuspidal()));
    EXPECT_EQ(s.str(), "sigma + 2*ds(3/2)");
    // Removing below zero is a bug in the caller.
    EXPECT_THROW(s.add(GAtom::cuspidal(), -2), std::logic_error);
}

TEST(RGSumTest, FloorAndOrderLaws) {
    std::mt19937 rng(314);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> mul(0, 3);
    std::vector<GAtom> pool = {GAtom::cuspidal(), GAtom::strict_ds(h(1)),
                               GAtom::strict_ds(h(3)), GAtom::seg_pm(h(-1), h(3), true)};
    for (int round = 0; round < 400; ++round) {
        RGSum x, y;
        for (auto& a : pool) {
            x.add(a, mul(rng));
            y.add(a, mul(rng));
        }
        RGSum fl = floor_plus(x, y);
        // Property: floor never exceeds x and (floor + y) dominates x.
        EXPECT_TRUE(sum_leq(fl, x));
        EXPECT_TRUE(sum_leq(x, fl + y));
        // Property: floor_plus(x + y, y) recovers x exactly.
        EXPECT_EQ(floor_plus(x + y, y), x);
        // Property: sum_leq(x, y) holds iff the floor vanishes.
        EXPECT_EQ(sum_leq(x, y), floor_plus(x, y).empty());
        (void)pick;
    }
}

TEST(ResolveTest, SignedSegmentSymbols) {
    // Empty symbol: plus side collapses to the anchor, minus side to zero.
    EXPECT_EQ(resolve_seg_pm(h(1), h(-1), true), RGSum{GAtom::cuspidal()});
    EXPECT_TRUE(resolve_seg_pm(h(1), h(-1), false).empty());

    // Negative center flips, keeping the sign label.
    EXPECT_EQ(resolve_seg_pm(h(-5), h(1), false), RGSum{GAtom::seg_pm(h(-1), h(5), false)});
    EXPECT_EQ(resolve_seg_pm(h(-5), h(1), true), RGSum{GAtom::seg_pm(h(-1), h(5), true)});

    // Entirely right of 1/2: no signed class at all.
    EXPECT_TRUE(resolve_seg_pm(h(3), h(5), true).empty());
    EXPECT_TRUE(resolve_seg_pm(h(3), h(5), false).empty());

    // Starting exactly at 1/2: plus is the strict class, minus vanishes.
    EXPECT_EQ(resolve_seg_pm(h(1), h(5), true), RGSum{GAtom::strict_ds(h(5))});
    EXPECT_TRUE(resolve_seg_pm(h(1), h(5), false).empty());

    // Proper signed data, including the lo = -1/2 boundary.
    EXPECT_EQ(resolve_seg_pm(h(-1), h(5), false), RGSum{GAtom::seg_pm(h(-1), h(5), false)});
    EXPECT_EQ(resolve_seg_pm(h(-3), h(3), true), RGSum{GAtom::seg_pm(h(-3), h(3), true)});
}

TEST(ResolveTest, QuotientSymbols) {
    EXPECT_EQ(resolve_L(h(1), h(-1)), RGSum{GAtom::cuspidal()});
    // Balanced segment: no quotient class.
    EXPECT_TRUE(resolve_L(h(-3), h(3)).empty());
    // Negative center flips.
    GAtom expected = GAtom::langlands({seg(-1, 5)}, GAtom::cuspidal());
    EXPECT_EQ(resolve_L(h(-5), h(1)), RGSum{expected});
    EXPECT_EQ(resolve_L(h(-1), h(5)), RGSum{expected});
    EXPECT_EQ(resolve_L(h(3), h(5)),
              RGSum{GAtom::langlands({seg(3, 5)}, GAtom::cuspidal())});
}

TEST(ClassifyTest, FourRows) {
    // Strictly right of 1/2: irreducible, a single quotient class.
    RGSum far = classify_seg_induced(seg(3, 5));
    EXPECT_EQ(far.size(), 1u);
    EXPECT_TRUE(far.contains(GAtom::langlands({seg(3, 5)}, GAtom::cuspidal())));

    // Starting at 1/2: strict class plus quotient.
    RGSum at_half = classify_seg_induced(seg(1, 5));
    EXPECT_EQ(at_half.size(), 2u);
    EXPECT_TRUE(at_half.contains(GAtom::strict_ds(h(5))));
    EXPECT_TRUE(at_half.contains(GAtom::langlands({seg(1, 5)}, GAtom::cuspidal())));

    // Balanced: exactly the two signed tempered classes.
    RGSum balanced = classify_seg_induced(seg(-5, 5));
    EXPECT_EQ(balanced.size(), 2u);
    EXPECT_TRUE(balanced.contains(GAtom::seg_pm(h(-5), h(5), true)));
    EXPECT_TRUE(balanced.contains(GAtom::seg_pm(h(-5), h(5), false)));

    // Lopsided with negative reach: both signed classes and the quotient.
    RGSum lop = classify_seg_induced(seg(-1, 5));
    EXPECT_EQ(lop.size(), 3u);
    EXPECT_TRUE(lop.contains(GAtom::seg_pm(h(-1), h(5), true)));
    EXPECT_TRUE(lop.contains(GAtom::seg_pm(h(-1), h(5), false)));
    EXPECT_TRUE(lop.contains(GAtom::langlands({seg(-1, 5)}, GAtom::cuspidal())));

    // Negative center goes through the flip.
    EXPECT_EQ(classify_seg_induced(seg(-5, 1)), lop);

    // Unit: the bare anchor.
    EXPECT_EQ(classify_seg_induced(Segment::empty()), RGSum{GAtom::cuspidal()});
}

TEST(ClassifyTest, CoefficientsAreAllOne) {
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> lo_dist(-6, 6);
    std::uniform_int_distribution<int> len_dist(0, 5);
    for (int round = 0; round < 300; ++round) {
        int lo = 2 * lo_dist(rng) + 1;
        Segment d = seg(lo, lo + 2 * len_dist(rng));
        RGSum cls = classify_seg_induced(d);
        EXPECT_GE(cls.size(), 1u);
        EXPECT_LE(cls.size(), 3u);
        for (auto& [atom, c] : cls.terms()) EXPECT_EQ(c, 1) << atom.str();
    }
}
