#include "jmcalc/oracle.hpp"

#include <gtest/gtest.h>

#include <numeric>

using jmcalc::casselman_positive;
using jmcalc::HalfInt;
using jmcalc::minimal_jacquet_words;
using jmcalc::Segment;
using jmcalc::Word;
using jmcalc::WordMultiset;

namespace {

Segment seg(int twice_lo, int twice_hi) {
    return Segment::make(HalfInt::from_twice(twice_lo), HalfInt::from_twice(twice_hi));
}

Word word(std::initializer_list<int> twices) {
    Word w;
    for (int t : twices) w.push_back(HalfInt::from_twice(t));
    return w;
}

long total_count(const WordMultiset& m) {
    long t = 0;
    for (auto& [w, c] : m) t += c;
    return t;
}

}  // namespace

TEST(OracleTest, SingleHalfLine) {
    // nu^{1/2} factor alone: two length-one words, kept and reflected.
    auto words = minimal_jacquet_words({seg(1, 1)});
    ASSERT_EQ(words.size(), 2u);
    EXPECT_EQ(words.at(word({1})), 1);
    EXPECT_EQ(words.at(word({-1})), 1);
}

TEST(OracleTest, TwoStepSegment) {
    // Segment [1/2, 3/2]: exactly four words, each once. The two-sided
    // expansion never produces (1/2, 3/2) or (-3/2, -1/2).
    auto words = minimal_jacquet_words({seg(1, 3)});
    ASSERT_EQ(words.size(), 4u);
    EXPECT_EQ(words.at(word({3, 1})), 1);
    EXPECT_EQ(words.at(word({3, -1})), 1);
    EXPECT_EQ(words.at(word({-1, 3})), 1);
    EXPECT_EQ(words.at(word({-1, -3})), 1);
    EXPECT_EQ(words.count(word({1, 3})), 0u);
    EXPECT_EQ(words.count(word({-3, -1})), 0u);
}

TEST(OracleTest, BalancedSegment) {
    // Segment [-1/2, 1/2] reflects onto itself, so the full-bottom split
    // repeats the untouched word instead of producing an all-negative one.
    auto words = minimal_jacquet_words({seg(-1, 1)});
    ASSERT_EQ(words.size(), 2u);
    EXPECT_EQ(words.at(word({1, -1})), 2);
    EXPECT_EQ(words.at(word({1, 1})), 2);
    EXPECT_EQ(words.count(word({-1, -1})), 0u);
}

TEST(OracleTest, TwoFactorShuffle) {
    // Two nu^{1/2} factors: every sign pattern appears with multiplicity 2.
    auto words = minimal_jacquet_words({seg(1, 1), seg(1, 1)});
    ASSERT_EQ(words.size(), 4u);
    EXPECT_EQ(words.at(word({1, 1})), 2);
    EXPECT_EQ(words.at(word({1, -1})), 2);
    EXPECT_EQ(words.at(word({-1, 1})), 2);
    EXPECT_EQ(words.at(word({-1, -1})), 2);
    EXPECT_EQ(total_count(words), 8);
}

TEST(OracleTest, WordLengthAndSupportInvariants) {
    // Property: every word has length = total cardinality and its absolute
    // exponent multiset matches the factors' combined support.
    std::vector<Segment> factors = {seg(-1, 3), seg(1, 1)};
    jmcalc::CuspSupport expected;
    long n = 0;
    for (auto& d : factors) {
        expected += d.support().abs();
        n += d.cardinality();
    }
    auto words = minimal_jacquet_words(factors);
    EXPECT_GT(words.size(), 0u);
    for (auto& [w, c] : words) {
        EXPECT_EQ(static_cast<long>(w.size()), n);
        EXPECT_GT(c, 0);
        jmcalc::CuspSupport got;
        for (HalfInt x : w) got.add(x);
        EXPECT_EQ(got.abs(), expected) << jmcalc::word_str(w);
    }
}

TEST(OracleTest, TotalCountMatchesClosedForm) {
    // One factor of cardinality n has n+1 splits, each contributing a single
    // stream pair that shuffles to C(n, k) words counted with multiplicity.
    for (int n = 1; n <= 4; ++n) {
        auto words = minimal_jacquet_words({seg(1, 2 * n - 1)});
        long expect = 0;
        for (int k = 0; k <= n; ++k) {
            long binom = 1;
            for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
            expect += binom;
        }
        EXPECT_EQ(total_count(words), expect) << "cardinality " << n;
    }
}

TEST(OracleTest, CapRejectsHugeExpansion) {
    EXPECT_THROW(minimal_jacquet_words({seg(1, 51)}), std::invalid_argument);
}

TEST(OracleTest, CasselmanCriterion) {
    EXPECT_TRUE(casselman_positive(word({})));
    EXPECT_TRUE(casselman_positive(word({3, 1})));
    EXPECT_TRUE(casselman_positive(word({3, -1})));
    EXPECT_FALSE(casselman_positive(word({-1, 3})));
    // Sum hits zero midway: (1/2, -1/2, ...) fails regardless of the tail.
    EXPECT_FALSE(casselman_positive(word({1, -1, 5, 3, 1})));
    // Strictly positive running sums throughout.
    EXPECT_TRUE(casselman_positive(word({5, 3, 1, -1, -3, 1})));
}

TEST(OracleTest, NonnegativeWordDetector) {
    auto words = minimal_jacquet_words({seg(1, 3)});
    EXPECT_TRUE(jmcalc::has_nonneg_word(words));
    WordMultiset onlyneg;
    onlyneg[word({-1, -3})] = 1;
    onlyneg[word({3, -1})] = 2;
    EXPECT_FALSE(jmcalc::has_nonneg_word(onlyneg));
}
