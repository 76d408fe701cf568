#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "bdt/errors.hpp"
#include "bdt/mixedradix.hpp"
#include "test_util.hpp"

using namespace bdt;
using bdt::test::point;
using bdt::test::sched;
using bdt::test::word;

TEST(RadixSchedule, Parse) {
    auto s = sched("2,3,2");
    EXPECT_EQ(s.extension(), Extension::RepeatLast);
    EXPECT_EQ(s.radix(0), 2u);
    EXPECT_EQ(s.radix(1), 3u);
    EXPECT_EQ(s.radix(7), 2u);
    EXPECT_EQ(s.to_string(), "2,3,2");

    auto c = sched("2,3*");
    EXPECT_EQ(c.extension(), Extension::Cycle);
    EXPECT_EQ(c.radix(2), 2u);
    EXPECT_EQ(c.radix(3), 3u);
    EXPECT_EQ(c.to_string(), "2,3*");
}

TEST(RadixSchedule, RejectsBadInput) {
    EXPECT_THROW(sched(""), InputError);
    EXPECT_THROW(sched("*"), InputError);
    EXPECT_THROW(sched("2,1"), InputError);
    EXPECT_THROW(sched("2,,3"), InputError);
    EXPECT_THROW(sched("2,x"), InputError);
    EXPECT_THROW(RadixSchedule({}), ValidityError);
    EXPECT_THROW(RadixSchedule({3, 0}), ValidityError);
}

TEST(NIndex, Examples) {
    auto s = sched("2,3,2");
    EXPECT_EQ(n_index(s, 0), 1u);
    EXPECT_EQ(n_index(s, 3), 12u);
    EXPECT_EQ(n_index(s, 4), 24u); // q_3 = 2 under repeat-last
    EXPECT_EQ(n_index(sched("3,5,2*"), 4), 90u);
}

TEST(NIndex, DividesNext) {
    for (auto s : {sched("2,3,2"), sched("3,5,2*"), sched("7")}) {
        for (std::size_t k = 0; k < 12; ++k) {
            EXPECT_EQ(s.n_index(k + 1) % s.n_index(k), 0u);
            EXPECT_EQ(s.n_index(k + 1) / s.n_index(k), s.radix(k));
        }
    }
}

TEST(NIndex, OverflowIsReported) {
    auto s = sched("2");
    EXPECT_EQ(s.n_index(63), u64{1} << 63);
    EXPECT_THROW(s.n_index(64), OverflowError);
    EXPECT_THROW(sched("1000").n_index(7), OverflowError);
}

TEST(NIndex, MaxLevelWithin) {
    auto s = sched("2,3,2");
    EXPECT_EQ(s.max_level_within(1), 0u);
    EXPECT_EQ(s.max_level_within(12), 3u);
    EXPECT_EQ(s.max_level_within(23), 3u);
    EXPECT_EQ(s.max_level_within(10'000), 12u); // 12 * 2^9 = 6144
}

TEST(ToDigits, Examples) {
    EXPECT_EQ(to_digits(5, 2, sched("2,3")), word(sched("2,3"), {1, 2}));
    EXPECT_EQ(to_digits(0, 3, sched("2,3,2")), word(sched("2,3,2"), {0, 0, 0}));
    EXPECT_EQ(to_digits(11, 3, sched("2,3,2")), word(sched("2,3,2"), {1, 2, 1}));
    EXPECT_EQ(to_digits(0, 0, sched("2")).length(), 0u);
}

TEST(ToDigits, RangeError) {
    EXPECT_THROW(to_digits(12, 3, sched("2,3,2")), RangeError);
    EXPECT_THROW(to_digits(1, 0, sched("2,3,2")), RangeError);
    // Level 64 of base 2 does not fit n_k but every 64-bit n is below it.
    auto d = to_digits(std::numeric_limits<u64>::max(), 64, sched("2"));
    EXPECT_EQ(d[63], 1u);
    EXPECT_EQ(from_digits(d), std::numeric_limits<u64>::max());
}

TEST(FromDigits, Examples) {
    EXPECT_EQ(from_digits(word(sched("2,3"), {1, 2})), 5u);
    EXPECT_EQ(from_digits(word(sched("5,7"), {0, 0, 0})), 0u);
    EXPECT_EQ(from_digits(word(sched("2,3,2"), {1, 0, 1})), 7u);
}

TEST(FromDigits, InvalidDigit) {
    EXPECT_THROW(word(sched("2,3"), {2}), ValidityError);
    EXPECT_THROW(word(sched("2,3"), {1, 3}), ValidityError);
    EXPECT_THROW(parse_digits("1,3", sched("2,3")), InputError);
}

// Brute-force oracle: every word in K_k, valued without the library, must
// be what to_digits produces for that value, and the values must cover
// [0, n_k) exactly once.
TEST(ToDigits, MatchesEnumerationOracle) {
    for (auto s : {sched("2,3,2"), sched("3,5,2*"), sched("2"), sched("4,3")}) {
        for (std::size_t k = 0; k <= 5; ++k) {
            auto words = bdt::test::all_words(s, k);
            ASSERT_EQ(words.size(), s.n_index(k));
            std::vector<bool> hit(words.size(), false);
            for (const auto& w : words) {
                const u64 v = bdt::test::brute_value(s, w);
                ASSERT_LT(v, s.n_index(k));
                EXPECT_FALSE(hit[v]);
                hit[v] = true;
                EXPECT_EQ(to_digits(v, k, s), DigitWord(s, w));
            }
        }
    }
}

TEST(MixedRadix, RoundTripExhaustive) {
    for (auto s : {sched("2,3,2"), sched("2"), sched("3,5,2*")}) {
        const std::size_t top = s.max_level_within(10'000);
        for (std::size_t k = 0; k <= top; ++k) {
            for (u64 n = 0; n < s.n_index(k); ++n) ASSERT_EQ(from_digits(to_digits(n, k, s)), n);
        }
    }
}

TEST(MixedRadix, PrefixCoherence) {
    auto s = sched("3,5,2*");
    for (std::size_t k = 0; k < 5; ++k) {
        for (u64 n = 0; n < s.n_index(k + 1); ++n) {
            EXPECT_EQ(to_digits(n, k + 1, s).head(k), to_digits(n % s.n_index(k), k, s));
        }
    }
}

TEST(CantorPoint, Canonicalizes) {
    auto s = sched("2,3,2");
    auto p = point(s, {1, 0, 0}, Tail::Zeros);
    EXPECT_EQ(p.prefix(), word(s, {1}));
    auto m = point(s, {0, 2, 1}, Tail::Max); // 2 and 1 are maximal at positions 1, 2
    EXPECT_EQ(m.prefix(), word(s, {0}));
    EXPECT_TRUE(point(s, {1, 2, 1, 1}, Tail::Max).is_all_max());
    EXPECT_TRUE(point(s, {0, 0}, Tail::Zeros).is_all_zeros());
    EXPECT_FALSE(CantorPoint::zeros(s) == CantorPoint::max(s));
}

TEST(CantorPoint, CanonicalIdempotentAndEqualityAgreesWithDigits) {
    auto s = sched("2,3,2");
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        std::vector<u64> a, b;
        const std::size_t la = rng() % 5, lb = rng() % 5;
        for (std::size_t j = 0; j < la; ++j) a.push_back(rng() % s.radix(j));
        for (std::size_t j = 0; j < lb; ++j) b.push_back(rng() % s.radix(j));
        const Tail ta = rng() % 2 ? Tail::Max : Tail::Zeros;
        const Tail tb = rng() % 2 ? Tail::Max : Tail::Zeros;
        const auto once = CantorPoint::canonical_prefix(word(s, a), ta);
        EXPECT_EQ(CantorPoint::canonical_prefix(once, ta), once);

        const auto p = point(s, a, ta), q = point(s, b, tb);
        bool digitwise = true;
        for (std::size_t k = 0; k <= 64; ++k) digitwise = digitwise && truncate(p, k) == truncate(q, k);
        EXPECT_EQ(p == q, digitwise) << p.to_string() << " vs " << q.to_string();
    }
}

TEST(Truncate, Examples) {
    EXPECT_EQ(truncate(point(sched("2,3,2"), {1}, Tail::Zeros), 3), word(sched("2,3,2"), {1, 0, 0}));
    EXPECT_EQ(truncate(CantorPoint::max(sched("2,3")), 2), word(sched("2,3"), {1, 2}));
    EXPECT_EQ(truncate(point(sched("2,3"), {0, 1}, Tail::Zeros), 2), word(sched("2,3"), {0, 1}));
}

TEST(ParsePoint, Forms) {
    auto s = sched("2,3,2");
    EXPECT_EQ(parse_point("zeros", s), XPoint::cantor(CantorPoint::zeros(s)));
    EXPECT_EQ(parse_point("max", s), XPoint::cantor(CantorPoint::max(s)));
    EXPECT_EQ(parse_point("nat:7", s), XPoint::nat(7));
    EXPECT_EQ(parse_point("7", s), XPoint::nat(7));
    EXPECT_EQ(parse_point("1,2|Z", s), XPoint::cantor(point(s, {1, 2}, Tail::Zeros)));
    EXPECT_EQ(parse_point("|M", s), XPoint::cantor(CantorPoint::max(s)));
    EXPECT_EQ(parse_point("0,0,1|Z", s).to_string(), "0,0,1|Z");
    EXPECT_THROW(parse_point("1,2|Q", s), InputError);
    EXPECT_THROW(parse_point("1,2", s), InputError);
    EXPECT_THROW(parse_point("nat:-1", s), InputError);
    EXPECT_THROW(parse_point("2|Z", s), InputError); // digit out of range
}
