#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "bdt/errors.hpp"
#include "bdt/odometer.hpp"
#include "test_util.hpp"

using namespace bdt;
using bdt::test::point;
using bdt::test::sched;
using bdt::test::word;

namespace {

// Oracles working on integers only.
//
// A Zeros-tail point is a natural number v = sum gamma_j n_j; the odometer
// sends it to v + 1. A Max-tail point is the digitwise complement
// (q_j - 1 - gamma_j) of a Zeros-tail point w; adding one to it subtracts one
// from w, and w = 0 (the all-max point) wraps to the all-zeros point.
CantorPoint oracle_step(const CantorPoint& p) {
    const auto& s = p.schedule();
    const std::size_t len = p.prefix().length() + 2;
    if (p.tail() == Tail::Zeros) {
        const u64 v = bdt::test::brute_value(s, {p.prefix().digits().begin(), p.prefix().digits().end()});
        std::vector<u64> digits;
        u64 rest = v + 1;
        for (std::size_t j = 0; j < len; ++j) {
            digits.push_back(rest % s.radix(j));
            rest /= s.radix(j);
        }
        return point(s, digits, Tail::Zeros);
    }
    std::vector<u64> complement;
    for (std::size_t j = 0; j < p.prefix().length(); ++j) complement.push_back(s.radix(j) - 1 - p.prefix()[j]);
    const u64 w = bdt::test::brute_value(s, complement);
    if (w == 0) return CantorPoint::zeros(s);
    std::vector<u64> digits;
    u64 rest = w - 1;
    for (std::size_t j = 0; j < len; ++j) {
        digits.push_back(s.radix(j) - 1 - rest % s.radix(j));
        rest /= s.radix(j);
    }
    return point(s, digits, Tail::Max);
}

} // namespace

TEST(OdometerTotal, Examples) {
    auto s = sched("2,3,2");
    EXPECT_EQ(odometer_total(CantorPoint::max(s)), CantorPoint::zeros(s));
    EXPECT_EQ(odometer_total(point(s, {1, 2}, Tail::Zeros)), point(s, {0, 0, 1}, Tail::Zeros));
    EXPECT_EQ(odometer_total(point(s, {1, 2}, Tail::Zeros)).to_string(), "0,0,1|Z");
    EXPECT_EQ(odometer_total(point(s, {0}, Tail::Zeros)), point(s, {1}, Tail::Zeros));
}

TEST(OdometerTotal, CarryIntoTails) {
    auto s = sched("2,3,2");
    // Zeros tail: one tail digit joins the prefix.
    EXPECT_EQ(odometer_total(point(s, {1}, Tail::Zeros)).to_string(), "0,1|Z");
    // Max tail with the carry stopping inside the prefix.
    EXPECT_EQ(odometer_total(point(s, {1, 0}, Tail::Max)).to_string(), "0,1|M");
    // Carry stops at the last prefix digit, which then matches the tail.
    EXPECT_EQ(odometer_total(point(s, {1, 1}, Tail::Max)), point(s, {0, 2}, Tail::Max));
}

TEST(OdometerTotal, MatchesIntegerOracle) {
    std::mt19937_64 rng(3);
    for (auto s : {sched("2,3,2"), sched("2"), sched("3,5,2*"), sched("10")}) {
        for (int t = 0; t < 2000; ++t) {
            std::vector<u64> digits;
            const std::size_t len = rng() % 7;
            for (std::size_t j = 0; j < len; ++j) digits.push_back(rng() % s.radix(j));
            const auto p = point(s, digits, rng() % 2 ? Tail::Max : Tail::Zeros);
            ASSERT_EQ(odometer_total(p), oracle_step(p)) << p.to_string();
        }
    }
}

TEST(OdometerTotal, OracleEquivalenceExhaustive) {
    for (auto s : {sched("2,3,2"), sched("2"), sched("3,5,2*")}) {
        for (std::size_t k = 1; k <= s.max_level_within(10'000); ++k) {
            const u64 nk = s.n_index(k);
            for (u64 v = 0; v < nk; ++v) {
                const CantorPoint p(to_digits(v, k, s), Tail::Zeros);
                ASSERT_EQ(truncate(odometer_total(p), k).value(), (v + 1) % nk);
            }
        }
    }
}

TEST(OdometerPartial, DomainErrorOnlyAtMax) {
    auto s = sched("2,3,2");
    EXPECT_THROW(odometer_partial(CantorPoint::max(s)), DomainError);
    EXPECT_EQ(odometer_partial(point(s, {1, 2}, Tail::Zeros)), point(s, {0, 0, 1}, Tail::Zeros));
    auto s3 = sched("3,2");
    EXPECT_EQ(odometer_partial(point(s3, {0}, Tail::Max)).to_string(), "1|M");
    // With q_0 = 2 the same increment lands on the all-max point itself.
    EXPECT_TRUE(odometer_partial(point(s, {0}, Tail::Max)).is_all_max());
    EXPECT_NO_THROW(odometer_partial(CantorPoint::zeros(s)));
}

TEST(OdometerInverse, Examples) {
    auto s = sched("2,3,2");
    EXPECT_EQ(odometer_inverse(CantorPoint::zeros(s)), CantorPoint::max(s));
    EXPECT_EQ(odometer_inverse(point(s, {0, 0, 1}, Tail::Zeros)), point(s, {1, 2}, Tail::Zeros));
    EXPECT_EQ(odometer_inverse(point(s, {0}, Tail::Max)).to_string(), "1,1|M");
}

TEST(OdometerInverse, InverseLaw) {
    std::mt19937_64 rng(5);
    for (auto s : {sched("2,3,2"), sched("3,5,2*")}) {
        for (int t = 0; t < 2000; ++t) {
            std::vector<u64> digits;
            for (std::size_t j = 0, len = rng() % 8; j < len; ++j) digits.push_back(rng() % s.radix(j));
            const auto p = point(s, digits, rng() % 2 ? Tail::Max : Tail::Zeros);
            ASSERT_EQ(odometer_inverse(odometer_total(p)), p);
            ASSERT_EQ(odometer_total(odometer_inverse(p)), p);
        }
    }
}

TEST(StepX, Examples) {
    auto s = sched("2,3,2");
    EXPECT_EQ(step_x(XPoint::nat(7)), XPoint::nat(8));
    EXPECT_EQ(step_x(XPoint::nat(0)), XPoint::nat(1));
    EXPECT_EQ(step_x(XPoint::cantor(CantorPoint::max(s))), XPoint::cantor(CantorPoint::zeros(s)));
    EXPECT_THROW(step_x(XPoint::nat(std::numeric_limits<u64>::max())), OverflowError);
}

TEST(PrefixIncrement, Examples) {
    auto s = sched("2,3");
    EXPECT_EQ(prefix_increment(word(s, {1, 2})), word(s, {0, 0}));
    EXPECT_EQ(prefix_increment(word(s, {0, 0})), word(s, {1, 0}));
    EXPECT_EQ(prefix_increment(DigitWord::empty(s)), DigitWord::empty(s));
}

TEST(PrefixIncrement, IsOneCycleAndMatchesFormula) {
    for (auto s : {sched("2,3,2"), sched("3,5,2*")}) {
        for (std::size_t k = 0; k <= 5; ++k) {
            const u64 nk = s.n_index(k);
            for (u64 v = 0; v < nk; ++v) {
                EXPECT_EQ(prefix_increment(to_digits(v, k, s)), to_digits((v + 1) % nk, k, s));
            }
            auto w = to_digits(nk / 2, k, s);
            const auto start = w;
            for (u64 i = 1; i <= nk; ++i) {
                w = prefix_increment(w);
                if (i < nk) ASSERT_NE(w, start);
            }
            EXPECT_EQ(w, start);
        }
    }
}

TEST(Orbit, Examples) {
    auto s = sched("2,3,2");
    auto nat = orbit(XPoint::nat(0), 3);
    ASSERT_EQ(nat.points.size(), 4u);
    for (u64 i = 0; i < 4; ++i) EXPECT_EQ(nat.points[i], XPoint::nat(i));

    auto wrap = orbit(XPoint::cantor(CantorPoint::max(s)), 1);
    EXPECT_EQ(wrap.points[1], XPoint::cantor(CantorPoint::zeros(s)));

    for (std::size_t k = 0; k <= 4; ++k) {
        auto rec = orbit(XPoint::cantor(CantorPoint::zeros(s)), s.n_index(k));
        EXPECT_EQ(truncate(rec.points.back().as_cantor(), k), DigitWord(s, std::vector<u64>(k, 0)));
    }
}

TEST(Orbit, VisitOrderAndImage) {
    auto s = sched("3,5,2*");
    for (std::size_t k = 0; k <= 3; ++k) {
        auto rec = orbit(XPoint::cantor(point(s, {2, 4}, Tail::Max)), 4 * s.n_index(k));
        EXPECT_TRUE(visits_each_cylinder_once(rec, k, s));
        auto nat = orbit(XPoint::nat(17), 2 * s.n_index(k));
        EXPECT_TRUE(visits_each_cylinder_once(nat, k, s));
        for (std::size_t i = 1; i < nat.points.size(); ++i) EXPECT_NE(nat.points[i], XPoint::nat(0));
    }
    // A window too short cannot visit everything.
    EXPECT_FALSE(visits_each_cylinder_once(orbit(XPoint::nat(0), 3), 3, s));
}

TEST(CylinderMeasure, Examples) {
    EXPECT_EQ(cylinder_measure(word(sched("2"), {1})), Rational(1, 2));
    EXPECT_EQ(cylinder_measure(word(sched("2,3"), {1, 2})), Rational(1, 6));
    EXPECT_EQ(cylinder_measure(DigitWord::empty(sched("2,3"))), Rational(1));
    EXPECT_THROW(cylinder_measure(DigitWord(sched("2"), std::vector<u64>(64, 0))), OverflowError);
}

TEST(Birkhoff, FrequenciesWithinCountingBound) {
    auto s = sched("2,3,2");
    for (std::size_t k = 0; k <= 4; ++k) {
        const u64 nk = s.n_index(k);
        const u64 T = 7 * nk + 3; // not a multiple of n_k
        auto rec = orbit(XPoint::cantor(point(s, {1, 1}, Tail::Max)), T - 1);
        for (u64 c : visit_counts(rec, k, s)) {
            const auto i64 = [](u64 v) { return static_cast<std::int64_t>(v); };
            const Rational dev = abs(Rational(i64(c), i64(T)) - Rational(1, i64(nk)));
            EXPECT_LE(dev, Rational(i64(nk), i64(T)));
            EXPECT_LE(dev, Rational(1, i64(T))); // a rotation is within one visit
        }
    }
}

TEST(OrbitText, RoundTrip) {
    auto s = sched("2,3,2");
    for (const auto& start : {XPoint::nat(4), XPoint::cantor(point(s, {1, 1}, Tail::Max))}) {
        auto rec = orbit(start, 30);
        std::stringstream ss;
        write_orbit(ss, rec);
        auto back = read_orbit(ss, s);
        EXPECT_EQ(back.points, rec.points);
        EXPECT_EQ(back.steps, 30u);
    }
    std::stringstream max_text;
    write_orbit(max_text, orbit(XPoint::cantor(CantorPoint::max(s)), 1));
    EXPECT_EQ(max_text.str(), "|M\n|Z\n");
}
