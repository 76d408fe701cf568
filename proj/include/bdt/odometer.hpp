#pragma once

// The odometer ("+1 with carry to the right") on K, its partial version,
// the extended map f on X = N u K, orbits and the uniform cylinder measure.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <boost/rational.hpp>

#include "bdt/mixedradix.hpp"

namespace bdt {

using Rational = boost::rational<std::int64_t>;

// Total odometer. The all-max point wraps to the all-zeros point.
CantorPoint odometer_total(const CantorPoint& point);

// Odometer restricted to K minus the all-max point; throws DomainError there.
CantorPoint odometer_partial(const CantorPoint& point);

// Subtract one with borrow; all-zeros maps to all-max.
CantorPoint odometer_inverse(const CantorPoint& point);

// f: X -> X - {0}. Nat(n) -> Nat(n+1) (OverflowError at 2^64 - 1);
// Cantor(p) -> Cantor(odometer_total(p)).
XPoint step_x(const XPoint& x);

// Digits of (value(beta) + 1) mod n_k: the odometer on K_k.
DigitWord prefix_increment(const DigitWord& word);

struct OrbitRecord {
    XPoint start;
    std::size_t steps = 0;
    std::vector<XPoint> points; // points[0] = start, points[i+1] = f(points[i])
};

OrbitRecord orbit(const XPoint& start, std::size_t steps);

// Index in [0, n_k) of the level-k cylinder holding x: n mod n_k for a
// natural, value(gamma|_k) for a Cantor point.
u64 cylinder_index(const XPoint& x, std::size_t k, const RadixSchedule& schedule);

// Number of visits of the orbit (all steps+1 points) to each level-k cylinder.
std::vector<u64> visit_counts(const OrbitRecord& record, std::size_t k,
                              const RadixSchedule& schedule);

// True iff every window of n_k consecutive orbit points meets each level-k
// cylinder exactly once.
bool visits_each_cylinder_once(const OrbitRecord& record, std::size_t k,
                               const RadixSchedule& schedule);

// Uniform product measure of the cylinder of beta: exactly 1/n_k.
Rational cylinder_measure(const DigitWord& word);

// Line-oriented text form: one point per line.
void write_orbit(std::ostream& os, const OrbitRecord& record);
OrbitRecord read_orbit(std::istream& is, const RadixSchedule& schedule);

} // namespace bdt
