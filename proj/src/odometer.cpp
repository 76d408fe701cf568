#include "bdt/odometer.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "bdt/errors.hpp"

namespace bdt {

CantorPoint odometer_total(const CantorPoint& point) {
    const RadixSchedule& schedule = point.schedule();
    std::vector<u64> digits(point.prefix().digits().begin(), point.prefix().digits().end());
    for (std::size_t j = 0; j < digits.size(); ++j) {
        if (digits[j] + 1 < schedule.radix(j)) {
            ++digits[j];
            return CantorPoint(DigitWord(schedule, std::move(digits)), point.tail());
        }
        digits[j] = 0;
    }
    // The carry left the prefix.
    if (point.tail() == Tail::Max) {
        // Every tail digit is maximal: the carry never stops and all digits become 0.
        return CantorPoint::zeros(schedule);
    }
    digits.push_back(1);
    return CantorPoint(DigitWord(schedule, std::move(digits)), Tail::Zeros);
}

CantorPoint odometer_partial(const CantorPoint& point) {
    if (point.is_all_max()) {
        throw DomainError("partial odometer is undefined at the all-max point");
    }
    return odometer_total(point);
}

CantorPoint odometer_inverse(const CantorPoint& point) {
    const RadixSchedule& schedule = point.schedule();
    std::vector<u64> digits(point.prefix().digits().begin(), point.prefix().digits().end());
    for (std::size_t j = 0; j < digits.size(); ++j) {
        if (digits[j] > 0) {
            --digits[j];
            return CantorPoint(DigitWord(schedule, std::move(digits)), point.tail());
        }
        digits[j] = schedule.radix(j) - 1;
    }
    if (point.tail() == Tail::Zeros) return CantorPoint::max(schedule);
    std::size_t j = digits.size();
    digits.push_back(schedule.radix(j) - 2);
    return CantorPoint(DigitWord(schedule, std::move(digits)), Tail::Max);
}

XPoint step_x(const XPoint& x) {
    if (x.is_nat()) return XPoint::nat(checked_add(x.as_nat(), 1));
    return XPoint::cantor(odometer_total(x.as_cantor()));
}

DigitWord prefix_increment(const DigitWord& word) {
    const RadixSchedule& schedule = word.schedule();
    std::vector<u64> digits(word.digits().begin(), word.digits().end());
    for (std::size_t j = 0; j < digits.size(); ++j) {
        if (digits[j] + 1 < schedule.radix(j)) {
            ++digits[j];
            break;
        }
        digits[j] = 0; // a carry out of the last digit is dropped (mod n_k)
    }
    return DigitWord(schedule, std::move(digits));
}

OrbitRecord orbit(const XPoint& start, std::size_t steps) {
    OrbitRecord record{start, steps, {}};
    record.points.reserve(steps + 1);
    record.points.push_back(start);
    for (std::size_t i = 0; i < steps; ++i) record.points.push_back(step_x(record.points.back()));
    return record;
}

u64 cylinder_index(const XPoint& x, std::size_t k, const RadixSchedule& schedule) {
    if (x.is_nat()) return x.as_nat() % schedule.n_index(k);
    return truncate(x.as_cantor(), k).value();
}

std::vector<u64> visit_counts(const OrbitRecord& record, std::size_t k,
                              const RadixSchedule& schedule) {
    std::vector<u64> counts(schedule.n_index(k), 0);
    for (const XPoint& x : record.points) ++counts[cylinder_index(x, k, schedule)];
    return counts;
}

bool visits_each_cylinder_once(const OrbitRecord& record, std::size_t k,
                               const RadixSchedule& schedule) {
    const u64 period = schedule.n_index(k);
    if (record.points.size() < period) return false;
    std::vector<u64> index;
    index.reserve(record.points.size());
    for (const XPoint& x : record.points) index.push_back(cylinder_index(x, k, schedule));

    // Slide a window of length n_k, tracking how many cylinders are hit once.
    std::vector<u64> counts(period, 0);
    u64 hit_once = 0;
    auto add = [&](u64 c) {
        if (counts[c] == 1) --hit_once;
        if (++counts[c] == 1) ++hit_once;
    };
    auto remove = [&](u64 c) {
        if (counts[c] == 1) --hit_once;
        if (--counts[c] == 1) ++hit_once;
    };
    for (u64 i = 0; i < period; ++i) add(index[i]);
    if (hit_once != period) return false;
    for (std::size_t i = period; i < index.size(); ++i) {
        remove(index[i - period]);
        add(index[i]);
        if (hit_once != period) return false;
    }
    return true;
}

Rational cylinder_measure(const DigitWord& word) {
    u64 n = word.schedule().n_index(word.length());
    if (n > static_cast<u64>(std::numeric_limits<std::int64_t>::max())) {
        throw OverflowError("cylinder measure denominator exceeds 63 bits");
    }
    return Rational(1, static_cast<std::int64_t>(n));
}

void write_orbit(std::ostream& os, const OrbitRecord& record) {
    for (const XPoint& x : record.points) os << x.to_string() << '\n';
}

OrbitRecord read_orbit(std::istream& is, const RadixSchedule& schedule) {
    std::vector<XPoint> points;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        points.push_back(parse_point(line, schedule));
    }
    if (points.empty()) throw InputError("orbit text holds no points");
    OrbitRecord record{points.front(), points.size() - 1, std::move(points)};
    return record;
}

} // namespace bdt
