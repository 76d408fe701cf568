#pragma once

// Mixed-radix positional arithmetic: n = sum_j beta_j * n_j with
// n_0 = 1 and n_{j+1} = n_j * q_j.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bdt {

using u64 = std::uint64_t;

// How radices q_j are defined past the explicitly listed ones.
enum class Extension {
    RepeatLast, // q_j = q_{m-1} for j >= m
    Cycle,      // q_j = q_{j mod m}
};

// The radix sequence q_0, q_1, ... . Immutable; copies share storage.
class RadixSchedule {
public:
    // Throws ValidityError if `radices` is empty or any entry is < 2.
    explicit RadixSchedule(std::vector<u64> radices,
                           Extension extension = Extension::RepeatLast);

    // Parses "q0,q1,...,qm" (repeat-last) or "q0,...,qm*" (cycle).
    static RadixSchedule parse(std::string_view text);

    u64 radix(std::size_t j) const;

    // n_k = q_0 * ... * q_{k-1}; n_0 = 1. Throws OverflowError when n_k does
    // not fit in 64 bits.
    u64 n_index(std::size_t k) const;

    // Largest k with n_k <= bound (bound >= 1).
    std::size_t max_level_within(u64 bound) const;

    std::span<const u64> listed() const { return *radices_; }
    Extension extension() const { return extension_; }
    std::string to_string() const;

    friend bool operator==(const RadixSchedule& a, const RadixSchedule& b);

private:
    std::shared_ptr<const std::vector<u64>> radices_;
    Extension extension_;
};

inline u64 n_index(const RadixSchedule& schedule, std::size_t k) {
    return schedule.n_index(k);
}

// A finite digit string beta in K_k, least significant digit first.
class DigitWord {
public:
    // Throws ValidityError if some digit beta_j >= q_j.
    DigitWord(RadixSchedule schedule, std::vector<u64> digits);
    static DigitWord empty(RadixSchedule schedule);

    std::size_t length() const { return digits_.size(); }
    bool is_empty() const { return digits_.empty(); }
    u64 operator[](std::size_t j) const { return digits_[j]; }
    std::span<const u64> digits() const { return digits_; }
    const RadixSchedule& schedule() const { return schedule_; }

    // sum_j beta_j n_j. Throws OverflowError if it leaves 64 bits.
    u64 value() const;

    // The first k digits (k <= length()).
    DigitWord head(std::size_t k) const;
    bool is_prefix_of(const DigitWord& other) const;

    std::string to_string() const; // "d0,d1,...", empty for the empty word

    friend bool operator==(const DigitWord& a, const DigitWord& b);

private:
    RadixSchedule schedule_;
    std::vector<u64> digits_;
};

// The unique beta in K_k with value(beta) = n. Throws RangeError if n >= n_k.
DigitWord to_digits(u64 n, std::size_t k, const RadixSchedule& schedule);

u64 from_digits(const DigitWord& word);

// Parses "d0,d1,..." (possibly empty) against `schedule`.
DigitWord parse_digits(std::string_view text, const RadixSchedule& schedule);

enum class Tail {
    Zeros, // digit j beyond the prefix is 0
    Max,   // digit j beyond the prefix is q_j - 1
};

// A point of the Cantor set K = prod_j {0..q_j-1} whose digits are
// eventually 0 or eventually maximal. Always held in canonical form: the
// prefix never ends with the digit its tail would supply at that position.
class CantorPoint {
public:
    CantorPoint(DigitWord prefix, Tail tail);

    static CantorPoint zeros(const RadixSchedule& schedule);
    static CantorPoint max(const RadixSchedule& schedule);

    // Strips trailing prefix digits that equal the tail digit.
    static DigitWord canonical_prefix(const DigitWord& prefix, Tail tail);

    const DigitWord& prefix() const { return prefix_; }
    Tail tail() const { return tail_; }
    const RadixSchedule& schedule() const { return prefix_.schedule(); }

    u64 digit(std::size_t j) const;
    bool is_all_zeros() const { return prefix_.is_empty() && tail_ == Tail::Zeros; }
    bool is_all_max() const { return prefix_.is_empty() && tail_ == Tail::Max; }

    std::string to_string() const; // "d0,...,dk|Z" or "...|M"

    friend bool operator==(const CantorPoint& a, const CantorPoint& b);

private:
    DigitWord prefix_;
    Tail tail_;
};

inline u64 tail_digit(const RadixSchedule& schedule, std::size_t j, Tail tail) {
    return tail == Tail::Zeros ? 0 : schedule.radix(j) - 1;
}

// gamma|_k = (gamma_0, ..., gamma_{k-1}).
DigitWord truncate(const CantorPoint& point, std::size_t k);

// A point of X = N u K.
class XPoint {
public:
    static XPoint nat(u64 n) { return XPoint(n); }
    static XPoint cantor(CantorPoint p) { return XPoint(std::move(p)); }

    bool is_nat() const { return std::holds_alternative<u64>(value_); }
    bool is_cantor() const { return !is_nat(); }
    u64 as_nat() const { return std::get<u64>(value_); }
    const CantorPoint& as_cantor() const { return std::get<CantorPoint>(value_); }

    std::string to_string() const; // decimal, or the CantorPoint form

    friend bool operator==(const XPoint& a, const XPoint& b) = default;

private:
    explicit XPoint(u64 n) : value_(n) {}
    explicit XPoint(CantorPoint p) : value_(std::move(p)) {}

    std::variant<u64, CantorPoint> value_;
};

// Point syntax: "zeros", "max", "nat:<n>", a bare decimal "<n>", or
// "d0,d1,...|Z" / "d0,d1,...|M". Throws InputError when malformed.
XPoint parse_point(std::string_view text, const RadixSchedule& schedule);
CantorPoint parse_cantor_point(std::string_view text, const RadixSchedule& schedule);

// Checked 64-bit helpers shared across modules.
u64 checked_mul(u64 a, u64 b);
u64 checked_add(u64 a, u64 b);

} // namespace bdt
