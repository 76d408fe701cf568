#include "bdt/mixedradix.hpp"

#include <charconv>
#include <sstream>

#include "bdt/errors.hpp"

namespace bdt {

u64 checked_mul(u64 a, u64 b) {
    u64 out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw OverflowError("integer overflow in " + std::to_string(a) + " * " +
                            std::to_string(b));
    }
    return out;
}

u64 checked_add(u64 a, u64 b) {
    u64 out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("integer overflow in " + std::to_string(a) + " + " +
                            std::to_string(b));
    }
    return out;
}

namespace {

u64 parse_u64(std::string_view text, const char* what) {
    u64 value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw InputError(std::string("cannot parse ") + what + " from '" +
                         std::string(text) + "'");
    }
    return value;
}

std::vector<u64> parse_list(std::string_view text, const char* what) {
    std::vector<u64> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start);
        out.push_back(parse_u64(item, what));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string join(std::span<const u64> values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << values[i];
    }
    return os.str();
}

} // namespace

// ---------------------------------------------------------------------------
// RadixSchedule

RadixSchedule::RadixSchedule(std::vector<u64> radices, Extension extension)
    : extension_(extension) {
    if (radices.empty()) throw ValidityError("radix schedule must list at least one radix");
    for (u64 q : radices) {
        if (q < 2) throw ValidityError("every radix must be >= 2, got " + std::to_string(q));
    }
    radices_ = std::make_shared<const std::vector<u64>>(std::move(radices));
}

RadixSchedule RadixSchedule::parse(std::string_view text) {
    Extension ext = Extension::RepeatLast;
    if (!text.empty() && text.back() == '*') {
        ext = Extension::Cycle;
        text.remove_suffix(1);
    }
    if (text.empty()) throw InputError("empty radix schedule");
    try {
        return RadixSchedule(parse_list(text, "radix"), ext);
    } catch (const ValidityError& e) {
        throw InputError(e.what());
    }
}

u64 RadixSchedule::radix(std::size_t j) const {
    const auto& q = *radices_;
    if (j < q.size()) return q[j];
    return extension_ == Extension::Cycle ? q[j % q.size()] : q.back();
}

u64 RadixSchedule::n_index(std::size_t k) const {
    u64 n = 1;
    for (std::size_t j = 0; j < k; ++j) n = checked_mul(n, radix(j));
    return n;
}

std::size_t RadixSchedule::max_level_within(u64 bound) const {
    std::size_t k = 0;
    u64 n = 1;
    while (true) {
        u64 next = 0;
        if (__builtin_mul_overflow(n, radix(k), &next) || next > bound) return k;
        n = next;
        ++k;
    }
}

std::string RadixSchedule::to_string() const {
    std::string s = join(*radices_);
    if (extension_ == Extension::Cycle) s += '*';
    return s;
}

bool operator==(const RadixSchedule& a, const RadixSchedule& b) {
    return a.extension_ == b.extension_ &&
           (a.radices_ == b.radices_ || *a.radices_ == *b.radices_);
}

// ---------------------------------------------------------------------------
// DigitWord

DigitWord::DigitWord(RadixSchedule schedule, std::vector<u64> digits)
    : schedule_(std::move(schedule)), digits_(std::move(digits)) {
    for (std::size_t j = 0; j < digits_.size(); ++j) {
        if (digits_[j] >= schedule_.radix(j)) {
            throw ValidityError("digit " + std::to_string(digits_[j]) + " at position " +
                                std::to_string(j) + " is not below radix " +
                                std::to_string(schedule_.radix(j)));
        }
    }
}

DigitWord DigitWord::empty(RadixSchedule schedule) { return DigitWord(std::move(schedule), {}); }

u64 DigitWord::value() const {
    u64 value = 0;
    u64 weight = 1; // n_j
    for (std::size_t j = 0; j < digits_.size(); ++j) {
        if (digits_[j] != 0) value = checked_add(value, checked_mul(digits_[j], weight));
        if (j + 1 < digits_.size()) weight = checked_mul(weight, schedule_.radix(j));
    }
    return value;
}

DigitWord DigitWord::head(std::size_t k) const {
    if (k > digits_.size()) throw RangeError("head longer than the word");
    return DigitWord(schedule_, std::vector<u64>(digits_.begin(), digits_.begin() + k));
}

bool DigitWord::is_prefix_of(const DigitWord& other) const {
    if (length() > other.length()) return false;
    for (std::size_t j = 0; j < length(); ++j) {
        if (digits_[j] != other.digits_[j]) return false;
    }
    return true;
}

std::string DigitWord::to_string() const { return join(digits_); }

bool operator==(const DigitWord& a, const DigitWord& b) {
    return a.digits_ == b.digits_ && a.schedule_ == b.schedule_;
}

DigitWord to_digits(u64 n, std::size_t k, const RadixSchedule& schedule) {
    // Mixed-radix division. n < n_k is checked without forming n_k, which may
    // overflow even when n itself is representable.
    std::vector<u64> digits(k);
    u64 rest = n;
    for (std::size_t j = 0; j < k; ++j) {
        u64 q = schedule.radix(j);
        digits[j] = rest % q;
        rest /= q;
    }
    if (rest != 0) {
        throw RangeError(std::to_string(n) + " is not below n_" + std::to_string(k));
    }
    return DigitWord(schedule, std::move(digits));
}

u64 from_digits(const DigitWord& word) { return word.value(); }

DigitWord parse_digits(std::string_view text, const RadixSchedule& schedule) {
    try {
        return DigitWord(schedule, parse_list(text, "digit"));
    } catch (const ValidityError& e) {
        throw InputError(e.what());
    }
}

// ---------------------------------------------------------------------------
// CantorPoint

DigitWord CantorPoint::canonical_prefix(const DigitWord& prefix, Tail tail) {
    std::size_t len = prefix.length();
    while (len > 0 && prefix[len - 1] == tail_digit(prefix.schedule(), len - 1, tail)) --len;
    return len == prefix.length() ? prefix : prefix.head(len);
}

CantorPoint::CantorPoint(DigitWord prefix, Tail tail)
    : prefix_(canonical_prefix(prefix, tail)), tail_(tail) {}

CantorPoint CantorPoint::zeros(const RadixSchedule& schedule) {
    return CantorPoint(DigitWord::empty(schedule), Tail::Zeros);
}

CantorPoint CantorPoint::max(const RadixSchedule& schedule) {
    return CantorPoint(DigitWord::empty(schedule), Tail::Max);
}

u64 CantorPoint::digit(std::size_t j) const {
    return j < prefix_.length() ? prefix_[j] : tail_digit(schedule(), j, tail_);
}

std::string CantorPoint::to_string() const {
    return prefix_.to_string() + (tail_ == Tail::Zeros ? "|Z" : "|M");
}

bool operator==(const CantorPoint& a, const CantorPoint& b) {
    // Canonical forms are unique, except that a Zeros tail and a Max tail
    // never describe the same point (q_j >= 2 makes the tails differ).
    return a.tail_ == b.tail_ && a.prefix_ == b.prefix_;
}

DigitWord truncate(const CantorPoint& point, std::size_t k) {
    std::vector<u64> digits(k);
    for (std::size_t j = 0; j < k; ++j) digits[j] = point.digit(j);
    return DigitWord(point.schedule(), std::move(digits));
}

std::string XPoint::to_string() const {
    return is_nat() ? std::to_string(as_nat()) : as_cantor().to_string();
}

CantorPoint parse_cantor_point(std::string_view text, const RadixSchedule& schedule) {
    if (text == "zeros") return CantorPoint::zeros(schedule);
    if (text == "max") return CantorPoint::max(schedule);
    std::size_t bar = text.find('|');
    if (bar == std::string_view::npos || bar + 2 != text.size()) {
        throw InputError("cannot parse Cantor point from '" + std::string(text) + "'");
    }
    Tail tail;
    switch (text.back()) {
    case 'Z': tail = Tail::Zeros; break;
    case 'M': tail = Tail::Max; break;
    default: throw InputError("tail tag must be Z or M in '" + std::string(text) + "'");
    }
    return CantorPoint(parse_digits(text.substr(0, bar), schedule), tail);
}

XPoint parse_point(std::string_view text, const RadixSchedule& schedule) {
    if (text.starts_with("nat:")) return XPoint::nat(parse_u64(text.substr(4), "natural"));
    if (text == "zeros" || text == "max" || text.find('|') != std::string_view::npos) {
        return XPoint::cantor(parse_cantor_point(text, schedule));
    }
    return XPoint::nat(parse_u64(text, "natural"));
}

} // namespace bdt
