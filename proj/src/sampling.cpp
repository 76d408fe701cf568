#include "bdt/sampling.hpp"

#include <numbers>

namespace bdt::sampling {

Rng make_rng(u64 seed, u64 stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

cplx unit_complex(Rng& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    return std::polar(1.0, angle(rng));
}

cplx box_complex(Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double re = u(rng);
    return {re, u(rng)};
}

PeriodicWeights periodic_weights(Rng& rng, std::size_t period) {
    std::vector<cplx> w(period);
    for (auto& v : w) v = box_complex(rng);
    return PeriodicWeights(std::move(w));
}

TruncatedOperator dense_matrix(Rng& rng, std::size_t dim) {
    std::vector<cplx> entries(dim * dim);
    for (auto& v : entries) v = box_complex(rng);
    return TruncatedOperator(dim, std::move(entries));
}

TruncatedOperator diagonal_matrix(Rng& rng, std::size_t dim) {
    std::vector<cplx> d(dim);
    for (auto& v : d) v = box_complex(rng);
    return TruncatedOperator::diagonal(d);
}

TruncatedOperator band_one_matrix(Rng& rng, std::size_t dim) {
    TruncatedOperator x(dim);
    for (std::size_t n = 0; n + 1 < dim; ++n) x(n + 1, n) = box_complex(rng);
    return x;
}

DigitWord digit_word(Rng& rng, const RadixSchedule& schedule, std::size_t length) {
    std::vector<u64> digits(length);
    for (std::size_t j = 0; j < length; ++j) {
        digits[j] = std::uniform_int_distribution<u64>(0, schedule.radix(j) - 1)(rng);
    }
    return DigitWord(schedule, std::move(digits));
}

CantorPoint cantor_point(Rng& rng, const RadixSchedule& schedule, std::size_t max_prefix) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_prefix)(rng);
    const Tail tail = std::bernoulli_distribution(0.5)(rng) ? Tail::Zeros : Tail::Max;
    return CantorPoint(digit_word(rng, schedule, len), tail);
}

} // namespace bdt::sampling
