#pragma once

// Random draws used by the verification suite and property tests.

#include <random>

#include "bdt/mixedradix.hpp"
#include "bdt/operator_model.hpp"

namespace bdt::sampling {

using Rng = std::mt19937_64;

// Independent, reproducible stream for the `stream`-th consumer of `seed`.
Rng make_rng(u64 seed, u64 stream);

// Uniform (Haar) point of the unit circle.
cplx unit_complex(Rng& rng);
// Real and imaginary parts uniform in [-1, 1].
cplx box_complex(Rng& rng);

PeriodicWeights periodic_weights(Rng& rng, std::size_t period);
TruncatedOperator dense_matrix(Rng& rng, std::size_t dim);
TruncatedOperator diagonal_matrix(Rng& rng, std::size_t dim);
// Random matrix supported on the subdiagonal (m - n = 1).
TruncatedOperator band_one_matrix(Rng& rng, std::size_t dim);

DigitWord digit_word(Rng& rng, const RadixSchedule& schedule, std::size_t length);
// Prefix length uniform in [0, max_prefix], tail uniform.
CantorPoint cantor_point(Rng& rng, const RadixSchedule& schedule, std::size_t max_prefix);

} // namespace bdt::sampling
