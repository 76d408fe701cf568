#pragma once

// Level-k model of C(K): n_k-periodic sequences, the automorphism induced
// by the odometer, and the check that theta descends to it modulo c_0.

#include <complex>
#include <vector>

#include <nlohmann/json.hpp>

#include "bdt/mixedradix.hpp"

namespace bdt {

// A function on K_k, i.e. one period of an n_k-periodic sequence.
class LevelFunction {
public:
    // Throws ValidityError unless values.size() == n_k.
    LevelFunction(RadixSchedule schedule, std::size_t level, std::vector<std::complex<double>> values);

    static LevelFunction constant(RadixSchedule schedule, std::size_t level, std::complex<double> c);
    // Indicator of the cylinder of beta at level |beta|.
    static LevelFunction indicator(const DigitWord& beta);

    const RadixSchedule& schedule() const { return schedule_; }
    std::size_t level() const { return level_; }
    const std::vector<std::complex<double>>& values() const { return values_; }

    LevelFunction operator*(const LevelFunction& other) const; // pointwise, same level
    LevelFunction operator+(const LevelFunction& other) const;
    LevelFunction conj() const;
    double sup_norm() const;

    friend bool operator==(const LevelFunction&, const LevelFunction&) = default;

private:
    RadixSchedule schedule_;
    std::size_t level_;
    std::vector<std::complex<double>> values_;
};

// values'[m] = values[m mod n_k] at level k' >= k; RangeError if k' < k.
LevelFunction refine(const LevelFunction& f, std::size_t to_level);

// values'[m] = values[(m - 1) mod n_k]: precomposition with the inverse of
// the +1 rotation of Z/n_k.
LevelFunction induced_automorphism(const LevelFunction& f);

// Indices j < dim where theta(e_beta) and e_{prefix_increment(beta)} differ
// (truncation dim).
std::vector<std::size_t> quotient_difference_support(const DigitWord& beta, std::size_t dim,
                                                     double eps = 1e-12);

// True iff that difference is supported in {0}. Requires dim >= 2 n_k.
bool quotient_compatibility(const DigitWord& beta, std::size_t dim, double eps = 1e-12);

// {"level": k, "schedule": "...", "values": [[re, im], ...]}
nlohmann::json to_json(const LevelFunction& f);
LevelFunction level_function_from_json(const nlohmann::json& j);

} // namespace bdt
