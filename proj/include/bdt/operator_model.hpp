#pragma once

// Finite N x N compressions of operators on l2(N): weighted shifts, the
// gauge unitaries U_z and the circle action they implement, its spectral
// subspaces, diagonal projections, and the partial-automorphism data
// theta(a) = S a S*, lambda(x*) = S x*.
//
// Truncation convention: S e_{N-1} = 0.

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "bdt/mixedradix.hpp"

namespace bdt {

using cplx = std::complex<double>;

struct ToleranceConfig {
    double eps = 1e-12; // max-entry norm
};

// Dense row-major compression of an l2 operator to span{e_0, ..., e_{N-1}}.
class TruncatedOperator {
public:
    explicit TruncatedOperator(std::size_t dim);
    // Throws DimensionError on a size mismatch and InputError on NaN/Inf.
    TruncatedOperator(std::size_t dim, std::vector<cplx> entries);

    static TruncatedOperator identity(std::size_t dim);
    static TruncatedOperator diagonal(std::span<const cplx> values);

    std::size_t dim() const { return dim_; }
    cplx operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    cplx& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    std::span<const cplx> entries() const { return entries_; }

    TruncatedOperator adjoint() const;
    TruncatedOperator leading_block(std::size_t size) const;
    std::vector<cplx> diagonal_values() const;

    TruncatedOperator& operator+=(const TruncatedOperator& other);
    TruncatedOperator& operator-=(const TruncatedOperator& other);
    TruncatedOperator& operator*=(cplx s);

    friend TruncatedOperator operator+(TruncatedOperator a, const TruncatedOperator& b) { return a += b; }
    friend TruncatedOperator operator-(TruncatedOperator a, const TruncatedOperator& b) { return a -= b; }
    friend TruncatedOperator operator*(cplx s, TruncatedOperator a) { return a *= s; }
    // Matrix product via the parallel kernel.
    friend TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b);

private:
    std::size_t dim_;
    std::vector<cplx> entries_;
};

double max_abs(const TruncatedOperator& x);
double max_abs_diff(const TruncatedOperator& a, const TruncatedOperator& b);

// Largest |x(m, n)| over entries with m - n != degree.
double off_band(const TruncatedOperator& x, long degree);
inline bool in_band(const TruncatedOperator& x, long degree, double eps) {
    return off_band(x, degree) <= eps;
}
inline bool is_diagonal(const TruncatedOperator& x, double eps) { return in_band(x, 0, eps); }

// Weights a_1, ..., a_p of a p-periodic weighted shift (a_n = a_{n+p}).
class PeriodicWeights {
public:
    explicit PeriodicWeights(std::vector<cplx> weights); // throws ValidityError if empty
    static PeriodicWeights ones() { return PeriodicWeights({cplx{1.0, 0.0}}); }

    std::size_t period() const { return weights_.size(); }
    // a_n for n >= 1.
    cplx weight(std::size_t n) const { return weights_[(n - 1) % weights_.size()]; }

private:
    std::vector<cplx> weights_;
};

// S_a e_n = a_{n+1} e_{n+1}, truncated.
TruncatedOperator weighted_shift(const PeriodicWeights& weights, std::size_t dim);
// The unweighted unilateral shift S.
TruncatedOperator unilateral_shift(std::size_t dim);

// U_z e_n = z^n e_n. Throws InputError when ||z| - 1| > eps.
TruncatedOperator diagonal_unitary(cplx z, std::size_t dim, ToleranceConfig tol = {});

// alpha_z(x) = U_z x U_z^{-1}.
TruncatedOperator circle_conjugate(cplx z, const TruncatedOperator& x, ToleranceConfig tol = {});

// Projection onto the degree-d spectral subspace by averaging
// z^{-d} alpha_z(x) over `samples` roots of unity (0 selects 2N - 1).
// Requires |d| < N and samples >= 2N - 1, which makes the average exact.
TruncatedOperator spectral_component(const TruncatedOperator& x, long degree,
                                     std::size_t samples = 0);
// Same, through the serial reference kernel.
TruncatedOperator spectral_component_serial(const TruncatedOperator& x, long degree,
                                            std::size_t samples = 0);

// Diagonal projections.
TruncatedOperator e_beta_diag(const DigitWord& beta, std::size_t dim);
TruncatedOperator f_k_diag(std::size_t k, std::size_t dim); // ones on 0..k-1
TruncatedOperator delta_diag(std::size_t n, std::size_t dim);

// theta(a) = S a S*.
TruncatedOperator theta(const TruncatedOperator& a);
// lambda(x*) = S x*; the argument is the adjoint x* itself.
TruncatedOperator lambda_map(const TruncatedOperator& xstar);

// Residuals of the four regularity identities, each as the max-entry norm of
// LHS - RHS on the leading (N-1) x (N-1) block:
//   (i)   lambda(x* b)          = lambda(x*) b
//   (ii)  lambda(a x*)          = theta(a) lambda(x*)
//   (iii) lambda(x*)* lambda(y*) = x y*
//   (iv)  lambda(x*) lambda(y*)* = theta(x* y)
struct RegularityReport {
    std::array<double, 4> residuals{};
    double max() const;
};

// Throws PreconditionError unless a, b are diagonal and x, y lie in band 1
// (to within tol.eps), and DimensionError on mismatched sizes.
RegularityReport regularity_check(const TruncatedOperator& a, const TruncatedOperator& b,
                                  const TruncatedOperator& x, const TruncatedOperator& y,
                                  ToleranceConfig tol = {});

// Support of theta((1 - f_k) e_beta) with k = |beta|. Throws
// ConsistencyError if that matrix is not a diagonal 0/1 projection.
std::vector<std::size_t> support_transport(const DigitWord& beta, std::size_t dim,
                                           ToleranceConfig tol = {});

// True iff every index j in `support` has to_digits(j mod n_k, k) equal to
// prefix_increment(beta).
bool transport_matches_odometer(const DigitWord& beta, std::span<const std::size_t> support);

// Plain-text grid, one row per line.
void print_grid(std::ostream& os, const TruncatedOperator& x);

} // namespace bdt
