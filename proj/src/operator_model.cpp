#include "bdt/operator_model.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bdt/errors.hpp"
#include "bdt/kernels.hpp"
#include "bdt/odometer.hpp"

namespace bdt {

namespace {

void require_same_dim(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("operator dimensions differ: " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
    }
}

std::size_t default_samples(std::size_t dim, std::size_t samples) {
    return samples == 0 ? 2 * dim - 1 : samples;
}

void check_spectral_args(const TruncatedOperator& x, long degree, std::size_t samples) {
    const long n = static_cast<long>(x.dim());
    if (degree <= -n || degree >= n) {
        throw RangeError("spectral degree " + std::to_string(degree) + " outside (-N, N)");
    }
    if (samples < 2 * x.dim() - 1) {
        throw PreconditionError("spectral averaging needs at least 2N - 1 sample points");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// TruncatedOperator

TruncatedOperator::TruncatedOperator(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw DimensionError("operator dimension must be >= 1");
}

TruncatedOperator::TruncatedOperator(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) throw DimensionError("operator dimension must be >= 1");
    if (entries_.size() != dim * dim) throw DimensionError("entry count is not N*N");
    for (const cplx& v : entries_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw InputError("operator entries must be finite");
        }
    }
}

TruncatedOperator TruncatedOperator::identity(std::size_t dim) {
    TruncatedOperator out(dim);
    for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
    return out;
}

TruncatedOperator TruncatedOperator::diagonal(std::span<const cplx> values) {
    TruncatedOperator out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out(i, i) = values[i];
    return out;
}

TruncatedOperator TruncatedOperator::adjoint() const {
    TruncatedOperator out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    }
    return out;
}

TruncatedOperator TruncatedOperator::leading_block(std::size_t size) const {
    if (size == 0 || size > dim_) throw DimensionError("invalid leading block size");
    TruncatedOperator out(size);
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) out(r, c) = (*this)(r, c);
    }
    return out;
}

std::vector<cplx> TruncatedOperator::diagonal_values() const {
    std::vector<cplx> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = (*this)(i, i);
    return out;
}

TruncatedOperator& TruncatedOperator::operator+=(const TruncatedOperator& other) {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

TruncatedOperator& TruncatedOperator::operator-=(const TruncatedOperator& other) {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

TruncatedOperator& TruncatedOperator::operator*=(cplx s) {
    for (cplx& v : entries_) v *= s;
    return *this;
}

TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_dim(a, b);
    TruncatedOperator out(a.dim());
    kernels::matmul_parallel(a.entries_, b.entries_, out.entries_, a.dim());
    return out;
}

double max_abs(const TruncatedOperator& x) {
    double m = 0.0;
    for (const cplx& v : x.entries()) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_dim(a, b);
    double m = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
    return m;
}

double off_band(const TruncatedOperator& x, long degree) {
    double m = 0.0;
    const long n = static_cast<long>(x.dim());
    for (long r = 0; r < n; ++r) {
        for (long c = 0; c < n; ++c) {
            if (r - c != degree) m = std::max(m, std::abs(x(r, c)));
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Shifts and the circle action

PeriodicWeights::PeriodicWeights(std::vector<cplx> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw ValidityError("periodic weights need period >= 1");
}

TruncatedOperator weighted_shift(const PeriodicWeights& weights, std::size_t dim) {
    TruncatedOperator out(dim);
    for (std::size_t n = 0; n + 1 < dim; ++n) out(n + 1, n) = weights.weight(n + 1);
    return out;
}

TruncatedOperator unilateral_shift(std::size_t dim) {
    return weighted_shift(PeriodicWeights::ones(), dim);
}

TruncatedOperator diagonal_unitary(cplx z, std::size_t dim, ToleranceConfig tol) {
    if (std::abs(std::abs(z) - 1.0) > tol.eps) {
        std::ostringstream os;
        os << "z = " << z << " is not on the unit circle";
        throw InputError(os.str());
    }
    std::vector<cplx> powers(dim);
    cplx p = 1.0;
    for (std::size_t n = 0; n < dim; ++n) {
        powers[n] = p;
        p *= z;
    }
    return TruncatedOperator::diagonal(powers);
}

TruncatedOperator circle_conjugate(cplx z, const TruncatedOperator& x, ToleranceConfig tol) {
    // U_z is diagonal, so U_z x U_z^{-1} has entries u_m x(m, n) / u_n.
    const auto u = diagonal_unitary(z, x.dim(), tol).diagonal_values();
    TruncatedOperator out(x.dim());
    for (std::size_t m = 0; m < x.dim(); ++m) {
        for (std::size_t n = 0; n < x.dim(); ++n) out(m, n) = u[m] * x(m, n) / u[n];
    }
    return out;
}

TruncatedOperator spectral_component(const TruncatedOperator& x, long degree, std::size_t samples) {
    samples = default_samples(x.dim(), samples);
    check_spectral_args(x, degree, samples);
    std::vector<cplx> out(x.dim() * x.dim());
    kernels::spectral_average_parallel(x.entries(), out, x.dim(), degree, samples);
    return TruncatedOperator(x.dim(), std::move(out));
}

TruncatedOperator spectral_component_serial(const TruncatedOperator& x, long degree,
                                            std::size_t samples) {
    samples = default_samples(x.dim(), samples);
    check_spectral_args(x, degree, samples);
    std::vector<cplx> out(x.dim() * x.dim());
    kernels::spectral_average_serial(x.entries(), out, x.dim(), degree, samples);
    return TruncatedOperator(x.dim(), std::move(out));
}

// ---------------------------------------------------------------------------
// Diagonal projections

TruncatedOperator e_beta_diag(const DigitWord& beta, std::size_t dim) {
    const u64 period = beta.schedule().n_index(beta.length());
    const u64 residue = beta.value();
    TruncatedOperator out(dim);
    for (std::size_t n = 0; n < dim; ++n) {
        if (n % period == residue) out(n, n) = 1.0;
    }
    return out;
}

TruncatedOperator f_k_diag(std::size_t k, std::size_t dim) {
    TruncatedOperator out(dim);
    for (std::size_t n = 0; n < std::min(k, dim); ++n) out(n, n) = 1.0;
    return out;
}

TruncatedOperator delta_diag(std::size_t n, std::size_t dim) {
    if (n >= dim) {
        throw RangeError("delta index " + std::to_string(n) + " outside dimension " +
                         std::to_string(dim));
    }
    TruncatedOperator out(dim);
    out(n, n) = 1.0;
    return out;
}

// ---------------------------------------------------------------------------
// Partial-automorphism data

TruncatedOperator theta(const TruncatedOperator& a) {
    const auto s = unilateral_shift(a.dim());
    return s * a * s.adjoint();
}

TruncatedOperator lambda_map(const TruncatedOperator& xstar) {
    return unilateral_shift(xstar.dim()) * xstar;
}

double RegularityReport::max() const { return *std::max_element(residuals.begin(), residuals.end()); }

RegularityReport regularity_check(const TruncatedOperator& a, const TruncatedOperator& b,
                                  const TruncatedOperator& x, const TruncatedOperator& y,
                                  ToleranceConfig tol) {
    require_same_dim(a, b);
    require_same_dim(a, x);
    require_same_dim(a, y);
    if (a.dim() < 2) throw DimensionError("regularity check needs N >= 2");
    if (!is_diagonal(a, tol.eps) || !is_diagonal(b, tol.eps)) {
        throw PreconditionError("a and b must be diagonal");
    }
    if (!in_band(x, 1, tol.eps) || !in_band(y, 1, tol.eps)) {
        throw PreconditionError("x and y must lie in the first spectral subspace");
    }
    const std::size_t block = a.dim() - 1;
    auto residual = [block](const TruncatedOperator& lhs, const TruncatedOperator& rhs) {
        return max_abs_diff(lhs.leading_block(block), rhs.leading_block(block));
    };
    const auto xs = x.adjoint();
    const auto ys = y.adjoint();
    const auto lx = lambda_map(xs);
    const auto ly = lambda_map(ys);

    RegularityReport report;
    report.residuals[0] = residual(lambda_map(xs * b), lx * b);
    report.residuals[1] = residual(lambda_map(a * xs), theta(a) * lx);
    report.residuals[2] = residual(lx.adjoint() * ly, x * ys);
    report.residuals[3] = residual(lx * ly.adjoint(), theta(xs * y));
    return report;
}

std::vector<std::size_t> support_transport(const DigitWord& beta, std::size_t dim,
                                           ToleranceConfig tol) {
    const auto cut = TruncatedOperator::identity(dim) - f_k_diag(beta.length(), dim);
    const auto image = theta(cut * e_beta_diag(beta, dim));
    if (!is_diagonal(image, tol.eps)) {
        throw ConsistencyError("transported idempotent is not diagonal");
    }
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < dim; ++j) {
        const cplx v = image(j, j);
        if (std::abs(v - 1.0) <= tol.eps) {
            support.push_back(j);
        } else if (std::abs(v) > tol.eps) {
            throw ConsistencyError("transported idempotent has a diagonal entry outside {0, 1}");
        }
    }
    return support;
}

bool transport_matches_odometer(const DigitWord& beta, std::span<const std::size_t> support) {
    const RadixSchedule& schedule = beta.schedule();
    const std::size_t k = beta.length();
    const u64 period = schedule.n_index(k);
    const DigitWord next = prefix_increment(beta);
    return std::all_of(support.begin(), support.end(), [&](std::size_t j) {
        return to_digits(j % period, k, schedule) == next;
    });
}

void print_grid(std::ostream& os, const TruncatedOperator& x) {
    auto fmt = [](cplx v) {
        std::ostringstream s;
        s << std::setprecision(4);
        if (v.imag() == 0.0) {
            s << v.real();
        } else {
            s << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
        }
        return s.str();
    };
    std::size_t width = 1;
    for (const cplx& v : x.entries()) width = std::max(width, fmt(v).size());
    for (std::size_t r = 0; r < x.dim(); ++r) {
        for (std::size_t c = 0; c < x.dim(); ++c) {
            if (c) os << ' ';
            os << std::setw(static_cast<int>(width)) << fmt(x(r, c));
        }
        os << '\n';
    }
}

} // namespace bdt
