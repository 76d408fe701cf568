#include "bdt/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace bdt::kernels {

namespace {

void matmul_row(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
                std::size_t n, std::size_t i) {
    cplx* row = c.data() + i * n;
    std::fill(row, row + n, cplx{});
    for (std::size_t k = 0; k < n; ++k) {
        const cplx aik = a[i * n + k];
        if (aik == cplx{}) continue;
        const cplx* brow = b.data() + k * n;
        for (std::size_t j = 0; j < n; ++j) row[j] += aik * brow[j];
    }
}

// roots[r] = exp(2 pi i r / M), r in [0, M).
std::vector<cplx> roots_of_unity(std::size_t samples) {
    std::vector<cplx> roots(samples);
    for (std::size_t r = 0; r < samples; ++r) {
        roots[r] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                                       static_cast<double>(samples));
    }
    return roots;
}

std::size_t mod(long long v, std::size_t m) {
    long long r = v % static_cast<long long>(m);
    return static_cast<std::size_t>(r < 0 ? r + static_cast<long long>(m) : r);
}

// One output row of the root-of-unity average. The sum over samples runs
// innermost, in sample order, for every entry.
void spectral_row(std::span<const cplx> x, std::span<cplx> out, std::size_t n, long degree,
                  std::size_t samples, const std::vector<cplx>& roots, std::size_t m) {
    const double scale = 1.0 / static_cast<double>(samples);
    for (std::size_t col = 0; col < n; ++col) {
        const cplx value = x[m * n + col];
        cplx acc{};
        if (value != cplx{}) {
            for (std::size_t j = 0; j < samples; ++j) {
                const long long jj = static_cast<long long>(j);
                // w^m x_{m,col} w^{-col} w^{-d}
                const cplx zm = roots[mod(jj * static_cast<long long>(m), samples)];
                const cplx zn = std::conj(roots[mod(jj * static_cast<long long>(col), samples)]);
                const cplx zd = std::conj(roots[mod(jj * degree, samples)]);
                acc += zd * (zm * value * zn);
            }
        }
        out[m * n + col] = acc * scale;
    }
}

} // namespace

void matmul_serial(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
                   std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) matmul_row(a, b, c, n, i);
}

void matmul_parallel(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
                     std::size_t n) {
    const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (n >= 32)
    for (long i = 0; i < rows; ++i) matmul_row(a, b, c, n, static_cast<std::size_t>(i));
}

void spectral_average_serial(std::span<const cplx> x, std::span<cplx> out, std::size_t n,
                             long degree, std::size_t samples) {
    // Literal form: for each sample point, conjugate by the diagonal unitary
    // and accumulate into the running average.
    const auto roots = roots_of_unity(samples);
    std::vector<cplx> acc(n * n, cplx{});
    for (std::size_t j = 0; j < samples; ++j) {
        const long long jj = static_cast<long long>(j);
        const cplx zd = std::conj(roots[mod(jj * degree, samples)]);
        for (std::size_t m = 0; m < n; ++m) {
            const cplx zm = roots[mod(jj * static_cast<long long>(m), samples)];
            for (std::size_t col = 0; col < n; ++col) {
                const cplx value = x[m * n + col];
                if (value == cplx{}) continue;
                const cplx zn = std::conj(roots[mod(jj * static_cast<long long>(col), samples)]);
                acc[m * n + col] += zd * (zm * value * zn);
            }
        }
    }
    const double scale = 1.0 / static_cast<double>(samples);
    for (std::size_t i = 0; i < n * n; ++i) out[i] = acc[i] * scale;
}

void spectral_average_parallel(std::span<const cplx> x, std::span<cplx> out, std::size_t n,
                               long degree, std::size_t samples) {
    const auto roots = roots_of_unity(samples);
    const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (n >= 16)
    for (long m = 0; m < rows; ++m) {
        spectral_row(x, out, n, degree, samples, roots, static_cast<std::size_t>(m));
    }
}

} // namespace bdt::kernels
