#pragma once

// Dense complex kernels behind TruncatedOperator. Each kernel has a serial
// reference and an OpenMP version; both accumulate every output entry in
// the same order, so their results agree bit for bit.

#include <complex>
#include <cstddef>
#include <span>

namespace bdt::kernels {

using cplx = std::complex<double>;

// c = a * b for row-major n x n matrices.
void matmul_serial(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
                   std::size_t n);
void matmul_parallel(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c,
                     std::size_t n);

// out = (1/M) sum_{j<M} w_j^{-d} U_{w_j} x U_{w_j}^{-1}, w_j = exp(2 pi i j / M).
void spectral_average_serial(std::span<const cplx> x, std::span<cplx> out, std::size_t n,
                             long degree, std::size_t samples);
void spectral_average_parallel(std::span<const cplx> x, std::span<cplx> out, std::size_t n,
                               long degree, std::size_t samples);

} // namespace bdt::kernels
