#pragma once

#include <cstddef>
#include <string>

#include "rydsim/types.hpp"

// Inner-loop arithmetic on contiguous complex<double> arrays. Scalar
// reference implementations always exist; an AVX2 (x86-64) or NEON
// (aarch64) backend is selected once at startup and can be overridden
// with the RYDSIM_KERNELS environment variable ("scalar", "avx2",
// "neon"). The elementwise kernels, matvec and gemm are bit-identical
// across backends (same operation order per output element); reductions
// (norm_sq, wrms) may differ by rounding and are tolerance-tested.

namespace rydsim::kernels {

enum class Backend { Scalar, Avx2, Neon };

Backend active_backend();
const char* backend_name();
void set_backend(Backend b); // throws ConfigError if unavailable

// out[i] = base[i] + sum_j coeff[j] * terms[j][i]   (real coefficients)
void lincomb(std::size_t n, cplx* out, const cplx* base, const double* coeff,
             const cplx* const* terms, int nterms);

// y[i] = a * x[i]
void scale(std::size_t n, cplx a, const cplx* x, cplx* y);

// y = A x, A is n x n row-major complex
void matvec(std::size_t n, const cplx* a, const cplx* x, cplx* y);

// C = A B, all n x n row-major complex (C must not alias A or B)
void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c);

// sum |x[i]|^2
double norm_sq(std::size_t n, const cplx* x);

// RMS of err scaled by atol + rtol*max(|y0|,|y1|), treating real and
// imaginary parts as separate components (2n reals).
double wrms(std::size_t n, const cplx* err, const cplx* y0, const cplx* y1,
            double atol, double rtol);

namespace detail {

struct Ops {
    void (*lincomb)(std::size_t, cplx*, const cplx*, const double*,
                    const cplx* const*, int);
    void (*scale)(std::size_t, cplx, const cplx*, cplx*);
    void (*matvec)(std::size_t, const cplx*, const cplx*, cplx*);
    void (*gemm)(std::size_t, const cplx*, const cplx*, cplx*);
    double (*norm_sq)(std::size_t, const cplx*);
    double (*wrms)(std::size_t, const cplx*, const cplx*, const cplx*, double,
                   double);
};

const Ops& scalar_ops();
#if defined(RYDSIM_HAVE_AVX2_TU)
const Ops& avx2_ops();
bool avx2_supported();
#endif
#if defined(RYDSIM_HAVE_NEON_TU)
const Ops& neon_ops();
#endif

} // namespace detail

} // namespace rydsim::kernels
