#include "rydsim/kernels.hpp"

// Scalar reference kernels. Complex arithmetic is written out on the
// real/imaginary parts so every backend performs literally the same
// floating-point operations per output element.

namespace rydsim::kernels::detail {

namespace {

void lincomb_scalar(std::size_t n, cplx* out, const cplx* base,
                    const double* coeff, const cplx* const* terms,
                    int nterms) {
    const double* b = reinterpret_cast<const double*>(base);
    double* o = reinterpret_cast<double*>(out);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        double acc = b[i];
        for (int j = 0; j < nterms; ++j) {
            acc += coeff[j] * reinterpret_cast<const double*>(terms[j])[i];
        }
        o[i] = acc;
    }
}

void scale_scalar(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const double ar = a.real(), ai = a.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = cplx(ar * xr - ai * xi, ar * xi + ai * xr);
    }
}

void matvec_scalar(std::size_t n, const cplx* a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) {
        double sr = 0.0, si = 0.0;
        const cplx* row = a + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const double ar = row[k].real(), ai = row[k].imag();
            const double xr = x[k].real(), xi = x[k].imag();
            sr += ar * xr - ai * xi;
            si += ar * xi + ai * xr;
        }
        y[i] = cplx(sr, si);
    }
}

// ikj order: row i of C accumulates A(i,k) * row k of B. The j loop is the
// vectorized one in the SIMD backends, with identical per-element order.
void gemm_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    for (std::size_t i = 0; i < n; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] = cplx(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const double ar = a[i * n + k].real(), ai = a[i * n + k].imag();
            const cplx* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) {
                const double br = brow[j].real(), bi = brow[j].imag();
                crow[j] += cplx(ar * br - ai * bi, ar * bi + ai * br);
            }
        }
    }
}

double norm_sq_scalar(std::size_t n, const cplx* x) {
    const double* d = reinterpret_cast<const double*>(x);
    double s = 0.0;
    for (std::size_t i = 0; i < 2 * n; ++i) s += d[i] * d[i];
    return s;
}

double wrms_scalar(std::size_t n, const cplx* err, const cplx* y0,
                   const cplx* y1, double atol, double rtol) {
    const double* e = reinterpret_cast<const double*>(err);
    const double* a = reinterpret_cast<const double*>(y0);
    const double* b = reinterpret_cast<const double*>(y1);
    double s = 0.0;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        const double sc = atol + rtol * std::max(std::abs(a[i]), std::abs(b[i]));
        const double q = e[i] / sc;
        s += q * q;
    }
    return std::sqrt(s / static_cast<double>(2 * n));
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{lincomb_scalar, scale_scalar,  matvec_scalar,
                         gemm_scalar,    norm_sq_scalar, wrms_scalar};
    return ops;
}

} // namespace rydsim::kernels::detail
