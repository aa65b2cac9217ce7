#include "rydsim/kernels.hpp"

#include <immintrin.h>

// AVX2 backend. Per output element the operation order matches the scalar
// reference exactly (mul/addsub, no FMA), so results are bit-identical;
// only the reductions differ in accumulation order.

namespace rydsim::kernels::detail {

namespace {

// One 256-bit vector holds two interleaved complex doubles.
// Complex product: re = ar*br - ai*bi, im = ar*bi + ai*br.
inline __m256d cmul(__m256d a, __m256d b) {
    __m256d b_re = _mm256_movedup_pd(b);        // [br0 br0 br1 br1]
    __m256d b_im = _mm256_permute_pd(b, 0xF);   // [bi0 bi0 bi1 bi1]
    __m256d a_sw = _mm256_permute_pd(a, 0x5);   // [ai0 ar0 ai1 ar1]
    __m256d t1 = _mm256_mul_pd(a, b_re);        // [ar*br ai*br ...]
    __m256d t2 = _mm256_mul_pd(a_sw, b_im);     // [ai*bi ar*bi ...]
    return _mm256_addsub_pd(t1, t2);            // [ar*br-ai*bi ai*br+ar*bi ...]
}

void lincomb_avx2(std::size_t n, cplx* out, const cplx* base,
                  const double* coeff, const cplx* const* terms, int nterms) {
    const double* b = reinterpret_cast<const double*>(base);
    double* o = reinterpret_cast<double*>(out);
    const std::size_t m = 2 * n;
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        __m256d acc = _mm256_loadu_pd(b + i);
        for (int j = 0; j < nterms; ++j) {
            const double* t = reinterpret_cast<const double*>(terms[j]);
            acc = _mm256_add_pd(
                acc, _mm256_mul_pd(_mm256_set1_pd(coeff[j]), _mm256_loadu_pd(t + i)));
        }
        _mm256_storeu_pd(o + i, acc);
    }
    for (; i < m; ++i) {
        double acc = b[i];
        for (int j = 0; j < nterms; ++j)
            acc += coeff[j] * reinterpret_cast<const double*>(terms[j])[i];
        o[i] = acc;
    }
}

void scale_avx2(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const __m256d av = _mm256_setr_pd(a.real(), a.imag(), a.real(), a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        _mm256_storeu_pd(reinterpret_cast<double*>(y + i), cmul(xv, av));
    }
    if (i < n) {
        const double ar = a.real(), ai = a.imag();
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = cplx(ar * xr - ai * xi, ar * xi + ai * xr);
    }
}

void matvec_avx2(std::size_t n, const cplx* a, const cplx* x, cplx* y) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const cplx* row0 = a + i * n;
        const cplx* row1 = a + (i + 1) * n;
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t k = 0; k < n; ++k) {
            __m128d a0 = _mm_loadu_pd(reinterpret_cast<const double*>(row0 + k));
            __m128d a1 = _mm_loadu_pd(reinterpret_cast<const double*>(row1 + k));
            __m256d av = _mm256_set_m128d(a1, a0);
            __m128d xk = _mm_loadu_pd(reinterpret_cast<const double*>(x + k));
            __m256d xv = _mm256_set_m128d(xk, xk);
            acc = _mm256_add_pd(acc, cmul(av, xv));
        }
        _mm256_storeu_pd(reinterpret_cast<double*>(y + i), acc);
    }
    for (; i < n; ++i) {
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

void gemm_avx2(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    for (std::size_t i = 0; i < n; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] = cplx(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const double ar = a[i * n + k].real(), ai = a[i * n + k].imag();
            const __m256d av = _mm256_setr_pd(ar, ai, ar, ai);
            const cplx* brow = b + k * n;
            std::size_t j = 0;
            for (; j + 2 <= n; j += 2) {
                __m256d bv =
                    _mm256_loadu_pd(reinterpret_cast<const double*>(brow + j));
                __m256d cv =
                    _mm256_loadu_pd(reinterpret_cast<double*>(crow + j));
                _mm256_storeu_pd(reinterpret_cast<double*>(crow + j),
                                 _mm256_add_pd(cv, cmul(av, bv)));
            }
            for (; j < n; ++j) {
                const double br = brow[j].real(), bi = brow[j].imag();
                crow[j] += cplx(ar * br - ai * bi, ar * bi + ai * br);
            }
        }
    }
}

double norm_sq_avx2(std::size_t n, const cplx* x) {
    const double* d = reinterpret_cast<const double*>(x);
    const std::size_t m = 2 * n;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        __m256d v = _mm256_loadu_pd(d + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < m; ++i) s += d[i] * d[i];
    return s;
}

double wrms_avx2(std::size_t n, const cplx* err, const cplx* y0,
                 const cplx* y1, double atol, double rtol) {
    const double* e = reinterpret_cast<const double*>(err);
    const double* a = reinterpret_cast<const double*>(y0);
    const double* b = reinterpret_cast<const double*>(y1);
    const std::size_t m = 2 * n;
    const __m256d vatol = _mm256_set1_pd(atol);
    const __m256d vrtol = _mm256_set1_pd(rtol);
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        __m256d va = _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(a + i));
        __m256d vb = _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(b + i));
        __m256d sc = _mm256_add_pd(
            vatol, _mm256_mul_pd(vrtol, _mm256_max_pd(va, vb)));
        __m256d q = _mm256_div_pd(_mm256_loadu_pd(e + i), sc);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(q, q));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < m; ++i) {
        const double sc = atol + rtol * std::max(std::abs(a[i]), std::abs(b[i]));
        const double q = e[i] / sc;
        s += q * q;
    }
    return std::sqrt(s / static_cast<double>(m));
}

} // namespace

const Ops& avx2_ops() {
    static const Ops ops{lincomb_avx2, scale_avx2,   matvec_avx2,
                         gemm_avx2,    norm_sq_avx2, wrms_avx2};
    return ops;
}

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

} // namespace rydsim::kernels::detail
