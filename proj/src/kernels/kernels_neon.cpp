#include "rydsim/kernels.hpp"

#include <arm_neon.h>

// NEON backend (aarch64). One 128-bit vector holds one complex double.
// Operation order per element matches the scalar reference (bit-identical
// for the non-reduction kernels).

namespace rydsim::kernels::detail {

namespace {

// sign vector for turning the cross-term add into [sub, add]
inline float64x2_t cmul(float64x2_t a, float64x2_t b) {
    const float64x2_t sgn = {-1.0, 1.0};
    float64x2_t t1 = vmulq_f64(a, vdupq_laneq_f64(b, 0));  // [ar*br, ai*br]
    float64x2_t t2 = vmulq_f64(vextq_f64(a, a, 1), vdupq_laneq_f64(b, 1));
    // t2 = [ai*bi, ar*bi]; flip sign of lane 0 (exact) and add
    return vaddq_f64(t1, vmulq_f64(t2, sgn));
}

void lincomb_neon(std::size_t n, cplx* out, const cplx* base,
                  const double* coeff, const cplx* const* terms, int nterms) {
    const double* b = reinterpret_cast<const double*>(base);
    double* o = reinterpret_cast<double*>(out);
    const std::size_t m = 2 * n;
    for (std::size_t i = 0; i + 2 <= m; i += 2) {
        float64x2_t acc = vld1q_f64(b + i);
        for (int j = 0; j < nterms; ++j) {
            const double* t = reinterpret_cast<const double*>(terms[j]);
            acc = vaddq_f64(acc, vmulq_f64(vdupq_n_f64(coeff[j]), vld1q_f64(t + i)));
        }
        vst1q_f64(o + i, acc);
    }
}

void scale_neon(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const float64x2_t av = {a.real(), a.imag()};
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = vld1q_f64(reinterpret_cast<const double*>(x + i));
        vst1q_f64(reinterpret_cast<double*>(y + i), cmul(xv, av));
    }
}

void matvec_neon(std::size_t n, const cplx* a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* row = a + i * n;
        float64x2_t acc = vdupq_n_f64(0.0);
        for (std::size_t k = 0; k < n; ++k) {
            float64x2_t av = vld1q_f64(reinterpret_cast<const double*>(row + k));
            float64x2_t xv = vld1q_f64(reinterpret_cast<const double*>(x + k));
            acc = vaddq_f64(acc, cmul(av, xv));
        }
        vst1q_f64(reinterpret_cast<double*>(y + i), acc);
    }
}

void gemm_neon(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    for (std::size_t i = 0; i < n; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] = cplx(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const float64x2_t av = {a[i * n + k].real(), a[i * n + k].imag()};
            const cplx* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) {
                float64x2_t bv =
                    vld1q_f64(reinterpret_cast<const double*>(brow + j));
                float64x2_t cv = vld1q_f64(reinterpret_cast<double*>(crow + j));
                vst1q_f64(reinterpret_cast<double*>(crow + j),
                          vaddq_f64(cv, cmul(av, bv)));
            }
        }
    }
}

double norm_sq_neon(std::size_t n, const cplx* x) {
    const double* d = reinterpret_cast<const double*>(x);
    const std::size_t m = 2 * n;
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= m; i += 2) {
        float64x2_t v = vld1q_f64(d + i);
        acc = vaddq_f64(acc, vmulq_f64(v, v));
    }
    double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; i < m; ++i) s += d[i] * d[i];
    return s;
}

double wrms_neon(std::size_t n, const cplx* err, const cplx* y0,
                 const cplx* y1, double atol, double rtol) {
    const double* e = reinterpret_cast<const double*>(err);
    const double* a = reinterpret_cast<const double*>(y0);
    const double* b = reinterpret_cast<const double*>(y1);
    const std::size_t m = 2 * n;
    const float64x2_t vatol = vdupq_n_f64(atol);
    const float64x2_t vrtol = vdupq_n_f64(rtol);
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= m; i += 2) {
        float64x2_t va = vabsq_f64(vld1q_f64(a + i));
        float64x2_t vb = vabsq_f64(vld1q_f64(b + i));
        float64x2_t sc = vaddq_f64(vatol, vmulq_f64(vrtol, vmaxq_f64(va, vb)));
        float64x2_t q = vdivq_f64(vld1q_f64(e + i), sc);
        acc = vaddq_f64(acc, vmulq_f64(q, q));
    }
    double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; i < m; ++i) {
        const double sc = atol + rtol * std::max(std::abs(a[i]), std::abs(b[i]));
        const double q = e[i] / sc;
        s += q * q;
    }
    return std::sqrt(s / static_cast<double>(m));
}

} // namespace

const Ops& neon_ops() {
    static const Ops ops{lincomb_neon, scale_neon,   matvec_neon,
                         gemm_neon,    norm_sq_neon, wrms_neon};
    return ops;
}

} // namespace rydsim::kernels::detail
