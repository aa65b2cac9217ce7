#include "rydsim/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace rydsim::kernels {

namespace {

using detail::Ops;

struct State {
    Backend backend;
    const Ops* ops;
};

State pick_default() {
    const char* env = std::getenv("RYDSIM_KERNELS");
#if defined(RYDSIM_HAVE_AVX2_TU)
    if (env && std::strcmp(env, "scalar") == 0)
        return {Backend::Scalar, &detail::scalar_ops()};
    if (env && std::strcmp(env, "avx2") == 0) {
        if (!detail::avx2_supported())
            throw ConfigError("RYDSIM_KERNELS=avx2 but CPU lacks AVX2");
        return {Backend::Avx2, &detail::avx2_ops()};
    }
    if (detail::avx2_supported()) return {Backend::Avx2, &detail::avx2_ops()};
#elif defined(RYDSIM_HAVE_NEON_TU)
    if (env && std::strcmp(env, "scalar") == 0)
        return {Backend::Scalar, &detail::scalar_ops()};
    if (!env || std::strcmp(env, "neon") == 0)
        return {Backend::Neon, &detail::neon_ops()};
#else
    (void)env;
#endif
    return {Backend::Scalar, &detail::scalar_ops()};
}

State& state() {
    static State s = pick_default();
    return s;
}

} // namespace

Backend active_backend() { return state().backend; }

const char* backend_name() {
    switch (state().backend) {
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
        default: return "scalar";
    }
}

void set_backend(Backend b) {
    switch (b) {
        case Backend::Scalar:
            state() = {Backend::Scalar, &detail::scalar_ops()};
            return;
        case Backend::Avx2:
#if defined(RYDSIM_HAVE_AVX2_TU)
            if (detail::avx2_supported()) {
                state() = {Backend::Avx2, &detail::avx2_ops()};
                return;
            }
#endif
            throw ConfigError("AVX2 backend unavailable");
        case Backend::Neon:
#if defined(RYDSIM_HAVE_NEON_TU)
            state() = {Backend::Neon, &detail::neon_ops()};
            return;
#else
            throw ConfigError("NEON backend unavailable");
#endif
    }
    throw ConfigError("unknown kernel backend");
}

void lincomb(std::size_t n, cplx* out, const cplx* base, const double* coeff,
             const cplx* const* terms, int nterms) {
    state().ops->lincomb(n, out, base, coeff, terms, nterms);
}

void scale(std::size_t n, cplx a, const cplx* x, cplx* y) {
    state().ops->scale(n, a, x, y);
}

void matvec(std::size_t n, const cplx* a, const cplx* x, cplx* y) {
    state().ops->matvec(n, a, x, y);
}

void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    state().ops->gemm(n, a, b, c);
}

double norm_sq(std::size_t n, const cplx* x) { return state().ops->norm_sq(n, x); }

double wrms(std::size_t n, const cplx* err, const cplx* y0, const cplx* y1,
            double atol, double rtol) {
    return state().ops->wrms(n, err, y0, y1, atol, rtol);
}

} // namespace rydsim::kernels
