#include <doctest.h>

#include <random>
#include <vector>

#include "rydsim/kernels.hpp"

using namespace rydsim;
namespace kd = rydsim::kernels::detail;

namespace {

std::vector<cplx> random_vec(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& x : v) x = cplx(d(rng), d(rng));
    return v;
}

struct BackendPair {
    const kd::Ops& ref = kd::scalar_ops();
    const kd::Ops* simd = nullptr;
    BackendPair() {
#if defined(RYDSIM_HAVE_AVX2_TU)
        if (kd::avx2_supported()) simd = &kd::avx2_ops();
#elif defined(RYDSIM_HAVE_NEON_TU)
        simd = &kd::neon_ops();
#endif
    }
};

} // namespace

TEST_CASE("scalar and SIMD backends agree") {
    BackendPair bk;
    if (!bk.simd) {
        MESSAGE("no SIMD backend compiled for this target; scalar only");
        return;
    }
    std::mt19937 rng(12345);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 9u, 16u, 17u, 31u}) {
        CAPTURE(n);
        const auto x = random_vec(rng, n);
        const auto y = random_vec(rng, n);
        const auto z = random_vec(rng, n);

        SUBCASE("") {}

        // lincomb: bit-identical
        {
            const double co[3] = {0.37, -1.25, 2.0e-3};
            const cplx* terms[3] = {x.data(), y.data(), z.data()};
            std::vector<cplx> a(n), b(n);
            bk.ref.lincomb(n, a.data(), x.data(), co, terms, 3);
            bk.simd->lincomb(n, b.data(), x.data(), co, terms, 3);
            for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == b[i]);
        }
        // scale: bit-identical
        {
            std::vector<cplx> a(n), b(n);
            const cplx f(0.3, -0.7);
            bk.ref.scale(n, f, x.data(), a.data());
            bk.simd->scale(n, f, x.data(), b.data());
            for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == b[i]);
        }
        // matvec: bit-identical (same per-row accumulation order)
        {
            const auto m = random_vec(rng, n * n);
            std::vector<cplx> a(n), b(n);
            bk.ref.matvec(n, m.data(), x.data(), a.data());
            bk.simd->matvec(n, m.data(), x.data(), b.data());
            for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == b[i]);
        }
        // gemm: bit-identical (ikj order in both backends)
        {
            const auto ma = random_vec(rng, n * n);
            const auto mb = random_vec(rng, n * n);
            std::vector<cplx> a(n * n), b(n * n);
            bk.ref.gemm(n, ma.data(), mb.data(), a.data());
            bk.simd->gemm(n, ma.data(), mb.data(), b.data());
            for (std::size_t i = 0; i < n * n; ++i) CHECK(a[i] == b[i]);
        }
        // reductions: tolerance (different accumulation order)
        {
            const double ra = bk.ref.norm_sq(n, x.data());
            const double rb = bk.simd->norm_sq(n, x.data());
            CHECK(ra == doctest::Approx(rb).epsilon(1e-14));
            const double wa =
                bk.ref.wrms(n, z.data(), x.data(), y.data(), 1e-12, 1e-10);
            const double wb =
                bk.simd->wrms(n, z.data(), x.data(), y.data(), 1e-12, 1e-10);
            CHECK(wa == doctest::Approx(wb).epsilon(1e-13));
        }
    }
}

TEST_CASE("kernel semantics against plain-complex arithmetic") {
    std::mt19937 rng(99);
    const std::size_t n = 7;
    const auto a = random_vec(rng, n * n);
    const auto b = random_vec(rng, n * n);
    const auto x = random_vec(rng, n);

    std::vector<cplx> got(n);
    kernels::matvec(n, a.data(), x.data(), got.data());
    for (std::size_t i = 0; i < n; ++i) {
        cplx want(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) want += a[i * n + k] * x[k];
        CHECK(std::abs(got[i] - want) < 1e-13);
    }

    std::vector<cplx> c(n * n);
    kernels::gemm(n, a.data(), b.data(), c.data());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx want(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k)
                want += a[i * n + k] * b[k * n + j];
            CHECK(std::abs(c[i * n + j] - want) < 1e-13);
        }

    double ns = 0.0;
    for (const auto& v : x) ns += std::norm(v);
    CHECK(kernels::norm_sq(n, x.data()) == doctest::Approx(ns).epsilon(1e-14));
}

TEST_CASE("backend selection is reported and switchable") {
    const auto original = kernels::active_backend();
    CHECK(kernels::backend_name() != nullptr);
    kernels::set_backend(kernels::Backend::Scalar);
    CHECK(kernels::active_backend() == kernels::Backend::Scalar);
    kernels::set_backend(original);
    CHECK(kernels::active_backend() == original);
}
