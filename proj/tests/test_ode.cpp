#include <doctest.h>

#include <cmath>

#include "rydsim/ode.hpp"
#include "rydsim/types.hpp"

using namespace rydsim;

TEST_CASE("dopri5 reproduces a pure phase rotation") {
    // y' = -i w y  ->  y(t) = e^{-i w t}
    const double w = 37.0;
    auto rhs = [&](double, const cplx* y, cplx* dy) {
        dy[0] = cplx(0.0, -w) * y[0];
    };
    std::vector<cplx> y = {cplx(1.0, 0.0)};
    ode::Options opt;
    ode::integrate(rhs, y, 0.0, 2.0, opt);
    const cplx want = std::exp(cplx(0.0, -w * 2.0));
    CHECK(std::abs(y[0] - want) < 1e-8);
    CHECK(std::abs(std::abs(y[0]) - 1.0) < 1e-10);
}

TEST_CASE("dopri5 handles a time-dependent rate") {
    // y' = -i (a t) y -> y(T) = exp(-i a T^2 / 2)
    const double a = 100.0;
    auto rhs = [&](double t, const cplx* y, cplx* dy) {
        dy[0] = cplx(0.0, -a * t) * y[0];
    };
    std::vector<cplx> y = {cplx(1.0, 0.0)};
    ode::integrate(rhs, y, 0.0, 1.5, {});
    const cplx want = std::exp(cplx(0.0, -a * 1.5 * 1.5 / 2.0));
    CHECK(std::abs(y[0] - want) < 1e-8);
}

TEST_CASE("sampling lands exactly on grid points") {
    auto rhs = [&](double, const cplx* y, cplx* dy) {
        dy[0] = cplx(0.0, -1.0) * y[0];
    };
    std::vector<cplx> y = {cplx(1.0, 0.0)};
    std::vector<double> samples = {0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> seen;
    ode::integrate(rhs, y, 0.0, 1.0, {}, {}, samples,
                   [&](double t, const cplx*) { seen.push_back(t); });
    REQUIRE(seen.size() == samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        CHECK(seen[i] == doctest::Approx(samples[i]).epsilon(1e-14));
}

TEST_CASE("breakpoints restart the integrator across discontinuities") {
    // rate jumps at t = 1: y' = -i w(t) y with w = 5 then -5
    auto rhs = [&](double t, const cplx* y, cplx* dy) {
        const double w = t < 1.0 ? 5.0 : -5.0;
        dy[0] = cplx(0.0, -w) * y[0];
    };
    std::vector<cplx> y = {cplx(1.0, 0.0)};
    const std::vector<double> brk = {1.0};
    ode::integrate(rhs, y, 0.0, 2.0, {}, brk);
    CHECK(std::abs(y[0] - cplx(1.0, 0.0)) < 1e-9); // phases cancel exactly
}

TEST_CASE("tolerance tightening changes the result below the old tolerance") {
    auto rhs = [&](double t, const cplx* y, cplx* dy) {
        dy[0] = cplx(0.0, -50.0 * std::sin(3.0 * t)) * y[0];
    };
    auto run = [&](double rtol) {
        std::vector<cplx> y = {cplx(1.0, 0.0)};
        ode::Options o;
        o.rtol = rtol;
        o.atol = rtol * 1e-2;
        ode::integrate(rhs, y, 0.0, 2.0, o);
        return y[0];
    };
    const cplx a = run(1e-10), b = run(1e-12);
    CHECK(std::abs(std::arg(a) - std::arg(b)) < 1e-6);
}

TEST_CASE("step size underflow throws") {
    // pathologically stiff blow-up
    auto rhs = [&](double t, const cplx* y, cplx* dy) {
        dy[0] = y[0] / (1.0 - t + 1e-18);
    };
    std::vector<cplx> y = {cplx(1.0, 0.0)};
    CHECK_THROWS_AS(ode::integrate(rhs, y, 0.0, 1.0, {}), StepSizeUnderflow);
}
