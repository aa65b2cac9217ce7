#include <doctest.h>

#include <cmath>

#include "rydsim/dynamics.hpp"
#include "rydsim/forster.hpp"
#include "rydsim/kernels.hpp"

using namespace rydsim;
using namespace rydsim::dynamics;

namespace {
const std::string kCatalogPath =
    std::string(RYDSIM_DATA_DIR) + "/channels_cs.json";

const forster::Catalog& catalog() {
    static const auto cat = forster::build_catalog(kCatalogPath);
    return cat;
}

double hermiticity_defect(const std::vector<cplx>& rho, std::size_t d) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            s += std::norm(rho[i * d + j] - std::conj(rho[j * d + i]));
    return std::sqrt(s);
}
} // namespace

TEST_CASE("zero Hamiltonian leaves the state alone") {
    auto h = [](double, cplx* m) {
        for (int i = 0; i < 9; ++i) m[i] = cplx(0.0, 0.0);
    };
    PropagationSpec spec;
    spec.t1 = 2.0;
    spec.sample_dt = 0.25;
    const std::vector<cplx> psi0 = {cplx(0.6, 0.0), cplx(0.0, 0.8), cplx(0.0, 0.0)};
    const auto tr = propagate_schrodinger(h, 3, psi0, spec);
    for (const auto& s : tr.states)
        for (int i = 0; i < 3; ++i) CHECK(std::abs(s[i] - psi0[i]) < 1e-12);
}

TEST_CASE("nine-level star reduces to a two-level Rabi oscillation") {
    // fixed resonant field, couplings of channels 2..8 switched off
    const auto& cat = catalog();
    forster::PairHamiltonian ph(cat, 25.0);
    const double e_res =
        stark::resonance_field(cat.channels.front(), cat.polarizabilities);
    const double v1 = forster::coupling(cat.channels.front(), 25.0);

    std::vector<cplx> base(81);
    ph.at_field(e_res, base.data());
    for (int k = 2; k <= 8; ++k) {
        base[0 * 9 + k] = cplx(0.0, 0.0);
        base[k * 9 + 0] = cplx(0.0, 0.0);
    }
    auto h = [&](double, cplx* m) { std::copy(base.begin(), base.end(), m); };

    PropagationSpec spec;
    spec.t1 = 0.25;
    spec.sample_dt = 0.005;
    std::vector<cplx> psi0(9, cplx(0.0, 0.0));
    psi0[0] = cplx(1.0, 0.0);
    const auto tr = propagate_schrodinger(h, 9, psi0, spec);

    // residual channel-1 detuning at the bisected resonance field
    const double residual = stark::pair_detuning(
        cat.channels.front(), cat.polarizabilities, e_res);
    const double omega = std::hypot(2.0 * v1, residual);
    for (std::size_t i = 0; i < tr.t.size(); ++i) {
        const double want =
            1.0 - std::pow(2.0 * v1 / omega, 2) *
                      std::pow(std::sin(0.5 * omega * tr.t[i]), 2);
        CHECK(std::norm(tr.states[i][0]) ==
              doctest::Approx(want).epsilon(1e-6));
    }
}

TEST_CASE("norm is conserved to 1e-10 by Schrodinger propagation") {
    const auto& cat = catalog();
    forster::PairHamiltonian ph(cat, 25.0);
    auto h = [&](double t, cplx* m) {
        ph.at_field(0.0297 + 0.002 * std::sin(3.0 * t), m);
    };
    PropagationSpec spec;
    spec.t1 = 1.5;
    spec.sample_dt = 0.01;
    std::vector<cplx> psi0(9, cplx(0.0, 0.0));
    psi0[0] = cplx(1.0, 0.0);
    const auto tr = propagate_schrodinger(h, 9, psi0, spec);
    for (const auto& s : tr.states)
        CHECK(std::abs(kernels::norm_sq(9, s.data()) - 1.0) < 1e-10);
}

TEST_CASE("single decaying level follows the exponential law") {
    const double gamma = 1.0 / 270.0;
    auto h = [](double, cplx* m) { m[0] = cplx(0.0, 0.0); };
    std::vector<cplx> rho0 = {cplx(1.0, 0.0)};
    PropagationSpec spec;
    spec.t1 = 100.0;
    spec.sample_dt = 5.0;
    const auto tr = propagate_master(h, 1, rho0, {{0, gamma}}, spec);
    for (std::size_t i = 0; i < tr.t.size(); ++i) {
        const double want = std::exp(-gamma * tr.t[i]);
        CHECK(tr.states[i][0].real() == doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("two-atom coherence decays at the half-sum of the rates") {
    // |rr><gg| coherence: d/dt rho_rg = -(gamma_r/2) rho_rg when gamma_g = 0
    const double ga = 1.0 / 361.0, gb = 1.0 / 406.0;
    auto h = [](double, cplx* m) {
        for (int i = 0; i < 4; ++i) m[i] = cplx(0.0, 0.0);
    };
    // basis {|rr>, |gg>}: rho starts as the maximally coherent pure state
    std::vector<cplx> rho0 = {cplx(0.5, 0.0), cplx(0.5, 0.0), cplx(0.5, 0.0),
                              cplx(0.5, 0.0)};
    PropagationSpec spec;
    spec.t1 = 50.0;
    spec.sample_dt = 10.0;
    const auto tr = propagate_master(h, 2, rho0, {{0, ga + gb}}, spec);
    for (std::size_t i = 0; i < tr.t.size(); ++i) {
        const double want = 0.5 * std::exp(-0.5 * (ga + gb) * tr.t[i]);
        CHECK(tr.states[i][1].real() == doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("zero decay master equals Schrodinger on pure states") {
    const auto& cat = catalog();
    forster::PairHamiltonian ph(cat, 25.0);
    auto h = [&](double t, cplx* m) {
        ph.at_field(0.0297 + 0.001 * std::cos(2.0 * t), m);
    };
    PropagationSpec spec;
    spec.t1 = 1.0;
    spec.sample_dt = 0.0;
    std::vector<cplx> psi0(9, cplx(0.0, 0.0));
    psi0[0] = cplx(std::sqrt(0.5), 0.0);
    psi0[3] = cplx(0.0, std::sqrt(0.5));
    const auto trs = propagate_schrodinger(h, 9, psi0, spec);

    std::vector<cplx> rho0(81);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            rho0[i * 9 + j] = psi0[i] * std::conj(psi0[j]);
    const auto trm = propagate_master(h, 9, rho0, {}, spec);

    const auto& psi = trs.states.back();
    const auto& rho = trm.states.back();
    double dist = 0.0;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            dist += std::norm(rho[i * 9 + j] - psi[i] * std::conj(psi[j]));
    CHECK(std::sqrt(dist) < 1e-8);

    // trace constant without decay
    const auto obs = observables(trm, 0);
    CHECK(std::abs(obs.trace.back() - 1.0) < 1e-10);
}

TEST_CASE("trace is non-increasing and hermiticity preserved under decay") {
    const auto& cat = catalog();
    forster::PairHamiltonian ph(cat, 25.0);
    auto h = [&](double t, cplx* m) {
        ph.at_field(0.0297 + 0.002 * std::sin(5.0 * t), m);
    };
    std::vector<dynamics::DecayChannel> decays;
    decays.push_back({0, 1.0 / 270.0 + 1.0 / 314.0});
    for (int k = 1; k <= 8; ++k)
        decays.push_back({k, 1.0 / 361.0 + 1.0 / 406.0});

    std::vector<cplx> rho0(81, cplx(0.0, 0.0));
    rho0[0] = cplx(1.0, 0.0);
    PropagationSpec spec;
    spec.t1 = 2.0;
    spec.sample_dt = 0.05;
    const auto tr = propagate_master(h, 9, rho0, decays, spec);
    const auto obs = observables(tr, 0);
    for (std::size_t i = 1; i < obs.trace.size(); ++i)
        CHECK(obs.trace[i] <= obs.trace[i - 1] + 1e-12);
    for (const auto& s : tr.states) CHECK(hermiticity_defect(s, 9) < 1e-10);
}

TEST_CASE("observables of a pure state") {
    Trajectory tr;
    tr.dim = 2;
    tr.is_density = false;
    tr.t = {0.0, 1.0};
    tr.states = {{cplx(1.0, 0.0), cplx(0.0, 0.0)},
                 {cplx(std::sqrt(0.5), 0.0), cplx(0.0, -std::sqrt(0.5))}};
    const auto obs = observables(tr, 0);
    CHECK(obs.purity[0] == doctest::Approx(1.0));
    CHECK(obs.populations[1][0] == doctest::Approx(0.5));
    CHECK(obs.trace[1] == doctest::Approx(1.0));
}

TEST_CASE("integrator tolerance tightening is converged") {
    const auto& cat = catalog();
    forster::PairHamiltonian ph(cat, 25.0);
    auto h = [&](double t, cplx* m) {
        ph.at_field(0.0297 + 0.002 * std::sin(5.0 * t), m);
    };
    auto run = [&](double rtol) {
        PropagationSpec spec;
        spec.t1 = 1.0;
        spec.sample_dt = 0.0;
        spec.ode_opts.rtol = rtol;
        spec.ode_opts.atol = rtol * 1e-2;
        std::vector<cplx> psi0(9, cplx(0.0, 0.0));
        psi0[0] = cplx(1.0, 0.0);
        return propagate_schrodinger(h, 9, psi0, spec).states.back();
    };
    const auto a = run(1e-10), b = run(1e-11);
    for (int i = 0; i < 9; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-7);
}
