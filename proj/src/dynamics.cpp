#include "rydsim/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "rydsim/kernels.hpp"
#include "rydsim/pulses.hpp"

namespace rydsim::dynamics {

namespace {

std::vector<double> sample_grid(double t0, double t1, double dt) {
    std::vector<double> g;
    if (dt <= 0) {
        g = {t1};
        return g;
    }
    const std::size_t n = static_cast<std::size_t>(std::ceil((t1 - t0) / dt));
    g.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) g.push_back(std::min(t0 + i * dt, t1));
    if (g.back() < t1) g.push_back(t1);
    return g;
}

} // namespace

Trajectory propagate_schrodinger(const HamiltonianFn& h, std::size_t dim,
                                 const std::vector<cplx>& psi0,
                                 const PropagationSpec& spec) {
    Trajectory tr;
    tr.dim = dim;
    tr.is_density = false;

    std::vector<cplx> hbuf(dim * dim);
    std::vector<cplx> hpsi(dim);
    auto rhs = [&](double t, const cplx* y, cplx* dy) {
        h(t, hbuf.data());
        kernels::matvec(dim, hbuf.data(), y, hpsi.data());
        kernels::scale(dim, cplx(0.0, -1.0), hpsi.data(), dy);
    };

    std::vector<cplx> y = psi0;
    const auto grid = sample_grid(spec.t0, spec.t1, spec.sample_dt);
    auto sampler = [&](double t, const cplx* s) {
        tr.t.push_back(t);
        tr.states.emplace_back(s, s + dim);
    };
    ode::integrate(rhs, y, spec.t0, spec.t1, spec.ode_opts, spec.breakpoints,
                   grid, sampler);
    return tr;
}

Trajectory propagate_master(const HamiltonianFn& h, std::size_t dim,
                            const std::vector<cplx>& rho0,
                            const std::vector<DecayChannel>& decays,
                            const PropagationSpec& spec) {
    Trajectory tr;
    tr.dim = dim;
    tr.is_density = true;

    std::vector<double> gamma(dim, 0.0);
    for (const auto& d : decays) {
        if (d.state_index < 0 || d.state_index >= static_cast<int>(dim))
            throw OutOfRange("decay channel index out of range");
        gamma[d.state_index] += d.rate_per_us;
    }

    std::vector<cplx> hbuf(dim * dim);
    std::vector<cplx> hr(dim * dim), rh(dim * dim);
    auto rhs = [&](double t, const cplx* y, cplx* dy) {
        h(t, hbuf.data());
        kernels::gemm(dim, hbuf.data(), y, hr.data());
        kernels::gemm(dim, y, hbuf.data(), rh.data());
        const cplx mi(0.0, -1.0);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                const std::size_t k = i * dim + j;
                dy[k] = mi * (hr[k] - rh[k]) -
                        0.5 * (gamma[i] + gamma[j]) * y[k];
            }
        }
    };

    std::vector<cplx> y = rho0;
    const auto grid = sample_grid(spec.t0, spec.t1, spec.sample_dt);
    auto sampler = [&](double t, const cplx* s) {
        tr.t.push_back(t);
        std::vector<cplx> rho(s, s + dim * dim);
        // re-symmetrize at output only
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                const cplx avg =
                    0.5 * (rho[i * dim + j] + std::conj(rho[j * dim + i]));
                rho[i * dim + j] = avg;
                rho[j * dim + i] = std::conj(avg);
            }
        for (std::size_t i = 0; i < dim; ++i)
            rho[i * dim + i] = cplx(rho[i * dim + i].real(), 0.0);
        tr.states.push_back(std::move(rho));
    };
    ode::integrate(rhs, y, spec.t0, spec.t1, spec.ode_opts, spec.breakpoints,
                   grid, sampler);
    return tr;
}

Observables observables(const Trajectory& traj, int phase_index,
                        int ref_index) {
    Observables ob;
    ob.t = traj.t;
    const std::size_t d = traj.dim;
    ob.populations.reserve(traj.states.size());
    std::vector<double> rawphase;
    rawphase.reserve(traj.states.size());

    for (const auto& s : traj.states) {
        std::vector<double> pops(d);
        if (!traj.is_density) {
            for (std::size_t i = 0; i < d; ++i) pops[i] = std::norm(s[i]);
            ob.trace.push_back(kernels::norm_sq(d, s.data()));
            ob.purity.push_back(1.0);
            rawphase.push_back(std::arg(s[phase_index]));
        } else {
            double tr = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                pops[i] = s[i * d + i].real();
                tr += pops[i];
            }
            ob.trace.push_back(tr);
            double p2 = 0.0;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    p2 += (s[i * d + j] * s[j * d + i]).real();
            ob.purity.push_back(p2);
            const cplx coh = (ref_index >= 0)
                                 ? s[phase_index * d + ref_index]
                                 : s[phase_index * d + phase_index];
            rawphase.push_back(std::arg(coh));
        }
        ob.populations.push_back(std::move(pops));
    }
    pulses::unwrap_inplace(rawphase);
    ob.phase = std::move(rawphase);
    return ob;
}

} // namespace rydsim::dynamics
