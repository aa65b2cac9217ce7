#include "rydsim/pulses.hpp"

#include <algorithm>
#include <cmath>

namespace rydsim::pulses {

namespace {

std::vector<double> sample_grid(double t0, double t1, double dt) {
    std::vector<double> g;
    const std::size_t n = static_cast<std::size_t>(std::ceil((t1 - t0) / dt));
    g.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) g.push_back(std::min(t0 + i * dt, t1));
    if (g.back() < t1) g.push_back(t1);
    return g;
}

} // namespace

void unwrap_inplace(std::vector<double>& phase) {
    double offset = 0.0;
    for (std::size_t i = 1; i < phase.size(); ++i) {
        const double raw = phase[i] + offset;
        double d = raw - phase[i - 1];
        while (d > pi) {
            offset -= two_pi;
            d -= two_pi;
        }
        while (d < -pi) {
            offset += two_pi;
            d += two_pi;
        }
        phase[i] = phase[i - 1] + d;
    }
}

std::vector<TwoLevelSample> evolve_exact(const TwoLevelDrive& drive,
                                         std::array<cplx, 2> initial,
                                         const ode::Options& opt,
                                         double sample_dt) {
    std::vector<cplx> y = {initial[0], initial[1]};
    std::vector<TwoLevelSample> out;
    const auto grid = sample_grid(drive.t_start, drive.t_end, sample_dt);
    out.reserve(grid.size());

    auto rhs = [&](double t, const cplx* c, cplx* dc) {
        const double w = drive.rabi(t);
        const double d = drive.detuning(t);
        const cplx mi(0.0, -1.0);
        dc[0] = mi * (0.5 * w) * c[1];
        dc[1] = mi * (0.5 * w) * c[0] + mi * d * c[1];
    };
    auto sampler = [&](double t, const cplx* c) {
        out.push_back({t, c[0], c[1]});
    };
    ode::integrate(rhs, y, drive.t_start, drive.t_end, opt, drive.breakpoints,
                   grid, sampler);
    return out;
}

DressedTrajectory evolve_adiabatic(const TwoLevelDrive& drive,
                                   DressedLabel initial, bool sign_flipped,
                                   double sample_dt,
                                   double adiabaticity_threshold) {
    DressedTrajectory tr;
    tr.t = sample_grid(drive.t_start, drive.t_end, sample_dt);
    const std::size_t n = tr.t.size();
    tr.theta.resize(n);
    tr.omega_minus.resize(n);
    tr.omega_plus.resize(n);
    tr.ctilde1.resize(n);
    tr.ctilde2.resize(n);
    tr.c1.resize(n);
    tr.c2.resize(n);
    tr.phase_accum.resize(n);

    std::vector<double> wv(n), dv(n);
    for (std::size_t i = 0; i < n; ++i) {
        wv[i] = drive.rabi(tr.t[i]);
        dv[i] = drive.detuning(tr.t[i]);
        const double om = std::hypot(wv[i], dv[i]);
        tr.omega_minus[i] = dv[i] - om;
        tr.omega_plus[i] = dv[i] + om;
        double s = om > 0 ? std::sqrt(0.5 * (1.0 - dv[i] / om)) : 0.0;
        double c = om > 0 ? std::sqrt(0.5 * (1.0 + dv[i] / om)) : 1.0;
        if (sign_flipped) s = -s;
        tr.theta[i] = std::atan2(s, c);
    }

    // Adiabaticity metric max(|dW/dt|, |dd/dt|) / (W^2 + d^2), by central
    // differences away from drive discontinuities.
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h = tr.t[i + 1] - tr.t[i - 1];
        if (h <= 0) continue;
        bool near_break = false;
        for (double b : drive.breakpoints)
            if (tr.t[i - 1] <= b && b <= tr.t[i + 1]) near_break = true;
        if (near_break) continue;
        const double dw = std::abs(wv[i + 1] - wv[i - 1]) / h;
        const double dd = std::abs(dv[i + 1] - dv[i - 1]) / h;
        const double om2 = wv[i] * wv[i] + dv[i] * dv[i];
        if (om2 > 0) worst = std::max(worst, std::max(dw, dd) / om2);
    }
    tr.max_adiabaticity = worst;
    tr.adiabatic_ok = worst < adiabaticity_threshold;

    // Dressed phases by trapezoid accumulation of the occupied eigenvalue.
    const bool in_I = (initial == DressedLabel::I);
    cplx ct1 = in_I ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    cplx ct2 = in_I ? cplx(0.0, 0.0) : cplx(1.0, 0.0);
    double s_minus = 0.0, s_plus = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            const double h = tr.t[i] - tr.t[i - 1];
            s_minus += 0.5 * h * (tr.omega_minus[i] + tr.omega_minus[i - 1]);
            s_plus += 0.5 * h * (tr.omega_plus[i] + tr.omega_plus[i - 1]);
        }
        const cplx p1 = ct1 * std::exp(cplx(0.0, -0.5 * s_minus));
        const cplx p2 = ct2 * std::exp(cplx(0.0, -0.5 * s_plus));
        tr.ctilde1[i] = p1;
        tr.ctilde2[i] = p2;
        const double th = tr.theta[i];
        tr.c1[i] = std::cos(th) * p1 + std::sin(th) * p2;
        tr.c2[i] = -std::sin(th) * p1 + std::cos(th) * p2;
        tr.phase_accum[i] = 0.5 * (in_I ? s_minus : s_plus);
    }
    return tr;
}

TwoLevelDrive make_double_passage_drive(PulseShape shape,
                                        const DoublePassageParams& p,
                                        bool sign_flip) {
    const double mid = 0.5 * (p.t1 + p.t2);
    const double half = 0.5 * (p.t2 - p.t1);
    TwoLevelDrive d;
    d.t_start = p.t1 - half;
    d.t_end = p.t2 + half;
    d.breakpoints = {mid};
    const double omega0 = p.omega0;
    const double w = p.width, s1 = p.s1, s2 = p.s2, t1 = p.t1, t2 = p.t2;

    if (shape == PulseShape::GaussianLinearChirp) {
        d.rabi = [=](double t) {
            const double tc = (t < mid) ? t1 : t2;
            const double sgn = (t < mid || !sign_flip) ? 1.0 : -1.0;
            const double x = (t - tc) / w;
            return sgn * omega0 * std::exp(-0.5 * x * x);
        };
        d.detuning = [=](double t) {
            const double tc = (t < mid) ? t1 : t2;
            return s1 * (t - tc);
        };
    } else {
        d.rabi = [=](double t) {
            const double sgn = (t < mid || !sign_flip) ? 1.0 : -1.0;
            return sgn * omega0;
        };
        d.detuning = [=](double t) {
            const double tau = t - ((t < mid) ? t1 : t2);
            return s1 * tau + s2 * tau * tau * tau * tau * tau;
        };
    }
    return d;
}

DoublePassageResult double_passage(PulseShape shape,
                                   const DoublePassageParams& p,
                                   bool sign_flip, const ode::Options& opt,
                                   double sample_dt) {
    const auto drive = make_double_passage_drive(shape, p, sign_flip);
    auto samples = evolve_exact(drive, {cplx(1.0, 0.0), cplx(0.0, 0.0)}, opt,
                                sample_dt);
    DoublePassageResult r;
    std::vector<double> ph(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        ph[i] = std::arg(samples[i].c1);
    unwrap_inplace(ph);
    const cplx c1 = samples.back().c1;
    r.population_error = 1.0 - std::norm(c1);
    r.final_phase = ph.back();
    r.samples = std::move(samples);
    return r;
}

DressedTrajectory adiabatic_double_passage(PulseShape shape,
                                           const DoublePassageParams& p,
                                           bool sign_flip, double sample_dt) {
    const double mid = 0.5 * (p.t1 + p.t2);
    const double half = 0.5 * (p.t2 - p.t1);
    const double omega0 = p.omega0, w = p.width, s1 = p.s1, s2 = p.s2;

    // each passage is analyzed with its own pulse over its own window
    auto pulse_drive = [&](double tc, double sgn, double a, double b) {
        TwoLevelDrive d;
        d.t_start = a;
        d.t_end = b;
        if (shape == PulseShape::GaussianLinearChirp) {
            d.rabi = [=](double t) {
                const double x = (t - tc) / w;
                return sgn * omega0 * std::exp(-0.5 * x * x);
            };
            d.detuning = [=](double t) { return s1 * (t - tc); };
        } else {
            d.rabi = [=](double) { return sgn * omega0; };
            d.detuning = [=](double t) {
                const double tau = t - tc;
                return s1 * tau + s2 * tau * tau * tau * tau * tau;
            };
        }
        return d;
    };

    const auto first = pulse_drive(p.t1, 1.0, p.t1 - half, mid);
    auto tr1 = evolve_adiabatic(first, DressedLabel::I, false, sample_dt);

    const auto second =
        pulse_drive(p.t2, sign_flip ? -1.0 : 1.0, mid, p.t2 + half);
    auto tr2 = evolve_adiabatic(second, DressedLabel::II, sign_flip, sample_dt);

    // Hand over: the bare |2> amplitude at the seam seeds dressed state II
    // of the second passage (c~2'(T) = c2(T)); the residual |1> amplitude is
    // dropped in the adiabatic approximation.
    const cplx seed = tr1.c2.back();
    DressedTrajectory out = std::move(tr1);
    out.adiabatic_ok = out.adiabatic_ok && tr2.adiabatic_ok;
    out.max_adiabaticity = std::max(out.max_adiabaticity, tr2.max_adiabaticity);
    const double phase_base = out.phase_accum.back();
    for (std::size_t i = 1; i < tr2.t.size(); ++i) {
        out.t.push_back(tr2.t[i]);
        out.theta.push_back(tr2.theta[i]);
        out.omega_minus.push_back(tr2.omega_minus[i]);
        out.omega_plus.push_back(tr2.omega_plus[i]);
        out.ctilde1.push_back(seed * tr2.ctilde1[i]);
        out.ctilde2.push_back(seed * tr2.ctilde2[i]);
        out.c1.push_back(seed * tr2.c1[i]);
        out.c2.push_back(seed * tr2.c2[i]);
        out.phase_accum.push_back(phase_base + tr2.phase_accum[i]);
    }
    return out;
}

} // namespace rydsim::pulses
