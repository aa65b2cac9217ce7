#include "rydsim/ode.hpp"

#include <algorithm>
#include <cmath>

#include "rydsim/kernels.hpp"

namespace rydsim::ode {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - bhat (embedded 4th order error coefficients, k7 = f at the new point)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

struct Work {
    std::size_t n;
    std::vector<cplx> k1, k2, k3, k4, k5, k6, k7, ytmp, ynew, yerr, inc;
    std::vector<double> carry, carry_next; // Kahan compensation, 2n doubles
    explicit Work(std::size_t n_)
        : n(n_), k1(n_), k2(n_), k3(n_), k4(n_), k5(n_), k6(n_), k7(n_),
          ytmp(n_), ynew(n_), yerr(n_), inc(n_), carry(2 * n_, 0.0),
          carry_next(2 * n_, 0.0) {}
};

// ynew = y + inc with compensated summation; carry_next holds the updated
// compensation (committed only when the step is accepted, so rejected
// steps leave the carry untouched).
void kahan_update(std::size_t n, const cplx* y, const cplx* inc,
                  const double* carry, cplx* ynew, double* carry_next) {
    const double* yd = reinterpret_cast<const double*>(y);
    const double* id = reinterpret_cast<const double*>(inc);
    double* od = reinterpret_cast<double*>(ynew);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        const double t = id[i] - carry[i];
        const double s = yd[i] + t;
        carry_next[i] = (s - yd[i]) - t;
        od[i] = s;
    }
}

double initial_step(const Rhs& rhs, const std::vector<cplx>& y, double t,
                    double direction_span, const Options& opt, Work& w) {
    // Conservative heuristic based on |y| and |f(t0,y)|.
    const std::size_t n = y.size();
    rhs(t, y.data(), w.k1.data());
    const double ny = std::sqrt(kernels::norm_sq(n, y.data()));
    const double nf = std::sqrt(kernels::norm_sq(n, w.k1.data()));
    double h = (nf > 1e-30) ? 0.01 * (ny + opt.atol) / nf : 1e-6;
    h = std::min(h, 0.1 * direction_span);
    return std::max(h, 1e-14);
}

// Integrate one smooth segment [ta, tb], landing exactly on each sample in
// (ta, tb] listed in seg_samples. When tb is an interior breakpoint, stage
// evaluations that land exactly on tb are nudged one ulp left so drives
// switching branches at the breakpoint are sampled on this segment's side.
void integrate_segment(const Rhs& rhs, std::vector<cplx>& y, double ta,
                       double tb, const Options& opt,
                       std::span<const double> seg_samples,
                       const Sampler& sampler, Work& w, double span_total,
                       bool right_edge_is_breakpoint) {
    const auto stage_time = [&](double te) {
        if (right_edge_is_breakpoint && te >= tb)
            return std::nextafter(tb, ta);
        return te;
    };
    const std::size_t n = y.size();
    double t = ta;
    std::size_t next_sample = 0;
    double h = (opt.h_init > 0) ? opt.h_init
                                : initial_step(rhs, y, ta, tb - ta, opt, w);
    bool have_k1 = false;

    const double h_floor = opt.h_min_factor * span_total;

    while (t < tb) {
        double t_stop = tb;
        while (next_sample < seg_samples.size() &&
               seg_samples[next_sample] <= t + 1e-15 * span_total) {
            // sample coincides with current time (e.g. segment start)
            if (sampler) sampler(t, y.data());
            ++next_sample;
        }
        if (next_sample < seg_samples.size())
            t_stop = std::min(t_stop, seg_samples[next_sample]);

        double hstep = std::min(h, t_stop - t);
        bool clipped = hstep < h;

        if (!have_k1) {
            rhs(t, y.data(), w.k1.data());
            have_k1 = true;
        }

        // stages
        {
            const double co[] = {hstep * a21};
            const cplx* te[] = {w.k1.data()};
            kernels::lincomb(n, w.ytmp.data(), y.data(), co, te, 1);
            rhs(stage_time(t + c2 * hstep), w.ytmp.data(), w.k2.data());
        }
        {
            const double co[] = {hstep * a31, hstep * a32};
            const cplx* te[] = {w.k1.data(), w.k2.data()};
            kernels::lincomb(n, w.ytmp.data(), y.data(), co, te, 2);
            rhs(stage_time(t + c3 * hstep), w.ytmp.data(), w.k3.data());
        }
        {
            const double co[] = {hstep * a41, hstep * a42, hstep * a43};
            const cplx* te[] = {w.k1.data(), w.k2.data(), w.k3.data()};
            kernels::lincomb(n, w.ytmp.data(), y.data(), co, te, 3);
            rhs(stage_time(t + c4 * hstep), w.ytmp.data(), w.k4.data());
        }
        {
            const double co[] = {hstep * a51, hstep * a52, hstep * a53,
                                 hstep * a54};
            const cplx* te[] = {w.k1.data(), w.k2.data(), w.k3.data(),
                                w.k4.data()};
            kernels::lincomb(n, w.ytmp.data(), y.data(), co, te, 4);
            rhs(stage_time(t + c5 * hstep), w.ytmp.data(), w.k5.data());
        }
        {
            const double co[] = {hstep * a61, hstep * a62, hstep * a63,
                                 hstep * a64, hstep * a65};
            const cplx* te[] = {w.k1.data(), w.k2.data(), w.k3.data(),
                                w.k4.data(), w.k5.data()};
            kernels::lincomb(n, w.ytmp.data(), y.data(), co, te, 5);
            rhs(stage_time(t + hstep), w.ytmp.data(), w.k6.data());
        }
        {
            static const cplx zero(0.0, 0.0);
            std::fill(w.inc.begin(), w.inc.end(), zero);
            const double co[] = {hstep * b1, hstep * b3, hstep * b4,
                                 hstep * b5, hstep * b6};
            const cplx* te[] = {w.k1.data(), w.k3.data(), w.k4.data(),
                                w.k5.data(), w.k6.data()};
            kernels::lincomb(n, w.inc.data(), w.inc.data(), co, te, 5);
            kahan_update(n, y.data(), w.inc.data(), w.carry.data(),
                         w.ynew.data(), w.carry_next.data());
            rhs(stage_time(t + hstep), w.ynew.data(), w.k7.data());
        }
        {
            static const cplx zero(0.0, 0.0);
            std::fill(w.yerr.begin(), w.yerr.end(), zero);
            const double co[] = {hstep * e1, hstep * e3, hstep * e4,
                                 hstep * e5, hstep * e6, hstep * e7};
            const cplx* te[] = {w.k1.data(), w.k3.data(), w.k4.data(),
                                w.k5.data(), w.k6.data(), w.k7.data()};
            kernels::lincomb(n, w.yerr.data(), w.yerr.data(), co, te, 6);
        }

        const double err = kernels::wrms(n, w.yerr.data(), y.data(),
                                         w.ynew.data(), opt.atol, opt.rtol);

        if (err <= 1.0) {
            t += hstep;
            y.swap(w.ynew);
            w.carry.swap(w.carry_next);
            w.k1.swap(w.k7); // FSAL
            have_k1 = true;
            if (next_sample < seg_samples.size() &&
                t >= seg_samples[next_sample] - 1e-15 * span_total) {
                if (sampler) sampler(t, y.data());
                ++next_sample;
            }
            double grow = (err > 1e-30)
                              ? opt.safety * std::pow(err, -0.2)
                              : opt.max_growth;
            grow = std::clamp(grow, opt.min_shrink, opt.max_growth);
            if (!clipped) h = hstep * grow;
            else h = std::max(h, hstep * grow);
        } else {
            double shrink = opt.safety * std::pow(err, -0.2);
            shrink = std::clamp(shrink, opt.min_shrink, 1.0);
            h = hstep * shrink;
            have_k1 = true; // k1 still valid at unchanged t
            if (h < h_floor)
                throw StepSizeUnderflow(
                    "integrator step size underflow at t=" + std::to_string(t));
        }
    }
    while (next_sample < seg_samples.size()) {
        if (sampler) sampler(t, y.data());
        ++next_sample;
    }
}

} // namespace

void integrate(const Rhs& rhs, std::vector<cplx>& y, double t0, double t1,
               const Options& opt, std::span<const double> breakpoints,
               std::span<const double> samples, const Sampler& sampler) {
    if (t1 <= t0) {
        if (sampler && !samples.empty()) sampler(t0, y.data());
        return;
    }
    Work w(y.size());
    const double span = t1 - t0;

    std::vector<double> edges;
    edges.push_back(t0);
    for (double b : breakpoints)
        if (b > t0 + 1e-15 * span && b < t1 - 1e-15 * span) edges.push_back(b);
    edges.push_back(t1);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [&](double a, double b) {
                                return std::abs(a - b) < 1e-15 * span;
                            }),
                edges.end());

    std::size_t si = 0;
    while (si < samples.size() && samples[si] <= t0 + 1e-15 * span) {
        if (sampler) sampler(t0, y.data());
        ++si;
    }
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        const double ta = edges[e], tb = edges[e + 1];
        std::size_t sj = si;
        while (sj < samples.size() && samples[sj] <= tb + 1e-15 * span) ++sj;
        const bool interior = (e + 2 < edges.size());
        integrate_segment(rhs, y, ta, tb, opt,
                          samples.subspan(si, sj - si), sampler, w, span,
                          interior);
        si = sj;
    }
}

} // namespace rydsim::ode
