#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rydsim/types.hpp"

namespace rydsim::ode {

struct Options {
    // Defaults hold the norm-conservation drift of multi-microsecond spans
    // below 1e-10 at every sample (drift scales linearly with rtol); atol
    // stays above the roundoff-noise floor of near-zero components.
    double rtol = 5e-12;
    double atol = 1e-13;
    double h_init = 0.0;      // 0 = choose automatically
    double h_min_factor = 1e-12; // StepSizeUnderflow below h_min_factor*(t1-t0)
    double safety = 0.85;
    double max_growth = 5.0;
    double min_shrink = 0.2;
};

// dy/dt = f(t, y). y and dydt have the dimension passed to integrate().
using Rhs = std::function<void(double t, const cplx* y, cplx* dydt)>;

// Called after landing exactly on each requested sample time.
using Sampler = std::function<void(double t, const cplx* y)>;

// Adaptive Dormand-Prince 5(4). Integrates y in place from t0 to t1,
// restarting at each breakpoint (drive discontinuities) and stepping
// exactly onto every sample time. breakpoints and samples must be sorted;
// entries outside (t0, t1) are ignored. Throws StepSizeUnderflow.
void integrate(const Rhs& rhs, std::vector<cplx>& y, double t0, double t1,
               const Options& opt, std::span<const double> breakpoints = {},
               std::span<const double> samples = {},
               const Sampler& sampler = nullptr);

} // namespace rydsim::ode
