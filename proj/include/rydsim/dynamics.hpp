#pragma once

#include <functional>
#include <vector>

#include "rydsim/ode.hpp"
#include "rydsim/types.hpp"

// Propagation engines: Schrodinger evolution of state vectors and
// master-equation evolution of density matrices with depopulation-only
// decay (anticommutator form, no refill terms; trace is non-increasing).

namespace rydsim::dynamics {

// Fills the dim x dim row-major Hermitian matrix at time t.
using HamiltonianFn = std::function<void(double t, cplx* h)>;

struct DecayChannel {
    int state_index = 0;
    double rate_per_us = 0.0; // total depopulation rate of that basis state
};

struct Trajectory {
    std::size_t dim = 0;
    bool is_density = false;
    std::vector<double> t;
    // states[i] has dim entries (vector) or dim*dim entries (density matrix)
    std::vector<std::vector<cplx>> states;
};

struct PropagationSpec {
    double t0 = 0.0;
    double t1 = 0.0;
    std::vector<double> breakpoints;
    double sample_dt = 1e-3;          // us; <= 0 keeps only the endpoint
    ode::Options ode_opts;
};

Trajectory propagate_schrodinger(const HamiltonianFn& h, std::size_t dim,
                                 const std::vector<cplx>& psi0,
                                 const PropagationSpec& spec);

// rho evolves under -i[H, rho] - (1/2){Gamma, rho} with Gamma diagonal from
// the decay channels. Hermiticity is restored ((rho+rho^dag)/2) at output
// samples only.
Trajectory propagate_master(const HamiltonianFn& h, std::size_t dim,
                            const std::vector<cplx>& rho0,
                            const std::vector<DecayChannel>& decays,
                            const PropagationSpec& spec);

struct Observables {
    std::vector<double> t;
    std::vector<std::vector<double>> populations; // [sample][state]
    std::vector<double> phase;   // unwrapped phase of the tracked component
    std::vector<double> trace;   // total population / Tr rho
    std::vector<double> purity;  // 1 for vectors, Tr rho^2 for matrices
};

// phase_index selects the amplitude arg c_i (vectors) or the coherence
// arg rho[phase_index][ref_index] (densities; ref_index < 0 uses the
// diagonal's arg, which is 0 for a Hermitian matrix -- pass a reference
// state for a meaningful phase).
Observables observables(const Trajectory& traj, int phase_index = 0,
                        int ref_index = -1);

} // namespace rydsim::dynamics
