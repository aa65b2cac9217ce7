#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rydsim/dynamics.hpp"
#include "rydsim/forster.hpp"
#include "rydsim/stark.hpp"

// CZ / CNOT gate sequences over a two-atom register. Register layout:
//   0..3   computational |00> |01> |10> |11>
//   4..7   single-Rydberg |0r> |r0> |1r> |r1>
//   8..    Forster block: |rr> (= the initial collective pair) followed by
//          the catalogued channel states.
// Atom 0 (control) uses the first initial-pair level (90S), atom 1 (target)
// the second (96S). Laser pulses are instantaneous ideal rotations.

namespace rydsim::gates {

inline constexpr int kIdx00 = 0, kIdx01 = 1, kIdx10 = 2, kIdx11 = 3;
inline constexpr int kIdx0r = 4, kIdxR0 = 5, kIdx1r = 6, kIdxR1 = 7;
inline constexpr int kIdxRR = 8;

enum class Subspace { Ground01, Rydberg1R };
enum class PhaseMode { Fixed, StarkCorrected, StarkCorrectedPlusPi };

struct RotationEvent {
    double t = 0.0;
    int atom = 0; // 0 control, 1 target
    Subspace subspace = Subspace::Rydberg1R;
    double angle = 0.0; // rotation angle theta
    double phase = 0.0; // axis phase phi (Fixed mode)
    PhaseMode mode = PhaseMode::Fixed;
};

struct PulseSchedule {
    double r_um = 25.0;
    stark::DetuningProfile profile; // t2 correction already applied
    std::vector<RotationEvent> rotations;
    bool corrections_enabled = true;
    bool is_cnot = false;
    // 0 = instantaneous ideal rotations (default). Positive: each rotation
    // is driven at this Rabi rate (angular rad/us) for |angle|/rabi, with
    // the field frozen at its value at the event time and decay acting
    // throughout.
    double finite_pulse_rabi = 0.0;

    double t_start() const { return profile.t_start(); }
    double t_end() const { return profile.t_end(); }
    void validate() const; // throws InvalidProfile
};

// pi excitation of both atoms, the double-passage field ramp, -pi
// de-excitation with per-atom Stark phase corrections. t2_correction
// shifts the second crossing (inserting bottom-hold dwell).
PulseSchedule cz_sequence(double r_um, const stark::DetuningProfile& profile,
                          double t2_correction_us);

// cz_sequence wrapped in +/- pi/2 y-rotations of the target; the control
// de-excitation carries an extra pi so the ideal gate is exactly CNOT on
// the computational subspace.
PulseSchedule cnot_sequence(double r_um, const stark::DetuningProfile& profile,
                            double t2_correction_us);

// Laser-phase offset -integral of stark_shift(level) over the ramp
// (trapezoid, step dt; the default grid keeps the quadrature error below
// 1e-9 rad for the quintic waveforms).
double stark_phase_correction(const stark::PolarizabilityTable& table,
                              const stark::RydbergLevel& level, int two_abs_mj,
                              const stark::FieldWaveform& wf, double dt = 5e-6);

struct RunResult {
    std::size_t dim = 0;
    bool is_density = false;
    std::vector<cplx> state; // vector (dim) or row-major rho (dim*dim)
    double control_correction = 0.0;
    double target_correction = 0.0;

    std::array<double, 4> comp_populations() const;
    std::array<cplx, 16> comp_density() const; // row-major 4x4
    double total() const;                      // norm^2 or trace
};

// initial4: amplitudes on the computational basis (need not be a basis
// state). decay=true propagates the register density matrix under the
// depopulation master equation; decay=false uses Schrodinger evolution.
// When traj is non-null the ramp portion is sampled at traj_dt into it.
RunResult run_gate(const forster::Catalog& cat, const PulseSchedule& schedule,
                   const std::array<cplx, 4>& initial4, bool decay,
                   const ode::Options& opts = {},
                   dynamics::Trajectory* traj = nullptr,
                   double traj_dt = 1e-3);

struct TruthTable {
    std::array<std::array<double, 4>, 4> rows{}; // rows[in][out]
    double overlap = 0.0;
};
TruthTable cnot_truth_table(const forster::Catalog& cat,
                            const PulseSchedule& cnot, bool decay,
                            const ode::Options& opts = {});

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };
const char* bell_name(BellState);
std::array<cplx, 4> bell_vector(BellState);

struct BellResult {
    double fidelity_raw = 0.0;           // <bell|rho|bell>, sub-normalized rho
    double fidelity_reconstructed = 0.0; // after eigenvalue clipping
    std::array<cplx, 16> rho_raw{};
    std::array<cplx, 16> rho_reconstructed{};
};
// Ry(pi/2) on the control (Hadamard up to the documented convention), then
// the CNOT schedule; starts from the computational basis state that makes
// the ideal output the requested Bell state.
BellResult bell_state_run(BellState which, const forster::Catalog& cat,
                          const PulseSchedule& cnot, bool decay,
                          const ode::Options& opts = {});

// Nearest physical state by eigenvalue clipping with uniform
// redistribution; preserves the trace and Hermiticity, idempotent on
// physical inputs.
std::vector<cplx> reconstruct_physical(const std::vector<cplx>& rho,
                                       std::size_t dim);

struct Calibration {
    double t2_correction_us = 0.0;
    double population = 0.0;  // |<rr|psi>|^2 at the end of the ramp
    double phase_error = 0.0; // wrapped distance of the rr phase from pi
};
// Minimizes the phase error of the collective-pair return at R (decay off)
// over t2 corrections in [0, max_correction_us], holding the returned
// population above pop_floor when possible (the dwell calibration rides
// the interference fringes of the two passes).
Calibration calibrate_t2(const forster::Catalog& cat, double r_um,
                         const stark::DetuningProfile& profile,
                         double max_correction_us = 0.7,
                         double pop_floor = 0.99,
                         const ode::Options& opts = {});

struct SweepRow {
    double r_um = 0.0;
    double overlap = 0.0;
    double bell_phi_plus = -1.0; // -1 when Bell runs were not requested
};
// run_gate per R (parallel over a small worker pool, results in input
// order). Reports are deterministic and identical to a serial run.
std::vector<SweepRow> distance_sweep(const forster::Catalog& cat,
                                     const std::vector<double>& r_list,
                                     const stark::DetuningProfile& profile,
                                     double t2_correction, bool decay,
                                     bool with_bell,
                                     const ode::Options& opts = {},
                                     int workers = 0);

} // namespace rydsim::gates
