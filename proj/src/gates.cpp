#include "rydsim/gates.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <Eigen/Dense>

#include "rydsim/kernels.hpp"

namespace rydsim::gates {

namespace {

using stark::FieldWaveform;

struct Mat2 {
    cplx a, b, c, d; // [[a, b], [c, d]]
};

Mat2 rotation_matrix(double angle, double phase) {
    const double ch = std::cos(0.5 * angle);
    const double sh = std::sin(0.5 * angle);
    const cplx mi(0.0, -1.0);
    return {cplx(ch, 0.0), mi * std::exp(cplx(0.0, -phase)) * sh,
            mi * std::exp(cplx(0.0, phase)) * sh, cplx(ch, 0.0)};
}

// (lower, upper) register index pairs acted on by a rotation.
std::vector<std::pair<int, int>> rotation_pairs(int atom, Subspace sub) {
    if (sub == Subspace::Rydberg1R) {
        if (atom == 0) return {{kIdx10, kIdxR0}, {kIdx11, kIdxR1}, {kIdx1r, kIdxRR}};
        return {{kIdx01, kIdx0r}, {kIdx11, kIdx1r}, {kIdxR1, kIdxRR}};
    }
    if (atom == 0) return {{kIdx00, kIdx10}, {kIdx01, kIdx11}, {kIdx0r, kIdx1r}};
    return {{kIdx00, kIdx01}, {kIdx10, kIdx11}, {kIdxR0, kIdxR1}};
}

void apply_rotation_vec(std::vector<cplx>& psi, int atom, Subspace sub,
                        const Mat2& u) {
    for (auto [i, j] : rotation_pairs(atom, sub)) {
        const cplx lo = psi[i], hi = psi[j];
        psi[i] = u.a * lo + u.b * hi;
        psi[j] = u.c * lo + u.d * hi;
    }
}

void apply_rotation_rho(std::vector<cplx>& rho, std::size_t dim, int atom,
                        Subspace sub, const Mat2& u) {
    for (auto [i, j] : rotation_pairs(atom, sub)) {
        for (std::size_t c = 0; c < dim; ++c) { // rows: rho = U rho
            const cplx lo = rho[i * dim + c], hi = rho[j * dim + c];
            rho[i * dim + c] = u.a * lo + u.b * hi;
            rho[j * dim + c] = u.c * lo + u.d * hi;
        }
        for (std::size_t r = 0; r < dim; ++r) { // cols: rho = rho U^dag
            const cplx lo = rho[r * dim + i], hi = rho[r * dim + j];
            rho[r * dim + i] = lo * std::conj(u.a) + hi * std::conj(u.b);
            rho[r * dim + j] = lo * std::conj(u.c) + hi * std::conj(u.d);
        }
    }
}

struct RegisterModel {
    std::size_t block_dim;
    std::size_t dim;
    FieldWaveform waveform;
    // polarizabilities of the two single-atom Rydberg levels
    double alpha_control, alpha_target;
    forster::PairHamiltonian block;
    std::vector<double> gamma; // per register state, 1/us

    RegisterModel(const forster::Catalog& cat, const PulseSchedule& sched)
        : block_dim(cat.channels.size() + 1),
          dim(8 + cat.channels.size() + 1),
          waveform(stark::field_from_profile(sched.profile,
                                             cat.channels.front(),
                                             cat.polarizabilities)),
          alpha_control(cat.polarizabilities.alpha(cat.channels.front().a,
                                                   std::abs(cat.channels.front().two_ma))),
          alpha_target(cat.polarizabilities.alpha(cat.channels.front().b,
                                                  std::abs(cat.channels.front().two_mb))),
          block(cat, sched.r_um), gamma(dim, 0.0) {
        const auto& ch0 = cat.channels.front();
        const double g_control = 1.0 / cat.lifetime_us(ch0.a);
        const double g_target = 1.0 / cat.lifetime_us(ch0.b);
        gamma[kIdx0r] = g_target;
        gamma[kIdxR0] = g_control;
        gamma[kIdx1r] = g_target;
        gamma[kIdxR1] = g_control;
        gamma[kIdxRR] = g_control + g_target;
        for (std::size_t k = 0; k < cat.channels.size(); ++k) {
            const auto& ch = cat.channels[k];
            gamma[kIdxRR + 1 + k] =
                1.0 / cat.lifetime_us(ch.to_a) + 1.0 / cat.lifetime_us(ch.to_b);
        }
    }

    // Lab-frame register Hamiltonian (field-free level energies as zero).
    void hamiltonian(double t, cplx* h) const {
        hamiltonian_at_field(waveform.at(t), h);
    }

    void hamiltonian_at_field(double e, cplx* h) const {
        const double da = stark::stark_shift(alpha_control, e);
        const double db = stark::stark_shift(alpha_target, e);
        for (std::size_t i = 0; i < dim * dim; ++i) h[i] = cplx(0.0, 0.0);
        h[kIdx0r * dim + kIdx0r] = db;
        h[kIdx1r * dim + kIdx1r] = db;
        h[kIdxR0 * dim + kIdxR0] = da;
        h[kIdxR1 * dim + kIdxR1] = da;
        // Forster block, offset by the pair Stark shift of the initial pair
        std::vector<cplx> hb(block_dim * block_dim);
        block.at_field(e, hb.data());
        for (std::size_t i = 0; i < block_dim; ++i) {
            for (std::size_t j = 0; j < block_dim; ++j)
                h[(kIdxRR + i) * dim + (kIdxRR + j)] = hb[i * block_dim + j];
            h[(kIdxRR + i) * dim + (kIdxRR + i)] += da + db;
        }
    }
};

double rotation_phase(const RotationEvent& ev, double corr_control,
                      double corr_target, bool corrections_enabled) {
    switch (ev.mode) {
        case PhaseMode::Fixed:
            return ev.phase;
        case PhaseMode::StarkCorrected:
            return corrections_enabled
                       ? (ev.atom == 0 ? corr_control : corr_target)
                       : 0.0;
        case PhaseMode::StarkCorrectedPlusPi:
            return (corrections_enabled
                        ? (ev.atom == 0 ? corr_control : corr_target)
                        : 0.0) +
                   pi;
    }
    return ev.phase;
}

} // namespace

void PulseSchedule::validate() const {
    profile.validate();
    if (profile.crossing_times.size() != 2)
        throw InvalidProfile("gate schedule needs a two-crossing profile");
    const double a = t_start(), b = t_end();
    if (!(b > a)) throw InvalidProfile("schedule has zero length");
    for (const auto& ev : rotations) {
        if (ev.t < a - 1e-9 || ev.t > b + 1e-9)
            throw InvalidProfile("rotation outside the schedule window");
    }
    for (std::size_t i = 1; i < rotations.size(); ++i)
        if (rotations[i].t < rotations[i - 1].t)
            throw InvalidProfile("rotations must be time-ordered");
}

PulseSchedule cz_sequence(double r_um, const stark::DetuningProfile& profile,
                          double t2_correction_us) {
    if (profile.crossing_times.size() != 2)
        throw InvalidProfile("cz_sequence needs exactly two crossings");
    PulseSchedule s;
    s.r_um = r_um;
    s.profile = profile;
    s.profile.crossing_times[1] += t2_correction_us;
    s.profile.validate();
    const double a = s.t_start(), b = s.t_end();
    s.rotations = {
        {a, 0, Subspace::Rydberg1R, pi, 0.0, PhaseMode::Fixed},
        {a, 1, Subspace::Rydberg1R, pi, 0.0, PhaseMode::Fixed},
        {b, 0, Subspace::Rydberg1R, -pi, 0.0, PhaseMode::StarkCorrected},
        {b, 1, Subspace::Rydberg1R, -pi, 0.0, PhaseMode::StarkCorrected},
    };
    return s;
}

PulseSchedule cnot_sequence(double r_um, const stark::DetuningProfile& profile,
                            double t2_correction_us) {
    PulseSchedule s = cz_sequence(r_um, profile, t2_correction_us);
    s.is_cnot = true;
    const double a = s.t_start(), b = s.t_end();
    // control de-excitation picks up an extra pi (makes the ideal gate CNOT)
    for (auto& ev : s.rotations)
        if (ev.atom == 0 && ev.mode == PhaseMode::StarkCorrected)
            ev.mode = PhaseMode::StarkCorrectedPlusPi;
    std::vector<RotationEvent> evs;
    evs.push_back({a, 1, Subspace::Ground01, 0.5 * pi, 0.5 * pi,
                   PhaseMode::Fixed}); // Ry(+pi/2) target
    evs.insert(evs.end(), s.rotations.begin(), s.rotations.end());
    evs.push_back({b, 1, Subspace::Ground01, -0.5 * pi, 0.5 * pi,
                   PhaseMode::Fixed}); // Ry(-pi/2) target
    s.rotations = std::move(evs);
    return s;
}

double stark_phase_correction(const stark::PolarizabilityTable& table,
                              const stark::RydbergLevel& level, int two_abs_mj,
                              const FieldWaveform& wf, double dt) {
    const double alpha = table.alpha(level, two_abs_mj);
    const double t0 = wf.t_start, t1 = wf.t_end;
    const std::size_t n =
        std::max<std::size_t>(2, static_cast<std::size_t>((t1 - t0) / dt) + 1);
    double acc = 0.0;
    double prev = stark::stark_shift(alpha, wf.at(t0));
    double tprev = t0;
    for (std::size_t i = 1; i < n; ++i) {
        const double t = t0 + (t1 - t0) * static_cast<double>(i) /
                                  static_cast<double>(n - 1);
        const double cur = stark::stark_shift(alpha, wf.at(t));
        acc += 0.5 * (prev + cur) * (t - tprev);
        prev = cur;
        tprev = t;
    }
    return -acc;
}

std::array<double, 4> RunResult::comp_populations() const {
    std::array<double, 4> p{};
    if (!is_density) {
        for (int i = 0; i < 4; ++i) p[i] = std::norm(state[i]);
    } else {
        for (int i = 0; i < 4; ++i) p[i] = state[i * dim + i].real();
    }
    return p;
}

std::array<cplx, 16> RunResult::comp_density() const {
    std::array<cplx, 16> r{};
    if (!is_density) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                r[i * 4 + j] = state[i] * std::conj(state[j]);
    } else {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r[i * 4 + j] = state[i * dim + j];
    }
    return r;
}

double RunResult::total() const {
    if (!is_density) return kernels::norm_sq(dim, state.data());
    double tr = 0.0;
    for (std::size_t i = 0; i < dim; ++i) tr += state[i * dim + i].real();
    return tr;
}

RunResult run_gate(const forster::Catalog& cat, const PulseSchedule& schedule,
                   const std::array<cplx, 4>& initial4, bool decay,
                   const ode::Options& opts, dynamics::Trajectory* traj,
                   double traj_dt) {
    schedule.validate();
    RegisterModel model(cat, schedule);
    const std::size_t dim = model.dim;

    const double corr_c = stark_phase_correction(
        cat.polarizabilities, cat.channels.front().a,
        std::abs(cat.channels.front().two_ma), model.waveform);
    const double corr_t = stark_phase_correction(
        cat.polarizabilities, cat.channels.front().b,
        std::abs(cat.channels.front().two_mb), model.waveform);

    RunResult rr;
    rr.dim = dim;
    rr.is_density = decay;
    rr.control_correction = corr_c;
    rr.target_correction = corr_t;

    std::vector<cplx> psi(dim, cplx(0.0, 0.0));
    for (int i = 0; i < 4; ++i) psi[i] = initial4[i];

    std::vector<cplx> rho;
    if (decay) {
        rho.assign(dim * dim, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                rho[i * dim + j] = psi[i] * std::conj(psi[j]);
    }

    auto hfn = [&](double t, cplx* h) { model.hamiltonian(t, h); };
    std::vector<dynamics::DecayChannel> decays;
    for (std::size_t i = 0; i < dim; ++i)
        if (model.gamma[i] > 0)
            decays.push_back({static_cast<int>(i), model.gamma[i]});

    double now = schedule.t_start();
    std::size_t ei = 0;
    const auto& evs = schedule.rotations;
    while (true) {
        const double t_next =
            (ei < evs.size()) ? evs[ei].t : schedule.t_end();
        if (t_next > now + 1e-12) {
            dynamics::PropagationSpec spec;
            spec.t0 = now;
            spec.t1 = t_next;
            spec.breakpoints = model.waveform.breakpoints();
            spec.sample_dt = traj ? traj_dt : 0.0;
            spec.ode_opts = opts;
            auto tr = decay
                          ? dynamics::propagate_master(hfn, dim, rho, decays,
                                                       spec)
                          : dynamics::propagate_schrodinger(hfn, dim, psi,
                                                            spec);
            if (decay)
                rho = tr.states.back();
            else
                psi = tr.states.back();
            if (traj) {
                traj->dim = dim;
                traj->is_density = decay;
                for (std::size_t s = 0; s < tr.t.size(); ++s) {
                    traj->t.push_back(tr.t[s]);
                    traj->states.push_back(std::move(tr.states[s]));
                }
            }
            now = t_next;
        }
        if (ei >= evs.size()) break;
        // apply all rotations scheduled at this time, in listed order
        while (ei < evs.size() && evs[ei].t <= now + 1e-12) {
            const auto& ev = evs[ei];
            const double phase = rotation_phase(ev, corr_c, corr_t,
                                               schedule.corrections_enabled);
            if (schedule.finite_pulse_rabi > 0.0) {
                // driven pulse of duration |angle|/rabi with the field
                // frozen at the event time; decay keeps acting throughout
                const double rabi = schedule.finite_pulse_rabi;
                const double tau = std::abs(ev.angle) / rabi;
                const double phi = ev.angle < 0 ? phase + pi : phase;
                const double e_frozen = model.waveform.at(
                    std::clamp(ev.t, schedule.t_start(), schedule.t_end()));
                std::vector<cplx> hp(dim * dim);
                model.hamiltonian_at_field(e_frozen, hp.data());
                const cplx drive =
                    0.5 * rabi * std::exp(cplx(0.0, -phi));
                for (auto [i, j] : rotation_pairs(ev.atom, ev.subspace)) {
                    hp[i * dim + j] += drive;
                    hp[j * dim + i] += std::conj(drive);
                }
                auto hfrozen = [&](double, cplx* h) {
                    std::copy(hp.begin(), hp.end(), h);
                };
                dynamics::PropagationSpec pspec;
                pspec.t0 = 0.0;
                pspec.t1 = tau;
                pspec.sample_dt = 0.0;
                pspec.ode_opts = opts;
                if (!decay) {
                    psi = dynamics::propagate_schrodinger(hfrozen, dim, psi,
                                                          pspec)
                              .states.back();
                } else {
                    rho = dynamics::propagate_master(hfrozen, dim, rho, decays,
                                                     pspec)
                              .states.back();
                }
                ++ei;
                continue;
            }
            const Mat2 u = rotation_matrix(ev.angle, phase);
            if (!decay)
                apply_rotation_vec(psi, ev.atom, ev.subspace, u);
            else
                apply_rotation_rho(rho, dim, ev.atom, ev.subspace, u);
            ++ei;
        }
        if (now >= schedule.t_end() - 1e-12 && ei >= evs.size()) break;
    }

    rr.state = decay ? std::move(rho) : std::move(psi);
    return rr;
}

TruthTable cnot_truth_table(const forster::Catalog& cat,
                            const PulseSchedule& cnot, bool decay,
                            const ode::Options& opts) {
    static constexpr int ideal[4] = {0, 1, 3, 2};
    TruthTable tt;
    double acc = 0.0;
    for (int in = 0; in < 4; ++in) {
        std::array<cplx, 4> init{};
        init[in] = cplx(1.0, 0.0);
        const auto run = run_gate(cat, cnot, init, decay, opts);
        const auto pops = run.comp_populations();
        for (int out = 0; out < 4; ++out) tt.rows[in][out] = pops[out];
        acc += pops[ideal[in]];
    }
    tt.overlap = 0.25 * acc;
    return tt;
}

const char* bell_name(BellState b) {
    switch (b) {
        case BellState::PhiPlus: return "phi_plus";
        case BellState::PhiMinus: return "phi_minus";
        case BellState::PsiPlus: return "psi_plus";
        case BellState::PsiMinus: return "psi_minus";
    }
    return "?";
}

std::array<cplx, 4> bell_vector(BellState b) {
    const double s = 1.0 / std::sqrt(2.0);
    switch (b) {
        case BellState::PhiPlus: return {cplx(s), cplx(0), cplx(0), cplx(s)};
        case BellState::PhiMinus: return {cplx(s), cplx(0), cplx(0), cplx(-s)};
        case BellState::PsiPlus: return {cplx(0), cplx(s), cplx(s), cplx(0)};
        case BellState::PsiMinus: return {cplx(0), cplx(s), cplx(-s), cplx(0)};
    }
    return {};
}

BellResult bell_state_run(BellState which, const forster::Catalog& cat,
                          const PulseSchedule& cnot, bool decay,
                          const ode::Options& opts) {
    if (!cnot.is_cnot)
        throw InvalidProfile("bell_state_run needs a CNOT schedule");
    // computational input whose ideal output is the requested Bell state
    int start = 0;
    switch (which) {
        case BellState::PhiPlus: start = kIdx00; break;
        case BellState::PhiMinus: start = kIdx10; break;
        case BellState::PsiPlus: start = kIdx01; break;
        case BellState::PsiMinus: start = kIdx11; break;
    }
    std::array<cplx, 4> init{};
    init[start] = cplx(1.0, 0.0);
    // Hadamard on the control realized as Ry(pi/2)
    const Mat2 h = rotation_matrix(0.5 * pi, 0.5 * pi);
    std::array<cplx, 4> prepared{};
    prepared = init;
    {
        const cplx a0 = prepared[kIdx00], a1 = prepared[kIdx10];
        prepared[kIdx00] = h.a * a0 + h.b * a1;
        prepared[kIdx10] = h.c * a0 + h.d * a1;
        const cplx b0 = prepared[kIdx01], b1 = prepared[kIdx11];
        prepared[kIdx01] = h.a * b0 + h.b * b1;
        prepared[kIdx11] = h.c * b0 + h.d * b1;
    }

    const auto run = run_gate(cat, cnot, prepared, decay, opts);
    const auto rho4 = run.comp_density();

    BellResult res;
    res.rho_raw = rho4;
    const auto v = bell_vector(which);
    auto fidelity = [&](const std::array<cplx, 16>& r) {
        cplx f(0.0, 0.0);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                f += std::conj(v[i]) * r[i * 4 + j] * v[j];
        return f.real();
    };
    res.fidelity_raw = fidelity(rho4);
    const std::vector<cplx> rec =
        reconstruct_physical(std::vector<cplx>(rho4.begin(), rho4.end()), 4);
    std::copy(rec.begin(), rec.end(), res.rho_reconstructed.begin());
    res.fidelity_reconstructed = fidelity(res.rho_reconstructed);
    return res;
}

std::vector<cplx> reconstruct_physical(const std::vector<cplx>& rho,
                                       std::size_t dim) {
    Eigen::MatrixXcd m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = rho[i * dim + j];
    // Hermitize: solver uses the lower triangle; inputs are Hermitian by
    // contract.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    Eigen::VectorXd lam = es.eigenvalues();
    const Eigen::MatrixXcd v = es.eigenvectors();

    // Uniform redistribution of negative mass (ascending eigenvalues).
    double deficit = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        const Eigen::Index remaining = lam.size() - i;
        if (lam[i] + deficit / static_cast<double>(remaining) < 0.0) {
            deficit += lam[i];
            lam[i] = 0.0;
        } else {
            const double add = deficit / static_cast<double>(remaining);
            for (Eigen::Index j = i; j < lam.size(); ++j) lam[j] += add;
            deficit = 0.0;
            break;
        }
    }

    Eigen::MatrixXcd out = v * lam.asDiagonal() * v.adjoint();
    std::vector<cplx> res(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) res[i * dim + j] = out(i, j);
    return res;
}

Calibration calibrate_t2(const forster::Catalog& cat, double r_um,
                         const stark::DetuningProfile& profile,
                         double max_correction_us, double pop_floor,
                         const ode::Options& opts) {
    profile.validate();
    const auto& ch0 = cat.channels.front();
    const auto wf = stark::field_from_profile(profile, ch0, cat.polarizabilities);
    forster::PairHamiltonian block(cat, r_um);
    const std::size_t d = block.dim();

    const double mid =
        0.5 * (profile.crossing_times[0] + profile.crossing_times[1]);

    std::vector<cplx> hbuf(d * d), tmp(d);
    auto rhs_vec = [&](double t, const cplx* y, cplx* dy) {
        block.at_field(wf.at(t), hbuf.data());
        kernels::matvec(d, hbuf.data(), y, tmp.data());
        kernels::scale(d, cplx(0.0, -1.0), tmp.data(), dy);
    };

    // first half: |rr> to the bottom of the sweep
    std::vector<cplx> psi(d, cplx(0.0, 0.0));
    psi[0] = cplx(1.0, 0.0);
    ode::integrate(rhs_vec, psi, profile.t_start(), mid, opts,
                   profile.breakpoints());

    // second half as a full propagator (matrix ODE)
    std::vector<cplx> u(d * d, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < d; ++i) u[i * d + i] = cplx(1.0, 0.0);
    std::vector<cplx> prod(d * d);
    auto rhs_mat = [&](double t, const cplx* y, cplx* dy) {
        block.at_field(wf.at(t), hbuf.data());
        kernels::gemm(d, hbuf.data(), y, prod.data());
        kernels::scale(d * d, cplx(0.0, -1.0), prod.data(), dy);
    };
    ode::integrate(rhs_mat, u, mid, profile.t_end(), opts,
                   profile.breakpoints());

    // bottom Hamiltonian is constant during the inserted dwell
    block.at_field(wf.at(mid), hbuf.data());
    Eigen::MatrixXcd hb(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) hb(i, j) = hbuf[i * d + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hb);
    const Eigen::VectorXd lam = es.eigenvalues();
    const Eigen::MatrixXcd v = es.eigenvectors();

    Eigen::VectorXcd psim(d);
    for (std::size_t i = 0; i < d; ++i) psim(i) = psi[i];
    const Eigen::VectorXcd coeff = v.adjoint() * psim;
    Eigen::MatrixXcd u2(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) u2(i, j) = u[i * d + j];

    auto endpoint = [&](double tau) {
        Eigen::VectorXcd ph = coeff;
        for (std::size_t i = 0; i < d; ++i)
            ph(i) *= std::exp(cplx(0.0, -lam(i) * tau));
        const Eigen::VectorXcd fin = u2 * (v * ph);
        const cplx amp = fin(0);
        return std::pair<double, double>(std::norm(amp),
                                         wrap_phase(std::arg(amp) - pi));
    };

    // deterministic coarse scan, then golden-section refinement
    const double step = 5e-5; // 50 ps
    double best_tau = 0.0, best_err = 1e9;
    double any_tau = 0.0, any_err = 1e9;
    for (double tau = 0.0; tau <= max_correction_us + 1e-12; tau += step) {
        const auto [pop, err] = endpoint(tau);
        if (pop >= pop_floor && std::abs(err) < best_err) {
            best_err = std::abs(err);
            best_tau = tau;
        }
        if (std::abs(err) < any_err) {
            any_err = std::abs(err);
            any_tau = tau;
        }
    }
    if (best_err == 1e9) best_tau = any_tau; // no point met the floor

    double lo = std::max(0.0, best_tau - step);
    double hi = std::min(max_correction_us, best_tau + step);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = std::abs(endpoint(x1).second);
    double f2 = std::abs(endpoint(x2).second);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = std::abs(endpoint(x1).second);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = std::abs(endpoint(x2).second);
        }
    }
    const double tau = 0.5 * (lo + hi);
    const auto [pop, err] = endpoint(tau);
    Calibration cal;
    cal.t2_correction_us = tau;
    cal.population = pop;
    cal.phase_error = err;
    return cal;
}

std::vector<SweepRow> distance_sweep(const forster::Catalog& cat,
                                     const std::vector<double>& r_list,
                                     const stark::DetuningProfile& profile,
                                     double t2_correction, bool decay,
                                     bool with_bell, const ode::Options& opts,
                                     int workers) {
    if (r_list.empty()) throw OutOfRange("distance_sweep needs at least one R");
    std::vector<SweepRow> rows(r_list.size());
    const int nw = workers > 0
                       ? workers
                       : std::max(1u, std::thread::hardware_concurrency());

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= r_list.size()) return;
            const double r = r_list[i];
            const auto cnot = cnot_sequence(r, profile, t2_correction);
            SweepRow row;
            row.r_um = r;
            row.overlap = cnot_truth_table(cat, cnot, decay, opts).overlap;
            if (with_bell)
                row.bell_phi_plus =
                    bell_state_run(BellState::PhiPlus, cat, cnot, decay, opts)
                        .fidelity_raw;
            rows[i] = row;
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < nw; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    return rows;
}

} // namespace rydsim::gates
