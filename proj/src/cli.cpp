#include "rydsim/cli.hpp"

#include <cmath>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "rydsim/dynamics.hpp"
#include "rydsim/forster.hpp"
#include "rydsim/gates.hpp"
#include "rydsim/io.hpp"
#include "rydsim/pulses.hpp"
#include "rydsim/stark.hpp"

namespace rydsim::cli {

namespace {

using io::json;

struct ScenarioConfig {
    // two-level drive parameters (ordinary MHz / us, converted on use)
    double omega0_gauss_mhz = 2.0;
    double omega0_rect_mhz = 2.1;
    double w_us = 0.12;
    double s1_mhz_us = -10.0;
    double s2_mhz_us5 = -2600.0;
    double t1_us = 0.45;
    double t2_us = 1.35;
    std::string shape = "both"; // gaussian | rectangular | both
    bool sign_flip = false;
    // gate parameters
    double r_um = 25.0;
    bool decay = true;
    bool correction = true;
    std::string catalog = "data/channels_cs.json";
    std::string t2_correction = "auto"; // "auto" | number in ns
    double window_half_width_us = 0.45;
    double pulse_rabi_mhz = 0.0; // 0 = instantaneous laser rotations
    std::string bell_state = "all";
    std::vector<double> r_list;
    std::string sweep_param = "R";
    double delta_ps = 100.0;
    // numerics / output
    double rtol = 1e-10;
    double atol = 1e-12;
    double sample_dt_ns = 1.0;
    std::string out_dir = "out";

    // serialized for the provenance hash; out_dir is excluded on purpose
    json to_json() const {
        return json{{"omega0_gauss_mhz", omega0_gauss_mhz},
                    {"omega0_rect_mhz", omega0_rect_mhz},
                    {"w_us", w_us},
                    {"s1_mhz_us", s1_mhz_us},
                    {"s2_mhz_us5", s2_mhz_us5},
                    {"t1_us", t1_us},
                    {"t2_us", t2_us},
                    {"shape", shape},
                    {"sign_flip", sign_flip},
                    {"r_um", r_um},
                    {"decay", decay},
                    {"correction", correction},
                    {"catalog", catalog},
                    {"t2_correction", t2_correction},
                    {"window_half_width_us", window_half_width_us},
                    {"pulse_rabi_mhz", pulse_rabi_mhz},
                    {"bell_state", bell_state},
                    {"r_list", r_list},
                    {"sweep_param", sweep_param},
                    {"delta_ps", delta_ps},
                    {"rtol", rtol},
                    {"atol", atol},
                    {"sample_dt_ns", sample_dt_ns}};
    }
};

const std::vector<std::string> kAllowedKeys = {
    "omega0_gauss_mhz", "omega0_rect_mhz", "w_us", "s1_mhz_us", "s2_mhz_us5",
    "t1_us", "t2_us", "shape", "sign_flip", "r_um", "decay", "correction",
    "catalog", "t2_correction", "window_half_width_us", "pulse_rabi_mhz",
    "bell_state", "r_list",
    "sweep_param", "delta_ps", "rtol", "atol", "sample_dt_ns", "out_dir"};

void apply_json(ScenarioConfig& c, const json& j) {
    auto get = [&](const char* k, auto& field) {
        if (j.contains(k)) field = j.at(k).get<std::decay_t<decltype(field)>>();
    };
    get("omega0_gauss_mhz", c.omega0_gauss_mhz);
    get("omega0_rect_mhz", c.omega0_rect_mhz);
    get("w_us", c.w_us);
    get("s1_mhz_us", c.s1_mhz_us);
    get("s2_mhz_us5", c.s2_mhz_us5);
    get("t1_us", c.t1_us);
    get("t2_us", c.t2_us);
    get("shape", c.shape);
    get("sign_flip", c.sign_flip);
    get("r_um", c.r_um);
    get("decay", c.decay);
    get("correction", c.correction);
    get("catalog", c.catalog);
    get("window_half_width_us", c.window_half_width_us);
    get("pulse_rabi_mhz", c.pulse_rabi_mhz);
    get("bell_state", c.bell_state);
    get("r_list", c.r_list);
    get("sweep_param", c.sweep_param);
    get("delta_ps", c.delta_ps);
    get("rtol", c.rtol);
    get("atol", c.atol);
    get("sample_dt_ns", c.sample_dt_ns);
    get("out_dir", c.out_dir);
    if (j.contains("t2_correction")) {
        const auto& v = j.at("t2_correction");
        c.t2_correction = v.is_string() ? v.get<std::string>()
                                        : std::to_string(v.get<double>());
    }
}

struct CommonMeta {
    std::string config_hash;
    std::string catalog_hash;
};

void stamp(io::CsvWriter& w, const CommonMeta& m) {
    w.meta("tool", kVersion);
    w.meta("config_hash", m.config_hash);
    if (!m.catalog_hash.empty()) w.meta("catalog_hash", m.catalog_hash);
}

json meta_json(const CommonMeta& m) {
    json j{{"tool", kVersion}, {"config_hash", m.config_hash}};
    if (!m.catalog_hash.empty()) j["catalog_hash"] = m.catalog_hash;
    return j;
}

stark::DetuningProfile profile_from_config(const ScenarioConfig& c) {
    stark::DetuningProfile p;
    p.s1 = mhz_to_ang(c.s1_mhz_us);
    p.s2 = mhz_to_ang(c.s2_mhz_us5);
    p.crossing_times = {c.t1_us, c.t2_us};
    p.half_width = c.window_half_width_us;
    p.validate();
    return p;
}

double resolve_t2_correction(const ScenarioConfig& c,
                             const forster::Catalog& cat,
                             const stark::DetuningProfile& profile,
                             const ode::Options& opts) {
    if (!c.correction) return 0.0;
    if (c.t2_correction == "auto") {
        const auto cal =
            gates::calibrate_t2(cat, c.r_um, profile, 0.7, 0.99, opts);
        return cal.t2_correction_us;
    }
    return std::stod(c.t2_correction) * 1e-3; // ns -> us
}

ode::Options ode_opts(const ScenarioConfig& c) {
    ode::Options o;
    o.rtol = c.rtol;
    o.atol = c.atol;
    return o;
}

int cmd_two_level(const ScenarioConfig& c, const CommonMeta& meta) {
    io::ensure_dir(c.out_dir);
    json summary;
    summary["meta"] = meta_json(meta);

    std::vector<std::pair<std::string, pulses::PulseShape>> shapes;
    if (c.shape == "gaussian" || c.shape == "both")
        shapes.emplace_back("gaussian", pulses::PulseShape::GaussianLinearChirp);
    if (c.shape == "rectangular" || c.shape == "both")
        shapes.emplace_back("rectangular",
                            pulses::PulseShape::RectangularNonlinear);
    if (shapes.empty()) throw ConfigError("shape must be gaussian, rectangular or both");

    for (const auto& [name, shape] : shapes) {
        pulses::DoublePassageParams p;
        p.omega0 = mhz_to_ang(shape == pulses::PulseShape::GaussianLinearChirp
                                  ? c.omega0_gauss_mhz
                                  : c.omega0_rect_mhz);
        p.width = c.w_us;
        p.s1 = mhz_to_ang(c.s1_mhz_us);
        p.s2 = mhz_to_ang(c.s2_mhz_us5);
        p.t1 = c.t1_us;
        p.t2 = c.t2_us;
        const auto res = pulses::double_passage(shape, p, c.sign_flip,
                                                ode_opts(c),
                                                c.sample_dt_ns * 1e-3);
        const std::string tag = name + (c.sign_flip ? "_flip" : "");
        io::CsvWriter csv(c.out_dir + "/twolevel_" + tag + ".csv",
                          {"t_us", "re_c1", "im_c1", "re_c2", "im_c2", "pop1",
                           "phase1_rad"});
        stamp(csv, meta);
        std::vector<double> ph(res.samples.size());
        for (std::size_t i = 0; i < res.samples.size(); ++i)
            ph[i] = std::arg(res.samples[i].c1);
        pulses::unwrap_inplace(ph);
        for (std::size_t i = 0; i < res.samples.size(); ++i) {
            const auto& s = res.samples[i];
            csv.row({s.t, s.c1.real(), s.c1.imag(), s.c2.real(), s.c2.imag(),
                     std::norm(s.c1), ph[i]});
        }
        csv.write();
        const double target = c.sign_flip ? 0.0 : pi;
        summary["runs"][tag] = {
            {"population_error", res.population_error},
            {"final_phase_rad", res.final_phase},
            {"phase_error_rad", phase_distance(res.final_phase, target)},
            {"phase_target_rad", target}};
    }
    io::write_json(c.out_dir + "/twolevel_summary.json", summary);
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int cmd_forster(const ScenarioConfig& c, const CommonMeta& meta) {
    io::ensure_dir(c.out_dir);
    const auto cat = forster::build_catalog(c.catalog);
    const auto profile = profile_from_config(c);
    const auto opts = ode_opts(c);
    const double corr = resolve_t2_correction(c, cat, profile, opts);

    auto corrected = profile;
    corrected.crossing_times[1] += corr;
    const auto wf = stark::field_from_profile(corrected, cat.channels.front(),
                                              cat.polarizabilities);
    forster::PairHamiltonian block(cat, c.r_um);
    const std::size_t d = block.dim();

    std::vector<cplx> hbuf(d * d);
    auto hfn = [&](double t, cplx* h) { block.at_field(wf.at(t), h); };

    dynamics::PropagationSpec spec;
    spec.t0 = corrected.t_start();
    spec.t1 = corrected.t_end();
    spec.breakpoints = wf.breakpoints();
    spec.sample_dt = c.sample_dt_ns * 1e-3;
    spec.ode_opts = opts;

    std::vector<cplx> psi0(d, cplx(0.0, 0.0));
    psi0[0] = cplx(1.0, 0.0);
    const auto traj = dynamics::propagate_schrodinger(hfn, d, psi0, spec);
    const auto obs = dynamics::observables(traj, 0);

    io::CsvWriter field_csv(c.out_dir + "/forster_field.csv",
                            {"t_us", "e_v_cm"});
    stamp(field_csv, meta);
    io::CsvWriter det_csv(c.out_dir + "/forster_detunings.csv", [&] {
        std::vector<std::string> cols = {"t_us"};
        for (std::size_t k = 0; k < cat.channels.size(); ++k)
            cols.push_back("delta_ch" + std::to_string(k + 1) + "_mhz");
        return cols;
    }());
    stamp(det_csv, meta);
    io::CsvWriter pop_csv(c.out_dir + "/forster_population.csv", [&] {
        std::vector<std::string> cols = {"t_us", "pop_rr"};
        for (std::size_t k = 0; k < cat.channels.size(); ++k)
            cols.push_back("pop_ch" + std::to_string(k + 1));
        return cols;
    }());
    stamp(pop_csv, meta);
    io::CsvWriter phase_csv(c.out_dir + "/forster_phase.csv",
                            {"t_us", "phase_rr_rad"});
    stamp(phase_csv, meta);

    for (std::size_t i = 0; i < obs.t.size(); ++i) {
        const double t = obs.t[i];
        const double e = wf.at(t);
        field_csv.row({t, e});
        std::vector<double> drow = {t};
        for (const auto& ch : cat.channels)
            drow.push_back(
                ang_to_mhz(stark::pair_detuning(ch, cat.polarizabilities, e)));
        det_csv.row(drow);
        std::vector<double> prow = {t};
        for (std::size_t k = 0; k < d; ++k)
            prow.push_back(obs.populations[i][k]);
        pop_csv.row(prow);
        phase_csv.row({t, obs.phase[i]});
    }
    field_csv.write();
    det_csv.write();
    pop_csv.write();
    phase_csv.write();

    const double pop_end = obs.populations.back()[0];
    const double phase_end = obs.phase.back();
    json summary;
    summary["meta"] = meta_json(meta);
    summary["r_um"] = c.r_um;
    summary["t2_correction_ns"] = corr * 1e3;
    summary["correction_enabled"] = c.correction;
    summary["final_population"] = pop_end;
    summary["final_phase_rad"] = phase_end;
    summary["phase_error_vs_pi_rad"] = wrap_phase(phase_end - pi);
    io::write_json(c.out_dir + "/forster_summary.json", summary);
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int cmd_gate(const ScenarioConfig& c, const CommonMeta& meta) {
    io::ensure_dir(c.out_dir);
    const auto cat = forster::build_catalog(c.catalog);
    const auto profile = profile_from_config(c);
    const auto opts = ode_opts(c);
    const double corr = resolve_t2_correction(c, cat, profile, opts);
    auto cnot = gates::cnot_sequence(c.r_um, profile, corr);
    cnot.finite_pulse_rabi = mhz_to_ang(c.pulse_rabi_mhz);

    const auto tt = gates::cnot_truth_table(cat, cnot, c.decay, opts);

    // time series for the |11> input
    dynamics::Trajectory traj;
    std::array<cplx, 4> init{};
    init[gates::kIdx11] = cplx(1.0, 0.0);
    gates::run_gate(cat, cnot, init, c.decay, opts, &traj,
                    c.sample_dt_ns * 1e-3);
    io::CsvWriter ts(c.out_dir + "/gate_timeseries.csv", [&] {
        std::vector<std::string> cols = {"t_us"};
        for (std::size_t k = 0; k < traj.dim; ++k)
            cols.push_back("pop_" + std::to_string(k));
        return cols;
    }());
    stamp(ts, meta);
    const auto obs = dynamics::observables(traj, gates::kIdxRR);
    for (std::size_t i = 0; i < obs.t.size(); ++i) {
        std::vector<double> row = {obs.t[i]};
        for (std::size_t k = 0; k < traj.dim; ++k)
            row.push_back(obs.populations[i][k]);
        ts.row(row);
    }
    ts.write();

    json j;
    j["meta"] = meta_json(meta);
    j["r_um"] = c.r_um;
    j["decay"] = c.decay;
    j["t2_correction_ns"] = corr * 1e3;
    j["overlap"] = tt.overlap;
    for (int in = 0; in < 4; ++in)
        for (int out = 0; out < 4; ++out)
            j["truth_table"][in][out] = tt.rows[in][out];
    io::write_json(c.out_dir + "/gate.json", j);
    std::cout << "overlap " << tt.overlap << "\n";
    std::cout << j.dump(2) << "\n";
    return 0;
}

json density_to_json(const std::array<cplx, 16>& rho) {
    json re = json::array(), im = json::array();
    for (int i = 0; i < 4; ++i) {
        json rrow = json::array(), irow = json::array();
        for (int jx = 0; jx < 4; ++jx) {
            rrow.push_back(rho[i * 4 + jx].real());
            irow.push_back(rho[i * 4 + jx].imag());
        }
        re.push_back(rrow);
        im.push_back(irow);
    }
    return json{{"re", re}, {"im", im}};
}

int cmd_bell(const ScenarioConfig& c, const CommonMeta& meta) {
    io::ensure_dir(c.out_dir);
    const auto cat = forster::build_catalog(c.catalog);
    const auto profile = profile_from_config(c);
    const auto opts = ode_opts(c);
    const double corr = resolve_t2_correction(c, cat, profile, opts);
    auto cnot = gates::cnot_sequence(c.r_um, profile, corr);
    cnot.finite_pulse_rabi = mhz_to_ang(c.pulse_rabi_mhz);

    std::vector<gates::BellState> states;
    using BS = gates::BellState;
    if (c.bell_state == "all")
        states = {BS::PhiPlus, BS::PhiMinus, BS::PsiPlus, BS::PsiMinus};
    else if (c.bell_state == "phi_plus") states = {BS::PhiPlus};
    else if (c.bell_state == "phi_minus") states = {BS::PhiMinus};
    else if (c.bell_state == "psi_plus") states = {BS::PsiPlus};
    else if (c.bell_state == "psi_minus") states = {BS::PsiMinus};
    else throw ConfigError("unknown bell state: " + c.bell_state);

    json j;
    j["meta"] = meta_json(meta);
    j["r_um"] = c.r_um;
    j["decay"] = c.decay;
    j["t2_correction_ns"] = corr * 1e3;
    for (const auto b : states) {
        const auto res = gates::bell_state_run(b, cat, cnot, c.decay, opts);
        json entry;
        entry["fidelity_raw"] = res.fidelity_raw;
        entry["fidelity_reconstructed"] = res.fidelity_reconstructed;
        entry["rho_raw"] = density_to_json(res.rho_raw);
        entry["rho_reconstructed"] = density_to_json(res.rho_reconstructed);
        j["bell"][gates::bell_name(b)] = entry;
        std::cout << gates::bell_name(b) << " fidelity "
                  << res.fidelity_reconstructed << " (raw " << res.fidelity_raw
                  << ")\n";
    }
    io::write_json(c.out_dir + "/bell.json", j);
    return 0;
}

int cmd_sweep(const ScenarioConfig& c, const CommonMeta& meta) {
    io::ensure_dir(c.out_dir);
    const auto cat = forster::build_catalog(c.catalog);
    const auto profile = profile_from_config(c);
    const auto opts = ode_opts(c);
    const double corr = resolve_t2_correction(c, cat, profile, opts);

    json j;
    j["meta"] = meta_json(meta);
    j["t2_correction_ns"] = corr * 1e3;

    if (c.sweep_param == "R") {
        std::vector<double> rs = c.r_list;
        if (rs.empty()) rs = {24.85, 25.0, 25.15};
        const auto rows = gates::distance_sweep(cat, rs, profile, corr,
                                                c.decay, true, opts);
        io::CsvWriter csv(c.out_dir + "/sweep_r.csv",
                          {"r_um", "overlap", "bell_phi_plus"});
        stamp(csv, meta);
        double lo = 1.0, hi = 0.0;
        for (const auto& row : rows) {
            csv.row({row.r_um, row.overlap, row.bell_phi_plus});
            lo = std::min(lo, row.overlap);
            hi = std::max(hi, row.overlap);
        }
        csv.write();
        j["param"] = "R";
        j["max_fidelity_variation"] = hi - lo;
        for (const auto& row : rows)
            j["rows"].push_back({{"r_um", row.r_um},
                                 {"overlap", row.overlap},
                                 {"bell_phi_plus", row.bell_phi_plus}});
    } else if (c.sweep_param == "t2") {
        const double delta_us = c.delta_ps * 1e-6;
        io::CsvWriter csv(c.out_dir + "/sweep_t2.csv",
                          {"t2_offset_ps", "bell_phi_plus", "overlap"});
        stamp(csv, meta);
        for (const double off : {0.0, delta_us}) {
            const auto cnot = gates::cnot_sequence(c.r_um, profile, corr + off);
            const auto tt = gates::cnot_truth_table(cat, cnot, c.decay, opts);
            const auto bell = gates::bell_state_run(gates::BellState::PhiPlus,
                                                    cat, cnot, c.decay, opts);
            csv.row({off * 1e6, bell.fidelity_raw, tt.overlap});
            j["rows"].push_back({{"t2_offset_ps", off * 1e6},
                                 {"bell_phi_plus", bell.fidelity_raw},
                                 {"overlap", tt.overlap}});
        }
        csv.write();
        j["param"] = "t2";
    } else {
        throw ConfigError("sweep_param must be R or t2");
    }
    io::write_json(c.out_dir + "/sweep.json", j);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_stark_map(const ScenarioConfig& c, const CommonMeta& meta) {
    io::ensure_dir(c.out_dir);
    const auto cat = forster::build_catalog(c.catalog);
    io::CsvWriter csv(c.out_dir + "/stark_map.csv", [&] {
        std::vector<std::string> cols = {"e_mv_cm"};
        for (std::size_t k = 0; k < cat.channels.size(); ++k)
            cols.push_back("delta_ch" + std::to_string(k + 1) + "_mhz");
        return cols;
    }());
    stamp(csv, meta);
    for (int i = 0; i <= 500; ++i) {
        const double e = 50.0 * i / 500.0; // mV/cm
        std::vector<double> row = {e};
        for (const auto& ch : cat.channels)
            row.push_back(ang_to_mhz(
                stark::pair_detuning(ch, cat.polarizabilities, e * 1e-3)));
        csv.row(row);
    }
    csv.write();

    json j;
    j["meta"] = meta_json(meta);
    for (const auto& ch : cat.channels) {
        json entry;
        entry["index"] = ch.index;
        entry["delta0_mhz"] = ch.delta0_mhz;
        try {
            entry["resonance_mv_cm"] =
                stark::resonance_field(ch, cat.polarizabilities) * 1e3;
        } catch (const NoResonance&) {
            entry["resonance_mv_cm"] = nullptr;
        }
        j["channels"].push_back(entry);
    }
    io::write_json(c.out_dir + "/stark_map.json", j);
    std::cout << j.dump(2) << "\n";
    return 0;
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{std::string(kVersion) +
                 " -- Stark-tuned Forster-resonance gate simulations"};
    app.require_subcommand(1);
    app.fallthrough(true);

    std::string config_path;
    ScenarioConfig cfg;
    std::optional<double> opt_distance;
    bool flag_sign_flip = false, flag_no_corr = false, flag_no_decay = false;
    std::optional<std::string> opt_out;

    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", opt_out, "output directory");
    app.add_option("--distance", opt_distance, "interatomic distance R in um");
    app.add_flag("--sign-flip", flag_sign_flip,
                 "flip the sign of the second pulse (two-level)");
    app.add_flag("--no-correction", flag_no_corr,
                 "disable the t2 calibration and laser phase corrections");
    app.add_flag("--no-decay", flag_no_decay, "disable Rydberg decay");

    auto* sub_two = app.add_subcommand("two-level", "double-passage demos");
    auto* sub_forster =
        app.add_subcommand("forster", "multi-channel passage at fixed R");
    auto* sub_gate = app.add_subcommand("gate", "CNOT truth table");
    auto* sub_bell = app.add_subcommand("bell", "Bell state preparation");
    auto* sub_sweep = app.add_subcommand("sweep", "parameter sweeps");
    auto* sub_stark = app.add_subcommand("stark-map", "channel detunings vs E");

    std::string bell_state_flag, sweep_param_flag, shape_flag;
    std::optional<double> delta_flag;
    sub_bell->add_option("--state", bell_state_flag,
                         "phi_plus | phi_minus | psi_plus | psi_minus | all");
    sub_sweep->add_option("--param", sweep_param_flag, "R | t2");
    sub_sweep->add_option("--delta", delta_flag, "t2 sweep offset in ps");
    sub_two->add_option("--shape", shape_flag, "gaussian | rectangular | both");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string config_text;
        if (!config_path.empty()) {
            config_text = io::read_file(config_path); // throws ConfigError
            apply_json(cfg, io::parse_config(config_text, kAllowedKeys));
        }
        if (opt_distance) cfg.r_um = *opt_distance;
        if (flag_sign_flip) cfg.sign_flip = true;
        if (flag_no_corr) cfg.correction = false;
        if (flag_no_decay) cfg.decay = false;
        if (opt_out) cfg.out_dir = *opt_out;
        if (!bell_state_flag.empty()) cfg.bell_state = bell_state_flag;
        if (!sweep_param_flag.empty()) cfg.sweep_param = sweep_param_flag;
        if (delta_flag) cfg.delta_ps = *delta_flag;
        if (!shape_flag.empty()) cfg.shape = shape_flag;

        CommonMeta meta;
        meta.config_hash = io::hex64(io::fnv1a64(cfg.to_json().dump()));
        if (sub_forster->parsed() || sub_gate->parsed() ||
            sub_bell->parsed() || sub_sweep->parsed() || sub_stark->parsed())
            meta.catalog_hash =
                io::hex64(io::fnv1a64(io::read_file(cfg.catalog)));

        if (sub_two->parsed()) return cmd_two_level(cfg, meta);
        if (sub_forster->parsed()) return cmd_forster(cfg, meta);
        if (sub_gate->parsed()) return cmd_gate(cfg, meta);
        if (sub_bell->parsed()) return cmd_bell(cfg, meta);
        if (sub_sweep->parsed()) return cmd_sweep(cfg, meta);
        if (sub_stark->parsed()) return cmd_stark_map(cfg, meta);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const CatalogMismatch& e) {
        std::cerr << "catalog error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("rydsim");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

} // namespace rydsim::cli
