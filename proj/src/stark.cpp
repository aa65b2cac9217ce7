#include "rydsim/stark.hpp"

#include <algorithm>
#include <cmath>

namespace rydsim::stark {

namespace {
std::tuple<int, int, int, int> key(const RydbergLevel& lv, int two_abs_mj) {
    return {lv.n, lv.l, lv.two_j, two_abs_mj};
}
} // namespace

void PolarizabilityTable::add(const Polarizability& p) {
    const auto [it, inserted] =
        entries_.emplace(key(p.level, p.two_abs_mj), p.alpha_mhz_per_v2cm2);
    (void)it;
    if (!inserted)
        throw CatalogMismatch("duplicate polarizability entry for n=" +
                              std::to_string(p.level.n));
}

double PolarizabilityTable::alpha(const RydbergLevel& level,
                                  int two_abs_mj) const {
    auto it = entries_.find(key(level, two_abs_mj));
    if (it == entries_.end())
        throw MissingPolarizability(
            "no polarizability for n=" + std::to_string(level.n) +
            " l=" + std::to_string(level.l) +
            " 2j=" + std::to_string(level.two_j) +
            " 2|mj|=" + std::to_string(two_abs_mj));
    return it->second;
}

bool PolarizabilityTable::has(const RydbergLevel& level, int two_abs_mj) const {
    return entries_.count(key(level, two_abs_mj)) != 0;
}

double stark_shift(double alpha_mhz_per_v2cm2, double e_field_v_cm) {
    return mhz_to_ang(-0.5 * alpha_mhz_per_v2cm2 * e_field_v_cm * e_field_v_cm);
}

double stark_shift(const PolarizabilityTable& table, const RydbergLevel& level,
                   int two_abs_mj, double e_field_v_cm) {
    return stark_shift(table.alpha(level, two_abs_mj), e_field_v_cm);
}

double pair_alpha(const ChannelSpec& ch, const PolarizabilityTable& table) {
    return table.alpha(ch.to_a, std::abs(ch.two_ma_f)) +
           table.alpha(ch.to_b, std::abs(ch.two_mb_f)) -
           table.alpha(ch.a, std::abs(ch.two_ma)) -
           table.alpha(ch.b, std::abs(ch.two_mb));
}

double pair_detuning(const ChannelSpec& ch, const PolarizabilityTable& table,
                     double e_field_v_cm) {
    const double shift_final =
        stark_shift(table, ch.to_a, std::abs(ch.two_ma_f), e_field_v_cm) +
        stark_shift(table, ch.to_b, std::abs(ch.two_mb_f), e_field_v_cm);
    const double shift_initial =
        stark_shift(table, ch.a, std::abs(ch.two_ma), e_field_v_cm) +
        stark_shift(table, ch.b, std::abs(ch.two_mb), e_field_v_cm);
    return mhz_to_ang(ch.delta0_mhz) + shift_final - shift_initial;
}

double resonance_field(const ChannelSpec& ch,
                       const PolarizabilityTable& table) {
    const double d0 = pair_detuning(ch, table, 0.0);
    if (d0 == 0.0) return 0.0;
    const double ap = pair_alpha(ch, table);
    // Delta(E) = Delta0 - (E^2/2) alpha_pair: a root needs Delta0 and
    // alpha_pair of the same sign.
    if (ap == 0.0 || (ch.delta0_mhz > 0) != (ap > 0))
        throw NoResonance("pair detuning never crosses zero for E >= 0");
    double lo = 0.0;
    double hi = std::sqrt(2.0 * std::abs(ch.delta0_mhz / ap)) * 2.0;
    double flo = d0;
    while (pair_detuning(ch, table, hi) * flo > 0.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = pair_detuning(ch, table, mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-9 * std::max(1e-12, hi)) break;
    }
    return 0.5 * (lo + hi);
}

void DetuningProfile::validate() const {
    if (crossing_times.size() != 2)
        throw InvalidProfile("profile needs exactly two crossing times");
    if (!(crossing_times[0] < crossing_times[1]))
        throw InvalidProfile("crossing times must be strictly increasing");
    if (!(half_width > 0))
        throw InvalidProfile("window half-width must be positive");
    if (!std::isfinite(s1) || !std::isfinite(s2))
        throw InvalidProfile("profile rates must be finite");
}

double DetuningProfile::detuning(double t) const {
    const double t1 = crossing_times[0];
    const double t2 = crossing_times[1];
    const double mid = 0.5 * (t1 + t2);
    if (t <= mid) {
        const double tau = std::clamp(t - t1, -half_width,
                                      std::min(half_width, mid - t1));
        return s1 * tau + s2 * tau * tau * tau * tau * tau;
    }
    const double tau =
        std::clamp(t - t2, std::max(-half_width, mid - t2), half_width);
    return -(s1 * tau + s2 * tau * tau * tau * tau * tau);
}

std::vector<double> DetuningProfile::breakpoints() const {
    const double t1 = crossing_times[0];
    const double t2 = crossing_times[1];
    const double mid = 0.5 * (t1 + t2);
    std::vector<double> pts = {t1 - half_width, std::min(t1 + half_width, mid),
                               mid, std::max(t2 - half_width, mid),
                               t2 + half_width};
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

double FieldWaveform::at(double t) const {
    const double delta = profile.detuning(t);
    const double e2 =
        2.0 * (ang_to_mhz(delta0_ang) - ang_to_mhz(delta)) / alpha_pair;
    return e2 > 0.0 ? std::sqrt(e2) : 0.0;
}

FieldWaveform field_from_profile(const DetuningProfile& profile,
                                 const ChannelSpec& ch,
                                 const PolarizabilityTable& table) {
    profile.validate();
    const double ap = pair_alpha(ch, table);
    if (ap == 0.0 || (ch.delta0_mhz > 0) != (ap > 0))
        throw NoResonance("channel has no Stark-tunable resonance");

    FieldWaveform wf;
    wf.profile = profile;
    wf.delta0_ang = mhz_to_ang(ch.delta0_mhz);
    wf.alpha_pair = ap;
    wf.t_start = profile.t_start();
    wf.t_end = profile.t_end();

    // Invertibility: the largest requested detuning is the window-edge
    // value; it must not exceed the zero-field defect.
    const double w = profile.half_width;
    const double edge = std::abs(profile.s1 * w + profile.s2 * std::pow(w, 5));
    if (edge > std::abs(wf.delta0_ang))
        throw OutOfRange(
            "profile requests detuning beyond the zero-field defect "
            "(E^2 < 0); reduce the window half-width or rates");
    return wf;
}

} // namespace rydsim::stark
