#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "rydsim/angular.hpp"
#include "rydsim/types.hpp"

namespace rydsim::stark {

using angular::RydbergLevel;

struct Polarizability {
    RydbergLevel level;
    int two_abs_mj = 1;                 // doubled |m_j|
    double alpha_mhz_per_v2cm2 = 0.0;   // quadratic coefficient, ordinary MHz/(V/cm)^2
};

class PolarizabilityTable {
  public:
    void add(const Polarizability& p);
    // ordinary MHz/(V/cm)^2; throws MissingPolarizability
    double alpha(const RydbergLevel& level, int two_abs_mj) const;
    bool has(const RydbergLevel& level, int two_abs_mj) const;
    std::size_t size() const { return entries_.size(); }

  private:
    std::map<std::tuple<int, int, int, int>, double> entries_;
};

// One Forster interaction channel (initial pair -> final pair with fixed
// projections), zero-field defect and C3 as tabulated (ordinary MHz).
struct ChannelSpec {
    int index = 0;
    RydbergLevel a, b;        // initial pair levels
    int two_ma = 1, two_mb = 1;
    RydbergLevel to_a, to_b;  // final pair levels
    int two_ma_f = 1, two_mb_f = 1;
    double delta0_mhz = 0.0;  // zero-field defect, ordinary MHz
    double c3_mhz_um3 = 0.0;  // ordinary MHz um^3
    double q = 0.0;           // angular factor
};

// Quadratic Stark shift -alpha E^2 / 2, returned in angular rad/us.
double stark_shift(double alpha_mhz_per_v2cm2, double e_field_v_cm);
double stark_shift(const PolarizabilityTable& table, const RydbergLevel& level,
                   int two_abs_mj, double e_field_v_cm);

// Channel detuning Delta_k(E) = final pair energy - initial pair energy,
// in angular rad/us. Throws MissingPolarizability.
double pair_detuning(const ChannelSpec& ch, const PolarizabilityTable& table,
                     double e_field_v_cm);

// Pair polarizability difference alpha_a' + alpha_b' - alpha_a - alpha_b
// (ordinary MHz/(V/cm)^2).
double pair_alpha(const ChannelSpec& ch, const PolarizabilityTable& table);

// Field at which pair_detuning crosses zero, by bisection to 1e-9 relative
// tolerance. Throws NoResonance when no root exists for E >= 0.
double resonance_field(const ChannelSpec& ch, const PolarizabilityTable& table);

// Piecewise detuning profile of the double passage: the quintic
// s1 (t - t1) + s2 (t - t1)^5 sweeps down through the first crossing, its
// mirror image -s1 (t - t2) - s2 (t - t2)^5 sweeps back up through the
// second, and the detuning holds at the window-edge value between and
// outside the crossing windows. Continuous everywhere. All rates angular
// (rad/us, rad/us^5), times in us.
struct DetuningProfile {
    double s1 = 0.0;
    double s2 = 0.0;
    std::vector<double> crossing_times; // {t1, t2}, strictly increasing
    double half_width = 0.45;           // window half-width w

    void validate() const; // throws InvalidProfile

    double t_start() const { return crossing_times.front() - half_width; }
    double t_end() const { return crossing_times.back() + half_width; }
    // detuning relative to the target channel's resonance, angular rad/us
    double detuning(double t) const;
    // profile piece boundaries (window edges and the midpoint seam)
    std::vector<double> breakpoints() const;
};

// Electric field waveform realizing a detuning profile for one channel:
// E(t) = sqrt(2 (Delta0 - delta(t)) / alpha_pair).
struct FieldWaveform {
    DetuningProfile profile;
    double delta0_ang = 0.0;  // angular
    double alpha_pair = 0.0;  // ordinary MHz/(V/cm)^2
    double t_start = 0.0, t_end = 0.0;

    double at(double t) const; // V/cm
    std::vector<double> breakpoints() const { return profile.breakpoints(); }
};

// Throws OutOfRange when the profile requests detunings above the
// zero-field defect (E^2 < 0) or the channel has no resonance.
FieldWaveform field_from_profile(const DetuningProfile& profile,
                                 const ChannelSpec& ch,
                                 const PolarizabilityTable& table);

} // namespace rydsim::stark
