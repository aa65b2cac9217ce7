#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rydsim {

using cplx = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double pi = std::numbers::pi;

// Internal unit convention: angular frequencies in rad/us, times in us,
// electric fields in V/cm. All tabulated MHz values are multiplied by 2*pi
// on ingestion; this is the only unit boundary in the code base.
inline constexpr double mhz_to_ang(double f_mhz) { return two_pi * f_mhz; }
inline constexpr double ang_to_mhz(double w) { return w / two_pi; }

// Wraps x into (-pi, pi].
inline double wrap_phase(double x) {
    double r = std::remainder(x, two_pi);
    if (r <= -pi) r += two_pi;
    return r;
}

// Distance of phase a from phase b modulo 2*pi.
inline double phase_distance(double a, double b) {
    return std::abs(wrap_phase(a - b));
}

struct DipoleForbidden : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingPolarizability : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoResonance : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CatalogMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidProfile : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StepSizeUnderflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rydsim
