#include <doctest.h>

#include <cmath>

#include "rydsim/forster.hpp"
#include "rydsim/stark.hpp"

using namespace rydsim;
using namespace rydsim::stark;

namespace {
const std::string kCatalogPath = std::string(RYDSIM_DATA_DIR) + "/channels_cs.json";

const forster::Catalog& catalog() {
    static const auto cat = forster::build_catalog(kCatalogPath);
    return cat;
}
} // namespace

TEST_CASE("stark shift values") {
    CHECK(stark_shift(3505.0, 0.0) == 0.0);
    // 90S at the resonance field: -(1/2)(3505)(0.02975^2) = -1.5511 MHz
    const double shift = stark_shift(3505.0, 0.02975);
    CHECK(ang_to_mhz(shift) == doctest::Approx(-1.551072).epsilon(1e-4));
    // quadratic law: doubling E quadruples the shift
    CHECK(stark_shift(3505.0, 0.02) ==
          doctest::Approx(0.25 * stark_shift(3505.0, 0.04)).epsilon(1e-14));
}

TEST_CASE("pair detunings at zero field reproduce the tabulated defects") {
    const auto& cat = catalog();
    REQUIRE(cat.channels.size() == 8);
    const double expected[8] = {75.610,  356.525, 356.525, 408.152,
                                408.152, 689.067, 689.067, 689.067};
    for (std::size_t k = 0; k < 8; ++k) {
        const double d0 =
            ang_to_mhz(pair_detuning(cat.channels[k], cat.polarizabilities, 0.0));
        CHECK(d0 == doctest::Approx(expected[k]).epsilon(1e-12));
    }
    // all zero-field defects at or above the smallest tabulated one
    for (const auto& ch : cat.channels)
        CHECK(std::abs(ang_to_mhz(
                  pair_detuning(ch, cat.polarizabilities, 0.0))) >= 75.0);
}

TEST_CASE("channel 1 resonance at 29.75 mV/cm") {
    const auto& cat = catalog();
    const auto& ch1 = cat.channels.front();
    const double e_res = resonance_field(ch1, cat.polarizabilities);
    CHECK(e_res * 1e3 == doctest::Approx(29.75).epsilon(0.01 / 29.75));
    // at resonance the detuning vanishes to well below 0.1%
    const double d = pair_detuning(ch1, cat.polarizabilities, e_res);
    CHECK(std::abs(d) < 1e-3 * std::abs(mhz_to_ang(ch1.delta0_mhz)));
}

TEST_CASE("resonance_field edge cases") {
    const auto& cat = catalog();
    ChannelSpec ch = cat.channels.front();
    ch.delta0_mhz = 0.0;
    CHECK(resonance_field(ch, cat.polarizabilities) == 0.0);
    // defect and pair polarizability of opposite signs: no crossing
    ch.delta0_mhz = -75.0;
    CHECK_THROWS_AS(resonance_field(ch, cat.polarizabilities), NoResonance);
}

TEST_CASE("pair_detuning decreases monotonically in E for positive pair alpha") {
    const auto& cat = catalog();
    const auto& ch1 = cat.channels.front();
    REQUIRE(pair_alpha(ch1, cat.polarizabilities) > 0);
    double prev = pair_detuning(ch1, cat.polarizabilities, 0.0);
    for (int i = 1; i <= 40; ++i) {
        const double e = 0.05 * i / 40.0;
        const double cur = pair_detuning(ch1, cat.polarizabilities, e);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("missing polarizability is reported") {
    const auto& cat = catalog();
    ChannelSpec ch = cat.channels.front();
    ch.to_a.n = 91; // not tabulated
    CHECK_THROWS_AS(pair_detuning(ch, cat.polarizabilities, 0.01),
                    MissingPolarizability);
}

namespace {
DetuningProfile reference_profile() {
    DetuningProfile p;
    p.s1 = mhz_to_ang(-10.0);
    p.s2 = mhz_to_ang(-2600.0);
    p.crossing_times = {0.45, 1.35};
    p.half_width = 0.45;
    return p;
}
} // namespace

TEST_CASE("profile detuning values") {
    const auto p = reference_profile();
    // zero at each crossing
    CHECK(p.detuning(0.45) == doctest::Approx(0.0));
    CHECK(p.detuning(1.35) == doctest::Approx(0.0));
    // quintic evaluation 0.1 us past the first crossing
    const double want = mhz_to_ang(-10.0 * 0.1 - 2600.0 * std::pow(0.1, 5));
    CHECK(p.detuning(0.55) == doctest::Approx(want).epsilon(1e-12));
    CHECK(ang_to_mhz(p.detuning(0.55)) == doctest::Approx(-1.026).epsilon(1e-12));
    // odd within each window: delta(tk + tau) = -delta(tk - tau)
    for (double tau : {0.05, 0.17, 0.31, 0.44}) {
        CHECK(p.detuning(0.45 + tau) ==
              doctest::Approx(-p.detuning(0.45 - tau)).epsilon(1e-12));
        CHECK(p.detuning(1.35 + tau) ==
              doctest::Approx(-p.detuning(1.35 - tau)).epsilon(1e-12));
    }
}

TEST_CASE("profile is continuous across every segment boundary") {
    for (double corr_ns : {0.0, 0.6, 100.0, 246.5}) {
        auto p = reference_profile();
        p.crossing_times[1] += corr_ns * 1e-3;
        const double max_slope =
            std::abs(p.s1) + 5.0 * std::abs(p.s2) * std::pow(p.half_width, 4);
        // boundary jump in the limit: one-sided values an eps apart may
        // differ by at most slope*2*eps, far below 1e-9 of 2*pi*1 MHz
        const double eps = 1e-13;
        for (double b : p.breakpoints()) {
            const double jump =
                std::abs(p.detuning(b + eps) - p.detuning(b - eps));
            CHECK(jump <= max_slope * 2.0 * eps + 1e-12);
            CHECK(jump < 1e-9 * mhz_to_ang(1.0));
        }
        // dense scan: increments bounded by slope * step everywhere
        double worst = 0.0;
        double prev = p.detuning(p.t_start() - 0.05);
        for (double t = p.t_start() - 0.05; t <= p.t_end() + 0.05; t += 1e-4) {
            const double cur = p.detuning(t);
            worst = std::max(worst, std::abs(cur - prev));
            prev = cur;
        }
        CHECK(worst <= max_slope * 1e-4 * 1.01);
    }
}

TEST_CASE("profile validation") {
    DetuningProfile p = reference_profile();
    p.crossing_times = {0.45};
    CHECK_THROWS_AS(p.validate(), InvalidProfile);
    p.crossing_times = {1.35, 0.45};
    CHECK_THROWS_AS(p.validate(), InvalidProfile);
    p = reference_profile();
    p.half_width = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidProfile);
}

TEST_CASE("field inversion round trip") {
    const auto& cat = catalog();
    const auto& ch1 = cat.channels.front();
    const auto p = reference_profile();
    const auto wf = field_from_profile(p, ch1, cat.polarizabilities);

    // boundary values: resonance field at the crossings
    CHECK(wf.at(0.45) * 1e3 == doctest::Approx(29.75).epsilon(1e-3));
    CHECK(wf.at(1.35) * 1e3 == doctest::Approx(29.75).epsilon(1e-3));

    // round trip at 1 ns sampling: pair_detuning(ch, E(t)) reproduces the
    // requested profile (both measured from the resonance crossing)
    double worst = 0.0;
    for (double t = wf.t_start; t <= wf.t_end; t += 1e-3) {
        const double d_target = p.detuning(t);
        const double d_back = pair_detuning(ch1, cat.polarizabilities, wf.at(t));
        worst = std::max(worst, std::abs(d_back - d_target));
    }
    CHECK(worst / mhz_to_ang(1.0) < 1e-6);
}

TEST_CASE("field inversion edge cases") {
    const auto& cat = catalog();
    const auto& ch1 = cat.channels.front();
    auto p = reference_profile();
    const auto wf = field_from_profile(p, ch1, cat.polarizabilities);
    // delta_target = Delta0 would need E = 0; the profile never asks for
    // more than the window edge (52.5 MHz < 75.6 MHz)
    const double edge = std::abs(ang_to_mhz(p.detuning(p.t_start())));
    CHECK(edge < ch1.delta0_mhz);
    CHECK(wf.at(p.t_start()) > 0.0);

    // an over-deep profile is rejected
    auto bad = p;
    bad.s1 = mhz_to_ang(-200.0); // edge value beyond the zero-field defect
    CHECK_THROWS_AS(field_from_profile(bad, ch1, cat.polarizabilities),
                    OutOfRange);
}
