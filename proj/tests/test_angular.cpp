#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rydsim/angular.hpp"

using namespace rydsim;
using namespace rydsim::angular;

namespace {
const RydbergLevel S90{90, 0, 1};
const RydbergLevel S96{96, 0, 1};
const RydbergLevel P90_12{90, 1, 1};
const RydbergLevel P90_32{90, 1, 3};
const RydbergLevel P95_12{95, 1, 1};
const RydbergLevel P95_32{95, 1, 3};
} // namespace

TEST_CASE("clebsch_gordan fixed values") {
    // frozen from the J^2-diagonalization oracle / standard tables
    CHECK(clebsch_gordan(2, 0, 2, 0, 4, 0) ==
          doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
    CHECK(clebsch_gordan(2, 2, 2, 0, 4, 4) == 0.0); // M != m1+m2
    CHECK(clebsch_gordan(1, 1, 2, 0, 1, 1) ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    // stretched state
    CHECK(clebsch_gordan(1, 1, 2, 2, 3, 3) == doctest::Approx(1.0));
    // triangle violation
    CHECK(clebsch_gordan(2, 0, 2, 0, 8, 0) == 0.0);
    // parity violation (two_m with wrong parity relative to two_j)
    CHECK(clebsch_gordan(2, 1, 2, -1, 4, 0) == 0.0);
}

TEST_CASE("clebsch_gordan matches the diagonalization oracle for all j <= 3") {
    for (int tj1 = 0; tj1 <= 6; ++tj1) {
        for (int tj2 = 0; tj2 <= 6; ++tj2) {
            for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2) {
                for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                    for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
                        const int tM = tm1 + tm2;
                        if (std::abs(tM) > tJ) continue;
                        const double got =
                            clebsch_gordan(tj1, tm1, tj2, tm2, tJ, tM);
                        const double want =
                            oracles::cg(tj1, tm1, tj2, tm2, tJ, tM);
                        CHECK(got == doctest::Approx(want).epsilon(1e-10));
                    }
                }
            }
        }
    }
}

TEST_CASE("clebsch_gordan orthogonality over all j <= 3") {
    for (int tj1 = 1; tj1 <= 6; tj1 += 2) {
        for (int tj2 = 0; tj2 <= 6; tj2 += 2) {
            for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2) {
                for (int tJp = std::abs(tj1 - tj2); tJp <= tj1 + tj2;
                     tJp += 2) {
                    for (int tM = -tJ; tM <= tJ; tM += 2) {
                        if (std::abs(tM) > tJp) continue;
                        double sum = 0.0;
                        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                            const int tm2 = tM - tm1;
                            if (std::abs(tm2) > tj2) continue;
                            sum += clebsch_gordan(tj1, tm1, tj2, tm2, tJ, tM) *
                                   clebsch_gordan(tj1, tm1, tj2, tm2, tJp, tM);
                        }
                        const double want = (tJ == tJp) ? 1.0 : 0.0;
                        CHECK(sum == doctest::Approx(want).epsilon(1e-12));
                    }
                }
            }
        }
    }
}

TEST_CASE("wigner_6j fixed values") {
    // {0 1/2 1/2; 1/2 1 1}: magnitude 1/sqrt(6) (zero-argument reduction)
    CHECK(std::abs(wigner_6j(0, 1, 1, 1, 2, 2)) ==
          doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-14));
    // {1/2 1/2 1; 1/2 1/2 1} = 1/6
    CHECK(wigner_6j(1, 1, 2, 1, 1, 2) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    // triangle violation
    CHECK(wigner_6j(2, 2, 8, 2, 2, 2) == 0.0);
}

TEST_CASE("wigner_6j matches the recoupling oracle for all arguments <= 3") {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            for (int c = std::abs(a - b); c <= std::min(6, a + b); c += 2)
                for (int d = 0; d <= 6; ++d)
                    for (int e = std::abs(c - d); e <= std::min(6, c + d);
                         e += 2) {
                        for (int f = std::max(std::abs(a - e),
                                              std::abs(b - d));
                             f <= std::min({6, a + e, b + d}); f += 2) {
                            if (((a + e + f) & 1) || ((b + d + f) & 1))
                                continue;
                            const double got = wigner_6j(a, b, c, d, e, f);
                            const double want =
                                oracles::sixj(a, b, c, d, e, f);
                            CHECK(got == doctest::Approx(want).epsilon(1e-9));
                        }
                    }
}

TEST_CASE("angular factors of the eight catalogued channels") {
    struct Row {
        RydbergLevel to_a;
        int tmaf;
        RydbergLevel to_b;
        int tmbf;
        double q;
    };
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
    const Row rows[] = {
        {P90_12, 1, P95_12, 1, -2.0 / 3.0},
        {P90_12, 1, P95_32, 1, -2.0 * s2 / 3.0},
        {P90_12, -1, P95_32, 3, -s6 / 3.0},
        {P90_32, 1, P95_12, 1, -2.0 * s2 / 3.0},
        {P90_32, 3, P95_12, -1, -s6 / 3.0},
        {P90_32, 1, P95_32, 1, -4.0 / 3.0},
        {P90_32, -1, P95_32, 3, -1.0 / s3},
        {P90_32, 3, P95_32, -1, -1.0 / s3},
    };
    double sumsq = 0.0;
    for (const auto& r : rows) {
        const double q =
            angular_factor(S90, 1, S96, 1, r.to_a, r.tmaf, r.to_b, r.tmbf);
        CHECK(std::abs(q - r.q) < 1e-12);
        sumsq += q * q;
    }
    // completeness: sum_k Q_k^2 over all final states = 6 sum_q (C^{20})^2 = 6
    CHECK(sumsq == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("angular_factor selection rules and errors") {
    // m conservation
    CHECK(angular_factor(S90, 1, S96, 1, P90_12, -1, P95_12, 1) == 0.0);
    // m-violating combinations across the full final grid
    for (const auto* la : {&P90_12, &P90_32})
        for (const auto* lb : {&P95_12, &P95_32})
            for (int tmaf = -la->two_j; tmaf <= la->two_j; tmaf += 2)
                for (int tmbf = -lb->two_j; tmbf <= lb->two_j; tmbf += 2) {
                    if (tmaf + tmbf == 2) continue;
                    CHECK(angular_factor(S90, 1, S96, 1, *la, tmaf, *lb,
                                         tmbf) == 0.0);
                }
    CHECK_THROWS_AS(angular_factor(S90, 1, S96, 1, S90, 1, P95_12, 1),
                    DipoleForbidden);
}

TEST_CASE("angular_factor invariant under global projection flip") {
    for (const auto* la : {&P90_12, &P90_32})
        for (const auto* lb : {&P95_12, &P95_32})
            for (int tmaf = -la->two_j; tmaf <= la->two_j; tmaf += 2)
                for (int tmbf = -lb->two_j; tmbf <= lb->two_j; tmbf += 2)
                    for (int tma = -1; tma <= 1; tma += 2) {
                        const int tmb = tmaf + tmbf - tma;
                        if (std::abs(tmb) != 1) continue;
                        const double q1 = angular_factor(
                            S90, tma, S96, tmb, *la, tmaf, *lb, tmbf);
                        const double q2 =
                            angular_factor(S90, -tma, S96, -tmb, *la, -tmaf,
                                           *lb, -tmbf);
                        CHECK(std::abs(q1) ==
                              doctest::Approx(std::abs(q2)).epsilon(1e-12));
                    }
}

TEST_CASE("reduced matrix element structure") {
    CHECK(reduced_matrix_element(S90, P90_12, 0.0) == 0.0);
    // |<90P1/2||r||90S1/2>|/r = sqrt(1*2*2) |{0 1/2 1/2; 1/2 1 1}|
    const double want = std::sqrt(2.0) * std::sqrt(2.0) *
                        std::abs(oracles::sixj(0, 1, 1, 1, 2, 2));
    CHECK(std::abs(reduced_matrix_element(S90, P90_12, 1.0)) ==
          doctest::Approx(want).epsilon(1e-12));
    // linearity in the radial integral
    CHECK(reduced_matrix_element(S90, P90_12, 2.5) ==
          doctest::Approx(2.5 * reduced_matrix_element(S90, P90_12, 1.0)));
    CHECK_THROWS_AS(reduced_matrix_element(S90, S96, 1.0), DipoleForbidden);
}

TEST_CASE("reduced matrix element phase structure") {
    // sign = (-1)^{(l'+l)/2 + j}: S(j=1/2) -> P gives (-1)^1
    const double six = wigner_6j(0, 1, 1, 1, 2, 2);
    CHECK(reduced_matrix_element(S90, P90_12, 1.0) ==
          doctest::Approx(-2.0 * six).epsilon(1e-14));
    // D3/2 -> P1/2: (l'+l)/2 + j = 3/2 + 3/2 = 3 -> sign (-1)^3
    const RydbergLevel D88{88, 2, 3};
    const double six2 = wigner_6j(4, 1, 3, 1, 2, 2);
    CHECK(reduced_matrix_element(D88, P90_12, 1.0) ==
          doctest::Approx(-std::sqrt(2.0) * std::sqrt(2.0) * std::sqrt(4.0) *
                          six2)
              .epsilon(1e-14));
}
