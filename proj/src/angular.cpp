#include "rydsim/angular.hpp"

#include <array>
#include <cmath>

namespace rydsim::angular {

namespace {

// Factorials as long doubles built by integer recurrence. Arguments stay
// below 44 for j <= 10 (largest is j1+j2+j3+1 in the triangle factor and
// ~4j+1 in the 6j sum), so 64 gives headroom while every entry up to 25!
// is exactly representable in the 64-bit significand.
constexpr int kMaxFact = 64;

const std::array<long double, kMaxFact + 1>& factorials() {
    static const auto table = [] {
        std::array<long double, kMaxFact + 1> f{};
        f[0] = 1.0L;
        for (int i = 1; i <= kMaxFact; ++i) f[i] = f[i - 1] * i;
        return f;
    }();
    return table;
}

long double fact2(int twice) {
    // factorial of an integer given as a doubled value; caller guarantees
    // evenness.
    const int v = twice / 2;
    if (v < 0) throw std::domain_error("negative factorial argument");
    if (v > kMaxFact)
        throw std::domain_error(
            "angular momentum exceeds the factorial table bound (j <= 10)");
    return factorials()[v];
}

bool triangle_ok(int two_a, int two_b, int two_c) {
    return two_c >= std::abs(two_a - two_b) && two_c <= two_a + two_b &&
           ((two_a + two_b + two_c) & 1) == 0;
}

// sqrt of the triangle coefficient Delta(abc)
long double sqrt_triangle(int two_a, int two_b, int two_c) {
    const long double num = fact2(two_a + two_b - two_c) *
                            fact2(two_a - two_b + two_c) *
                            fact2(-two_a + two_b + two_c);
    const long double den = fact2(two_a + two_b + two_c + 2);
    return sqrtl(num / den);
}

} // namespace

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_J, int two_M) {
    if (two_j1 < 0 || two_j2 < 0 || two_J < 0) return 0.0;
    if (((two_j1 ^ two_m1) & 1) || ((two_j2 ^ two_m2) & 1) ||
        ((two_J ^ two_M) & 1))
        return 0.0;
    if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 ||
        std::abs(two_M) > two_J)
        return 0.0;
    if (two_M != two_m1 + two_m2) return 0.0;
    if (!triangle_ok(two_j1, two_j2, two_J)) return 0.0;

    // Racah sum over k (k stored doubled; runs over integers).
    const int k_min =
        std::max({0, -(two_J - two_j2 + two_m1), -(two_J - two_j1 - two_m2)});
    const int k_max = std::min({two_j1 + two_j2 - two_J, two_j1 - two_m1,
                                two_j2 + two_m2});
    if (k_min > k_max) return 0.0;

    long double sum = 0.0L;
    for (int k = k_min; k <= k_max; k += 2) {
        const long double den =
            fact2(k) * fact2(two_j1 + two_j2 - two_J - k) *
            fact2(two_j1 - two_m1 - k) * fact2(two_j2 + two_m2 - k) *
            fact2(two_J - two_j2 + two_m1 + k) *
            fact2(two_J - two_j1 - two_m2 + k);
        const long double term = 1.0L / den;
        sum += ((k / 2) % 2 == 0) ? term : -term;
    }

    const long double pref =
        sqrtl(static_cast<long double>(two_J + 1)) *
        sqrt_triangle(two_j1, two_j2, two_J) *
        sqrtl(fact2(two_j1 + two_m1) * fact2(two_j1 - two_m1) *
              fact2(two_j2 + two_m2) * fact2(two_j2 - two_m2) *
              fact2(two_J + two_M) * fact2(two_J - two_M));

    return static_cast<double>(pref * sum);
}

double wigner_6j(int two_j1, int two_j2, int two_j3, int two_j4, int two_j5,
                 int two_j6) {
    if (!triangle_ok(two_j1, two_j2, two_j3) ||
        !triangle_ok(two_j1, two_j5, two_j6) ||
        !triangle_ok(two_j4, two_j2, two_j6) ||
        !triangle_ok(two_j4, two_j5, two_j3))
        return 0.0;

    const int f1 = two_j1 + two_j2 + two_j3;
    const int f2 = two_j1 + two_j5 + two_j6;
    const int f3 = two_j4 + two_j2 + two_j6;
    const int f4 = two_j4 + two_j5 + two_j3;
    const int g1 = two_j1 + two_j2 + two_j4 + two_j5;
    const int g2 = two_j2 + two_j3 + two_j5 + two_j6;
    const int g3 = two_j3 + two_j1 + two_j6 + two_j4;

    const int t_min = std::max({f1, f2, f3, f4});
    const int t_max = std::min({g1, g2, g3});
    if (t_min > t_max) return 0.0;

    long double sum = 0.0L;
    for (int t = t_min; t <= t_max; t += 2) {
        const long double num = fact2(t + 2);
        const long double den = fact2(t - f1) * fact2(t - f2) * fact2(t - f3) *
                                fact2(t - f4) * fact2(g1 - t) * fact2(g2 - t) *
                                fact2(g3 - t);
        const long double term = num / den;
        sum += ((t / 2) % 2 == 0) ? term : -term;
    }

    const long double pref = sqrt_triangle(two_j1, two_j2, two_j3) *
                             sqrt_triangle(two_j1, two_j5, two_j6) *
                             sqrt_triangle(two_j4, two_j2, two_j6) *
                             sqrt_triangle(two_j4, two_j5, two_j3);

    return static_cast<double>(pref * sum);
}

double angular_factor(const RydbergLevel& a, int two_ma, const RydbergLevel& b,
                      int two_mb, const RydbergLevel& to_a, int two_ma_f,
                      const RydbergLevel& to_b, int two_mb_f) {
    if (std::abs(to_a.l - a.l) != 1 || std::abs(to_b.l - b.l) != 1)
        throw DipoleForbidden("angular_factor: l selection rule violated");
    if (two_ma + two_mb != two_ma_f + two_mb_f) return 0.0;

    double sum = 0.0;
    for (int q = -1; q <= 1; ++q) {
        const double c20 = clebsch_gordan(2, 2 * q, 2, -2 * q, 4, 0);
        const double ca = clebsch_gordan(a.two_j, two_ma, 2, 2 * q, to_a.two_j,
                                         two_ma_f);
        const double cb = clebsch_gordan(b.two_j, two_mb, 2, -2 * q,
                                         to_b.two_j, two_mb_f);
        sum += c20 * ca * cb;
    }
    return -std::sqrt(6.0) * sum;
}

double reduced_matrix_element(const RydbergLevel& from, const RydbergLevel& to,
                              double radial) {
    if (std::abs(to.l - from.l) != 1)
        throw DipoleForbidden("reduced_matrix_element: l selection rule");
    // (l'+l) is odd for dipole-allowed transitions, so (l'+l)/2 + j is an
    // integer; doubled: (l'+l) + two_j is even.
    const int e = (to.l + from.l) + from.two_j;
    const int sign = (e / 2) % 2 == 0 ? 1 : -1;
    const double six = wigner_6j(2 * from.l, 1, from.two_j, to.two_j, 2,
                                 2 * to.l);
    return sign * std::sqrt(static_cast<double>(std::max(to.l, from.l))) *
           std::sqrt(static_cast<double>(to.two_j + 1)) *
           std::sqrt(static_cast<double>(from.two_j + 1)) * six * radial;
}

} // namespace rydsim::angular
