#pragma once

#include "rydsim/types.hpp"

// Exact angular-momentum algebra on doubled integers (two_j = 2j,
// two_m = 2m), so half-integer spins and all selection rules stay exact.

namespace rydsim::angular {

struct AngularMomentum {
    int two_j = 0;
    int two_m = 0;
    bool valid() const {
        return two_j >= 0 && std::abs(two_m) <= two_j &&
               ((two_j ^ two_m) & 1) == 0;
    }
};

// Orbital l is 0=S, 1=P, 2=D; two_j is the doubled fine-structure j.
struct RydbergLevel {
    int n = 0;
    int l = 0;
    int two_j = 1;
    bool valid() const {
        return n > l && two_j >= 1 &&
               (two_j == 2 * l + 1 || two_j == std::abs(2 * l - 1));
    }
    friend bool operator==(const RydbergLevel&, const RydbergLevel&) = default;
};

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> by the Racah closed-form
// sum. Invalid couplings (M != m1+m2, triangle or parity violations)
// return 0. Factorial table bound documented in angular.cpp (j <= 10);
// larger arguments throw.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_J, int two_M);

// Wigner 6j symbol {j1 j2 j3; j4 j5 j6} by the Racah formula; 0 when any
// triad violates the triangle rules.
double wigner_6j(int two_j1, int two_j2, int two_j3, int two_j4, int two_j5,
                 int two_j6);

// Angular factor Q_k = -sqrt(6) sum_q C^{20}_{1q1-q} C^{ja' ma'}_{ja ma 1 q}
// C^{jb' mb'}_{jb mb 1 -q} of the dipole-dipole channel. Returns 0 when
// ma+mb != ma'+mb'. Throws DipoleForbidden unless |l'-l| = 1 on both atoms.
double angular_factor(const RydbergLevel& a, int two_ma,
                      const RydbergLevel& b, int two_mb,
                      const RydbergLevel& to_a, int two_ma_f,
                      const RydbergLevel& to_b, int two_mb_f);

// Fine-structure reduced matrix element <to||r||from> given the radial
// integral: phase (-1)^{(l'+l)/2+j} * sqrt(max(l',l)(2j'+1)(2j+1)) *
// {l 1/2 j; j' 1 l'} * radial. Throws DipoleForbidden.
double reduced_matrix_element(const RydbergLevel& from, const RydbergLevel& to,
                              double radial);

} // namespace rydsim::angular
