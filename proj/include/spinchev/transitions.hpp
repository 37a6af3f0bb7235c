#pragma once

#include "spinchev/angular.hpp"
#include "spinchev/chebyshev.hpp"

namespace spinchev {

struct TransitionSpec {
    HalfInt j, m, mp;
    double cos_beta;
};

struct RfDrive {
    double omega1;     // rad/s
    double detuning;   // omega0 - omega, rad/s
    double t;          // s

    double omega_e() const;
    double cos_beta() const;
};

double meckler_probability(const TransitionSpec& s);
double meckler_probability(HalfInt j, HalfInt m, HalfInt mp, double cos_beta);
double meckler_via_projector_trace(HalfInt j, HalfInt m, HalfInt mp, const UnitVector& a,
                                   const UnitVector& b);

double spin_flip_extreme(HalfInt j, double beta);
double spin_flip_extreme_drive(HalfInt j, const RfDrive& d);
double spin_flip_next(HalfInt j, double beta);
// series coefficients f_L(j-1) f_L(-(j-1)) used by the next-to-extreme flip
double spin_flip_next_series(HalfInt j, double beta);

double landau_zener_probability(HalfInt S, HalfInt m, HalfInt mp, double p);

// [D_{m m'}(alpha, pi/2, gamma)]^2
cplx squared_D_halfpi(HalfInt j, HalfInt m, HalfInt mp, double alpha, double gamma);

double inverse_meckler(HalfInt j, int L, double beta);
double total_probability(HalfInt j, HalfInt m, double beta);
double squared_d_sum(HalfInt j, double beta);

// sum_k (-1)^k (2k+1) (n!)^2/((n-k)!(n+1+k)!) P_k(x)
double fourier_legendre_flip(int n, double x);

}  // namespace spinchev
