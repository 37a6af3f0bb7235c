#pragma once

#include <complex>
#include <variant>

#include <Eigen/Dense>

#include "spinchev/halfint.hpp"
#include "spinchev/rational.hpp"

namespace spinchev {

using cplx = std::complex<double>;
using MatC = Eigen::MatrixXcd;
using MatR = Eigen::MatrixXd;

// direction on the sphere, polar angles in radians
struct UnitVector {
    double theta = 0.0;
    double phi = 0.0;

    Eigen::Vector3d cartesian() const;
    static UnitVector from_cartesian(const Eigen::Vector3d& v);
};

double dot(const UnitVector& a, const UnitVector& b);

struct AngleAxis {
    double psi, Theta, Phi;
};
struct Euler {
    double alpha, beta, gamma;
};
using RotationParams = std::variant<AngleAxis, Euler>;

// half-angle form: alpha+gamma and alpha-gamma only enter through
// (m+m')(alpha+gamma)/2 and (m-m')(alpha-gamma)/2, so this is exact for SU(2)
Euler to_euler(const AngleAxis& r);
UnitVector axis_of(const AngleAxis& r);

// Clebsch-Gordan <a alpha b beta | c gamma>, exact Wigner sum.
// Returned as the exact signed square: value = sign(q) sqrt(|q|).
BigRational clebsch_gordan_squared_signed(HalfInt a, HalfInt alpha, HalfInt b, HalfInt beta,
                                          HalfInt c, HalfInt gamma);
double clebsch_gordan(HalfInt a, HalfInt alpha, HalfInt b, HalfInt beta, HalfInt c, HalfInt gamma);

// reduced rotation matrix d^(j)(beta), basis ordering m ascending
MatR wigner_d(HalfInt j, double beta);
// D^(j) for exp(-i psi n.J); Euler route exp(-i alpha Jz) exp(-i beta Jy) exp(-i gamma Jz)
MatC wigner_D(HalfInt j, const RotationParams& r);
MatC wigner_D_euler(HalfInt j, const Euler& e);
// closed angle-axis form with sin(xi/2) = sin(psi/2) sin(Theta)
MatC wigner_D_angle_axis(HalfInt j, const AngleAxis& r);

double legendre_P(int l, double x);
// sqrt((l-m)!/(l+m)!) P_l^m(x) with Condon-Shortley phase, m >= 0
double legendre_P_normalized(int l, int m, double x);
double gegenbauer_C(int n, int alpha, double x);

// double factorial, (-1)!! = 0!! = 1
double double_factorial(int n);

// Racah spherical harmonic sqrt(4pi/(2l+1)) Y_lm
cplx racah_C(int l, int m, const UnitVector& n);

// generalised character chi_lambda^(j)(psi)
double generalized_character(HalfInt j, int lambda, double psi);          // Gegenbauer route
double generalized_character_cheb(HalfInt j, int lambda, double psi);     // sum over f_lambda(m)
// ordinary SU(2) character sum_m exp(i m psi)
double character(HalfInt j, double psi);

}  // namespace spinchev
