#pragma once

#include <array>
#include <vector>

#include "spinchev/angular.hpp"
#include "spinchev/chebyshev.hpp"

namespace spinchev {

struct SpinOperator {
    HalfInt j;
    MatC mat;

    int size() const { return static_cast<int>(mat.rows()); }
    SpinOperator adjoint() const { return {j, mat.adjoint()}; }
    bool is_hermitian(double tol) const;
    cplx trace() const { return mat.trace(); }
};

// max-norm of a complex matrix
double max_abs(const MatC& m);

struct SpinMatrices {
    MatC Jx, Jy, Jz, Jplus, Jminus;
};
SpinMatrices spin_matrices(HalfInt j);
MatC n_dot_J(HalfInt j, const UnitVector& n);
// spherical components tau_{1,q}, q = -1, 0, 1 at array index q+1
std::array<MatC, 3> spherical_J(HalfInt j);

// <j m'| T_lm |j m> = sqrt((2l+1)/(2j+1)) C^{j m'}_{j m l mu}
SpinOperator polarization_T(HalfInt j, int lambda, int mu);

SpinOperator cheb_op_jz(HalfInt j, int lambda);
// sum_mu C*_{lambda mu}(n) T_{lambda mu}
SpinOperator cheb_op_n(HalfInt j, int lambda, const UnitVector& n);
// U f(Jz) U^dagger with U = exp(-i theta n_perp.J), n_perp = (-sin phi, cos phi, 0)
SpinOperator cheb_op_n_similarity(HalfInt j, int lambda, const UnitVector& n);
// scalar recursion with m -> n.J
SpinOperator cheb_op_n_recursion(HalfInt j, int lambda, const UnitVector& n);
// all lambda = 0..2j, by similarity from the scalar table
std::vector<MatC> cheb_ops_all(HalfInt j, const UnitVector& n);

double cheb_op_trace_pair(HalfInt j, int lambda, int lambda_p, const UnitVector& a,
                          const UnitVector& b);

SpinOperator projector(HalfInt j, HalfInt m, const UnitVector& n);
// Sylvester product prod_{r != m} (n.J - r I)/(m - r); limited to 2j <= 12
SpinOperator projector_canonical(HalfInt j, HalfInt m, const UnitVector& n);
SpinOperator coherent_projector(HalfInt j, const UnitVector& n);
// |n,j> = exp(-i phi Jz) exp(-i theta Jy) |j j>
Eigen::VectorXcd coherent_state(HalfInt j, const UnitVector& n);

// exp(-i t H) for Hermitian H
MatC expm_hermitian(const MatC& H, double t);
// exp(-i psi n.J)
SpinOperator rotation_exact(HalfInt j, const RotationParams& r);
// exp(+i psi n.J) summed as sum_l i^l sqrt((2l+1)/(2j+1)) chi_l(psi) f_l(n.J)
SpinOperator rotation_corio(HalfInt j, double psi, const UnitVector& n);

// Zemach recursion for Legendre operators in n.J
SpinOperator legendre_op_zemach(HalfInt j, int lambda, const UnitVector& n);
// [J^2]^l = prod_{k=1..l} (kappa - (k^2-1)/4)
double zemach_norm(HalfInt j, int lambda);
// prod_{k=0..l-1} (kappa - (k/2)(k/2+1))
double schwinger_norm(HalfInt j, int lambda);
SpinOperator legendre_op_schwinger(HalfInt j, int lambda);

// polynomial in Jz with real coefficients, coeffs[k] multiplies x^k
struct Poly {
    std::vector<double> c;
    double operator()(double x) const;
    Poly derivative() const;
};
// sum_{n>=1} p^(n)(x)/n!  ==  p(x+1) - p(x)
Poly marinelli_shift(const Poly& p);

struct EquivalentReport {
    int lambda = 0, k = 0;
    double ratio_mean = 0.0;
    double ratio_spread = 0.0;   // max |ratio - mean| over nonzero entries
    double offpattern = 0.0;     // largest entry of T outside the J_+^k band
    int entries = 0;
};
// known polynomials for (0,0), (2,0), (2,1), (4,0), (4,1), (6,0); (4,1) also via the derivative sum
EquivalentReport operator_equivalent_check(HalfInt j, int lambda, int k, bool marinelli = false);

}  // namespace spinchev
