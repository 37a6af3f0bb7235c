#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spinchev/halfint.hpp"
#include "spinchev/rational.hpp"

namespace spinchev {

// f_lambda^(j)(m) for all lambda = 0..2j (rows) and m ascending (columns)
struct ChebTable {
    HalfInt j;
    Eigen::MatrixXd values;

    static ChebTable build(HalfInt j);
    double operator()(int lambda, HalfInt m) const { return values(lambda, index_of(j, m)); }
    int size() const { return dim(j); }
    // max |sum_m f_l f_l' - delta|
    double orthonormality_residual() const;
    double parity_residual() const;
};

// production route: three-term recursion in lambda
double cheb_scalar_recursion(HalfInt j, int lambda, HalfInt m);
// (-1)^{j-m} C^{lambda 0}_{j m j -m}
double cheb_scalar_cg(HalfInt j, int lambda, HalfInt m);
// F(L,j) t_L(j+m, 2j+1), exact finite differences
double cheb_scalar_bateman(HalfInt j, int lambda, HalfInt m);
BigRational bateman_t(HalfInt j, int lambda, HalfInt m);

double cheb_sum_over_m(HalfInt j, int lambda);

// closed forms at the top of the lattice
double cheb_at_top(HalfInt j, int lambda);       // f_L(j)
double cheb_below_top(HalfInt j, int lambda);    // f_L(j-1)

// recursion coefficient G(a,b)
double cheb_G(double a, double b);
double cheb_a1(HalfInt j);

}  // namespace spinchev
