#pragma once

#include <cstdint>
#include <vector>

#include "spinchev/operators.hpp"

namespace spinchev {

struct GridNode {
    UnitVector n;
    double weight;
};

struct SphericalGrid {
    std::vector<GridNode> nodes;
    int exactness_degree = 0;
    int n_theta = 0, n_phi = 0;

    double weight_sum() const;
};

// Gauss-Legendre in cos(theta) x uniform phi; refine multiplies both counts
SphericalGrid build_grid(HalfInt j, int refine = 1);
SphericalGrid build_grid_degree(int degree);

// n-point Gauss-Legendre rule on [-1,1]
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

// Neumaier-compensated accumulation of complex matrices
class MatAccumulator {
public:
    explicit MatAccumulator(int n);
    void add(const MatC& term);
    MatC result() const { return sum_ + comp_; }

private:
    MatC sum_, comp_;
};

using DensityMatrix = SpinOperator;

bool is_density(const DensityMatrix& rho, double tol);
// A A^dagger / Tr, A complex Gaussian from mt19937_64(seed)
DensityMatrix random_density(HalfInt j, std::uint64_t seed);
DensityMatrix pure_density(const Eigen::VectorXcd& psi, HalfInt j);

SpinOperator sw_kernel(HalfInt j, const UnitVector& n);
// ((2j+1)/4pi) Tr[Delta(n) Delta(n')] and the closed sum
double sw_trace_kernel(HalfInt j, const UnitVector& n, const UnitVector& np);
double reproducing_kernel(HalfInt j, const UnitVector& n, const UnitVector& np);
// max-norm of Delta(n) - int K(n,n') Delta(n') dn'
double sw_traciality_residual(HalfInt j, const UnitVector& n, const SphericalGrid& g);

SpinOperator dequantizer(HalfInt j, HalfInt m, const UnitVector& n);
SpinOperator quantizer(HalfInt j, HalfInt m, const UnitVector& n);
double delta_w_kernel(HalfInt j, HalfInt m, const UnitVector& n, HalfInt mp, const UnitVector& np);

struct Tomogram {
    HalfInt j;
    Eigen::MatrixXd w;   // [m index][node index]
};

// operators f_lambda(n.J) precomputed for every node
struct GridOperators {
    HalfInt j;
    std::vector<std::vector<MatC>> f;   // [node][lambda]
    static GridOperators build(HalfInt j, const SphericalGrid& g);
};

Tomogram tomogram_of(const DensityMatrix& rho, const SphericalGrid& g);
Tomogram tomogram_of(const DensityMatrix& rho, const SphericalGrid& g, const GridOperators& ops);
DensityMatrix reconstruct_density(const Tomogram& w, const SphericalGrid& g);
DensityMatrix reconstruct_density(const Tomogram& w, const SphericalGrid& g, const GridOperators& ops);

double husimi_Q(const DensityMatrix& rho, const UnitVector& n);
double wigner_W(const DensityMatrix& rho, const UnitVector& n);

struct Reconstruction {
    DensityMatrix rho;
    double condition = 1.0;   // max_l 1/|f_l(j)| for the Q route
};
Reconstruction reconstruct_from_Q(HalfInt j, const std::vector<double>& q, const SphericalGrid& g,
                                  const GridOperators& ops);
DensityMatrix reconstruct_from_W(HalfInt j, const std::vector<double>& w, const SphericalGrid& g,
                                 const GridOperators& ops);
// sum_l ((2l+1)/4pi) int f_l(n.J) Tr[rho f_l(n.J)] dn
DensityMatrix reconstruct_single_sum(const DensityMatrix& rho, const SphericalGrid& g,
                                     const GridOperators& ops);
// ((2j+1)/4pi^2) int dpsi sin^2(psi/2) int Tr[rho e^{i psi n.J}] e^{-i psi n.J} dn
DensityMatrix reconstruct_group(const DensityMatrix& rho, const SphericalGrid& g, int n_psi);

double coherent_closure_check(HalfInt j, const SphericalGrid& g);
SpinOperator T_from_integral(HalfInt j, int lambda, int mu, const SphericalGrid& g);
SpinOperator T_from_coherent_integral(HalfInt j, int lambda, int mu, const SphericalGrid& g);
// Tr[T_lm f_l(n.J)]
cplx racah_from_trace(HalfInt j, int lambda, int mu, const UnitVector& n);

double frobenius(const MatC& a, const MatC& b);

}  // namespace spinchev
