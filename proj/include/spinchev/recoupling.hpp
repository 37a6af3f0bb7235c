#pragma once

#include <vector>

#include "spinchev/operators.hpp"

namespace spinchev {

// rank-K tensor with components Q = -K..K at index Q+K
struct CompositeTensor {
    int rank = 0;
    std::vector<MatC> comp;

    const MatC& operator[](int q) const { return comp[q + rank]; }
    MatC& operator[](int q) { return comp[q + rank]; }
};

CompositeTensor spin_vector(HalfInt j);
// classical vector n as (scalar multiple of identity) rank-1 components
CompositeTensor spatial_vector(const UnitVector& n, int size);
CompositeTensor spatial_racah(int lambda, const UnitVector& n, int size);
CompositeTensor polarization_tensor(HalfInt j, int lambda);

// {R (x) S}^K_Q = sum_{q+q'=Q} C^{KQ}_{k q k' q'} R_q S_q'
CompositeTensor compose(const CompositeTensor& R, const CompositeTensor& S, int K);
// A.B = sum_q (-1)^q A_q B_{-q}
MatC scalar_dot(const CompositeTensor& A, const CompositeTensor& B);

struct RecouplingReport {
    double max_diff = 0.0;
    double scale = 0.0;
};
// three forms of the second-rank recoupling
RecouplingReport verify_rank2_recoupling(HalfInt j, const UnitVector& n);
RecouplingReport verify_rank1(HalfInt j, const UnitVector& n);
// f_l(n.J) vs (-1)^l sqrt(2l+1) {T_l (x) C_l}^0_0
RecouplingReport verify_cheb_recoupling(HalfInt j, int lambda, const UnitVector& n);
// j = 1: diag(3(n.J)^2 - J.J) vs P_2(cos theta)(3m^2 - 2)
double dipolar_diagonal_residual(const UnitVector& n);

// ratio T_{lambda mu} / {J (x) ... (x) J}^lambda_mu; spread of the ratio over mu
struct ProportionalityReport {
    double ratio = 0.0;
    double spread = 0.0;     // max |r_mu - r_0|
    double residual = 0.0;   // max |T_mu - r_mu A_mu|
};
// nested rank-lambda spin tensor {...{J (x) J}^2 (x) J}^3 ... }^lambda
CompositeTensor stretched_spin_tensor(HalfInt j, int lambda);
ProportionalityReport rank_proportionality(HalfInt j, int lambda);

}  // namespace spinchev
