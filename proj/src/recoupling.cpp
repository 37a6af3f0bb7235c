#include "spinchev/recoupling.hpp"

#include <cmath>
#include <stdexcept>

namespace spinchev {

namespace {
CompositeTensor identity_scaled(int rank, int size, auto&& coeff) {
    CompositeTensor t{rank, {}};
    for (int q = -rank; q <= rank; ++q) t.comp.push_back(coeff(q) * MatC::Identity(size, size));
    return t;
}
}  // namespace

CompositeTensor spin_vector(HalfInt j) {
    const auto tau = spherical_J(j);
    return {1, {tau[0], tau[1], tau[2]}};
}

CompositeTensor spatial_vector(const UnitVector& n, int size) {
    const Eigen::Vector3d v = n.cartesian();
    const double r2 = std::sqrt(2.0);
    return identity_scaled(1, size, [&](int q) {
        if (q == 0) return cplx(v.z(), 0);
        return cplx(-q * v.x(), -v.y()) / r2;   // -(x+iy)/sqrt2, (x-iy)/sqrt2
    });
}

CompositeTensor spatial_racah(int lambda, const UnitVector& n, int size) {
    return identity_scaled(lambda, size, [&](int q) { return racah_C(lambda, q, n); });
}

CompositeTensor polarization_tensor(HalfInt j, int lambda) {
    CompositeTensor t{lambda, {}};
    for (int q = -lambda; q <= lambda; ++q) t.comp.push_back(polarization_T(j, lambda, q).mat);
    return t;
}

CompositeTensor compose(const CompositeTensor& R, const CompositeTensor& S, int K) {
    const int k = R.rank, kp = S.rank;
    if (K < std::abs(k - kp) || K > k + kp) throw std::domain_error("triangle condition violated in compose");
    const int sz = static_cast<int>(R.comp.front().rows());
    CompositeTensor out{K, {}};
    for (int Q = -K; Q <= K; ++Q) {
        MatC acc = MatC::Zero(sz, sz);
        for (int q = std::max(-k, Q - kp); q <= std::min(k, Q + kp); ++q) {
            const double c = clebsch_gordan(HalfInt::from_int(k), HalfInt::from_int(q), HalfInt::from_int(kp),
                                            HalfInt::from_int(Q - q), HalfInt::from_int(K), HalfInt::from_int(Q));
            if (c != 0.0) acc += c * R[q] * S[Q - q];
        }
        out.comp.push_back(acc);
    }
    return out;
}

MatC scalar_dot(const CompositeTensor& A, const CompositeTensor& B) {
    if (A.rank != B.rank) throw std::domain_error("scalar product of tensors with different ranks");
    MatC acc = MatC::Zero(A.comp.front().rows(), A.comp.front().cols());
    for (int q = -A.rank; q <= A.rank; ++q) acc += (q % 2 ? -1.0 : 1.0) * A[q] * B[-q];
    return acc;
}

RecouplingReport verify_rank2_recoupling(HalfInt j, const UnitVector& n) {
    const int sz = dim(j);
    const double kappa = j.value() * (j.value() + 1);
    const MatC nj = n_dot_J(j, n);
    const MatC form1 = 3.0 * nj * nj - kappa * MatC::Identity(sz, sz);
    const CompositeTensor JJ = compose(spin_vector(j), spin_vector(j), 2);
    const MatC form2 = std::sqrt(6.0) * scalar_dot(JJ, spatial_racah(2, n, sz));
    const CompositeTensor nn = compose(spatial_vector(n, sz), spatial_vector(n, sz), 2);
    const MatC form3 = 3.0 * std::sqrt(5.0) * compose(JJ, nn, 0)[0];
    RecouplingReport r;
    r.max_diff = std::max({max_abs(form1 - form2), max_abs(form1 - form3), max_abs(form2 - form3)});
    r.scale = max_abs(form1);
    return r;
}

RecouplingReport verify_rank1(HalfInt j, const UnitVector& n) {
    const int sz = dim(j);
    const MatC lhs = scalar_dot(spin_vector(j), spatial_racah(1, n, sz));
    const MatC nj = n_dot_J(j, n);
    return {max_abs(lhs - nj), max_abs(nj)};
}

RecouplingReport verify_cheb_recoupling(HalfInt j, int lambda, const UnitVector& n) {
    const int sz = dim(j);
    const MatC f = cheb_op_n_similarity(j, lambda, n).mat;
    const MatC rec = (lambda % 2 ? -1.0 : 1.0) * std::sqrt(2.0 * lambda + 1) *
                     compose(polarization_tensor(j, lambda), spatial_racah(lambda, n, sz), 0)[0];
    return {max_abs(f - rec), max_abs(f)};
}

double dipolar_diagonal_residual(const UnitVector& n) {
    const HalfInt j(2);
    const MatC nj = n_dot_J(j, n);
    const MatC H = 3.0 * nj * nj - 2.0 * MatC::Identity(3, 3);
    const double p2 = legendre_P(2, std::cos(n.theta));
    double r = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double m = projection_at(j, i).value();
        r = std::max(r, std::abs(H(i, i) - p2 * (3 * m * m - 2)));
    }
    return r;
}

CompositeTensor stretched_spin_tensor(HalfInt j, int lambda) {
    if (lambda < 1) throw std::domain_error("stretched tensor needs rank >= 1");
    CompositeTensor acc = spin_vector(j);
    for (int k = 2; k <= lambda; ++k) acc = compose(acc, spin_vector(j), k);
    return acc;
}

ProportionalityReport rank_proportionality(HalfInt j, int lambda) {
    const CompositeTensor A = stretched_spin_tensor(j, lambda);
    const CompositeTensor T = polarization_tensor(j, lambda);
    ProportionalityReport rep;
    std::vector<double> r;
    for (int q = -lambda; q <= lambda; ++q) {
        const cplx num = (A[q].adjoint() * T[q]).trace();
        const double den = A[q].squaredNorm();
        const double ratio = num.real() / den;
        r.push_back(ratio);
        rep.residual = std::max(rep.residual, max_abs(T[q] - ratio * A[q]));
    }
    rep.ratio = r[lambda];
    for (double x : r) rep.spread = std::max(rep.spread, std::abs(x - rep.ratio));
    return rep;
}

}  // namespace spinchev
