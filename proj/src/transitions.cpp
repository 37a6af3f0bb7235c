#include "spinchev/transitions.hpp"

#include <cmath>
#include <stdexcept>

#include "spinchev/operators.hpp"

namespace spinchev {

double RfDrive::omega_e() const { return std::hypot(omega1, detuning); }

double RfDrive::cos_beta() const {
    const double we = omega_e();
    if (we == 0) return 1.0;
    const double sT = omega1 / we;
    const double s = std::sin(we * t / 2);
    return 1 - 2 * s * s * sT * sT;
}

double meckler_probability(HalfInt j, HalfInt m, HalfInt mp, double cos_beta) {
    if (!valid_projection(j, m) || !valid_projection(j, mp)) throw std::domain_error("invalid projection");
    const ChebTable t = ChebTable::build(j);
    double acc = 0.0;
    for (int l = 0; l <= j.twice; ++l) acc += t(l, m) * t(l, mp) * legendre_P(l, cos_beta);
    return acc;
}

double meckler_probability(const TransitionSpec& s) { return meckler_probability(s.j, s.m, s.mp, s.cos_beta); }

double meckler_via_projector_trace(HalfInt j, HalfInt m, HalfInt mp, const UnitVector& a,
                                   const UnitVector& b) {
    return (projector(j, m, a).mat * projector(j, mp, b).mat).trace().real();
}

double spin_flip_extreme(HalfInt j, double beta) {
    require_spin(j);
    return std::pow(std::sin(beta / 2), 2 * j.twice);
}

double spin_flip_extreme_drive(HalfInt j, const RfDrive& d) {
    const double we = d.omega_e();
    if (we == 0) return j.twice == 0 ? 1.0 : 0.0;
    return std::pow(d.omega1 / we, 2 * j.twice) * std::pow(std::sin(we * d.t / 2), 2 * j.twice);
}

double spin_flip_next(HalfInt j, double beta) {
    if (j.twice < 2) throw std::domain_error("next-to-extreme flip needs j >= 1");
    const double s = std::sin(beta / 2), c = std::cos(beta / 2);
    const double br = j.twice * c * c - 1;
    // exponent 4(j-1) vanishes at j = 1; std::pow(0, 0) == 1 as in the series limit
    return std::pow(s, 2 * j.twice - 4) * br * br;
}

double spin_flip_next_series(HalfInt j, double beta) {
    if (j.twice < 2) throw std::domain_error("next-to-extreme flip needs j >= 1");
    const double x = std::cos(beta);
    double acc = 0.0;
    for (int l = 0; l <= j.twice; ++l) {
        const double f = cheb_below_top(j, l);
        acc += (l % 2 ? -1.0 : 1.0) * f * f * legendre_P(l, x);
    }
    return acc;
}

double landau_zener_probability(HalfInt S, HalfInt m, HalfInt mp, double p) {
    if (p < 0 || p > 1) throw std::domain_error("two-level probability outside [0,1]");
    return meckler_probability(S, m, mp, 2 * p - 1);
}

cplx squared_D_halfpi(HalfInt j, HalfInt m, HalfInt mp, double alpha, double gamma) {
    if (!valid_projection(j, m) || !valid_projection(j, mp)) throw std::domain_error("invalid projection");
    double acc = 0.0;
    for (int L = 0; L <= j.twice; L += 2) {
        const HalfInt LL = HalfInt::from_int(L);
        const double w = ((L / 2) % 2 ? -1.0 : 1.0) * double_factorial(L - 1) / double_factorial(L);
        acc += w * clebsch_gordan(j, m, j, -m, LL, HalfInt(0)) * clebsch_gordan(j, mp, j, -mp, LL, HalfInt(0));
    }
    const double sgn = parity_sign(m - mp);
    return std::exp(cplx(0, -2 * (m.value() * alpha + mp.value() * gamma))) * sgn * acc;
}

double inverse_meckler(HalfInt j, int L, double beta) {
    if (L < 0 || L > j.twice) throw std::domain_error("L out of range 0..2j");
    const ChebTable t = ChebTable::build(j);
    const MatR d = wigner_d(j, beta);
    double acc = 0.0;
    for (int r = 0; r < dim(j); ++r)
        for (int c = 0; c < dim(j); ++c) acc += t.values(L, r) * t.values(L, c) * d(r, c) * d(r, c);
    return acc;
}

double total_probability(HalfInt j, HalfInt m, double beta) {
    double acc = 0.0;
    for (int i = 0; i < dim(j); ++i) acc += meckler_probability(j, m, projection_at(j, i), std::cos(beta));
    return acc;
}

double squared_d_sum(HalfInt j, double beta) { return wigner_d(j, beta).squaredNorm(); }

double fourier_legendre_flip(int n, double x) {
    if (n < 0) throw std::domain_error("negative order");
    const BigInt fn2 = factorial(n) * factorial(n);
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double c = to_double(BigRational((2 * k + 1) * fn2, factorial(n - k) * factorial(n + 1 + k)));
        acc += (k % 2 ? -c : c) * legendre_P(k, x);
    }
    return acc;
}

}  // namespace spinchev
