#include "spinchev/angular.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinchev/chebyshev.hpp"

namespace spinchev {

Eigen::Vector3d UnitVector::cartesian() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

UnitVector UnitVector::from_cartesian(const Eigen::Vector3d& v) {
    const Eigen::Vector3d u = v.normalized();
    double ph = std::atan2(u.y(), u.x());
    if (ph < 0) ph += 2 * std::numbers::pi;
    return {std::acos(std::clamp(u.z(), -1.0, 1.0)), ph};
}

double dot(const UnitVector& a, const UnitVector& b) {
    return std::clamp(a.cartesian().dot(b.cartesian()), -1.0, 1.0);
}

namespace {

// exp(-i(alpha+gamma)/2) cos(beta/2) of the SU(2) element
cplx su2_a(const AngleAxis& r) {
    const double c = std::cos(r.psi / 2), s = std::sin(r.psi / 2);
    return {c, -s * std::cos(r.Theta)};
}

int half(int twice_sum) {
    if (twice_sum % 2 != 0) throw std::domain_error("non-integer factorial argument");
    return twice_sum / 2;
}

}  // namespace

Euler to_euler(const AngleAxis& r) {
    const cplx a = su2_a(r);
    const double s = std::sin(r.psi / 2);
    const double beta = 2 * std::atan2(s * std::sin(r.Theta), std::abs(a));
    const double sum = std::abs(a) > 0 ? -2 * std::arg(a) : 0.0;
    const double diff = 2 * r.Phi - std::numbers::pi;
    return {(sum + diff) / 2, beta, (sum - diff) / 2};
}

UnitVector axis_of(const AngleAxis& r) { return {r.Theta, r.Phi}; }

BigRational clebsch_gordan_squared_signed(HalfInt a, HalfInt alpha, HalfInt b, HalfInt beta,
                                          HalfInt c, HalfInt gamma) {
    if (a.twice < 0 || b.twice < 0 || c.twice < 0)
        throw std::domain_error("negative angular momentum in CG");
    if (c.twice < std::abs(a.twice - b.twice) || c.twice > a.twice + b.twice ||
        (a.twice + b.twice + c.twice) % 2 != 0)
        throw std::domain_error("triangle condition violated in CG");
    if (!valid_projection(a, alpha) || !valid_projection(b, beta) || !valid_projection(c, gamma))
        throw std::domain_error("projection out of range in CG");
    if (gamma.twice != alpha.twice + beta.twice) return BigRational(0);

    const int abc = half(a.twice + b.twice - c.twice);
    const int amb = half(c.twice + a.twice - b.twice);
    const int bma = half(c.twice - a.twice + b.twice);
    BigRational pre(BigInt(c.twice + 1) * factorial(amb) * factorial(bma) * factorial(abc),
                    factorial(half(a.twice + b.twice + c.twice) + 1));
    pre *= BigRational(factorial(half(c.twice + gamma.twice)) * factorial(half(c.twice - gamma.twice)) *
                       factorial(half(a.twice - alpha.twice)) * factorial(half(a.twice + alpha.twice)) *
                       factorial(half(b.twice - beta.twice)) * factorial(half(b.twice + beta.twice)));

    const int amal = half(a.twice - alpha.twice);
    const int bpbe = half(b.twice + beta.twice);
    const int x1 = half(c.twice - b.twice + alpha.twice);
    const int x2 = half(c.twice - a.twice - beta.twice);
    const int kmin = std::max({0, -x1, -x2});
    const int kmax = std::min({abc, amal, bpbe});
    BigRational sum(0);
    for (int k = kmin; k <= kmax; ++k) {
        BigInt den = factorial(k) * factorial(abc - k) * factorial(amal - k) * factorial(bpbe - k) *
                     factorial(x1 + k) * factorial(x2 + k);
        BigRational term(BigInt(1), den);
        if (k % 2) sum -= term;
        else sum += term;
    }
    BigRational sq = pre * sum * sum;
    return sum < 0 ? BigRational(-sq) : sq;
}

double clebsch_gordan(HalfInt a, HalfInt alpha, HalfInt b, HalfInt beta, HalfInt c, HalfInt gamma) {
    return signed_sqrt(clebsch_gordan_squared_signed(a, alpha, b, beta, c, gamma));
}

MatR wigner_d(HalfInt j, double beta) {
    require_spin(j);
    const int n = dim(j);
    const int tj = j.twice;
    const long double c = std::cos(static_cast<long double>(beta) / 2);
    const long double s = std::sin(static_cast<long double>(beta) / 2);
    MatR d(n, n);
    // d_{m'm} = <j m'| exp(-i beta Jy) |j m>
    for (int r = 0; r < n; ++r) {
        const int jpm1 = r, jmm1 = tj - r;   // j+m', j-m'
        for (int col = 0; col < n; ++col) {
            const int jpm = col, jmm = tj - col;   // j+m, j-m
            const int dm = jpm1 - jpm;              // m' - m
            const BigInt num = factorial(jpm1) * factorial(jmm1) * factorial(jpm) * factorial(jmm);
            long double acc = 0;
            for (int k = std::max(0, -dm); k <= std::min(jpm, jmm1); ++k) {
                const BigInt den = factorial(jpm - k) * factorial(k) * factorial(dm + k) * factorial(jmm1 - k);
                const long double coef =
                    std::sqrt(static_cast<long double>(to_double(BigRational(num, den * den))));
                const long double term = coef * std::pow(c, tj + jpm - jpm1 - 2 * k) * std::pow(s, dm + 2 * k);
                acc += ((dm + k) % 2 ? -term : term);
            }
            d(r, col) = static_cast<double>(acc);
        }
    }
    return d;
}

MatC wigner_D_euler(HalfInt j, const Euler& e) {
    const MatR d = wigner_d(j, e.beta);
    const int n = dim(j);
    MatC D(n, n);
    for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col) {
            const double mp = projection_at(j, r).value(), m = projection_at(j, col).value();
            D(r, col) = std::exp(cplx(0, -(mp * e.alpha + m * e.gamma))) * d(r, col);
        }
    return D;
}

MatC wigner_D_angle_axis(HalfInt j, const AngleAxis& r) {
    const cplx a = su2_a(r);
    const double s = std::sin(r.psi / 2);
    const double xi = 2 * std::atan2(s * std::sin(r.Theta), std::abs(a));
    const cplx ph = std::abs(a) > 0 ? a / std::abs(a) : cplx(1, 0);
    const MatR d = wigner_d(j, xi);
    const int n = dim(j);
    MatC D(n, n);
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col) {
            const int M = projection_at(j, row).twice, Mp = projection_at(j, col).twice;
            const int dm = (M - Mp) / 2, sm = (M + Mp) / 2;
            const cplx idm = std::pow(cplx(0, 1), ((dm % 4) + 4) % 4);
            D(row, col) = idm * std::exp(cplx(0, -dm * r.Phi)) * std::pow(ph, sm) * d(row, col);
        }
    return D;
}

MatC wigner_D(HalfInt j, const RotationParams& r) {
    if (const auto* aa = std::get_if<AngleAxis>(&r)) return wigner_D_angle_axis(j, *aa);
    return wigner_D_euler(j, std::get<Euler>(r));
}

double legendre_P(int l, double x) {
    if (l < 0) throw std::domain_error("negative Legendre degree");
    if (l == 0) return 1.0;
    double p0 = 1.0, p1 = x;
    for (int k = 1; k < l; ++k) {
        const double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double legendre_P_normalized(int l, int m, double x) {
    if (m < 0 || m > l) throw std::domain_error("associated Legendre order out of range");
    const double sx = std::sqrt(std::max(0.0, 1 - x * x));
    double pmm = 1.0;
    for (int i = 1; i <= m; ++i) pmm *= -std::sqrt((2.0 * i - 1) / (2.0 * i)) * sx;
    if (l == m) return pmm;
    double p1 = x * std::sqrt(2.0 * m + 1) * pmm;
    double p0 = pmm;
    for (int k = m + 2; k <= l; ++k) {
        const double p2 = ((2.0 * k - 1) * x * p1 - std::sqrt((k + m - 1.0) * (k - m - 1.0)) * p0) /
                          std::sqrt((k - m) * double(k + m));
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double gegenbauer_C(int n, int alpha, double x) {
    if (n < 0 || alpha < 1) throw std::domain_error("Gegenbauer arguments out of range");
    if (n == 0) return 1.0;
    double c0 = 1.0, c1 = 2.0 * alpha * x;
    for (int k = 2; k <= n; ++k) {
        const double c2 = (2.0 * x * (k + alpha - 1) * c1 - (k + 2.0 * alpha - 2) * c0) / k;
        c0 = c1;
        c1 = c2;
    }
    return c1;
}

double double_factorial(int n) {
    double r = 1.0;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

cplx racah_C(int l, int m, const UnitVector& n) {
    if (std::abs(m) > l) throw std::domain_error("|mu| > lambda in racah_C");
    const int am = std::abs(m);
    const cplx v = legendre_P_normalized(l, am, std::cos(n.theta)) * std::exp(cplx(0, am * n.phi));
    if (m >= 0) return v;
    return (am % 2 ? -1.0 : 1.0) * std::conj(v);
}

double generalized_character(HalfInt j, int lambda, double psi) {
    const int tj = j.twice;
    if (lambda < 0 || lambda > tj) throw std::domain_error("lambda > 2j in generalized_character");
    // (2l)!! = 2^l l!
    BigInt dfac = factorial(lambda) << lambda;
    BigRational pre2(dfac * dfac * (tj + 1) * factorial(tj - lambda), factorial(tj + lambda + 1));
    const double s = std::sin(psi / 2), c = std::cos(psi / 2);
    return std::sqrt(to_double(pre2)) * std::pow(s, lambda) * gegenbauer_C(tj - lambda, lambda + 1, c);
}

double generalized_character_cheb(HalfInt j, int lambda, double psi) {
    if (lambda < 0 || lambda > j.twice) throw std::domain_error("lambda > 2j in generalized_character");
    const ChebTable t = ChebTable::build(j);
    cplx acc = 0;
    for (int i = 0; i < dim(j); ++i)
        acc += std::exp(cplx(0, -projection_at(j, i).value() * psi)) * t.values(lambda, i);
    const cplx il = std::pow(cplx(0, 1), lambda % 4);
    return (il * acc).real() * std::sqrt((j.twice + 1.0) / (2.0 * lambda + 1));
}

double character(HalfInt j, double psi) {
    double acc = 0.0;
    for (int i = 0; i < dim(j); ++i) acc += std::cos(projection_at(j, i).value() * psi);
    return acc;
}

}  // namespace spinchev
