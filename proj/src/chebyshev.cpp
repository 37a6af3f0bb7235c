#include "spinchev/chebyshev.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "spinchev/angular.hpp"

namespace spinchev {

namespace {
void check_args(HalfInt j, int lambda, HalfInt m) {
    require_spin(j);
    if (lambda < 0 || lambda > j.twice) throw std::domain_error("lambda out of range 0..2j");
    if (!valid_projection(j, m)) throw std::domain_error("invalid projection " + m.str());
}
}  // namespace

double cheb_G(double a, double b) {
    if (a == 0) return 0.0;
    return std::sqrt(a * a * ((2 * b + 1) * (2 * b + 1) - a * a) / (4 * a * a - 1));
}

double cheb_a1(HalfInt j) {
    const double jj = j.value();
    return std::sqrt(3.0 / (jj * (jj + 1) * (2 * jj + 1)));
}

namespace {
// The forward recursion in lambda amplifies rounding by roughly 10x per unit of 2j
// near the lattice ends, so it is carried out with 100 decimal digits.
using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;

Wide wide_G(int L, int tj) {
    if (L == 0) return Wide(0);
    const Wide a(L), b2(tj + 1);   // b2 = 2j+1
    return sqrt(a * a * (b2 * b2 - a * a) / (4 * a * a - 1));
}

// every f_L(m), L = 0..lmax, for one m
void recursion_row(HalfInt j, HalfInt m, int lmax, const std::vector<Wide>& G, double* out) {
    const int tj = j.twice;
    const Wide mm = Wide(m.twice) / 2;
    Wide f0 = 1 / sqrt(Wide(tj + 1));
    out[0] = static_cast<double>(f0);
    if (lmax == 0) return;
    // a_1(j) = sqrt(3/(j(j+1)(2j+1))) = sqrt(12/(2j(2j+1)(2j+2)))
    Wide f1 = mm * sqrt(Wide(12) / (Wide(tj) * (tj + 1) * (tj + 2)));
    out[1] = static_cast<double>(f1);
    for (int L = 1; L < lmax; ++L) {
        Wide f2 = (2 * mm * f1 - G[L] * f0) / G[L + 1];
        out[L + 1] = static_cast<double>(f2);
        f0 = std::move(f1);
        f1 = std::move(f2);
    }
}

std::vector<Wide> wide_G_table(int tj) {
    std::vector<Wide> G(tj + 2);
    for (int L = 0; L <= tj + 1; ++L) G[L] = wide_G(L, tj);
    return G;
}

std::shared_ptr<const Eigen::MatrixXd> cached_table(HalfInt j) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const Eigen::MatrixXd>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(j.twice);
        if (it != cache.end()) return it->second;
    }
    auto t = std::make_shared<Eigen::MatrixXd>(dim(j), dim(j));
    const std::vector<Wide> G = wide_G_table(j.twice);
    std::vector<double> row(dim(j));
    for (int i = 0; i < dim(j); ++i) {
        recursion_row(j, projection_at(j, i), j.twice, G, row.data());
        for (int l = 0; l <= j.twice; ++l) (*t)(l, i) = row[l];
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(j.twice, std::move(t)).first->second;
}
}  // namespace

double cheb_scalar_recursion(HalfInt j, int lambda, HalfInt m) {
    check_args(j, lambda, m);
    std::vector<double> row(lambda + 1);
    recursion_row(j, m, lambda, wide_G_table(j.twice), row.data());
    return row[lambda];
}

ChebTable ChebTable::build(HalfInt j) {
    require_spin(j);
    return ChebTable{j, *cached_table(j)};
}

double ChebTable::orthonormality_residual() const {
    const Eigen::MatrixXd g = values * values.transpose();
    return (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

double ChebTable::parity_residual() const {
    double r = 0.0;
    const int n = size();
    for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i) {
            const double sgn = (l % 2) ? -1.0 : 1.0;
            r = std::max(r, std::abs(values(l, n - 1 - i) - sgn * values(l, i)));
        }
    return r;
}

double cheb_scalar_cg(HalfInt j, int lambda, HalfInt m) {
    check_args(j, lambda, m);
    return parity_sign(j - m) * clebsch_gordan(j, m, j, -m, HalfInt::from_int(lambda), HalfInt(0));
}

BigRational bateman_t(HalfInt j, int lambda, HalfInt m) {
    check_args(j, lambda, m);
    // H(m) = binom(j+m, L) binom(m-j-1, L); both upper arguments are integers
    auto H = [&](int shift) {
        const int x = (j.twice + m.twice) / 2 + shift;
        const int y = (m.twice - j.twice) / 2 - 1 + shift;
        return binomial(BigRational(x), lambda) * binomial(BigRational(y), lambda);
    };
    BigRational diff(0);
    for (int k = 0; k <= lambda; ++k) {
        BigRational term = binomial(BigRational(lambda), k) * H(k);
        if ((lambda - k) % 2) diff -= term;
        else diff += term;
    }
    return diff * BigRational(factorial(lambda));
}

double cheb_scalar_bateman(HalfInt j, int lambda, HalfInt m) {
    const BigRational t = bateman_t(j, lambda, m);
    const BigRational F2((2 * lambda + 1) * factorial(j.twice - lambda), factorial(j.twice + lambda + 1));
    return signed_sqrt(F2 * t * t * (t < 0 ? -1 : 1));
}

double cheb_sum_over_m(HalfInt j, int lambda) {
    require_spin(j);
    if (lambda < 0 || lambda > j.twice) throw std::domain_error("lambda out of range 0..2j");
    const ChebTable t = ChebTable::build(j);
    return t.values.row(lambda).sum();
}

double cheb_at_top(HalfInt j, int lambda) {
    const int tj = j.twice;
    if (lambda < 0 || lambda > tj) throw std::domain_error("lambda out of range 0..2j");
    const BigInt f = factorial(tj);
    return std::sqrt(to_double(BigRational((2 * lambda + 1) * f * f,
                                           factorial(tj + lambda + 1) * factorial(tj - lambda))));
}

double cheb_below_top(HalfInt j, int lambda) {
    const int tj = j.twice;
    if (tj < 1 || lambda < 0 || lambda > tj) throw std::domain_error("f_L(j-1) needs 2j >= 1");
    const BigInt f = factorial(tj - 1);
    const double mag = std::sqrt(
        to_double(BigRational((2 * lambda + 1) * f * f, factorial(tj + lambda + 1) * factorial(tj - lambda))));
    return -(lambda * (lambda + 1) - tj) * mag;
}

}  // namespace spinchev
