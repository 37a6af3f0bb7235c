#include "spinchev/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinchev {

double max_abs(const MatC& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

bool SpinOperator::is_hermitian(double tol) const { return max_abs(mat - mat.adjoint()) < tol; }

SpinMatrices spin_matrices(HalfInt j) {
    require_spin(j);
    const int n = dim(j);
    const double jj = j.value();
    SpinMatrices s;
    s.Jz = MatC::Zero(n, n);
    s.Jplus = MatC::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const double m = projection_at(j, i).value();
        s.Jz(i, i) = m;
        if (i + 1 < n) s.Jplus(i + 1, i) = std::sqrt(jj * (jj + 1) - m * (m + 1));
    }
    s.Jminus = s.Jplus.adjoint();
    s.Jx = (s.Jplus + s.Jminus) / 2.0;
    s.Jy = (s.Jplus - s.Jminus) / cplx(0, 2);
    return s;
}

MatC n_dot_J(HalfInt j, const UnitVector& n) {
    const SpinMatrices s = spin_matrices(j);
    const Eigen::Vector3d v = n.cartesian();
    return v.x() * s.Jx + v.y() * s.Jy + v.z() * s.Jz;
}

std::array<MatC, 3> spherical_J(HalfInt j) {
    const SpinMatrices s = spin_matrices(j);
    const double r2 = std::sqrt(2.0);
    return {s.Jminus / r2, s.Jz, -s.Jplus / r2};
}

SpinOperator polarization_T(HalfInt j, int lambda, int mu) {
    require_spin(j);
    if (lambda < 0 || lambda > j.twice || std::abs(mu) > lambda)
        throw std::domain_error("polarization_T indices out of range");
    const int n = dim(j);
    const double pre = std::sqrt((2.0 * lambda + 1) / (j.twice + 1.0));
    MatC T = MatC::Zero(n, n);
    const HalfInt L = HalfInt::from_int(lambda), M = HalfInt::from_int(mu);
    for (int col = 0; col < n; ++col) {
        const HalfInt m = projection_at(j, col);
        const HalfInt mp = m + M;
        if (!valid_projection(j, mp)) continue;
        T(index_of(j, mp), col) = pre * clebsch_gordan(j, m, L, M, j, mp);
    }
    return {j, T};
}

SpinOperator cheb_op_jz(HalfInt j, int lambda) {
    require_spin(j);
    if (lambda < 0 || lambda > j.twice) throw std::domain_error("lambda out of range 0..2j");
    const ChebTable t = ChebTable::build(j);
    MatC m = MatC::Zero(dim(j), dim(j));
    for (int i = 0; i < dim(j); ++i) m(i, i) = t.values(lambda, i);
    return {j, m};
}

SpinOperator cheb_op_n(HalfInt j, int lambda, const UnitVector& n) {
    require_spin(j);
    if (lambda < 0 || lambda > j.twice) throw std::domain_error("lambda out of range 0..2j");
    MatC acc = MatC::Zero(dim(j), dim(j));
    for (int mu = -lambda; mu <= lambda; ++mu)
        acc += std::conj(racah_C(lambda, mu, n)) * polarization_T(j, lambda, mu).mat;
    return {j, acc};
}

MatC expm_hermitian(const MatC& H, double t) {
    Eigen::SelfAdjointEigenSolver<MatC> es(H);
    const Eigen::VectorXd ev = es.eigenvalues();
    Eigen::VectorXcd ph(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) ph(i) = std::exp(cplx(0, -t * ev(i)));
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

SpinOperator cheb_op_n_similarity(HalfInt j, int lambda, const UnitVector& n) {
    const UnitVector perp{std::numbers::pi / 2, n.phi + std::numbers::pi / 2};
    const MatC U = expm_hermitian(n_dot_J(j, perp), n.theta);
    const MatC f = cheb_op_jz(j, lambda).mat;
    return {j, U * f * U.adjoint()};
}

std::vector<MatC> cheb_ops_all(HalfInt j, const UnitVector& n) {
    require_spin(j);
    const UnitVector perp{std::numbers::pi / 2, n.phi + std::numbers::pi / 2};
    const MatC U = expm_hermitian(n_dot_J(j, perp), n.theta);
    const ChebTable t = ChebTable::build(j);
    std::vector<MatC> f;
    f.reserve(dim(j));
    for (int l = 0; l <= j.twice; ++l)
        f.push_back(U * t.values.row(l).transpose().cast<cplx>().asDiagonal() * U.adjoint());
    return f;
}

SpinOperator cheb_op_n_recursion(HalfInt j, int lambda, const UnitVector& n) {
    require_spin(j);
    if (lambda < 0 || lambda > j.twice) throw std::domain_error("lambda out of range 0..2j");
    // plain double recursion with m -> n.J; loses accuracy beyond 2j ~ 16
    const int sz = dim(j);
    const double jj = j.value();
    const MatC nj = n_dot_J(j, n);
    MatC f0 = MatC::Identity(sz, sz) / std::sqrt(2 * jj + 1);
    if (lambda == 0) return {j, f0};
    MatC f1 = cheb_a1(j) * nj;
    for (int L = 1; L < lambda; ++L) {
        MatC f2 = (2.0 * nj * f1 - cheb_G(L, jj) * f0) / cheb_G(L + 1, jj);
        f0 = std::move(f1);
        f1 = std::move(f2);
    }
    return {j, f1};
}

double cheb_op_trace_pair(HalfInt j, int lambda, int lambda_p, const UnitVector& a,
                          const UnitVector& b) {
    const MatC fa = cheb_op_n(j, lambda, a).mat;
    const MatC fb = cheb_op_n(j, lambda_p, b).mat;
    return (fa * fb).trace().real();
}

SpinOperator projector(HalfInt j, HalfInt m, const UnitVector& n) {
    if (!valid_projection(j, m)) throw std::domain_error("invalid projection " + m.str());
    const ChebTable t = ChebTable::build(j);
    const std::vector<MatC> f = cheb_ops_all(j, n);
    MatC acc = MatC::Zero(dim(j), dim(j));
    for (int l = 0; l <= j.twice; ++l) acc += t(l, m) * f[l];
    return {j, acc};
}

SpinOperator projector_canonical(HalfInt j, HalfInt m, const UnitVector& n) {
    if (!valid_projection(j, m)) throw std::domain_error("invalid projection " + m.str());
    if (j.twice > 12) throw std::domain_error("Sylvester product limited to 2j <= 12");
    const int sz = dim(j);
    const MatC nj = n_dot_J(j, n);
    MatC acc = MatC::Identity(sz, sz);
    for (int i = 0; i < sz; ++i) {
        const double r = projection_at(j, i).value();
        if (projection_at(j, i) == m) continue;
        acc = acc * (nj - r * MatC::Identity(sz, sz)) / (m.value() - r);
    }
    return {j, acc};
}

SpinOperator coherent_projector(HalfInt j, const UnitVector& n) { return projector(j, j, n); }

Eigen::VectorXcd coherent_state(HalfInt j, const UnitVector& n) {
    const SpinMatrices s = spin_matrices(j);
    Eigen::VectorXcd top = Eigen::VectorXcd::Zero(dim(j));
    top(dim(j) - 1) = 1.0;
    return expm_hermitian(s.Jz, n.phi) * (expm_hermitian(s.Jy, n.theta) * top);
}

SpinOperator rotation_exact(HalfInt j, const RotationParams& r) {
    if (const auto* aa = std::get_if<AngleAxis>(&r))
        return {j, expm_hermitian(n_dot_J(j, axis_of(*aa)), aa->psi)};
    const Euler& e = std::get<Euler>(r);
    const SpinMatrices s = spin_matrices(j);
    return {j, expm_hermitian(s.Jz, e.alpha) * expm_hermitian(s.Jy, e.beta) * expm_hermitian(s.Jz, e.gamma)};
}

SpinOperator rotation_corio(HalfInt j, double psi, const UnitVector& n) {
    const std::vector<MatC> f = cheb_ops_all(j, n);
    MatC acc = MatC::Zero(dim(j), dim(j));
    for (int l = 0; l <= j.twice; ++l) {
        const cplx il = std::pow(cplx(0, 1), l % 4);
        acc += il * std::sqrt((2.0 * l + 1) / (j.twice + 1.0)) * generalized_character(j, l, psi) * f[l];
    }
    return {j, acc};
}

double zemach_norm(HalfInt j, int lambda) {
    const double kappa = j.value() * (j.value() + 1);
    double p = 1.0;
    for (int k = 1; k <= lambda; ++k) p *= kappa - (k * k - 1) / 4.0;
    return p;
}

double schwinger_norm(HalfInt j, int lambda) {
    const double kappa = j.value() * (j.value() + 1);
    double p = 1.0;
    for (int k = 0; k < lambda; ++k) p *= kappa - (k / 2.0) * (k / 2.0 + 1);
    return p;
}

SpinOperator legendre_op_zemach(HalfInt j, int lambda, const UnitVector& n) {
    require_spin(j);
    if (lambda < 0) throw std::domain_error("negative Legendre degree");
    const int sz = dim(j);
    const double kappa = j.value() * (j.value() + 1);
    const MatC nj = n_dot_J(j, n);
    MatC p0 = MatC::Identity(sz, sz);
    if (lambda == 0) return {j, p0};
    MatC p1 = nj;
    for (int l = 1; l < lambda; ++l) {
        MatC p2 = ((2.0 * l + 1) * nj * p1 - l * (kappa - (l * l - 1) / 4.0) * p0) / double(l + 1);
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    return {j, p1};
}

SpinOperator legendre_op_schwinger(HalfInt j, int lambda) {
    SpinOperator f = cheb_op_jz(j, lambda);
    f.mat *= std::sqrt((j.twice + 1.0) / (2.0 * lambda + 1));
    return f;
}

double Poly::operator()(double x) const {
    double r = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::derivative() const {
    Poly d;
    for (std::size_t k = 1; k < c.size(); ++k) d.c.push_back(k * c[k]);
    return d;
}

Poly marinelli_shift(const Poly& p) {
    Poly acc{std::vector<double>(p.c.size(), 0.0)};
    Poly d = p;
    double fact = 1.0;
    for (std::size_t n = 1; n < p.c.size(); ++n) {
        d = d.derivative();
        fact *= n;
        for (std::size_t k = 0; k < d.c.size(); ++k) acc.c[k] += d.c[k] / fact;
    }
    return acc;
}

namespace {
Poly table_poly(int lambda, int k, double K) {
    if (lambda == 0 && k == 0) return {{1.0}};
    if (lambda == 2 && k == 0) return {{-K, 0, 3}};
    if (lambda == 2 && k == 1) return {{1, 2}};
    if (lambda == 4 && k == 0) return {{3 * K * (K - 2), 0, -5 * (6 * K - 5), 0, 35}};
    if (lambda == 4 && k == 1) return {{3 * (2 - K), 19 - 6 * K, 21, 14}};
    if (lambda == 6 && k == 0)
        return {{-5 * K * (K * K - 8 * K + 12), 0, 21 * (5 * K * K - 25 * K + 14), 0, -105 * (3 * K - 7), 0, 231}};
    throw std::domain_error("no operator-equivalent table entry for this (lambda, k)");
}
}  // namespace

EquivalentReport operator_equivalent_check(HalfInt j, int lambda, int k, bool marinelli) {
    if (lambda > j.twice) throw std::domain_error("lambda > 2j in operator_equivalent_check");
    if (k < 0 || k > 1) throw std::domain_error("only k = 0, 1 are tabulated");
    const double K = j.value() * (j.value() + 1);
    Poly p = (marinelli && k == 1) ? marinelli_shift(table_poly(lambda, 0, K)) : table_poly(lambda, k, K);
    const SpinMatrices s = spin_matrices(j);
    const int sz = dim(j);
    MatC pz = MatC::Zero(sz, sz);
    for (int i = 0; i < sz; ++i) pz(i, i) = p(projection_at(j, i).value());
    const MatC target = (k == 1) ? MatC(s.Jplus * pz) : pz;
    const MatC T = polarization_T(j, lambda, k).mat;

    EquivalentReport rep{lambda, k};
    const double big = max_abs(target);
    std::vector<cplx> ratios;
    for (int r = 0; r < sz; ++r)
        for (int c = 0; c < sz; ++c) {
            if (std::abs(target(r, c)) > 1e-9 * big) ratios.push_back(T(r, c) / target(r, c));
            else rep.offpattern = std::max(rep.offpattern, std::abs(T(r, c)));
        }
    cplx mean = 0;
    for (const cplx& x : ratios) mean += x;
    mean /= double(ratios.size());
    for (const cplx& x : ratios) rep.ratio_spread = std::max(rep.ratio_spread, std::abs(x - mean) / std::abs(mean));
    rep.ratio_mean = mean.real();
    rep.entries = static_cast<int>(ratios.size());
    return rep;
}

}  // namespace spinchev
