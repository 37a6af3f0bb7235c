#include "spinchev/tomography.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace spinchev {

namespace {
constexpr double kPi = std::numbers::pi;

void require_exact(HalfInt j, const SphericalGrid& g) {
    if (g.exactness_degree < 2 * j.twice)
        throw std::domain_error("grid exactness degree below 4j; reconstruction would not be exact");
}

double real_trace_product(const MatC& a, const MatC& b) {
    // Tr[a b] for Hermitian a, b
    return (a.transpose().cwiseProduct(b)).sum().real();
}
}  // namespace

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    // P_n(z) and P_n'(z)
    auto eval = [n](double z, double& dp) {
        double p0 = 1.0, p1 = z;
        for (int k = 1; k < n; ++k) {
            const double p2 = ((2 * k + 1) * z * p1 - k * p0) / (k + 1);
            p0 = p1;
            p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1);
        return p1;
    };
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            const double dz = eval(z, dp) / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        eval(z, dp);
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1 - z * z) * dp * dp);
    }
}

double SphericalGrid::weight_sum() const {
    double s = 0.0, c = 0.0;
    for (const GridNode& nd : nodes) {
        const double y = nd.weight - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

namespace {
SphericalGrid product_grid(int nt, int np) {
    SphericalGrid g;
    g.n_theta = nt;
    g.n_phi = np;
    // nt Gauss points integrate cos-degree 2 nt - 1; np points resolve |k| < np in phi
    g.exactness_degree = std::min(2 * nt - 1, np - 1);
    std::vector<double> x, w;
    gauss_legendre(nt, x, w);
    for (int a = 0; a < nt; ++a)
        for (int b = 0; b < np; ++b)
            g.nodes.push_back({{std::acos(x[a]), 2 * kPi * b / np}, w[a] * 2 * kPi / np});
    return g;
}
}  // namespace

SphericalGrid build_grid_degree(int degree) { return product_grid(std::max(1, (degree + 2) / 2), degree + 2); }

SphericalGrid build_grid(HalfInt j, int refine) {
    require_spin(j);
    if (refine < 1) throw std::domain_error("grid refinement must be >= 1");
    return product_grid((j.twice + 1) * refine, (2 * j.twice + 2) * refine);
}

MatAccumulator::MatAccumulator(int n) : sum_(MatC::Zero(n, n)), comp_(MatC::Zero(n, n)) {}

void MatAccumulator::add(const MatC& term) {
    // Neumaier summation, separately on real and imaginary parts
    for (Eigen::Index i = 0; i < term.size(); ++i) {
        double* s = reinterpret_cast<double*>(&sum_.data()[i]);
        double* c = reinterpret_cast<double*>(&comp_.data()[i]);
        const double* x = reinterpret_cast<const double*>(&term.data()[i]);
        for (int p = 0; p < 2; ++p) {
            const double t = s[p] + x[p];
            if (std::abs(s[p]) >= std::abs(x[p])) c[p] += (s[p] - t) + x[p];
            else c[p] += (x[p] - t) + s[p];
            s[p] = t;
        }
    }
}

bool is_density(const DensityMatrix& rho, double tol) {
    if (!rho.is_hermitian(tol)) return false;
    if (std::abs(rho.mat.trace() - cplx(1, 0)) > tol) return false;
    Eigen::SelfAdjointEigenSolver<MatC> es(rho.mat);
    return es.eigenvalues().minCoeff() > -tol;
}

DensityMatrix random_density(HalfInt j, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    const int n = dim(j);
    MatC A(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
            const double re = nd(gen);
            const double im = nd(gen);
            A(r, c) = cplx(re, im);
        }
    MatC rho = A * A.adjoint();
    rho /= rho.trace().real();
    rho = (rho + rho.adjoint()) / 2.0;
    return {j, rho};
}

DensityMatrix pure_density(const Eigen::VectorXcd& psi, HalfInt j) {
    const Eigen::VectorXcd v = psi.normalized();
    return {j, v * v.adjoint()};
}

SpinOperator sw_kernel(HalfInt j, const UnitVector& n) {
    const std::vector<MatC> f = cheb_ops_all(j, n);
    MatC acc = MatC::Zero(dim(j), dim(j));
    for (int l = 0; l <= j.twice; ++l) acc += std::sqrt(2.0 * l + 1) * f[l];
    return {j, acc / std::sqrt(j.twice + 1.0)};
}

double sw_trace_kernel(HalfInt j, const UnitVector& n, const UnitVector& np) {
    const MatC a = sw_kernel(j, n).mat, b = sw_kernel(j, np).mat;
    return (j.twice + 1.0) / (4 * kPi) * (a * b).trace().real();
}

double reproducing_kernel(HalfInt j, const UnitVector& n, const UnitVector& np) {
    const double x = dot(n, np);
    double acc = 0.0;
    for (int l = 0; l <= j.twice; ++l) acc += (2.0 * l + 1) / (4 * kPi) * legendre_P(l, x);
    return acc;
}

double sw_traciality_residual(HalfInt j, const UnitVector& n, const SphericalGrid& g) {
    require_exact(j, g);
    MatAccumulator acc(dim(j));
    for (const GridNode& nd : g.nodes)
        acc.add(nd.weight * reproducing_kernel(j, n, nd.n) * sw_kernel(j, nd.n).mat);
    return max_abs(acc.result() - sw_kernel(j, n).mat);
}

SpinOperator dequantizer(HalfInt j, HalfInt m, const UnitVector& n) { return projector(j, m, n); }

SpinOperator quantizer(HalfInt j, HalfInt m, const UnitVector& n) {
    if (!valid_projection(j, m)) throw std::domain_error("invalid projection " + m.str());
    const ChebTable t = ChebTable::build(j);
    const std::vector<MatC> f = cheb_ops_all(j, n);
    MatC acc = MatC::Zero(dim(j), dim(j));
    for (int l = 0; l <= j.twice; ++l) acc += (2.0 * l + 1) * t(l, m) * f[l];
    return {j, acc};
}

double delta_w_kernel(HalfInt j, HalfInt m, const UnitVector& n, HalfInt mp, const UnitVector& np) {
    const ChebTable t = ChebTable::build(j);
    const double x = dot(n, np);
    double acc = 0.0;
    for (int l = 0; l <= j.twice; ++l) acc += (2.0 * l + 1) * t(l, m) * t(l, mp) * legendre_P(l, x);
    return acc;
}

GridOperators GridOperators::build(HalfInt j, const SphericalGrid& g) {
    GridOperators ops{j, {}};
    ops.f.reserve(g.nodes.size());
    for (const GridNode& nd : g.nodes) ops.f.push_back(cheb_ops_all(j, nd.n));
    return ops;
}

Tomogram tomogram_of(const DensityMatrix& rho, const SphericalGrid& g, const GridOperators& ops) {
    const HalfInt j = rho.j;
    const ChebTable t = ChebTable::build(j);
    Tomogram tg{j, Eigen::MatrixXd(dim(j), g.nodes.size())};
    Eigen::VectorXd F(dim(j));
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        for (int l = 0; l <= j.twice; ++l) F(l) = real_trace_product(rho.mat, ops.f[k][l]);
        // w(m, n) = sum_l f_l(m) Tr[rho f_l(n.J)]
        tg.w.col(k) = t.values.transpose() * F;
    }
    return tg;
}

Tomogram tomogram_of(const DensityMatrix& rho, const SphericalGrid& g) {
    return tomogram_of(rho, g, GridOperators::build(rho.j, g));
}

DensityMatrix reconstruct_density(const Tomogram& w, const SphericalGrid& g, const GridOperators& ops) {
    const HalfInt j = w.j;
    require_exact(j, g);
    const ChebTable t = ChebTable::build(j);
    MatAccumulator acc(dim(j));
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const Eigen::VectorXd wk = w.w.col(k);
        MatC xi_sum = MatC::Zero(dim(j), dim(j));
        // sum_m w(m,n) Xi(m,n) = sum_l (2l+1) [sum_m w(m,n) f_l(m)] f_l(n.J)
        for (int l = 0; l <= j.twice; ++l) xi_sum += (2.0 * l + 1) * t.values.row(l).dot(wk) * ops.f[k][l];
        acc.add(g.nodes[k].weight / (4 * kPi) * xi_sum);
    }
    return {j, acc.result()};
}

DensityMatrix reconstruct_density(const Tomogram& w, const SphericalGrid& g) {
    return reconstruct_density(w, g, GridOperators::build(w.j, g));
}

double husimi_Q(const DensityMatrix& rho, const UnitVector& n) {
    return real_trace_product(rho.mat, coherent_projector(rho.j, n).mat);
}

double wigner_W(const DensityMatrix& rho, const UnitVector& n) {
    return real_trace_product(rho.mat, sw_kernel(rho.j, n).mat);
}

Reconstruction reconstruct_from_Q(HalfInt j, const std::vector<double>& q, const SphericalGrid& g,
                                  const GridOperators& ops) {
    require_exact(j, g);
    MatAccumulator acc(dim(j));
    std::vector<double> inv(dim(j));
    double fmax = 0.0, fmin = 1e300;
    for (int l = 0; l <= j.twice; ++l) {
        const double f = cheb_at_top(j, l);
        inv[l] = 1.0 / f;
        fmax = std::max(fmax, f);
        fmin = std::min(fmin, f);
    }
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        MatC term = MatC::Zero(dim(j), dim(j));
        for (int l = 0; l <= j.twice; ++l) term += inv[l] * (2.0 * l + 1) / (4 * kPi) * ops.f[k][l];
        acc.add(g.nodes[k].weight * q[k] * term);
    }
    return {{j, acc.result()}, fmax / fmin};
}

DensityMatrix reconstruct_from_W(HalfInt j, const std::vector<double>& w, const SphericalGrid& g,
                                 const GridOperators& ops) {
    require_exact(j, g);
    MatAccumulator acc(dim(j));
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        MatC term = MatC::Zero(dim(j), dim(j));
        for (int l = 0; l <= j.twice; ++l)
            term += std::sqrt((j.twice + 1.0) / (2.0 * l + 1)) * (2.0 * l + 1) / (4 * kPi) * ops.f[k][l];
        acc.add(g.nodes[k].weight * w[k] * term);
    }
    return {j, acc.result()};
}

DensityMatrix reconstruct_single_sum(const DensityMatrix& rho, const SphericalGrid& g,
                                     const GridOperators& ops) {
    const HalfInt j = rho.j;
    require_exact(j, g);
    MatAccumulator acc(dim(j));
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        MatC term = MatC::Zero(dim(j), dim(j));
        for (int l = 0; l <= j.twice; ++l)
            term += (2.0 * l + 1) / (4 * kPi) * real_trace_product(rho.mat, ops.f[k][l]) * ops.f[k][l];
        acc.add(g.nodes[k].weight * term);
    }
    return {j, acc.result()};
}

DensityMatrix reconstruct_group(const DensityMatrix& rho, const SphericalGrid& g, int n_psi) {
    const HalfInt j = rho.j;
    require_exact(j, g);
    std::vector<double> x, w;
    gauss_legendre(n_psi, x, w);
    MatAccumulator acc(dim(j));
    const double pre = (j.twice + 1.0) / (4 * kPi * kPi);
    for (const GridNode& nd : g.nodes) {
        Eigen::SelfAdjointEigenSolver<MatC> es(n_dot_J(j, nd.n));
        const MatC& V = es.eigenvectors();
        const Eigen::VectorXd ev = es.eigenvalues();
        const MatC rv = V.adjoint() * rho.mat * V;   // rho in the n.J eigenbasis
        MatC inner = MatC::Zero(dim(j), dim(j));
        for (int a = 0; a < n_psi; ++a) {
            const double psi = kPi * (x[a] + 1);
            const double s = std::sin(psi / 2);
            cplx tr = 0;
            Eigen::VectorXcd back(dim(j));
            for (int i = 0; i < dim(j); ++i) {
                tr += rv(i, i) * std::exp(cplx(0, psi * ev(i)));
                back(i) = std::exp(cplx(0, -psi * ev(i)));
            }
            inner += (kPi * w[a] * s * s) * tr * MatC(back.asDiagonal());
        }
        acc.add(nd.weight * pre * (V * inner * V.adjoint()));
    }
    return {j, acc.result()};
}

double coherent_closure_check(HalfInt j, const SphericalGrid& g) {
    MatAccumulator acc(dim(j));
    for (const GridNode& nd : g.nodes) {
        const Eigen::VectorXcd v = coherent_state(j, nd.n);
        acc.add(nd.weight * (j.twice + 1.0) / (4 * kPi) * (v * v.adjoint()));
    }
    return max_abs(acc.result() - MatC::Identity(dim(j), dim(j)));
}

SpinOperator T_from_integral(HalfInt j, int lambda, int mu, const SphericalGrid& g) {
    if (lambda < 0 || lambda > j.twice || std::abs(mu) > lambda)
        throw std::domain_error("T_from_integral indices out of range");
    require_exact(j, g);
    MatAccumulator acc(dim(j));
    for (const GridNode& nd : g.nodes)
        acc.add(nd.weight * (2.0 * lambda + 1) / (4 * kPi) * racah_C(lambda, mu, nd.n) *
                cheb_ops_all(j, nd.n)[lambda]);
    return {j, acc.result()};
}

SpinOperator T_from_coherent_integral(HalfInt j, int lambda, int mu, const SphericalGrid& g) {
    if (lambda < 0 || lambda > j.twice || std::abs(mu) > lambda)
        throw std::domain_error("T_from_coherent_integral indices out of range");
    require_exact(j, g);
    MatAccumulator acc(dim(j));
    const double pre = (2.0 * lambda + 1) / (4 * kPi) / cheb_at_top(j, lambda);
    for (const GridNode& nd : g.nodes) {
        const Eigen::VectorXcd v = coherent_state(j, nd.n);
        acc.add(nd.weight * pre * racah_C(lambda, mu, nd.n) * (v * v.adjoint()));
    }
    return {j, acc.result()};
}

cplx racah_from_trace(HalfInt j, int lambda, int mu, const UnitVector& n) {
    return (polarization_T(j, lambda, mu).mat * cheb_op_n(j, lambda, n).mat).trace();
}

double frobenius(const MatC& a, const MatC& b) { return (a - b).norm(); }

}  // namespace spinchev
