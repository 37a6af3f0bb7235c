#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spinchev/tomography.hpp"
#include "spinchev/transitions.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace spinchev;
using testutil::pi;

namespace {
HalfInt hj(int tj) { return HalfInt(tj); }
}

TEST_CASE("quadrature grid") {
    for (int tj = 0; tj <= 10; ++tj) {
        const SphericalGrid g = build_grid(hj(tj));
        CHECK(g.exactness_degree >= 2 * tj);
        CHECK(std::abs(g.weight_sum() - 4 * pi) < 1e-12);
        CHECK(g.nodes.size() == std::size_t((tj + 1) * (2 * tj + 2)));
        cplx c10 = 0, top = 0;
        for (const auto& nd : g.nodes) {
            c10 += nd.weight * racah_C(1, 0, nd.n);
            top += nd.weight * std::norm(racah_C(tj, tj, nd.n));
        }
        CHECK(std::abs(c10) < 1e-13);
        CHECK(std::abs(top - 4 * pi / (2 * tj + 1)) < 1e-12);
    }
    // orthogonality of C_lm up to the declared degree
    const SphericalGrid g = build_grid_degree(8);
    CHECK(g.exactness_degree >= 8);
    for (int l = 0; l <= 4; ++l)
        for (int lp = 0; lp <= 4; ++lp)
            for (int m = -l; m <= l; ++m)
                for (int mp = -lp; mp <= lp; ++mp) {
                    cplx s = 0;
                    for (const auto& nd : g.nodes) s += nd.weight * racah_C(l, m, nd.n) * std::conj(racah_C(lp, mp, nd.n));
                    const double want = (l == lp && m == mp) ? 4 * pi / (2 * l + 1) : 0.0;
                    CHECK(std::abs(s - want) < 1e-12);
                }
    std::vector<double> x, w;
    gauss_legendre(7, x, w);
    double s = 0, s6 = 0;
    for (int i = 0; i < 7; ++i) {
        s += w[i];
        s6 += w[i] * std::pow(x[i], 12);
    }
    CHECK(s == doctest::Approx(2.0));
    CHECK(s6 == doctest::Approx(2.0 / 13));
    CHECK_THROWS_AS(build_grid(hj(2), 0), std::domain_error);
}

TEST_CASE("random density matrices") {
    for (int tj = 0; tj <= 8; ++tj)
        for (std::uint64_t seed : {1u, 2u, 99u}) {
            const DensityMatrix r = random_density(hj(tj), seed);
            CHECK(is_density(r, 1e-12));
            CHECK(max_abs(r.mat - random_density(hj(tj), seed).mat) == 0.0);
        }
    CHECK(max_abs(random_density(hj(3), 1).mat - random_density(hj(3), 2).mat) > 1e-3);
    DensityMatrix bad{hj(1), MatC::Identity(2, 2)};
    CHECK_FALSE(is_density(bad, 1e-12));
}

TEST_CASE("Stratonovich-Weyl kernel") {
    std::mt19937_64 g(4);
    const UnitVector n0{0.9, 2.4};
    const SpinOperator d = sw_kernel(hj(1), n0);
    CHECK(max_abs(d.mat - (0.5 * MatC::Identity(2, 2) + std::sqrt(3.0) * n_dot_J(hj(1), n0))) < 1e-14);
    for (int tj = 0; tj <= 8; ++tj) {
        const HalfInt j = hj(tj);
        const UnitVector a = testutil::random_unit(g), b = testutil::random_unit(g);
        const SpinOperator D = sw_kernel(j, a);
        CHECK(D.is_hermitian(1e-13));
        CHECK(std::abs(D.trace() - 1.0) < 1e-13);
        CHECK(std::abs(sw_trace_kernel(j, a, b) - reproducing_kernel(j, a, b)) < 1e-12);
        CHECK(reproducing_kernel(j, a, a) == doctest::Approx((tj + 1.0) * (tj + 1.0) / (4 * pi)));
        CHECK(sw_traciality_residual(j, a, build_grid(j)) < 1e-11);
    }
    CHECK(reproducing_kernel(hj(0), n0, UnitVector{2.0, 1.0}) == doctest::Approx(1 / (4 * pi)));
}

TEST_CASE("quantizer and dequantizer") {
    std::mt19937_64 g(6);
    for (int tj = 0; tj <= 6; ++tj) {
        const HalfInt j = hj(tj);
        const UnitVector a = testutil::random_unit(g), b = testutil::random_unit(g);
        for (int x = 0; x <= tj; ++x) {
            const HalfInt m = projection_at(j, x);
            CHECK(max_abs(dequantizer(j, m, a).mat - projector(j, m, a).mat) < 1e-14);
            for (int y = 0; y <= tj; ++y) {
                const HalfInt mp = projection_at(j, y);
                const double tr = (quantizer(j, mp, b).mat * dequantizer(j, m, a).mat).trace().real();
                CHECK(std::abs(tr - delta_w_kernel(j, m, a, mp, b)) < 1e-11);
            }
        }
    }
    CHECK(max_abs(quantizer(hj(0), HalfInt(0), UnitVector{1, 1}).mat - MatC::Identity(1, 1)) < 1e-15);
}

TEST_CASE("delta kernel acts as a delta on tomograms") {
    for (int tj : {1, 2, 3, 4}) {
        const HalfInt j = hj(tj);
        const SphericalGrid g = build_grid(j);
        const DensityMatrix rho = random_density(j, 40 + tj);
        const Tomogram w = tomogram_of(rho, g);
        for (std::size_t k : {std::size_t(0), g.nodes.size() / 3, g.nodes.size() - 1}) {
            const UnitVector n = g.nodes[k].n;
            for (int x = 0; x <= tj; ++x) {
                const HalfInt m = projection_at(j, x);
                double full = 0, restricted = 0;
                for (std::size_t q = 0; q < g.nodes.size(); ++q)
                    for (int y = 0; y <= tj; ++y) {
                        const HalfInt mp = projection_at(j, y);
                        const double kern = g.nodes[q].weight / (4 * pi) * delta_w_kernel(j, m, n, mp, g.nodes[q].n);
                        full += kern * w.w(y, q);
                        if (x == y) restricted += kern * w.w(y, q);
                    }
                CHECK(std::abs(full - w.w(x, k)) < 1e-10);
                // with an extra delta_{m m'} the sum over m' collapses and the property is lost
                if (x == 0) CHECK(std::abs(restricted - w.w(x, k)) > 1e-6);
            }
        }
    }
}

TEST_CASE("tomogram properties") {
    for (int tj = 0; tj <= 8; ++tj) {
        const HalfInt j = hj(tj);
        const SphericalGrid g = build_grid(j);
        const GridOperators ops = GridOperators::build(j, g);
        const DensityMatrix mixed{j, MatC::Identity(tj + 1, tj + 1) / double(tj + 1)};
        const Tomogram wm = tomogram_of(mixed, g, ops);
        CHECK((wm.w.array() - 1.0 / (tj + 1)).abs().maxCoeff() < 1e-13);
        const Tomogram w = tomogram_of(random_density(j, 7), g, ops);
        CHECK(w.w.minCoeff() > -1e-12);
        CHECK((w.w.colwise().sum().array() - 1.0).abs().maxCoeff() < 1e-12);
    }
    // |jj> along z
    const HalfInt j = hj(4);
    MatC top = MatC::Zero(5, 5);
    top(4, 4) = 1;
    SphericalGrid one;
    one.nodes.push_back({{0, 0}, 1.0});
    const Tomogram t = tomogram_of(DensityMatrix{j, top}, one);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(t.w(i, 0) - (i == 4 ? 1.0 : 0.0)) < 1e-13);
}

TEST_CASE("Husimi and Wigner distributions against frozen values") {
    const DensityMatrix rho{hj(2), testutil::to_mat(oracle::rho1)};
    REQUIRE(is_density(rho, 1e-12));
    for (const auto& c : oracle::phase1) {
        const UnitVector n{c.theta, c.phi};
        CHECK(std::abs(husimi_Q(rho, n) - c.Q) < 1e-14);
        CHECK(std::abs(wigner_W(rho, n) - c.W) < 1e-14);
        // both as Chebyshev sums
        double q = 0, w = 0;
        for (int l = 0; l <= 2; ++l) {
            const double F = (rho.mat * cheb_op_n(hj(2), l, n).mat).trace().real();
            q += cheb_at_top(hj(2), l) * F;
            w += std::sqrt((2 * l + 1) / 3.0) * F;
        }
        CHECK(std::abs(q - c.Q) < 1e-14);
        CHECK(std::abs(w - c.W) < 1e-14);
    }
    const DensityMatrix mixed{hj(5), MatC::Identity(6, 6) / 6.0};
    CHECK(husimi_Q(mixed, UnitVector{0.3, 0.3}) == doctest::Approx(1 / 6.0));
    CHECK(wigner_W(mixed, UnitVector{0.3, 0.3}) == doctest::Approx(1 / 6.0));
}

TEST_CASE("reconstruction round trips") {
    for (int tj = 0; tj <= 8; ++tj) {
        const HalfInt j = hj(tj);
        const SphericalGrid g = build_grid(j);
        const GridOperators ops = GridOperators::build(j, g);
        std::vector<DensityMatrix> states;
        for (std::uint64_t s = 1; s <= 5; ++s) states.push_back(random_density(j, s));
        states.push_back({j, MatC::Identity(tj + 1, tj + 1) / double(tj + 1)});
        states.push_back(pure_density(coherent_state(j, UnitVector{1.1, 0.4}), j));
        for (const DensityMatrix& rho : states) {
            const Tomogram w = tomogram_of(rho, g, ops);
            CHECK(frobenius(reconstruct_density(w, g, ops).mat, rho.mat) < 1e-10);
            std::vector<double> q, W;
            for (const auto& nd : g.nodes) {
                q.push_back(husimi_Q(rho, nd.n));
                W.push_back(wigner_W(rho, nd.n));
            }
            const Reconstruction rq = reconstruct_from_Q(j, q, g, ops);
            CHECK(frobenius(rq.rho.mat, rho.mat) < 1e-10);
            CHECK(rq.condition >= 1.0);
            CHECK(frobenius(reconstruct_from_W(j, W, g, ops).mat, rho.mat) < 1e-10);
            CHECK(frobenius(reconstruct_single_sum(rho, g, ops).mat, rho.mat) < 1e-10);
        }
    }
    // an under-resolved grid is refused
    const HalfInt j = hj(4);
    const SphericalGrid coarse = build_grid_degree(5);
    const Tomogram w = tomogram_of(random_density(j, 1), coarse);
    CHECK_THROWS_AS(reconstruct_density(w, coarse), std::domain_error);
    // doubled grid still exact
    const SphericalGrid fine = build_grid(j, 2);
    const DensityMatrix rho = random_density(j, 3);
    CHECK(frobenius(reconstruct_density(tomogram_of(rho, fine), fine).mat, rho.mat) < 1e-10);
}

TEST_CASE("group-theoretic reconstruction") {
    for (int tj : {1, 2, 3, 4}) {
        const HalfInt j = hj(tj);
        const SphericalGrid g = build_grid(j);
        const DensityMatrix rho = random_density(j, 11);
        CHECK(frobenius(reconstruct_group(rho, g, 4 * tj + 8).mat, rho.mat) < 1e-9);
    }
}

TEST_CASE("coherent closure and tensor integrals") {
    for (int tj = 0; tj <= 8; ++tj) CHECK(coherent_closure_check(hj(tj), build_grid(hj(tj))) < 1e-12);
    for (int tj : {1, 2, 3, 5}) {
        const HalfInt j = hj(tj);
        const SphericalGrid g = build_grid(j);
        for (int l = 0; l <= tj; ++l)
            for (int mu = -l; mu <= l; ++mu) {
                const MatC T = polarization_T(j, l, mu).mat;
                CHECK(max_abs(T_from_integral(j, l, mu, g).mat - T) < 1e-11);
                CHECK(max_abs(T_from_coherent_integral(j, l, mu, g).mat - T) < 1e-10);
                CHECK(std::abs(racah_from_trace(j, l, mu, UnitVector{0.8, 1.9}) - racah_C(l, mu, UnitVector{0.8, 1.9})) < 1e-13);
            }
    }
    CHECK(max_abs(T_from_integral(hj(3), 0, 0, build_grid(hj(3))).mat - MatC::Identity(4, 4) / 2.0) < 1e-13);
}
