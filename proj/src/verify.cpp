#include "spinchev/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "spinchev/operators.hpp"
#include "spinchev/recoupling.hpp"
#include "spinchev/transitions.hpp"

namespace spinchev {

namespace {
constexpr double kPi = std::numbers::pi;

struct Ctx {
    const VerifyOptions& opt;
    std::mt19937_64 gen;
    std::vector<Residual>& out;

    double k() const { return 1.0 + opt.perturb; }
    UnitVector unit() {
        std::uniform_real_distribution<double> u(-1.0, 1.0), p(0.0, 2 * kPi);
        const double c = u(gen);
        return {std::acos(c), p(gen)};
    }
    void add(const std::string& suite, const std::string& id, double v, double tol) {
        out.push_back({suite, id, v, opt.tol.value_or(tol)});
    }
};

void traces(Ctx& c) {
    double one = 0.0, two = 0.0;
    for (int tj = 0; tj <= c.opt.max_twice_j; ++tj) {
        const HalfInt j(tj);
        for (int rep = 0; rep < 4; ++rep) {
            const UnitVector a = c.unit(), b = c.unit();
            const std::vector<MatC> fa = cheb_ops_all(j, a), fb = cheb_ops_all(j, b);
            for (int l = 0; l <= tj; ++l) {
                const double want = l == 0 ? std::sqrt(tj + 1.0) : 0.0;
                one = std::max(one, std::abs(c.k() * fa[l].trace().real() - want));
                for (int lp = 0; lp <= tj; ++lp) {
                    const double w2 = l == lp ? legendre_P(l, dot(a, b)) : 0.0;
                    two = std::max(two, std::abs(c.k() * (fa[l] * fb[lp]).trace().real() - w2));
                }
            }
        }
    }
    c.add("traces", "trace_single", one, 1e-11);
    c.add("traces", "trace_pair", two, 1e-10);
}

void rotation(Ctx& c) {
    double corio = 0.0, meck = 0.0, wig = 0.0, sums = 0.0;
    std::uniform_real_distribution<double> ang(0.0, 4 * kPi);
    for (int tj = 0; tj <= c.opt.max_twice_j; ++tj) {
        const HalfInt j(tj);
        for (int rep = 0; rep < 3; ++rep) {
            const UnitVector n = c.unit();
            const AngleAxis r{ang(c.gen), n.theta, n.phi};
            const MatC ex = rotation_exact(j, r).mat;
            corio = std::max(corio, max_abs(c.k() * rotation_corio(j, r.psi, n).mat - ex.adjoint()));
            const MatC D = wigner_D(j, r);
            wig = std::max(wig, max_abs(c.k() * D - ex));
            const double cb = std::cos(to_euler(r).beta);
            for (int a = 0; a <= tj; ++a) {
                const HalfInt m = projection_at(j, a);
                for (int b = 0; b <= tj; ++b)
                    meck = std::max(meck, std::abs(c.k() * meckler_probability(j, m, projection_at(j, b), cb) -
                                                   std::norm(D(a, b))));
                sums = std::max(sums, std::abs(c.k() * total_probability(j, m, r.psi) - 1.0));
            }
        }
    }
    c.add("rotation", "corio_vs_exact", corio, 1e-9);
    c.add("rotation", "wigner_D_vs_exponential", wig, 1e-10);
    c.add("rotation", "meckler_vs_D_squared", meck, 1e-10);
    c.add("rotation", "probability_sum", sums, 1e-11);
}

void recoupling(Ctx& c) {
    double r2 = 0.0, r1 = 0.0, rc = 0.0, dip = 0.0;
    for (int tj = 0; tj <= c.opt.max_twice_j; ++tj) {
        const HalfInt j(tj);
        const UnitVector n = c.unit();
        r1 = std::max(r1, verify_rank1(j, n).max_diff * c.k() + c.opt.perturb * verify_rank1(j, n).scale);
        const RecouplingReport rr = verify_rank2_recoupling(j, n);
        r2 = std::max(r2, rr.max_diff + c.opt.perturb * rr.scale);
        for (int l = 0; l <= tj; ++l) {
            const RecouplingReport cr = verify_cheb_recoupling(j, l, n);
            rc = std::max(rc, cr.max_diff + c.opt.perturb * cr.scale);
        }
    }
    for (int rep = 0; rep < 20; ++rep) dip = std::max(dip, dipolar_diagonal_residual(c.unit()) + c.opt.perturb);
    c.add("recoupling", "rank1", r1, 1e-13);
    c.add("recoupling", "rank2_three_forms", r2, 1e-11);
    c.add("recoupling", "chebyshev_rank0", rc, 1e-11);
    c.add("recoupling", "dipolar_diagonal", dip, 1e-12);
}

void characters(Ctx& c) {
    double half = 0.0, routes = 0.0, chi0 = 0.0;
    for (int k = 0; k <= 200; ++k) {
        const double psi = 4 * kPi * k / 200;
        half = std::max(half, std::abs(c.k() * generalized_character(HalfInt(1), 1, psi) -
                                       2 / std::sqrt(3.0) * std::sin(psi / 2)));
        for (int tj = 0; tj <= c.opt.max_twice_j; ++tj) {
            const HalfInt j(tj);
            for (int l = 0; l <= tj; ++l)
                routes = std::max(routes, std::abs(c.k() * generalized_character(j, l, psi) -
                                                   generalized_character_cheb(j, l, psi)));
            chi0 = std::max(chi0, std::abs(c.k() * generalized_character(j, 0, psi) - character(j, psi)));
        }
    }
    c.add("characters", "chi1_spin_half", half, 1e-13);
    c.add("characters", "gegenbauer_vs_chebyshev_sum", routes, 1e-11);
    c.add("characters", "chi0_is_group_character", chi0, 1e-11);
}
}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> s{"traces", "rotation", "recoupling", "characters"};
    return s;
}

std::vector<Residual> run_verify(const std::string& suite, const VerifyOptions& opt) {
    std::vector<Residual> out;
    Ctx c{opt, std::mt19937_64(opt.seed), out};
    bool any = false;
    auto want = [&](const char* name) {
        const bool w = suite == "all" || suite == name;
        any = any || w;
        return w;
    };
    if (want("traces")) traces(c);
    if (want("rotation")) rotation(c);
    if (want("recoupling")) recoupling(c);
    if (want("characters")) characters(c);
    if (!any) throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

}  // namespace spinchev
