#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "spinchev/operators.hpp"
#include "spinchev/recoupling.hpp"
#include "spinchev/tomography.hpp"
#include "spinchev/transitions.hpp"
#include "spinchev/verify.hpp"

namespace py = pybind11;
using namespace spinchev;

namespace {
// spins and projections may be given as "3/2", 1.5 or 3//2-style ints
HalfInt half(const py::object& o) {
    if (py::isinstance<py::str>(o)) return parse_halfint(o.cast<std::string>());
    const double v = o.cast<double>();
    const double tw = 2 * v;
    if (tw != std::round(tw)) throw std::invalid_argument("not a half-integer: " + std::to_string(v));
    return HalfInt(static_cast<int>(std::lround(tw)));
}

DensityMatrix density(const py::object& j, const MatC& rho) {
    const HalfInt jj = half(j);
    if (rho.rows() != dim(jj) || rho.cols() != dim(jj)) throw std::invalid_argument("rho has the wrong dimension");
    return {jj, rho};
}
}  // namespace

PYBIND11_MODULE(_spinchev, m) {
    m.doc() = "Chebyshev polynomials of a discrete variable and spin operators";

    // angular
    m.def("clebsch_gordan", [](py::object a, py::object al, py::object b, py::object be, py::object c, py::object ga) {
        return clebsch_gordan(half(a), half(al), half(b), half(be), half(c), half(ga));
    }, "C^{c gamma}_{a alpha b beta}");
    m.def("wigner_d", [](py::object j, double beta) { return wigner_d(half(j), beta); });
    m.def("wigner_D_euler", [](py::object j, double a, double b, double g) {
        return wigner_D_euler(half(j), Euler{a, b, g});
    });
    m.def("wigner_D_angle_axis", [](py::object j, double psi, double Theta, double Phi) {
        return wigner_D_angle_axis(half(j), AngleAxis{psi, Theta, Phi});
    });
    m.def("to_euler", [](double psi, double Theta, double Phi) {
        const Euler e = to_euler(AngleAxis{psi, Theta, Phi});
        return py::make_tuple(e.alpha, e.beta, e.gamma);
    });
    m.def("racah_C", [](int l, int mu, double theta, double phi) { return racah_C(l, mu, UnitVector{theta, phi}); });
    m.def("generalized_character", [](py::object j, int l, double psi) { return generalized_character(half(j), l, psi); });

    // chebyshev
    m.def("cheb_table", [](py::object j) { return ChebTable::build(half(j)).values; },
          "f_lambda(m) with rows lambda = 0..2j and columns m = -j..j");
    m.def("cheb_value", [](py::object j, int l, py::object mm) { return cheb_scalar_recursion(half(j), l, half(mm)); });
    m.def("cheb_value_cg", [](py::object j, int l, py::object mm) { return cheb_scalar_cg(half(j), l, half(mm)); });

    // operators
    m.def("spin_matrices", [](py::object j) {
        const SpinMatrices s = spin_matrices(half(j));
        py::dict d;
        d["Jx"] = s.Jx;
        d["Jy"] = s.Jy;
        d["Jz"] = s.Jz;
        d["Jplus"] = s.Jplus;
        d["Jminus"] = s.Jminus;
        return d;
    });
    m.def("polarization_T", [](py::object j, int l, int mu) { return polarization_T(half(j), l, mu).mat; });
    m.def("cheb_op", [](py::object j, int l, double theta, double phi) {
        return cheb_op_n(half(j), l, UnitVector{theta, phi}).mat;
    }, "f_lambda(n.J)");
    m.def("projector", [](py::object j, py::object mm, double theta, double phi) {
        return projector(half(j), half(mm), UnitVector{theta, phi}).mat;
    });
    m.def("coherent_state", [](py::object j, double theta, double phi) {
        return coherent_state(half(j), UnitVector{theta, phi});
    });
    m.def("rotation_exact", [](py::object j, double psi, double theta, double phi) {
        return rotation_exact(half(j), AngleAxis{psi, theta, phi}).mat;
    }, "exp(-i psi n.J)");
    m.def("rotation_corio", [](py::object j, double psi, double theta, double phi) {
        return rotation_corio(half(j), psi, UnitVector{theta, phi}).mat;
    }, "exp(+i psi n.J) from the Chebyshev expansion");
    m.def("operator_equivalent_check", [](py::object j, int l, int k, bool marinelli) {
        const EquivalentReport r = operator_equivalent_check(half(j), l, k, marinelli);
        py::dict d;
        d["ratio"] = r.ratio_mean;
        d["spread"] = r.ratio_spread;
        d["offpattern"] = r.offpattern;
        d["entries"] = r.entries;
        return d;
    }, py::arg("j"), py::arg("lam"), py::arg("k"), py::arg("marinelli") = false);

    // transitions
    m.def("meckler_probability", [](py::object j, py::object a, py::object b, double cos_beta) {
        return meckler_probability(half(j), half(a), half(b), cos_beta);
    });
    m.def("spin_flip_extreme", [](py::object j, double beta) { return spin_flip_extreme(half(j), beta); });
    m.def("spin_flip_next", [](py::object j, double beta) { return spin_flip_next(half(j), beta); });
    m.def("landau_zener_probability", [](py::object s, py::object a, py::object b, double p) {
        return landau_zener_probability(half(s), half(a), half(b), p);
    });
    m.def("squared_D_halfpi", [](py::object j, py::object a, py::object b, double al, double ga) {
        return squared_D_halfpi(half(j), half(a), half(b), al, ga);
    });
    m.def("inverse_meckler", [](py::object j, int L, double beta) { return inverse_meckler(half(j), L, beta); });
    m.def("total_probability", [](py::object j, py::object a, double beta) {
        return total_probability(half(j), half(a), beta);
    });

    // tomography
    m.def("random_density", [](py::object j, std::uint64_t seed) { return random_density(half(j), seed).mat; });
    m.def("husimi_Q", [](py::object j, const MatC& rho, double theta, double phi) {
        return husimi_Q(density(j, rho), UnitVector{theta, phi});
    });
    m.def("wigner_W", [](py::object j, const MatC& rho, double theta, double phi) {
        return wigner_W(density(j, rho), UnitVector{theta, phi});
    });
    m.def("reconstruct", [](py::object j, const MatC& rho, const std::string& route, int refine) {
        const DensityMatrix r = density(j, rho);
        const SphericalGrid g = build_grid(r.j, refine);
        const GridOperators ops = GridOperators::build(r.j, g);
        if (route == "tomogram") return reconstruct_density(tomogram_of(r, g, ops), g, ops).mat;
        std::vector<double> v;
        for (const auto& nd : g.nodes) v.push_back(route == "husimi" ? husimi_Q(r, nd.n) : wigner_W(r, nd.n));
        if (route == "husimi") return reconstruct_from_Q(r.j, v, g, ops).rho.mat;
        if (route == "wigner") return reconstruct_from_W(r.j, v, g, ops).mat;
        throw std::invalid_argument("route must be tomogram, husimi or wigner");
    }, "sample rho on the grid through one distribution and rebuild it", py::arg("j"), py::arg("rho"),
       py::arg("route") = "tomogram", py::arg("refine") = 1);
    m.def("coherent_closure", [](py::object j) { return coherent_closure_check(half(j), build_grid(half(j))); });

    // recoupling
    m.def("rank2_recoupling_residual", [](py::object j, double theta, double phi) {
        return verify_rank2_recoupling(half(j), UnitVector{theta, phi}).max_diff;
    });

    // identity suites
    m.def("run_verify", [](const std::string& suite, double perturb, std::uint64_t seed) {
        VerifyOptions opt;
        opt.perturb = perturb;
        opt.seed = seed;
        py::list out;
        for (const Residual& r : run_verify(suite, opt)) {
            py::dict d;
            d["suite"] = r.suite;
            d["identity"] = r.identity;
            d["residual"] = r.value;
            d["tol"] = r.tol;
            d["pass"] = r.pass();
            out.append(d);
        }
        return out;
    }, py::arg("suite") = "all", py::arg("perturb") = 0.0, py::arg("seed") = 12345);
}
