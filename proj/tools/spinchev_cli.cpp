#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spinchev/chebyshev.hpp"
#include "spinchev/tomography.hpp"
#include "spinchev/transitions.hpp"
#include "spinchev/verify.hpp"

using namespace spinchev;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "spinchev.cli/1";

enum Exit { kPass = 0, kTolerance = 1, kUsage = 2 };

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// a table that renders as CSV (header + rows, '#' metadata lines) or as one JSON document
struct Output {
    std::string command;
    ordered_json params = ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<ordered_json>> rows;
    ordered_json summary = ordered_json::object();

    void emit(const std::string& format, std::ostream& os) const {
        if (format == "json") {
            ordered_json doc;
            doc["schema"] = kSchema;
            doc["command"] = command;
            doc["parameters"] = params;
            doc["columns"] = columns;
            ordered_json rr = ordered_json::array();
            for (const auto& r : rows) rr.push_back(r);
            doc["rows"] = rr;
            doc["summary"] = summary;
            os << doc.dump(2) << "\n";
            return;
        }
        os << "# schema=" << kSchema << " command=" << command << "\n";
        for (const auto& [k, v] : params.items()) os << "# " << k << "=" << cell(v) << "\n";
        for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
        os << "\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell(r[i]);
            os << "\n";
        }
        for (const auto& [k, v] : summary.items()) os << "# " << k << "=" << cell(v) << "\n";
    }

    static std::string cell(const ordered_json& v) {
        if (v.is_number_float()) return num(v.get<double>());
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    }
};

struct Common {
    std::string format = "csv";
    double tol = -1;   // < 0: per-command default
    bool degrees = false;

    double tol_or(double d) const { return tol >= 0 ? tol : d; }
    double angle(double a) const { return degrees ? a * std::numbers::pi / 180 : a; }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--tol", c.tol, "tolerance override");
    sub->add_flag("--degrees", c.degrees, "angles on the command line are in degrees");
}

ordered_json jnum(double v) { return ordered_json(v); }

int cmd_cheb_table(const Common& c, const std::string& js) {
    const HalfInt j = parse_halfint(js);
    require_spin(j);
    const ChebTable t = ChebTable::build(j);
    Output o;
    o.command = "cheb-table";
    o.params["j"] = j.str();
    o.columns = {"lambda", "m", "f"};
    for (int l = 0; l <= j.twice; ++l)
        for (int i = 0; i < dim(j); ++i) o.rows.push_back({l, projection_at(j, i).str(), jnum(t.values(l, i))});
    const double tol = c.tol_or(1e-12);
    const double orth = t.orthonormality_residual(), par = t.parity_residual();
    o.summary["orthonormality_residual"] = orth;
    o.summary["parity_residual"] = par;
    o.summary["tol"] = tol;
    const bool ok = orth < tol && par < tol;
    o.summary["pass"] = ok;
    o.emit(c.format, std::cout);
    return ok ? kPass : kTolerance;
}

struct TransitionArgs {
    std::string j, m, mp;
    double beta = NAN, omega1 = NAN, detuning = 0, t = NAN;
    int curve = 1;
};

int cmd_transition(const Common& c, const TransitionArgs& a) {
    const HalfInt j = parse_halfint(a.j), m = parse_halfint(a.m), mp = parse_halfint(a.mp);
    require_spin(j);
    if (!valid_projection(j, m) || !valid_projection(j, mp)) throw CLI::ValidationError("m/mp", "invalid projection");
    const bool drive = !std::isnan(a.omega1);
    if (drive == !std::isnan(a.beta)) throw CLI::ValidationError("--beta", "give either --beta or --omega1/--t");
    if (drive && std::isnan(a.t)) throw CLI::ValidationError("--t", "--omega1 needs --t");
    if (a.curve < 1) throw CLI::ValidationError("--curve", "must be >= 1");
    const bool flip = m == j && mp == -j;

    Output o;
    o.command = "transition";
    o.params["j"] = j.str();
    o.params["m"] = m.str();
    o.params["mp"] = mp.str();
    o.params["curve"] = a.curve;
    if (drive) {
        o.params["omega1"] = a.omega1;
        o.params["detuning"] = a.detuning;
        o.params["t"] = a.t;
        o.columns = {"t", "cos_beta", "P"};
    } else {
        o.params["beta"] = c.angle(a.beta);
        o.columns = {"beta", "cos_beta", "P"};
    }
    if (flip) {
        o.columns.push_back("closed_form");
        o.columns.push_back("deviation");
    }
    double maxdev = 0.0;
    for (int k = 0; k < a.curve; ++k) {
        const double frac = a.curve == 1 ? 1.0 : double(k) / (a.curve - 1);
        double x, cb, closed = 0;
        if (drive) {
            const RfDrive d{a.omega1, a.detuning, a.t * frac};
            x = d.t;
            cb = d.cos_beta();
            if (flip) closed = spin_flip_extreme_drive(j, d);
        } else {
            x = c.angle(a.beta) * frac;
            cb = std::cos(x);
            if (flip) closed = spin_flip_extreme(j, x);
        }
        const double P = meckler_probability(j, m, mp, cb);
        std::vector<ordered_json> row{jnum(x), jnum(cb), jnum(P)};
        if (flip) {
            row.push_back(jnum(closed));
            row.push_back(jnum(std::abs(P - closed)));
            maxdev = std::max(maxdev, std::abs(P - closed));
        }
        o.rows.push_back(row);
    }
    bool ok = true;
    if (flip) {
        const double tol = c.tol_or(1e-12);
        ok = maxdev < tol;
        o.summary["max_deviation"] = maxdev;
        o.summary["tol"] = tol;
    }
    o.summary["pass"] = ok;
    o.emit(c.format, std::cout);
    return ok ? kPass : kTolerance;
}

int cmd_tomography(const Common& c, const std::string& js, unsigned long long seed, int refine) {
    const HalfInt j = parse_halfint(js);
    require_spin(j);
    if (refine < 1) throw CLI::ValidationError("--refine", "must be >= 1");
    const SphericalGrid g = build_grid(j, refine);
    const GridOperators ops = GridOperators::build(j, g);
    const double tol = c.tol_or(1e-9);

    Output o;
    o.command = "tomography-demo";
    o.params["j"] = j.str();
    o.params["seed"] = seed;
    o.params["refine"] = refine;
    o.columns = {"state", "route", "frobenius_error"};
    MatC top = MatC::Zero(dim(j), dim(j));
    top(dim(j) - 1, dim(j) - 1) = 1.0;
    const std::vector<std::pair<std::string, DensityMatrix>> states{
        {"random", random_density(j, seed)},
        {"maximally_mixed", {j, MatC::Identity(dim(j), dim(j)) / double(dim(j))}},
        {"pure_top", {j, top}}};
    double worst = 0.0, cond = 1.0;
    for (const auto& [name, rho] : states) {
        const Tomogram w = tomogram_of(rho, g, ops);
        std::vector<double> q, W;
        for (const auto& nd : g.nodes) {
            q.push_back(husimi_Q(rho, nd.n));
            W.push_back(wigner_W(rho, nd.n));
        }
        const Reconstruction rq = reconstruct_from_Q(j, q, g, ops);
        cond = rq.condition;
        const std::vector<std::pair<std::string, double>> errs{
            {"tomogram", frobenius(reconstruct_density(w, g, ops).mat, rho.mat)},
            {"husimi", frobenius(rq.rho.mat, rho.mat)},
            {"wigner", frobenius(reconstruct_from_W(j, W, g, ops).mat, rho.mat)}};
        for (const auto& [route, e] : errs) {
            o.rows.push_back({name, route, jnum(e)});
            worst = std::max(worst, e);
        }
    }
    o.summary["grid_nodes"] = g.nodes.size();
    o.summary["grid_n_theta"] = g.n_theta;
    o.summary["grid_n_phi"] = g.n_phi;
    o.summary["grid_exactness_degree"] = g.exactness_degree;
    o.summary["grid_weight_sum"] = g.weight_sum();
    o.summary["husimi_condition"] = cond;
    o.summary["max_error"] = worst;
    o.summary["tol"] = tol;
    const bool ok = worst < tol;
    o.summary["pass"] = ok;
    o.emit(c.format, std::cout);
    return ok ? kPass : kTolerance;
}

int cmd_verify(const Common& c, const std::string& suite, double perturb, unsigned long long seed, int max_tj) {
    VerifyOptions opt;
    if (c.tol >= 0) opt.tol = c.tol;
    opt.perturb = perturb;
    opt.seed = seed;
    opt.max_twice_j = max_tj;
    const std::vector<Residual> res = run_verify(suite, opt);
    Output o;
    o.command = "verify";
    o.params["suite"] = suite;
    o.params["seed"] = seed;
    o.params["max_twice_j"] = max_tj;
    o.params["perturb"] = perturb;
    o.columns = {"suite", "identity", "residual", "tol", "pass"};
    bool ok = true;
    for (const Residual& r : res) {
        o.rows.push_back({r.suite, r.identity, jnum(r.value), jnum(r.tol), r.pass()});
        ok = ok && r.pass();
    }
    o.summary["pass"] = ok;
    o.emit(c.format, std::cout);
    return ok ? kPass : kTolerance;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chebyshev polynomial operators for spin: tables, transitions, tomography, identity checks"};
    app.require_subcommand(1);
    Common common;

    auto* cheb = app.add_subcommand("cheb-table", "f_lambda(m) for all lambda, m");
    std::string cj;
    cheb->add_option("--j", cj, "spin, e.g. 3/2")->required();
    add_common(cheb, common);

    auto* tr = app.add_subcommand("transition", "transition probability P_{m m'}");
    TransitionArgs ta;
    tr->add_option("--j", ta.j)->required();
    tr->add_option("--m", ta.m)->required();
    tr->add_option("--mp", ta.mp)->required();
    tr->add_option("--beta", ta.beta, "tilt angle");
    tr->add_option("--omega1", ta.omega1, "rf amplitude (rad/s)");
    tr->add_option("--detuning", ta.detuning, "omega0 - omega (rad/s)");
    tr->add_option("--t", ta.t, "time (s)");
    tr->add_option("--curve", ta.curve, "number of samples from 0 to beta or t");
    add_common(tr, common);

    auto* tomo = app.add_subcommand("tomography-demo", "round-trip reconstruction of seeded states");
    std::string tj;
    unsigned long long tseed = 1;
    int refine = 1;
    tomo->add_option("--j", tj)->required();
    tomo->add_option("--seed", tseed);
    tomo->add_option("--refine", refine, "grid refinement factor");
    add_common(tomo, common);

    auto* ver = app.add_subcommand("verify", "run identity suites");
    std::string suite = "all";
    double perturb = 0.0;
    unsigned long long vseed = 12345;
    int max_tj = 10;
    std::vector<std::string> names{"all"};
    for (const auto& s : verify_suites()) names.push_back(s);
    ver->add_option("--suite", suite)->check(CLI::IsMember(names));
    ver->add_option("--perturb", perturb, "inject a relative error (self-test)");
    ver->add_option("--seed", vseed);
    ver->add_option("--max-2j", max_tj)->check(CLI::Range(0, 40));
    add_common(ver, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*cheb) return cmd_cheb_table(common, cj);
        if (*tr) return cmd_transition(common, ta);
        if (*tomo) return cmd_tomography(common, tj, tseed, refine);
        return cmd_verify(common, suite, perturb, vseed, max_tj);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
