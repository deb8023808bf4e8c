// summa: evaluate summability kernels and means on torus grids, run the
// verification suites, and emit table/figure data.

#include "summa/harness.hpp"
#include "summa/norms.hpp"
#include "summa/util.hpp"

#include "emit.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace summa;
using kernels::KernelSpec;
using kernels::Method;
using kernels::Region;
using nlohmann::json;

namespace {

struct Options {
    int d = 1;
    std::string q = "inf";
    std::string method = "fejer";
    double alpha = 1.0;
    double gamma = 1.0;
    std::vector<long> n{8};
    std::string theta_id;
    std::size_t grid = 256;
    double tau = 2.0;
    std::string format = "csv";
    std::string out = "out.csv";
    std::string f_id = "trig";
    std::string variant = "cube";
    std::string norm_id = "lp";
    double p = 2.0;
    std::string suite = "all";
    std::string report_path;
    std::string figure_id;
    std::uint64_t seed = 1;
};

KernelSpec build_spec(const Options& o, bool rectangular_if_multi = true) {
    KernelSpec spec;
    spec.dim = o.d;
    if (o.q == "rect" || (rectangular_if_multi && o.n.size() > 1)) {
        spec.region = Region::rectangular;
        spec.n = o.n;
        if (spec.n.size() == 1) spec.n.assign(static_cast<std::size_t>(o.d), o.n.front());
    } else {
        spec.region = o.q == "1" ? Region::ell1 : (o.q == "2" ? Region::ell2 : Region::ellinf);
        spec.n = {o.n.front()};
    }
    if (o.method == "dirichlet") spec.method = Method::dirichlet;
    else if (o.method == "fejer") spec.method = Method::fejer;
    else if (o.method == "riesz") spec.method = Method::riesz;
    else if (o.method == "cesaro") spec.method = Method::cesaro;
    else if (o.method == "theta") spec.method = Method::theta;
    else throw CLI::ValidationError("--method", "unknown method: " + o.method);
    spec.alpha = o.alpha;
    spec.gamma_exp = o.gamma;
    if (spec.method == Method::theta) {
        if (o.theta_id.empty()) throw CLI::ValidationError("--theta", "theta method needs --theta");
        try {
            spec.theta = std::make_shared<ThetaFunction>(theta_by_id(o.theta_id, o.d));
        } catch (const std::exception& e) {
            throw CLI::ValidationError("--theta", e.what());
        }
    }
    spec.validate();
    return spec;
}

std::string params_string(const Options& o, const std::string& sub) {
    std::string s = sub + " d=" + std::to_string(o.d) + " method=" + o.method;
    s += " n=";
    for (std::size_t i = 0; i < o.n.size(); ++i) s += (i ? "/" : "") + std::to_string(o.n[i]);
    s += " grid=" + std::to_string(o.grid);
    return s;
}

void write_grid_output(const Options& o, const std::string& sub,
                       const std::vector<std::vector<double>>& rows,
                       const std::vector<std::string>& columns, std::size_t G) {
    emit::Table table;
    table.header_comment = "# summa v1, " + params_string(o, sub);
    table.columns = columns;
    table.rows = rows;
    if (o.format == "csv") {
        table.write_csv(o.out);
        return;
    }
    if (o.format == "json") {
        json j;
        j["params"] = table.header_comment;
        j["columns"] = columns;
        j["rows"] = rows;
        std::ofstream out(o.out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + o.out);
        out << j.dump(2) << "\n";
        return;
    }
    if (o.format == "svg") {
        if (o.d == 1) {
            std::vector<double> x, y;
            for (const auto& r : rows) {
                x.push_back(r[0]);
                y.push_back(r[1]);
            }
            emit::write_svg_curve(o.out, x, y, params_string(o, sub));
        } else {
            std::vector<double> v;
            for (const auto& r : rows) v.push_back(r.back());
            emit::write_svg_heatmap(o.out, v, G, G, params_string(o, sub));
        }
        return;
    }
    throw CLI::ValidationError("--format", "unknown format: " + o.format);
}

int cmd_kernel(const Options& o) {
    auto spec = build_spec(o);
    auto values = kernels::kernel_grid(spec, o.grid);
    std::vector<std::vector<double>> rows;
    spectral::GridFunction probe(o.d, o.grid);
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto j = probe.unflatten(i);
        std::vector<double> row;
        for (int a = 0; a < o.d; ++a) row.push_back(probe.coordinate(j[a]));
        row.push_back(values[i]);
        rows.push_back(std::move(row));
    }
    std::vector<std::string> cols;
    for (int a = 0; a < o.d; ++a) cols.push_back(a == 0 ? "x" : "y");
    cols.push_back("value");
    write_grid_output(o, "kernel", rows, cols, o.grid);
    return 0;
}

int cmd_means(const Options& o) {
    auto spec = build_spec(o);
    auto tf = testfn::make_test_function(o.f_id, o.d, o.seed);
    auto f = tf.sample(o.grid);
    auto mean = spectral::summability_mean(spectral::analyze(f), spec);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto j = f.unflatten(i);
        std::vector<double> row;
        for (int a = 0; a < o.d; ++a) row.push_back(f.coordinate(j[a]));
        row.push_back(mean.samples[i].real());
        row.push_back(f.samples[i].real());
        rows.push_back(std::move(row));
    }
    std::vector<std::string> cols;
    for (int a = 0; a < o.d; ++a) cols.push_back(a == 0 ? "x" : "y");
    cols.push_back("mean");
    cols.push_back("f");
    write_grid_output(o, "means", rows, cols, o.grid);
    return 0;
}

int cmd_maxop(const Options& o) {
    auto tf = testfn::make_test_function(o.f_id, o.d, o.seed);
    auto f = tf.sample(o.grid);
    maximal::Variant v = o.variant == "cube"
                             ? maximal::Variant::cube()
                             : (o.variant == "cone" ? maximal::Variant::cone(o.tau)
                                                    : maximal::Variant::strong());
    if (o.variant != "cube" && o.variant != "cone" && o.variant != "strong")
        throw CLI::ValidationError("--variant", "unknown variant: " + o.variant);
    auto m = maximal::maximal_function(f, v);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto j = f.unflatten(i);
        std::vector<double> row;
        for (int a = 0; a < o.d; ++a) row.push_back(f.coordinate(j[a]));
        row.push_back(m.samples[i].real());
        rows.push_back(std::move(row));
    }
    std::vector<std::string> cols;
    for (int a = 0; a < o.d; ++a) cols.push_back(a == 0 ? "x" : "y");
    cols.push_back("maximal");
    write_grid_output(o, "maxop", rows, cols, o.grid);
    return 0;
}

int cmd_norm(const Options& o) {
    json j;
    if (o.norm_id == "wiener") {
        if (o.theta_id.empty()) throw CLI::ValidationError("--theta", "wiener norm needs --theta");
        auto th = theta_by_id(o.theta_id, o.d);
        // grow the translate radius until the tail bound clears the tolerance
        long radius = 30;
        while (th.wiener_tail && th.wiener_tail(static_cast<double>(radius + 1)) > 1e-6 &&
               radius < 4000)
            radius *= 2;
        auto rep = norms::wiener_amalgam_norm(th, radius);
        j = {{"norm_id", rep.norm_id}, {"value", rep.value}, {"tail", rep.tail},
             {"theta", o.theta_id}, {"radius", radius}};
    } else {
        auto tf = testfn::make_test_function(o.f_id, o.d, o.seed);
        auto f = tf.sample(o.grid);
        if (o.norm_id == "lp") {
            j = {{"norm_id", "lp"}, {"p", o.p}, {"value", norms::lp_norm(f, o.p)}};
        } else if (o.norm_id == "weak-lp") {
            j = {{"norm_id", "weak-lp"},
                 {"p", o.p},
                 {"value", norms::lp_norm(f, o.p, norms::LpKind::weak)}};
        } else if (o.norm_id == "llogl") {
            j = {{"norm_id", "llogl"}, {"power", o.d - 1},
                 {"value", norms::llogl_norm(f, o.d - 1)}};
        } else if (o.norm_id == "herz-e" || o.norm_id == "herz-eprime") {
            auto rep = norms::herz_norm(f, o.p,
                                        o.norm_id == "herz-e" ? norms::HerzVariant::E
                                                              : norms::HerzVariant::Eprime);
            j = {{"norm_id", rep.norm_id}, {"q", o.p}, {"value", rep.value},
                 {"finest_shell", rep.finest_shell}};
        } else if (o.norm_id == "dp-integral" || o.norm_id == "dp-shell") {
            auto rep = norms::dp_norm(f, o.p,
                                      o.norm_id == "dp-integral" ? norms::DpForm::integral
                                                                 : norms::DpForm::shell);
            j = {{"norm_id", rep.norm_id}, {"p", o.p}, {"value", rep.value}};
        } else {
            throw CLI::ValidationError("--norm-id", "unknown norm: " + o.norm_id);
        }
        j["f"] = o.f_id;
        j["grid"] = o.grid;
    }
    if (o.out.empty() || o.out == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(o.out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + o.out);
        out << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_verify(const Options& o) {
    std::vector<harness::ExperimentReport> reports;
    auto want = [&](const char* name) { return o.suite == "all" || o.suite == name; };

    if (want("identity")) {
        auto cfg = harness::IdentityConfig::defaults();
        cfg.seed = o.seed;
        reports.push_back(harness::run_identity_suite(cfg));
    }
    if (want("bounds"))
        reports.push_back(harness::run_bound_sweep(harness::BoundSweepConfig::defaults()));
    if (want("convergence")) {
        harness::ConvergenceConfig cfg;
        cfg.f_id = "trig";
        cfg.dim = 1;
        cfg.family.dim = 1;
        cfg.family.region = Region::ellinf;
        cfg.family.method = Method::fejer;
        cfg.ladder = {8, 16, 32, 64};
        cfg.G = 256;
        cfg.final_tolerance = 0.05;
        cfg.seed = o.seed;
        reports.push_back(harness::run_convergence_experiment(cfg));

        harness::ConvergenceConfig bo;
        bo.f_id = "bump";
        bo.dim = 2;
        bo.family.dim = 2;
        bo.family.region = Region::ell2;
        bo.family.method = Method::riesz;
        bo.family.alpha = 1.0;
        bo.family.gamma_exp = 2.0;
        bo.norm_id = "l2";
        bo.ladder = {16, 32, 64, 128};
        bo.G = 256;
        bo.final_tolerance = 1e-3;
        bo.seed = o.seed;
        reports.push_back(harness::run_convergence_experiment(bo));

        harness::ConvergenceConfig corner;
        corner.f_id = "corner";
        corner.dim = 2;
        corner.family.dim = 2;
        corner.family.region = Region::ell1;
        corner.family.method = Method::fejer;
        corner.ladder = {8, 16, 32, 64};
        corner.G = 256;
        corner.final_tolerance = 0.25;
        corner.seed = o.seed;
        reports.push_back(harness::run_convergence_experiment(corner));

        harness::ConvergenceConfig gibbs;
        gibbs.f_id = "jump";
        gibbs.dim = 1;
        gibbs.family.dim = 1;
        gibbs.family.region = Region::ellinf;
        gibbs.family.method = Method::dirichlet;
        gibbs.ladder = {8, 16, 32, 64, 128};
        gibbs.G = 1024;
        gibbs.expect_gibbs = true;
        gibbs.seed = o.seed;
        reports.push_back(harness::run_convergence_experiment(gibbs));
    }
    if (want("lebesgue")) {
        harness::LebesgueConfig jump;
        jump.f_id = "jump";
        jump.dim = 1;
        jump.top_n = 512;
        reports.push_back(harness::run_lebesgue_experiment(jump));

        harness::LebesgueConfig cone;
        cone.f_id = "bump";
        cone.dim = 2;
        cone.tau = o.tau;
        cone.top_n = 256;
        cone.G = 512;
        cone.seed = o.seed;
        reports.push_back(harness::run_lebesgue_experiment(cone));
    }
    if (want("domination")) {
        harness::DominationConfig cfg;
        cfg.tau = o.tau;
        cfg.seed = o.seed;
        reports.push_back(harness::run_domination_experiment(cfg));

        harness::DominationConfig w = cfg;
        w.theta_id = "weierstrass:2";
        reports.push_back(harness::run_domination_experiment(w));
    }
    if (want("rotation")) reports.push_back(harness::run_rotation_check(8, 20, o.seed));

    if (reports.empty()) throw CLI::ValidationError("--suite", "unknown suite: " + o.suite);

    bool all_pass = true;
    json out = json::array();
    for (const auto& rep : reports) {
        all_pass = all_pass && rep.pass;
        out.push_back(rep.to_json());
        std::cout << (rep.pass ? "[PASS] " : "[FAIL] ") << rep.suite_id;
        if (!rep.pass) std::cout << " -- " << rep.failure_detail;
        std::cout << "\n";
    }
    if (!o.report_path.empty()) {
        std::ofstream f(o.report_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open report file: " + o.report_path);
        f << (out.size() == 1 ? out.front() : out).dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_figure(const Options& o) {
    struct Fig {
        const char* id;
        Options opts;
        const char* kind; // "kernel" or "theta"
        std::string theta;
    };
    Options base = o;
    auto kernel_fig = [&](int d, const char* q, const char* method, std::vector<long> n,
                          double alpha, double gamma, std::size_t grid) {
        Options f = base;
        f.d = d;
        f.q = q;
        f.method = method;
        f.n = std::move(n);
        f.alpha = alpha;
        f.gamma = gamma;
        f.grid = grid;
        return f;
    };

    const std::string& id = o.figure_id;
    if (id == "f13") return cmd_kernel(kernel_fig(1, "inf", "dirichlet", {5}, 0, 1, 512));
    if (id == "f14") return cmd_kernel(kernel_fig(1, "inf", "fejer", {5}, 1, 1, 512));
    if (id == "f15") return cmd_kernel(kernel_fig(2, "1", "dirichlet", {4}, 0, 1, 64));
    if (id == "f16") return cmd_kernel(kernel_fig(2, "2", "dirichlet", {4}, 0, 1, 64));
    if (id == "f17") return cmd_kernel(kernel_fig(2, "inf", "dirichlet", {4}, 0, 1, 64));
    if (id == "f18") return cmd_kernel(kernel_fig(2, "1", "riesz", {4}, 1, 1, 64));
    if (id == "f19") return cmd_kernel(kernel_fig(2, "inf", "riesz", {4}, 1, 1, 64));
    if (id == "f20") return cmd_kernel(kernel_fig(2, "2", "riesz", {4}, 1, 1, 64));
    if (id == "f21") return cmd_kernel(kernel_fig(2, "2", "riesz", {4}, 1, 2, 64));
    if (id == "f22") return cmd_kernel(kernel_fig(2, "2", "riesz", {4}, 0.5, 2, 64));
    if (id == "f23") return cmd_kernel(kernel_fig(2, "rect", "dirichlet", {3, 5}, 0, 1, 64));
    if (id == "f24") return cmd_kernel(kernel_fig(2, "rect", "fejer", {3, 5}, 1, 1, 64));

    // theta summability-function surfaces on [-2, 2]^2
    std::string theta_id;
    if (id == "f25") theta_id = "radial-riesz:1,2";
    else if (id == "f26") theta_id = "radial-weierstrass:2";
    else if (id == "f27") theta_id = "exp-composite:2,2";
    else if (id == "f28") theta_id = "picard-bessel:2,2";
    else throw CLI::ValidationError("--id", "unknown figure id: " + id);

    auto th = theta_by_id(theta_id, 2);
    const std::size_t N = 81;
    std::vector<std::vector<double>> rows;
    std::vector<double> vals;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            double t1 = -2.0 + 4.0 * static_cast<double>(i) / (N - 1);
            double t2 = -2.0 + 4.0 * static_cast<double>(j) / (N - 1);
            // radial profile for the scalar catalog entries
            double v;
            if (th.tensor_product) {
                double r = std::sqrt(t1 * t1 + t2 * t2);
                v = th.value1(r);
            } else {
                double t[2] = {t1, t2};
                v = th.value(t);
            }
            rows.push_back({t1, t2, v});
            vals.push_back(v);
        }
    Options fo = o;
    fo.d = 2;
    if (o.format == "svg") {
        emit::write_svg_heatmap(o.out, vals, N, N, "summa " + id + " " + theta_id);
    } else {
        emit::Table table;
        table.header_comment = "# summa v1, figure " + id + ", theta=" + theta_id;
        table.columns = {"t1", "t2", "value"};
        table.rows = rows;
        table.write_csv(o.out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* cap = std::getenv("SUMMA_THREADS"))
        omp_set_num_threads(std::max(1, std::atoi(cap)));
#endif

    Options o;

    // --config <file>: JSON defaults, overridden by explicit flags
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            std::ifstream f(argv[i + 1]);
            if (!f) {
                std::cerr << "error: --config: cannot open " << argv[i + 1] << "\n";
                return 2;
            }
            json cfg = json::parse(f, nullptr, false);
            if (cfg.is_discarded() || !cfg.is_object()) {
                std::cerr << "error: --config: not a JSON object\n";
                return 2;
            }
            if (cfg.contains("d")) o.d = cfg["d"];
            if (cfg.contains("q")) o.q = cfg["q"];
            if (cfg.contains("method")) o.method = cfg["method"];
            if (cfg.contains("alpha")) o.alpha = cfg["alpha"];
            if (cfg.contains("gamma")) o.gamma = cfg["gamma"];
            if (cfg.contains("n")) o.n = cfg["n"].get<std::vector<long>>();
            if (cfg.contains("theta")) o.theta_id = cfg["theta"];
            if (cfg.contains("grid")) o.grid = cfg["grid"];
            if (cfg.contains("tau")) o.tau = cfg["tau"];
            if (cfg.contains("format")) o.format = cfg["format"];
            if (cfg.contains("out")) o.out = cfg["out"];
            if (cfg.contains("f")) o.f_id = cfg["f"];
            if (cfg.contains("seed")) o.seed = cfg["seed"];
        }
    }

    CLI::App app{"summability kernels, means and maximal operators on the torus"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override)");

    const CLI::Validator pow2{[](std::string& s) {
                                  unsigned long v = std::stoul(s);
                                  return v >= 4 && (v & (v - 1)) == 0
                                             ? std::string{}
                                             : std::string{"must be a power of two >= 4"};
                              },
                              "POW2"};

    auto add_common = [&](CLI::App* sub, bool with_spec) {
        sub->add_option("--config", config_path, "JSON config file (flags override)");
        sub->add_option("--d", o.d, "dimension")->check(CLI::Range(1, 4));
        sub->add_option("--grid", o.grid, "grid points per dimension (power of two)")->check(pow2);
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--format", o.format, "csv, json or svg");
        sub->add_option("--out", o.out, "output path");
        if (with_spec) {
            sub->add_option("--q", o.q, "lattice region: 1, 2, inf or rect");
            sub->add_option("--method", o.method, "dirichlet, fejer, riesz, cesaro, theta");
            sub->add_option("--alpha", o.alpha, "riesz/cesaro exponent");
            sub->add_option("--gamma", o.gamma, "riesz gamma");
            sub->add_option("--n", o.n, "mean index (repeat for a multi-index)")
                ->check(CLI::PositiveNumber);
            sub->add_option("--theta", o.theta_id, "theta catalog id, e.g. weierstrass:2");
        }
    };

    auto* kernel = app.add_subcommand("kernel", "evaluate a kernel on the grid");
    add_common(kernel, true);

    auto* means = app.add_subcommand("means", "apply a summability mean to a test function");
    add_common(means, true);
    means->add_option("--f", o.f_id, "test function id");

    auto* maxop = app.add_subcommand("maxop", "maximal function of a test function");
    add_common(maxop, false);
    maxop->add_option("--f", o.f_id, "test function id");
    maxop->add_option("--variant", o.variant, "cube, cone or strong");
    maxop->add_option("--tau", o.tau, "cone aperture")->check(CLI::Range(1.0, 64.0));

    auto* norm = app.add_subcommand("norm", "compute a function-space norm");
    add_common(norm, false);
    norm->add_option("--f", o.f_id, "test function id");
    norm->add_option("--theta", o.theta_id, "theta catalog id (wiener norm)");
    norm->add_option("--norm-id", o.norm_id,
                     "lp, weak-lp, llogl, herz-e, herz-eprime, dp-integral, dp-shell, wiener");
    norm->add_option("--p", o.p, "exponent p (or q for herz)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", o.suite,
                       "identity, bounds, convergence, lebesgue, domination, rotation or all");
    verify->add_option("--report", o.report_path, "write the JSON report here");
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--tau", o.tau, "cone aperture");
    verify->add_option("--config", config_path, "JSON config file (flags override)");

    auto* figure = app.add_subcommand("figure", "emit figure data (f13..f28)");
    figure->add_option("--id", o.figure_id, "figure id")->required();
    figure->add_option("--format", o.format, "csv or svg");
    figure->add_option("--out", o.out, "output path");
    figure->add_option("--config", config_path, "JSON config file (flags override)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (kernel->parsed()) return cmd_kernel(o);
        if (means->parsed()) return cmd_means(o);
        if (maxop->parsed()) return cmd_maxop(o);
        if (norm->parsed()) return cmd_norm(o);
        if (verify->parsed()) return cmd_verify(o);
        if (figure->parsed()) return cmd_figure(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
