#include "cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "morrey/constants.hpp"
#include "morrey/manifolds.hpp"
#include "morrey/profiles.hpp"
#include "morrey/rearrangement.hpp"
#include "morrey/variational.hpp"
#include "morrey/version.hpp"

#include "record.hpp"

namespace morrey::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

/// Grid grammar a:b:k -- k points, geometrically spaced when a > 0,
/// linearly spaced otherwise.
std::vector<double> parse_grid(const std::string& s) {
    std::istringstream in(s);
    std::string fa, fb, fk;
    if (!std::getline(in, fa, ':') || !std::getline(in, fb, ':') || !std::getline(in, fk))
        throw std::invalid_argument("grid must have the form a:b:k");
    const double a = std::stod(fa);
    const double b = std::stod(fb);
    const int k = std::stoi(fk);
    if (k < 1) throw std::invalid_argument("grid needs at least one point");
    if (!(b >= a)) throw std::invalid_argument("grid requires b >= a");
    std::vector<double> grid;
    grid.reserve(k);
    if (k == 1) {
        grid.push_back(a);
        return grid;
    }
    for (int i = 0; i < k; ++i) {
        const double w = static_cast<double>(i) / (k - 1);
        grid.push_back(a > 0.0 ? a * std::pow(b / a, w) : a + (b - a) * w);
    }
    return grid;
}

std::string attainment_name(Attainment a) {
    switch (a) {
        case Attainment::AttainedEverywhere: return "AttainedEverywhere";
        case Attainment::NotAttained: return "NotAttained";
        case Attainment::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

Value::Object norms_object(const NormsReport& r) {
    Value::Object o;
    o["grad_lp_norm"] = r.grad_lp_norm;
    o["l1_norm"] = r.l1_norm;
    o["q1"] = r.q1;
    o["q2"] = r.q2;
    o["sup_norm"] = r.sup_norm;
    o["support_measure"] = r.support_measure;
    return o;
}

std::vector<std::string> norms_row(const std::string& tag, double lambda,
                                   const NormsReport& r) {
    return {tag,
            format_number(lambda),
            format_number(r.sup_norm),
            format_number(r.l1_norm),
            format_number(r.grad_lp_norm),
            format_number(r.support_measure),
            format_number(r.q1),
            format_number(r.q2)};
}

struct CommonFlags {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_refinements = 60;
    std::string format = "json";

    void attach(CLI::App* cmd) {
        cmd->add_option("--abs-tol", abs_tol, "quadrature absolute tolerance");
        cmd->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
        cmd->add_option("--max-refinements", max_refinements,
                        "quadrature refinement sweep budget");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    }

    QuadratureSpec spec(QuadratureStats* stats = nullptr) const {
        QuadratureSpec s;
        s.abs_tol = abs_tol;
        s.rel_tol = rel_tol;
        s.max_refinements = max_refinements;
        s.stats = stats;
        return s;
    }

    void echo(Value::Object& inputs) const {
        inputs["abs_tol"] = abs_tol;
        inputs["format"] = format;
        inputs["max_refinements"] = max_refinements;
        inputs["rel_tol"] = rel_tol;
    }
};

void add_quadrature_diagnostics(Value::Object& diag, const QuadratureStats& stats) {
    diag["quadrature_calls"] = static_cast<std::int64_t>(stats.calls);
    diag["quadrature_max_error_bound"] = stats.max_error_bound;
    diag["quadrature_max_refinements"] = stats.max_refinements;
    diag["quadrature_panels"] = static_cast<std::int64_t>(stats.panels);
}

void emit(std::ostream& out, const CommonFlags& flags, const std::string& command,
          Value::Object inputs, Value::Object results, Value::Object diagnostics,
          const CsvTable& table) {
    if (flags.format == "csv") {
        out << to_csv(table);
        return;
    }
    Value::Object record;
    record["command"] = command;
    record["diagnostics"] = Value(std::move(diagnostics));
    record["inputs"] = Value(std::move(inputs));
    record["results"] = Value(std::move(results));
    record["version"] = morrey::version;
    out << to_json(Value(std::move(record)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"numerical checks for sharp Morrey-Sobolev constants on model manifolds"};
    app.name("morrey");
    app.require_subcommand(1);

    // constants
    auto* c_constants = app.add_subcommand("constants", "sharp constants and exponents");
    int cn = 0;
    double cp = 0.0;
    CommonFlags cflags;
    c_constants->add_option("--n", cn, "dimension")->required();
    c_constants->add_option("--p", cp, "integrability exponent")->required();
    cflags.attach(c_constants);

    // quotient
    auto* c_quotient = app.add_subcommand("quotient", "norms and quotients of one profile");
    std::string q_model, q_profile, q_which = "q1";
    int qn = 0;
    double qp = 0.0;
    std::optional<double> q_lambda;
    CommonFlags qflags;
    c_quotient->add_option("--model", q_model, "model designation")->required();
    c_quotient->add_option("--profile", q_profile, "profile designation")->required();
    c_quotient->add_option("--n", qn, "dimension")->required();
    c_quotient->add_option("--p", qp, "integrability exponent")->required();
    c_quotient->add_option("--lambda", q_lambda, "support radius");
    c_quotient->add_option("--which", q_which, "quotient selector")
        ->check(CLI::IsMember({"q1", "q2"}));
    qflags.attach(c_quotient);

    // scan
    auto* c_scan = app.add_subcommand("scan", "variational minima over a lambda grid");
    std::string s_model, s_grid, s_which = "q1";
    int sn = 0;
    double sp = 0.0;
    CommonFlags sflags;
    c_scan->add_option("--model", s_model, "model designation")->required();
    c_scan->add_option("--n", sn, "dimension")->required();
    c_scan->add_option("--p", sp, "integrability exponent")->required();
    c_scan->add_option("--lambda-grid", s_grid, "grid a:b:k")->required();
    c_scan->add_option("--which", s_which, "quotient selector")
        ->check(CLI::IsMember({"q1", "q2"}));
    sflags.attach(c_scan);

    // rearrange
    auto* c_rearrange = app.add_subcommand("rearrange", "Euclidean decreasing rearrangement");
    std::string r_model, r_profile;
    int rn = 0;
    double rp = 0.0;
    std::optional<double> r_lambda;
    CommonFlags rflags;
    c_rearrange->add_option("--model", r_model, "model designation")->required();
    c_rearrange->add_option("--profile", r_profile, "profile designation")->required();
    c_rearrange->add_option("--n", rn, "dimension")->required();
    c_rearrange->add_option("--p", rp, "integrability exponent")->required();
    c_rearrange->add_option("--lambda", r_lambda, "support radius");
    rflags.attach(c_rearrange);

    // volumes
    auto* c_volumes = app.add_subcommand("volumes", "ball volumes and comparison ratios");
    std::string v_model, v_grid;
    CommonFlags vflags;
    c_volumes->add_option("--model", v_model, "model designation")->required();
    c_volumes->add_option("--rho-grid", v_grid, "grid a:b:k")->required();
    vflags.attach(c_volumes);

    // diagnose
    auto* c_diagnose = app.add_subcommand("diagnose", "volume-bound diagnostics");
    std::string d_model, d_which, d_grid;
    int dn = 0;
    double dp = 0.0, d_C = 0.0;
    std::optional<double> d_lambda;
    CommonFlags dflags;
    c_diagnose->add_option("--model", d_model, "model designation")->required();
    c_diagnose->add_option("--n", dn, "dimension")->required();
    c_diagnose->add_option("--p", dp, "integrability exponent")->required();
    c_diagnose->add_option("--C", d_C, "candidate constant")->required();
    c_diagnose->add_option("--which", d_which, "ms1 or ms2")
        ->required()
        ->check(CLI::IsMember({"ms1", "ms2"}));
    c_diagnose->add_option("--lambda", d_lambda, "gap-integral support radius (ms2)");
    c_diagnose->add_option("--rho-grid", d_grid, "grid a:b:k (default 0.1:3:30, clipped)");
    dflags.attach(c_diagnose);

    std::vector<const char*> argv;
    argv.push_back("morrey");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*c_constants) {
            const Exponents e = make_exponents(cn, cp);
            QuadratureStats stats;
            const QuadratureSpec spec = cflags.spec(&stats);
            const double c1 = sharp_c1(e);
            const double c2_closed = sharp_c2_closed(e);
            const double c2_op = sharp_c2_operational(e, 1.0, spec);
            const double c2 = sharp_c2(e, spec);
            Value::Object inputs;
            inputs["n"] = cn;
            inputs["p"] = cp;
            cflags.echo(inputs);
            Value::Object results;
            results["c1"] = c1;
            results["c2"] = c2;
            results["eta"] = e.eta;
            results["omega_n"] = unit_ball_volume(e.n);
            results["p_conj"] = e.p_conj;
            Value::Object diag;
            diag["c2_consistency_rel"] = std::fabs(c2_closed / c2_op - 1.0);
            add_quadrature_diagnostics(diag, stats);
            CsvTable t;
            t.header = {"c1", "c2", "eta", "omega_n", "p_conj"};
            t.rows.push_back({format_number(c1), format_number(c2), format_number(e.eta),
                              format_number(unit_ball_volume(e.n)),
                              format_number(e.p_conj)});
            emit(out, cflags, "constants", std::move(inputs), std::move(results),
                 std::move(diag), t);
            return kExitOk;
        }

        if (*c_quotient) {
            const Exponents e = make_exponents(qn, qp);
            const WarpedModel m = parse_model(q_model);
            QuadratureStats stats;
            const QuadratureSpec spec = qflags.spec(&stats);
            const RadialProfile u = parse_profile(q_profile, e, q_lambda, m);
            const NormsReport rep = norms_report(u, m, e, spec);
            const double selected = q_which == "q2" ? rep.q2 : rep.q1;
            Value::Object inputs;
            inputs["model"] = q_model;
            inputs["n"] = qn;
            inputs["p"] = qp;
            inputs["profile"] = q_profile;
            inputs["which"] = q_which;
            if (q_lambda) inputs["lambda"] = *q_lambda;
            qflags.echo(inputs);
            Value::Object results = norms_object(rep);
            results["lambda"] = u.lambda;
            results["quotient"] = selected;
            results["which"] = q_which;
            Value::Object diag;
            add_quadrature_diagnostics(diag, stats);
            CsvTable t;
            t.header = {"which", "lambda", "sup_norm", "l1_norm", "grad_lp_norm",
                        "support_measure", "q1", "q2"};
            t.rows.push_back(norms_row(q_which, u.lambda, rep));
            emit(out, qflags, "quotient", std::move(inputs), std::move(results),
                 std::move(diag), t);
            return kExitOk;
        }

        if (*c_scan) {
            const Exponents e = make_exponents(sn, sp);
            const WarpedModel m = parse_model(s_model);
            QuadratureStats stats;
            const QuadratureSpec spec = sflags.spec(&stats);
            const std::vector<double> grid = parse_grid(s_grid);
            const QuotientKind which = s_which == "q2" ? QuotientKind::Q2 : QuotientKind::Q1;
            const ScanResult scan = sharpness_scan(m, e, grid, which, {}, spec);
            Value::Object inputs;
            inputs["lambda_grid"] = s_grid;
            inputs["model"] = s_model;
            inputs["n"] = sn;
            inputs["p"] = sp;
            inputs["which"] = s_which;
            sflags.echo(inputs);
            Value::Object results;
            results["attainment"] = attainment_name(scan.attainment);
            results["asymptotic_volume_ratio"] = scan.asymptotic_volume_ratio;
            results["certified_minimum"] = scan.certified_minimum;
            results["lambdas"] = Value::from_doubles(scan.lambdas);
            results["limit_estimate"] = scan.limit_estimate;
            results["q_values"] = Value::from_doubles(scan.q_values);
            results["sharp_reference"] = scan.sharp_reference;
            results["volume_probe_radius"] = scan.volume_probe_radius;
            Value::Object diag;
            diag["richardson_points"] =
                static_cast<std::int64_t>(std::min<size_t>(scan.lambdas.size(), 3));
            add_quadrature_diagnostics(diag, stats);
            CsvTable t;
            t.header = {"lambda", "q_value", "sharp_reference", "gap"};
            for (size_t i = 0; i < scan.lambdas.size(); ++i) {
                t.rows.push_back({format_number(scan.lambdas[i]),
                                  format_number(scan.q_values[i]),
                                  format_number(scan.sharp_reference),
                                  format_number(scan.q_values[i] - scan.sharp_reference)});
            }
            emit(out, sflags, "scan", std::move(inputs), std::move(results), std::move(diag),
                 t);
            return kExitOk;
        }

        if (*c_rearrange) {
            const Exponents e = make_exponents(rn, rp);
            const WarpedModel m = parse_model(r_model);
            QuadratureStats stats;
            const QuadratureSpec spec = rflags.spec(&stats);
            const RadialProfile u = parse_profile(r_profile, e, r_lambda, m);
            const RearrangementResult res = rearrange(u, m, e, spec);
            Value::Object inputs;
            inputs["model"] = r_model;
            inputs["n"] = rn;
            inputs["p"] = rp;
            inputs["profile"] = r_profile;
            if (r_lambda) inputs["lambda"] = *r_lambda;
            rflags.echo(inputs);
            Value::Object results;
            results["lambda_star"] = res.lambda_star;
            results["report_after"] = Value(norms_object(res.report_after));
            results["report_before"] = Value(norms_object(res.report_before));
            Value::Object diag;
            add_quadrature_diagnostics(diag, stats);
            CsvTable t;
            t.header = {"which", "lambda", "sup_norm", "l1_norm", "grad_lp_norm",
                        "support_measure", "q1", "q2"};
            t.rows.push_back(norms_row("before", u.lambda, res.report_before));
            t.rows.push_back(norms_row("after", res.lambda_star, res.report_after));
            emit(out, rflags, "rearrange", std::move(inputs), std::move(results),
                 std::move(diag), t);
            return kExitOk;
        }

        if (*c_volumes) {
            const WarpedModel m = parse_model(v_model);
            QuadratureStats stats;
            const QuadratureSpec spec = vflags.spec(&stats);
            const std::vector<double> grid = parse_grid(v_grid);
            const double om = unit_ball_volume(m.n);
            std::vector<double> volumes, ratios;
            for (double rho : grid) {
                if (!(rho > 0.0) || !(rho < m.r_max))
                    throw std::invalid_argument("rho grid must lie inside (0, r_max)");
                volumes.push_back(ball_volume(m, rho, spec));
                ratios.push_back(volumes.back() / (om * std::pow(rho, m.n)));
            }
            Value::Object inputs;
            inputs["model"] = v_model;
            inputs["rho_grid"] = v_grid;
            vflags.echo(inputs);
            Value::Object results;
            results["ratios"] = Value::from_doubles(ratios);
            results["rhos"] = Value::from_doubles(grid);
            results["volumes"] = Value::from_doubles(volumes);
            Value::Object diag;
            add_quadrature_diagnostics(diag, stats);
            CsvTable t;
            t.header = {"rho", "volume", "ratio"};
            for (size_t i = 0; i < grid.size(); ++i) {
                t.rows.push_back({format_number(grid[i]), format_number(volumes[i]),
                                  format_number(ratios[i])});
            }
            emit(out, vflags, "volumes", std::move(inputs), std::move(results),
                 std::move(diag), t);
            return kExitOk;
        }

        if (*c_diagnose) {
            const Exponents e = make_exponents(dn, dp);
            const WarpedModel m = parse_model(d_model);
            QuadratureStats stats;
            const QuadratureSpec spec = dflags.spec(&stats);
            const VolumeBoundKind which =
                d_which == "ms2" ? VolumeBoundKind::MS2 : VolumeBoundKind::MS1;
            if (which == VolumeBoundKind::MS2 && !d_lambda)
                throw std::invalid_argument("ms2 diagnostics require --lambda");
            std::string grid_str = d_grid;
            if (grid_str.empty()) {
                const double hi = std::isfinite(m.r_max) ? std::min(3.0, 0.95 * m.r_max) : 3.0;
                grid_str = "0.1:" + format_number(hi) + ":30";
            }
            const std::vector<double> grid = parse_grid(grid_str);
            const VolumeBoundReport rep =
                volume_bound_diagnostics(m, e, d_C, which, grid, d_lambda, spec);
            Value::Object inputs;
            inputs["C"] = d_C;
            inputs["model"] = d_model;
            inputs["n"] = dn;
            inputs["p"] = dp;
            inputs["rho_grid"] = grid_str;
            inputs["which"] = d_which;
            if (d_lambda) inputs["lambda"] = *d_lambda;
            dflags.echo(inputs);
            Value::Object results;
            results["margins"] = Value::from_doubles(rep.margins);
            results["ratios"] = Value::from_doubles(rep.ratios);
            results["rhos"] = Value::from_doubles(rep.rhos);
            results["threshold"] = rep.threshold;
            results["worst_margin"] = rep.worst_margin;
            if (rep.gap_integral) results["gap_integral"] = *rep.gap_integral;
            Value::Object diag;
            add_quadrature_diagnostics(diag, stats);
            CsvTable t;
            t.header = {"rho", "ratio", "threshold", "margin"};
            if (rep.gap_integral) t.header.push_back("gap_integral");
            for (size_t i = 0; i < rep.rhos.size(); ++i) {
                std::vector<std::string> row = {
                    format_number(rep.rhos[i]), format_number(rep.ratios[i]),
                    format_number(rep.threshold), format_number(rep.margins[i])};
                if (rep.gap_integral) row.push_back(format_number(*rep.gap_integral));
                t.rows.push_back(std::move(row));
            }
            emit(out, dflags, "diagnose", std::move(inputs), std::move(results),
                 std::move(diag), t);
            return kExitOk;
        }
    } catch (const quadrature_error& ex) {
        err << "numerical error: " << ex.what() << "\n";
        return kExitNumerical;
    } catch (const consistency_error& ex) {
        err << "numerical error: " << ex.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace morrey::cli
