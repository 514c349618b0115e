// halfline command-line front end: closed-form evaluation (eval), the
// quadrature oracle (oracle), grid comparison of the two (compare), and
// clothoid geometry export (clothoid).
//
// Exit codes: 0 success, 1 comparison/convergence failure, 2 domain error,
// 64 usage error, 74 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "halfline/clothoid.hpp"
#include "halfline/closed_forms.hpp"
#include "halfline/errors.hpp"
#include "halfline/quadrature.hpp"

namespace {

using json = nlohmann::json;
using namespace halfline;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct GlobalOptions {
    std::string format = "text";
    double tol = 1e-9;
    int digits = 10;
};

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

// JSON cannot carry infinities as numbers; render them as the string "inf".
json json_number(double v) {
    if (std::isinf(v)) return json(v > 0 ? "inf" : "-inf");
    return json(v);
}

enum class Theorem { T1, T2, T3, Fresnel, Beta };

struct TheoremParams {
    double n = 1.0;
    double p = 0.0;
    double q = 0.0;
    double m = 1.0;
    double nexp = 2.0;
};

struct OracleRecord {
    std::string label;  // empty for single-valued theorems
    QuadratureResult result;
};

QuadratureResult run_oracle(const IntegralSpec& spec, double tol) {
    return spec.p > 0.0 ? integrate_decaying(spec, tol)
                        : integrate_oscillatory_alternating(spec, tol);
}

std::vector<OracleRecord> oracle_records(Theorem theorem,
                                         const TheoremParams& tp, double tol) {
    switch (theorem) {
        case Theorem::T1:
            return {{"", run_oracle({tp.n, tp.p, tp.q, Oscillator::Cosine},
                                    tol)}};
        case Theorem::T2:
            return {{"", run_oracle({tp.n, tp.p, tp.q, Oscillator::Sine},
                                    tol)}};
        case Theorem::T3:
            return {{"", integrate_log_sine(tp.p, tp.q, tol)}};
        case Theorem::Beta:
            return {{"", integrate_beta({tp.m, tp.nexp}, tol)}};
        case Theorem::Fresnel: {
            std::vector<OracleRecord> out;
            out.push_back(
                {"sine", run_oracle({0.5, tp.p, tp.q, Oscillator::Sine},
                                    tol)});
            out.push_back(
                {"cosine", run_oracle({0.5, tp.p, tp.q, Oscillator::Cosine},
                                      tol)});
            return out;
        }
    }
    throw DomainError("unknown theorem");
}

int cmd_eval(Theorem theorem, const TheoremParams& tp,
             const GlobalOptions& g) {
    json out;
    std::string text;
    switch (theorem) {
        case Theorem::T1: {
            const double v =
                damped_cosine_integral({tp.n, tp.p, tp.q, Oscillator::Cosine});
            out = {{"theorem", "T1"}, {"n", tp.n}, {"p", tp.p},
                   {"q", tp.q},       {"value", v}};
            text = fmt(v, g.digits);
            break;
        }
        case Theorem::T2: {
            const double v =
                damped_sine_integral({tp.n, tp.p, tp.q, Oscillator::Sine});
            out = {{"theorem", "T2"}, {"n", tp.n}, {"p", tp.p},
                   {"q", tp.q},       {"value", v}};
            text = fmt(v, g.digits);
            break;
        }
        case Theorem::T3: {
            const double v = log_sine_integral(tp.p, tp.q);
            out = {{"theorem", "T3"}, {"p", tp.p}, {"q", tp.q}, {"value", v}};
            text = fmt(v, g.digits);
            break;
        }
        case Theorem::Fresnel: {
            const FresnelValues v = fresnel_general(tp.p, tp.q);
            out = {{"theorem", "Fresnel"},
                   {"p", tp.p},
                   {"q", tp.q},
                   {"sineValue", v.sine_value},
                   {"cosineValue", v.cosine_value}};
            text = fmt(v.sine_value, g.digits) + " " +
                   fmt(v.cosine_value, g.digits);
            break;
        }
        case Theorem::Beta: {
            const double v = beta_reciprocal({tp.m, tp.nexp});
            out = {{"theorem", "Beta"},
                   {"m", tp.m},
                   {"nexp", tp.nexp},
                   {"value", v}};
            text = fmt(v, g.digits);
            break;
        }
    }
    if (g.format == "json") {
        std::cout << out.dump() << "\n";
    } else if (g.format == "csv") {
        std::string header;
        std::string row;
        for (auto it = out.begin(); it != out.end(); ++it) {
            if (!header.empty()) {
                header += ',';
                row += ',';
            }
            header += it.key();
            row += it->is_string() ? it->get<std::string>()
                                   : fmt(it->get<double>(), g.digits);
        }
        std::cout << header << "\n" << row << "\n";
    } else {
        std::cout << text << "\n";
    }
    return kExitOk;
}

int cmd_oracle(Theorem theorem, const TheoremParams& tp,
               const GlobalOptions& g) {
    const auto records = oracle_records(theorem, tp, g.tol);
    if (g.format == "json") {
        json out;
        for (const auto& rec : records) {
            json r = {{"value", rec.result.value},
                      {"absErrorEstimate", rec.result.abs_error_estimate},
                      {"functionEvals", rec.result.function_evals},
                      {"segments", rec.result.segments}};
            if (rec.label.empty()) {
                out = r;
            } else {
                out[rec.label] = r;
            }
        }
        std::cout << out.dump() << "\n";
    } else if (g.format == "csv") {
        std::cout << "label,value,abs_error_estimate,function_evals,segments\n";
        for (const auto& rec : records) {
            std::cout << rec.label << ',' << fmt(rec.result.value, g.digits)
                      << ',' << fmt(rec.result.abs_error_estimate, 3) << ','
                      << rec.result.function_evals << ','
                      << rec.result.segments << "\n";
        }
    } else {
        for (const auto& rec : records) {
            if (!rec.label.empty()) std::cout << rec.label << ": ";
            std::cout << "value=" << fmt(rec.result.value, g.digits)
                      << " absErrorEstimate="
                      << fmt(rec.result.abs_error_estimate, 3)
                      << " functionEvals=" << rec.result.function_evals
                      << " segments=" << rec.result.segments << "\n";
        }
    }
    return kExitOk;
}

struct CompareRow {
    IntegralSpec spec;
    bool evaluated = false;
    double closed_form = 0.0;
    double oracle_value = 0.0;
    double abs_diff = 0.0;
    double oracle_error_estimate = 0.0;
    std::int64_t function_evals = 0;
    std::string status;  // "ok", "skipped: ...", or "error: ..."
};

int cmd_compare(const std::vector<double>& ns, const std::vector<double>& ps,
                const std::vector<double>& qs,
                const std::string& oscillator_choice,
                const GlobalOptions& g) {
    std::vector<Oscillator> oscillators;
    if (oscillator_choice == "cos" || oscillator_choice == "both") {
        oscillators.push_back(Oscillator::Cosine);
    }
    if (oscillator_choice == "sin" || oscillator_choice == "both") {
        oscillators.push_back(Oscillator::Sine);
    }
    if (ns.empty() || ps.empty() || qs.empty() || oscillators.empty()) {
        std::cerr << "compare: empty grid\n";
        return kExitUsage;
    }

    bool all_pass = true;
    int evaluated_rows = 0;
    std::vector<CompareRow> rows;
    for (double n : ns) {
        for (double p : ps) {
            for (double q : qs) {
                for (Oscillator osc : oscillators) {
                    CompareRow row;
                    row.spec = {n, p, q, osc};
                    if (!in_domain(row.spec)) {
                        try {
                            validate(row.spec);
                        } catch (const DomainError& e) {
                            row.status = std::string("skipped: ") + e.what();
                        }
                        rows.push_back(row);
                        continue;
                    }
                    try {
                        row.closed_form =
                            osc == Oscillator::Cosine
                                ? damped_cosine_integral(row.spec)
                                : damped_sine_integral(row.spec);
                        const QuadratureResult oracle =
                            run_oracle(row.spec, g.tol);
                        row.evaluated = true;
                        ++evaluated_rows;
                        row.oracle_value = oracle.value;
                        row.abs_diff =
                            std::fabs(row.closed_form - oracle.value);
                        row.oracle_error_estimate = oracle.abs_error_estimate;
                        row.function_evals = oracle.function_evals;
                        const double allowed = std::max(
                            10.0 * g.tol,
                            10.0 * g.tol * std::fabs(row.closed_form));
                        if (row.abs_diff <= allowed) {
                            row.status = "ok";
                        } else {
                            row.status = "fail";
                            all_pass = false;
                        }
                    } catch (const std::exception& e) {
                        row.status = std::string("error: ") + e.what();
                        all_pass = false;
                    }
                    rows.push_back(row);
                }
            }
        }
    }

    if (g.format == "json") {
        json out = json::array();
        for (const auto& row : rows) {
            json r = {{"spec",
                       {{"n", row.spec.n},
                        {"p", row.spec.p},
                        {"q", row.spec.q},
                        {"oscillator", to_string(row.spec.oscillator)}}},
                      {"status", row.status}};
            if (row.evaluated) {
                r["closedForm"] = row.closed_form;
                r["oracleValue"] = row.oracle_value;
                r["absDiff"] = row.abs_diff;
                r["oracleErrorEstimate"] = row.oracle_error_estimate;
                r["functionEvals"] = row.function_evals;
            }
            out.push_back(r);
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "n,p,q,oscillator,closed_form,oracle_value,abs_diff,"
                     "oracle_error_estimate,function_evals,status\n";
        for (const auto& row : rows) {
            std::cout << fmt(row.spec.n, g.digits) << ','
                      << fmt(row.spec.p, g.digits) << ','
                      << fmt(row.spec.q, g.digits) << ','
                      << to_string(row.spec.oscillator) << ',';
            if (row.evaluated) {
                std::cout << fmt(row.closed_form, g.digits) << ','
                          << fmt(row.oracle_value, g.digits) << ','
                          << fmt(row.abs_diff, 3) << ','
                          << fmt(row.oracle_error_estimate, 3) << ','
                          << row.function_evals;
            } else {
                std::cout << ",,,,";
            }
            std::cout << ',' << '"' << row.status << '"' << "\n";
        }
    }
    if (evaluated_rows == 0) {
        std::cerr << "compare: no grid point lies in the convergence domain\n";
        return kExitUsage;
    }
    return all_pass ? kExitOk : kExitFailure;
}

std::string clothoid_csv(const std::vector<ClothoidPoint>& points,
                         int digits) {
    std::string out = "phi,s,x,y,r\n";
    for (const auto& pt : points) {
        out += fmt(pt.phi, digits) + ',' + fmt(pt.s, digits) + ',' +
               fmt(pt.x, digits) + ',' + fmt(pt.y, digits) + ',' +
               fmt(pt.r, digits) + "\n";
    }
    return out;
}

std::string clothoid_json(const std::vector<ClothoidPoint>& points) {
    json out = json::array();
    for (const auto& pt : points) {
        out.push_back({{"phi", pt.phi},
                       {"s", pt.s},
                       {"x", pt.x},
                       {"y", pt.y},
                       {"r", json_number(pt.r)}});
    }
    return out.dump() + "\n";
}

std::string clothoid_svg(const std::vector<ClothoidPoint>& points,
                         const PolePoint& pole_pt, int digits) {
    double xmin = points[0].x, xmax = points[0].x;
    double ymin = points[0].y, ymax = points[0].y;
    for (const auto& pt : points) {
        xmin = std::min(xmin, pt.x);
        xmax = std::max(xmax, pt.x);
        ymin = std::min(ymin, pt.y);
        ymax = std::max(ymax, pt.y);
    }
    const double width = xmax - xmin;
    const double height = ymax - ymin;
    const double mx = 0.05 * (width > 0 ? width : 1.0);
    const double my = 0.05 * (height > 0 ? height : 1.0);
    const double view_w = width + 2 * mx;

    // Flip y so the spiral winds upward on screen (SVG y grows downward).
    const auto flip = [&](double y) { return 0.0 - y; };  // keeps +0 at zero
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    svg += fmt(xmin - mx, digits) + " " + fmt(flip(ymax) - my, digits) + " " +
           fmt(view_w, digits) + " " + fmt(height + 2 * my, digits) + "\">\n";
    svg += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"" +
           fmt(0.005 * view_w, 3) + "\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) svg += ' ';
        svg += fmt(points[i].x, digits) + ',' + fmt(flip(points[i].y), digits);
    }
    svg += "\"/>\n";
    svg += "  <circle cx=\"" + fmt(pole_pt.x, digits) + "\" cy=\"" +
           fmt(flip(pole_pt.y), digits) + "\" r=\"" + fmt(0.01 * view_w, 3) +
           "\" fill=\"red\"/>\n";
    svg += "</svg>\n";
    return svg;
}

int cmd_clothoid(double c, double phi_max, int count,
                 const std::string& output_path, const GlobalOptions& g) {
    const ClothoidParams params{c};
    const auto points = sample_polyline(params, phi_max, count);

    std::string payload;
    if (g.format == "json") {
        payload = clothoid_json(points);
    } else if (g.format == "svg") {
        payload = clothoid_svg(points, pole(params), g.digits);
    } else {  // text and csv both emit CSV for tabular data
        payload = clothoid_csv(points, g.digits);
    }

    if (output_path.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
        std::cerr << "clothoid: cannot open '" << output_path
                  << "' for writing\n";
        return kExitIo;
    }
    file << payload;
    file.flush();
    if (!file) {
        std::cerr << "clothoid: failed writing '" << output_path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOptions g;
    CLI::App app{"closed forms and a quadrature oracle for improper "
                 "integrals on [0, inf), with clothoid geometry export"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv", "svg"}))
        ->capture_default_str();
    app.add_option("--tol", g.tol, "oracle tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--digits", g.digits, "significant digits in text output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();

    const std::map<std::string, Theorem> theorem_names{
        {"T1", Theorem::T1},
        {"T2", Theorem::T2},
        {"T3", Theorem::T3},
        {"Fresnel", Theorem::Fresnel},
        {"Beta", Theorem::Beta}};
    Theorem theorem = Theorem::T1;
    TheoremParams tp;

    const auto add_theorem_options = [&](CLI::App* cmd) {
        cmd->add_option("--theorem", theorem, "closed form to evaluate")
            ->required()
            ->transform(CLI::CheckedTransformer(theorem_names));
        cmd->add_option("--n", tp.n, "order of the integral");
        cmd->add_option("--p", tp.p, "decay rate");
        cmd->add_option("--q", tp.q, "oscillation rate");
        cmd->add_option("--m", tp.m, "numerator exponent (Beta)");
        cmd->add_option("--nexp", tp.nexp, "denominator exponent (Beta)");
    };

    CLI::App* eval_cmd =
        app.add_subcommand("eval", "print the closed-form value");
    add_theorem_options(eval_cmd);

    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "integrate numerically and report the error estimate");
    add_theorem_options(oracle_cmd);

    std::vector<double> grid_n, grid_p, grid_q;
    std::string oscillator_choice = "both";
    CLI::App* compare_cmd = app.add_subcommand(
        "compare", "compare closed forms against the oracle over a grid");
    compare_cmd->add_option("--n", grid_n, "orders (comma separated)")
        ->required()
        ->delimiter(',');
    compare_cmd->add_option("--p", grid_p, "decay rates (comma separated)")
        ->required()
        ->delimiter(',');
    compare_cmd
        ->add_option("--q", grid_q, "oscillation rates (comma separated)")
        ->required()
        ->delimiter(',');
    compare_cmd
        ->add_option("--oscillator", oscillator_choice, "cos, sin or both")
        ->check(CLI::IsMember({"cos", "sin", "both"}))
        ->capture_default_str();

    double c = 1.0;
    double phi_max = 0.0;
    int count = 0;
    std::string output_path;
    CLI::App* clothoid_cmd =
        app.add_subcommand("clothoid", "sample the spiral rs = 2c^2");
    clothoid_cmd->add_option("--c", c, "length scale")
        ->capture_default_str();
    clothoid_cmd->add_option("--phi-max", phi_max, "final amplitude")
        ->required();
    clothoid_cmd->add_option("--count", count, "number of sample points")
        ->required();
    clothoid_cmd->add_option("--output", output_path,
                             "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(eval_cmd)) return cmd_eval(theorem, tp, g);
        if (app.got_subcommand(oracle_cmd)) return cmd_oracle(theorem, tp, g);
        if (app.got_subcommand(compare_cmd)) {
            return cmd_compare(grid_n, grid_p, grid_q, oscillator_choice, g);
        }
        if (app.got_subcommand(clothoid_cmd)) {
            return cmd_clothoid(c, phi_max, count, output_path, g);
        }
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
