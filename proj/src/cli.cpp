#include "kenmotsu/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kenmotsu/classify.hpp"
#include "kenmotsu/rng.hpp"
#include "kenmotsu/structure_io.hpp"
#include "kenmotsu/verify.hpp"

namespace kenmotsu::cli {

namespace {

using nlohmann::json;

double default_tolerance() {
    if (const char* env = std::getenv("KENMOTSU_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
    }
    return kDefaultTol;
}

json report_to_json(const Report& report) {
    json checks = json::array();
    for (const Check& c : report.checks)
        checks.push_back({{"name", c.name}, {"residual", c.residual}, {"tol", c.tol}, {"pass", c.pass}});
    return {{"checks", checks}, {"pass", report.pass()}};
}

void print_report(const Report& report, std::ostream& out) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-22s %14s %10s  %s", "check", "residual", "tol", "status");
    out << line << "\n";
    for (const Check& c : report.checks) {
        std::snprintf(line, sizeof(line), "%-22s %14.6e %10.2e  %s", c.name.c_str(), c.residual,
                      c.tol, c.pass ? "pass" : "FAIL");
        out << line << "\n";
    }
    out << "overall: " << (report.pass() ? "PASS" : "FAIL") << "\n";
}

json matrix_to_json(const RealMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

void print_matrix(const RealMatrix& m, std::ostream& out) {
    for (int i = 0; i < m.rows; ++i) {
        out << "  [";
        for (int j = 0; j < m.cols; ++j) {
            if (j) out << ", ";
            out << format_double(m(i, j));
        }
        out << "]\n";
    }
}

std::string lambda_line(const std::vector<double>& lambdas) {
    std::string s = "lambda:";
    if (lambdas.empty()) return s + " (none)";
    for (double v : lambdas) s += " " + format_double(v);
    return s;
}

std::vector<double> parse_lambda_list(const std::string& text) {
    std::vector<double> values;
    std::string trimmed;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed.empty()) return values;
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) fail(ErrorKind::ParseError, "lambda list: empty component");
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (end != item.c_str() + item.size() || !std::isfinite(v))
            fail(ErrorKind::ParseError, "lambda list: cannot parse '" + item + "'");
        values.push_back(v);
    }
    if (!trimmed.empty() && trimmed.back() == ',')
        fail(ErrorKind::ParseError, "lambda list: trailing comma");
    return values;
}

struct LoadedStructure {
    MetricLieAlgebra algebra;
    AlmostContactData contact;
};

LoadedStructure load_checked(const std::string& path) {
    const StructureFile sf = read_structure_file(path);
    auto [a, s] = from_structure(sf);
    if (!is_spd(a.gram))
        fail(ErrorKind::DegenerateMetric, "gram matrix is not symmetric positive definite");
    return {std::move(a), std::move(s)};
}

/// Full verification report: Lie algebra axioms, almost contact axioms and,
/// when those hold, the Kenmotsu condition with its consequence identities.
Report full_verify_report(const MetricLieAlgebra& a, const AlmostContactData& s, double tol) {
    Report report;
    report.checks.push_back(make_check("jacobi", jacobi_residual(a), tol));
    report.append(verify_almost_contact(a, s, tol));
    const bool contact_ok =
        report.find("unit_xi")->pass && report.find("phi_square")->pass &&
        report.find("phi_compatibility")->pass;
    if (contact_ok) {
        const LeviCivitaTable table = levi_civita_table(a);
        report.checks.push_back(
            make_check("kenmotsu_condition", kenmotsu_condition_residual(a, s, table), tol));
        report.append(derived_identities(a, s, tol));
    }
    return report;
}

int cmd_verify(const std::string& input, double tol, bool as_json, std::ostream& out) {
    const LoadedStructure ls = load_checked(input);
    const Report report = full_verify_report(ls.algebra, ls.contact, tol);
    if (as_json)
        out << report_to_json(report).dump(2) << "\n";
    else
        print_report(report, out);
    return report.pass() ? 0 : 1;
}

int cmd_classify(const std::string& input, double tol, bool as_json, std::ostream& out,
                 std::ostream& err) {
    const LoadedStructure ls = load_checked(input);
    const Report precheck = full_verify_report(ls.algebra, ls.contact, tol);
    if (!precheck.pass()) {
        err << "classify: input fails verification (max residual "
            << format_double(precheck.max_residual()) << ")\n";
        return 1;
    }
    const NormalForm nf = normal_form(ls.algebra, ls.contact, tol);
    if (as_json) {
        json j = {{"lambdas", nf.lambdas},
                  {"basisChange", matrix_to_json(nf.basis_change)},
                  {"reconstruction_residual", nf.reconstruction_residual}};
        out << j.dump(2) << "\n";
    } else {
        out << lambda_line(nf.lambdas) << "\n";
        out << "basis_change:\n";
        print_matrix(nf.basis_change, out);
        out << "reconstruction_residual: " << format_double(nf.reconstruction_residual) << "\n";
    }
    return 0;
}

int cmd_curvature(const std::string& input, double tol, bool as_json, std::ostream& out,
                  std::ostream& err) {
    const LoadedStructure ls = load_checked(input);
    const RealMatrix ric = ricci(ls.algebra);
    const EinsteinFit fit = einstein_check(ls.algebra, tol);

    bool kenmotsu_input = false;
    try {
        kenmotsu_input = verify_kenmotsu(ls.algebra, ls.contact, tol).pass();
    } catch (const Error&) {
        kenmotsu_input = false;
    }

    if (as_json) {
        json j = {{"ricci", matrix_to_json(ric)},
                  {"einstein_c", fit.c},
                  {"einstein_residual", fit.residual},
                  {"einstein_pass", fit.pass},
                  {"kenmotsu_input", kenmotsu_input}};
        out << j.dump(2) << "\n";
    } else {
        out << "ricci:\n";
        print_matrix(ric, out);
        out << "einstein_c: " << format_double(fit.c) << "\n";
        out << "einstein_residual: " << format_double(fit.residual) << "\n";
        out << "einstein: " << (fit.pass ? "PASS" : "FAIL") << "\n";
    }

    if (kenmotsu_input) {
        const double expected = -static_cast<double>(ls.algebra.dim - 1);
        if (!fit.pass || std::abs(fit.c - expected) >= tol) {
            err << "curvature: Kenmotsu input is not Einstein with c = " << format_double(expected)
                << " (got c = " << format_double(fit.c) << ", residual "
                << format_double(fit.residual) << ")\n";
            return 1;
        }
    }
    return 0;
}

int cmd_model(const std::string& lambda_text, const std::string& out_path) {
    const Lambda lambda(parse_lambda_list(lambda_text));
    const auto [a, s] = model_algebra(lambda);
    write_structure_file(out_path, to_structure(a, s));
    return 0;
}

int cmd_random(int n, std::uint64_t seed, bool conjugate, double cond_max,
               const std::string& out_path, std::ostream& out) {
    if (n < 0) fail(ErrorKind::ParseError, "random: n must be nonnegative");
    if (2 * n + 1 > kMaxDim) fail(ErrorKind::ParseError, "random: dimension exceeds 129");
    SplitMix64 rng(seed);
    const Lambda lambda = random_lambda(n, rng);
    auto [a, s] = model_algebra(lambda);
    if (conjugate) {
        const RealMatrix t = random_invertible(a.dim, rng, cond_max);
        std::tie(a, s) = pushforward(a, s, t);
    }
    write_structure_file(out_path, to_structure(a, s));
    std::vector<double> sorted = lambda.values;
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    out << lambda_line(sorted) << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"verification, classification and model generation for "
                 "left-invariant Kenmotsu structures on metric Lie algebras"};
    app.require_subcommand(1);

    const double tol_default = default_tolerance();

    std::string input_path, out_path, lambda_text;
    double tol = tol_default;
    bool as_json = false;
    int n = 0;
    std::uint64_t seed = 0;
    bool conjugate = false;
    double cond_max = 1e4;

    auto* verify = app.add_subcommand("verify", "check the Kenmotsu axioms on a structure file");
    verify->add_option("--input", input_path, "structure file")->required();
    verify->add_option("--tol", tol, "residual tolerance");
    verify->add_flag("--json", as_json, "machine-readable output");

    auto* classify =
        app.add_subcommand("classify", "extract the classifying spectrum and basis change");
    classify->add_option("--input", input_path, "structure file")->required();
    classify->add_option("--tol", tol, "residual tolerance");
    classify->add_flag("--json", as_json, "machine-readable output");

    auto* curvature = app.add_subcommand("curvature", "Ricci tensor and Einstein constant");
    curvature->add_option("--input", input_path, "structure file")->required();
    curvature->add_option("--tol", tol, "residual tolerance");
    curvature->add_flag("--json", as_json, "machine-readable output");

    auto* model = app.add_subcommand("model", "write the model structure for a given spectrum");
    model->add_option("--lambda", lambda_text, "comma-separated spectrum (empty for dim 1)");
    model->add_option("--out", out_path, "output structure file")->required();

    auto* random = app.add_subcommand("random", "write a seeded random (optionally conjugated) model");
    random->add_option("--n", n, "number of spectrum entries")->required();
    random->add_option("--seed", seed, "generator seed");
    random->add_flag("--conjugate", conjugate, "push forward along a random invertible map");
    random->add_option("--cond-max", cond_max, "condition bound for the random map");
    random->add_option("--out", out_path, "output structure file")->required();

    std::vector<const char*> argv;
    argv.push_back("kenmotsu");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(input_path, tol, as_json, out);
        if (app.got_subcommand(classify)) return cmd_classify(input_path, tol, as_json, out, err);
        if (app.got_subcommand(curvature)) return cmd_curvature(input_path, tol, as_json, out, err);
        if (app.got_subcommand(model)) return cmd_model(lambda_text, out_path);
        if (app.got_subcommand(random)) return cmd_random(n, seed, conjugate, cond_max, out_path, out);
    } catch (const Error& e) {
        err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
        return e.is_input_error() ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace kenmotsu::cli
