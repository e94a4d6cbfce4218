#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hyptrans/harness.hpp"

using namespace hyptrans;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "mu=1.0" style pins for the sampler.
SampleOptions parse_fixes(const std::vector<std::string>& fixes) {
    SampleOptions opt;
    for (const auto& f : fixes) {
        auto eq = f.find('=');
        if (eq == std::string::npos) throw UsageError("--fix expects name=value, got '" + f + "'");
        std::string name = f.substr(0, eq);
        double value;
        try {
            value = std::stod(f.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("--fix: bad number in '" + f + "'");
        }
        if (name == "x") {
            opt.fixed_x = value;
            continue;
        }
        bool found = false;
        for (int i = 0; i < kNumSyms; ++i)
            if (name == kSymNames[i]) {
                opt.fixed[i] = value;
                found = true;
            }
        if (!found) throw UsageError("--fix: unknown parameter '" + name + "'");
    }
    return opt;
}

std::optional<Family> family_arg(const std::string& name) {
    if (name.empty()) return std::nullopt;
    auto f = parse_family(name);
    if (!f) throw UsageError("unknown family '" + name + "'");
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of hypergeometric transmutation identities"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "table";
    bool timing = false;
    unsigned threads = 0;
    app.add_option("--format", format_name, "Output format: json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}, CLI::ignore_case));
    app.add_flag("--timing", timing, "Include elapsed times in reports");
    app.add_option("--threads", threads, "Worker threads for verify-all (0: all cores)");

    std::string family;
    auto* list = app.add_subcommand("list", "List catalog identities");
    list->add_option("--family", family, "Restrict to one family");

    std::string id;
    int points = 5;
    std::uint64_t seed = 42;
    double rtol = 1e-6;
    std::optional<double> quad_tol;
    std::vector<std::string> fixes;
    auto add_verify_options = [&](CLI::App* sub) {
        sub->add_option("--points", points, "Sampled parameter points per identity")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed, "Sampler seed");
        sub->add_option("--rtol", rtol, "Relative tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--quad-tol", quad_tol, "Quadrature tolerance override");
        sub->add_option("--fix", fixes, "Pin a parameter, e.g. mu=1.0 (repeatable)");
    };
    auto* verify = app.add_subcommand("verify", "Verify one identity");
    verify->add_option("id", id, "Identity id")->required();
    add_verify_options(verify);

    auto* verify_all_cmd = app.add_subcommand("verify-all", "Verify the whole catalog");
    verify_all_cmd->add_option("--family", family, "Restrict to one family");
    add_verify_options(verify_all_cmd);

    std::string case_name;
    int t_points = 20;
    double t_tol = 1e-8;
    std::optional<double> t_mu, t_itol;
    auto* transmute = app.add_subcommand("transmute", "Check one transmutation kernel row");
    transmute->add_option("case", case_name, "Row name, e.g. c+ or a-,b-,c-")->required();
    transmute->add_option("--points", t_points, "Points per check")->check(CLI::PositiveNumber);
    transmute->add_option("--seed", seed, "Sampler seed");
    transmute->add_option("--tol", t_tol, "Kernel residual tolerance (integral form: 10x)");
    transmute->add_option("--integral-tol", t_itol, "Integral form tolerance");
    transmute->add_option("--mu", t_mu, "Fix mu (integral form defaults to 2.5)");

    std::string out_file;
    auto* export_cmd = app.add_subcommand("export-catalog", "Write the catalog as JSON");
    export_cmd->add_option("--out", out_file, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    Format format = *parse_format(format_name);
    ReportMeta meta;
    meta.seed = seed;
    meta.rel_tol = rtol;
    meta.quad_tol = quad_tol.value_or(default_quad_tol());
    meta.timing = timing;

    try {
        if (*list) {
            std::cout << render_catalog_list(catalog_family(family_arg(family)), format);
            return kExitPass;
        }
        if (*export_cmd) {
            std::ofstream out(out_file);
            if (!out) throw UsageError("cannot write " + out_file);
            out << export_catalog_json();
            return out ? kExitPass : kExitUsage;
        }
        if (*transmute) {
            TransmuteOptions opt;
            opt.seed = seed;
            opt.n_points = t_points;
            opt.tol = t_tol;
            opt.mu = t_mu;
            opt.integral_tol = t_itol;
            TransmutationReport r = verify_transmutation(case_name, opt);
            std::cout << render(r, meta, format);
            return r.passed() ? kExitPass : kExitFail;
        }
        VerifyOptions opt;
        opt.seed = seed;
        opt.n_points = points;
        opt.rel_tol = rtol;
        opt.quad_tol = quad_tol;
        opt.sample = parse_fixes(fixes);
        std::vector<VerificationReport> reports;
        if (*verify) {
            reports.push_back(verify_identity(find_identity(id), opt));
        } else {
            reports = verify_all(opt, family_arg(family), threads);
        }
        std::cout << render(reports, meta, format);
        for (const auto& r : reports)
            if (!r.passed()) return kExitFail;
        return kExitPass;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownIdentityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownCaseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return kExitFail;
    }
}
