#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "angelesco/cli.hpp"

namespace {

int default_precision_from_env() {
    if (const char* env = std::getenv("ANGELESCO_PRECISION")) {
        int p = std::atoi(env);
        if (p > 0) return p;
    }
    return angelesco::kDefaultPrecision;
}

std::string join_command_line(int argc, char** argv) {
    std::ostringstream os;
    for (int i = 0; i < argc; ++i) {
        if (i) os << ' ';
        os << argv[i];
    }
    return os.str();
}

// Writes to the chosen output path ("-" = stdout) and forwards the exit code.
int with_output(const std::string& path, const std::function<int(std::ostream&)>& body) {
    if (path == "-") return body(std::cout);
    std::ofstream file(path);
    if (!file) {
        std::cerr << "cannot open output file '" << path << "'\n";
        return angelesco::cli::kExitConfigError;
    }
    return body(file);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace angelesco::cli;

    CLI::App app{"Laguerre-Angelesco multiple orthogonal polynomials on the r-star"};
    app.require_subcommand(1);
    const int env_precision = default_precision_from_env();
    const std::string command_line = join_command_line(argc, argv);

    std::string output = "-";

    CoeffsConfig coeffs;
    coeffs.precision_digits = env_precision;
    coeffs.command_line = command_line;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "Emit a coefficient table");
    coeffs_cmd->add_option("--family", coeffs.family, "Polynomial family")
        ->required()
        ->check(CLI::IsMember({"type1-diagonal", "type1-above", "type1-below", "type2-diagonal",
                               "type2-above", "p-kernel", "jacobi-kernel"}));
    coeffs_cmd->add_option("--r", coeffs.r, "Number of rays")->required();
    coeffs_cmd->add_option("--beta", coeffs.beta, "Weight exponent beta")->required();
    coeffs_cmd->add_option("--n", coeffs.n, "Degree parameter")->required();
    coeffs_cmd->add_option("--k", coeffs.k, "Shift direction (1..r)")->capture_default_str();
    coeffs_cmd->add_option("--alpha", coeffs.alpha, "Jacobi parameter (jacobi-kernel)")
        ->capture_default_str();
    coeffs_cmd->add_option("-o,--output", output, "Output path ('-' = stdout)")
        ->capture_default_str();
    coeffs_cmd->add_option("--precision", coeffs.precision_digits, "Significant decimal digits")
        ->capture_default_str();
    std::string coeffs_format = "csv";
    coeffs_cmd->add_option("--format", coeffs_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    VerifyConfig verify;
    verify.precision_digits = env_precision;
    verify.command_line = command_line;
    auto* verify_cmd = app.add_subcommand("verify", "Run an identity check and emit a JSON report");
    verify_cmd->add_option("--check", verify.check, "Which identity to verify")
        ->required()
        ->check(CLI::IsMember({"orthogonality", "recurrence", "ode-type1", "ode-type2", "rodrigues",
                               "lowering-raising", "limit", "w-equation"}));
    verify_cmd->add_option("--r", verify.r, "Number of rays")->required();
    verify_cmd->add_option("--beta", verify.beta, "Weight exponent beta")->capture_default_str();
    verify_cmd->add_option("--n", verify.n, "Degree parameter")->capture_default_str();
    verify_cmd->add_option("-o,--output", output, "Output path ('-' = stdout)")
        ->capture_default_str();
    verify_cmd->add_option("--precision", verify.precision_digits, "Significant decimal digits")
        ->capture_default_str();

    DensityConfig density;
    density.precision_digits = env_precision;
    density.command_line = command_line;
    auto* density_cmd = app.add_subcommand("density", "Sample the limiting zero density");
    density_cmd->add_option("--type", density.type, "typeI or typeII-ray")
        ->required()
        ->check(CLI::IsMember({"typeI", "typeII-ray"}));
    density_cmd->add_option("--r", density.r, "Number of rays")->required();
    density_cmd->add_option("--grid", density.grid, "Number of sample points")
        ->capture_default_str();
    density_cmd->add_option("-o,--output", output, "Output path ('-' = stdout)")
        ->capture_default_str();
    density_cmd->add_option("--precision", density.precision_digits, "Significant decimal digits")
        ->capture_default_str();

    ZerosConfig zeros;
    zeros.precision_digits = env_precision;
    zeros.command_line = command_line;
    auto* zeros_cmd = app.add_subcommand("zeros", "Compute real zeros");
    zeros_cmd->add_option("--family", zeros.family, "p-kernel or type2")
        ->required()
        ->check(CLI::IsMember({"p-kernel", "type2"}));
    zeros_cmd->add_option("--r", zeros.r, "Number of rays")->required();
    zeros_cmd->add_option("--beta", zeros.beta, "Weight exponent beta")->required();
    zeros_cmd->add_option("--n", zeros.n, "Degree parameter")->required();
    zeros_cmd->add_flag("--rescale", zeros.rescale, "Also emit zeros divided by alpha_r n^{1/r}");
    zeros_cmd->add_flag("--ks", zeros.ks,
                        "Report the Kolmogorov-Smirnov distance to the limiting CDF");
    zeros_cmd->add_option("-o,--output", output, "Output path ('-' = stdout)")
        ->capture_default_str();
    zeros_cmd->add_option("--precision", zeros.precision_digits, "Significant decimal digits")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    if (coeffs_cmd->parsed()) {
        coeffs.format = coeffs_format == "json" ? Format::json : Format::csv;
        return with_output(output, [&](std::ostream& out) { return run_coeffs(coeffs, out, std::cerr); });
    }
    if (verify_cmd->parsed())
        return with_output(output, [&](std::ostream& out) { return run_verify(verify, out, std::cerr); });
    if (density_cmd->parsed())
        return with_output(output, [&](std::ostream& out) { return run_density(density, out, std::cerr); });
    if (zeros_cmd->parsed())
        return with_output(output, [&](std::ostream& out) { return run_zeros(zeros, out, std::cerr); });
    return kExitConfigError;
}
