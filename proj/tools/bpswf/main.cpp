// bpswf: eigenvalue tables, coefficient dumps, field samples and verification
// reports for ball prolate spheroidal wave functions.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

#include "commands.hpp"
#include "grid.hpp"
#include "output.hpp"

#include "bpswf/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

constexpr int kUsage = 2;

void add_bandwidth(CLI::App *cmd, double &alpha, double &c) {
    cmd->add_option("--alpha", alpha, "weight exponent, > -1")->required();
    cmd->add_option("--c", c, "bandwidth, >= 0")->required();
}

std::vector<std::string> split_checks(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty() && item != "all")
            out.push_back(item);
    return out;
}

} // namespace

int main(int argc, char **argv) {
    using namespace bpswf::cli;

    CLI::App app{"Ball prolate spheroidal wave functions"};
    app.require_subcommand(1);

    std::string out_path = "-";
    ModeOptions mode;
    int N = 6;

    auto *eig = app.add_subcommand("eigenvalues", "chi for every mode with 2k + n <= N (CSV)");
    add_bandwidth(eig, mode.alpha, mode.c);
    eig->add_option("--N", N, "maximal total degree 2k + n")->capture_default_str();
    eig->add_flag("--scalar", mode.scalar, "scalar modes (admits n = 0)");
    eig->add_option("--out", out_path, "output path, - for stdout")->capture_default_str();

    auto *coeffs = app.add_subcommand("coeffs", "Jacobi coefficients beta_j of one mode (CSV)");
    add_bandwidth(coeffs, mode.alpha, mode.c);
    coeffs->add_option("--n", mode.n)->required();
    coeffs->add_option("--k", mode.k)->required();
    coeffs->add_flag("--scalar", mode.scalar, "scalar modes (admits n = 0)");
    coeffs->add_option("--out", out_path)->capture_default_str();

    std::string grid_text = "slice-z:64x64";
    auto *field = app.add_subcommand("field", "sample a mode on a grid (CSV)");
    add_bandwidth(field, mode.alpha, mode.c);
    field->add_option("--n", mode.n)->required();
    field->add_option("--k", mode.k)->required();
    field->add_option("--ell", mode.ell)->capture_default_str();
    field->add_option("--grid", grid_text, "slice-z:AxB[@z] | slice-y:AxB[@y] | ball3d:AxBxC | sphere-shell:AxB[@r]")
        ->capture_default_str();
    field->add_flag("--scalar", mode.scalar, "sample the scalar function instead of the vector field");
    field->add_option("--out", out_path)->capture_default_str();

    VerifyOptions vopts;
    std::string checks_text = "all";
    auto *verify = app.add_subcommand("verify", "run verification checks (JSON report)");
    add_bandwidth(verify, vopts.alpha, vopts.c);
    verify->add_option("--N", vopts.N, "modes with 2k + n <= N")->capture_default_str();
    verify->add_option("--checks", checks_text, "comma-separated subset of: " + [] {
        std::string s;
        for (const auto &name : available_checks())
            s += (s.empty() ? "" : ",") + name;
        return s;
    }())->capture_default_str();
    verify->add_option("--quad-mr", vopts.quad.m_r, "radial nodes (default 48)");
    verify->add_option("--quad-mt", vopts.quad.m_theta, "polar nodes (default 48)");
    verify->add_option("--quad-mp", vopts.quad.m_phi, "azimuthal nodes (default 96)");
    verify->add_option("--seed", vopts.seed)->capture_default_str();
    verify->add_option("--out", out_path)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*eig) {
            write_output(out_path, eigenvalues_csv(mode.alpha, mode.c, N, mode.scalar));
        } else if (*coeffs) {
            write_output(out_path, coeffs_csv(mode));
        } else if (*field) {
            write_output(out_path, field_csv(mode, parse_grid(grid_text), std::cerr));
        } else if (*verify) {
            if (vopts.quad.m_r < 0 || vopts.quad.m_theta < 0 || vopts.quad.m_phi < 0)
                throw UsageError("quadrature sizes must be positive");
            vopts.checks = split_checks(checks_text);
            const auto report = run_verify(vopts);
            write_output(out_path, report.dump(2) + "\n");
            return report["pass"].get<bool>() ? 0 : 1;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const bpswf::ParameterError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const bpswf::IndexError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const bpswf::DomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const bpswf::ConfigurationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
