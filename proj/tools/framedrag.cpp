// framedrag: command-line front end.
//
// Exit codes: 0 ok, 2 validation or usage error, 3 verification failure.
// Errors go to stderr as one line: `error: <kind>: <message>`.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "framedrag/commands.hpp"
#include "framedrag/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kVerifyFailed = 3;

std::string one_line(std::string s) {
    for (char& c : s)
        if (c == '\n' || c == '\r') c = ' ';
    return s;
}

int fail(const std::string& kind, const std::string& msg) {
    std::cerr << "error: " << kind << ": " << one_line(msg) << '\n';
    return kValidation;
}

void write_csv(const std::string& path, const std::string& csv) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw framedrag::ConfigError("cannot write " + path);
    out << csv;
    if (!out) throw framedrag::ConfigError("write failed for " + path);
}

} // namespace

int main(int argc, char** argv) {
    using namespace framedrag;
    CLI::App app{"Frame-dragging interferometry calculator"};
    app.require_subcommand(1);

    std::string config_path, csv_path, preset_name, method;
    std::vector<std::string> overrides;
    bool override_guards = false;
    app.add_option("--config", config_path, "key=value scenario file")->check(CLI::ExistingFile);
    app.add_option("--csv", csv_path, "write table output to this file");
    app.add_flag("--override-guards", override_guards, "evaluate weak-field formulas outside their range");
    app.add_option("--set", overrides, "override one key, e.g. --set source.a=0")->allow_extra_args(false);
    app.add_option("--preset", preset_name, "named parameter set");

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"kerr", "light speeds, phase difference and visibility near a rotating mass"},
        {"fig1", "phase and visibility scan towards a black-hole horizon (CSV)"},
        {"fig3", "HOM coincidence probability against turntable angular frequency (CSV)"},
        {"equivalence", "turntable speed that mimics frame dragging"},
        {"feasibility", "minimum velocities, coherence length and dip-centre shift"},
        {"hom", "HOM coincidence for a Gaussian or tabulated spectrum (CSV)"},
        {"fiber", "moving-fiber velocities, dispersion and coincidence probability"},
    };
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->fallthrough();
        if (std::string(s.name) == "equivalence")
            sub->add_option("--method", method, "metric or timeshift")->check(CLI::IsMember({"metric", "timeshift"}));
    }
    auto* verify_cmd = app.add_subcommand("verify", "run the oracle and invariant suite");
    verify_cmd->fallthrough();
    verify::VerifyOptions vopt;
    verify_cmd->add_flag("--tamper-weak-sign", vopt.tamper_weak_sign)->group("");
    verify_cmd->add_flag("--inject-beta-dependence", vopt.inject_beta_dependence)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what());
    }

    try {
        if (verify_cmd->parsed()) {
            const auto rep = verify::run_all(vopt);
            std::cout << rep.render();
            return rep.all_passed() ? kOk : kVerifyFailed;
        }
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (!method.empty()) overrides.push_back("equivalence.method=" + method);
        auto scenario = cli::make_scenario(cmd, preset_name, config_path, overrides);
        const cli::RunOptions ropt{override_guards};

        cli::CommandOutput out;
        if (cmd == "kerr") out = cli::cmd_kerr(std::move(scenario), ropt);
        else if (cmd == "fig1") out = cli::cmd_fig1(std::move(scenario), ropt);
        else if (cmd == "fig3") out = cli::cmd_fig3(std::move(scenario), ropt);
        else if (cmd == "equivalence") out = cli::cmd_equivalence(std::move(scenario), ropt);
        else if (cmd == "feasibility") out = cli::cmd_feasibility(std::move(scenario), ropt);
        else if (cmd == "hom") out = cli::cmd_hom(std::move(scenario), ropt);
        else out = cli::cmd_fiber(std::move(scenario), ropt);

        if (out.csv) {
            if (csv_path.empty()) std::cout << *out.csv;
            else write_csv(csv_path, *out.csv);
        }
        if (!out.csv || !csv_path.empty()) std::cout << out.report.render();
        else std::cerr << out.report.render();
        return kOk;
    } catch (const GuardViolation& e) {
        return fail("guard " + e.guard(), e.what());
    } catch (const DomainError& e) {
        return fail("domain", e.what());
    } catch (const ConfigError& e) {
        return fail("config", e.what());
    }
}
