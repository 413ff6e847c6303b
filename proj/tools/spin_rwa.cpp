// spin-rwa: rotating-wave spin dynamics from the command line.
//
// Subcommands:
//   scenario  run one of the 24 built-in figure scenarios
//   evolve    run a custom configuration (flags and/or key=value file)
//   sweep     peak-transfer profile across drive frequencies
//   validate  cross-check the closed form against brute-force integration

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>

#include "spinrwa/spinrwa.hpp"

namespace {

using namespace spinrwa;

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_absolute())
        return p;
    if (const char* dir = std::getenv("SPIN_RWA_OUT_DIR"); dir != nullptr && *dir != '\0')
        return std::filesystem::path(dir) / p;
    return p;
}

void write_series(const TimeSeries& series, const std::string& out_csv,
                  const std::string& out_svg, const std::string& title) {
    if (!out_svg.empty()) {
        SvgStyle style;
        style.title = title;
        emit_svg(series, resolve_output(out_svg), style);
    }
    if (!out_csv.empty())
        emit_csv(series, resolve_output(out_csv));
    else if (out_svg.empty())
        emit_csv(series, std::cout);
}

int run_validate() {
    using std::numbers::pi;
    struct Check {
        std::string name;
        double value;
        double tolerance;
    };
    std::vector<Check> checks;

    {
        std::mt19937 gen(2718);
        std::uniform_real_distribution<double> angle(-2.0 * pi, 2.0 * pi);
        double worst = 0.0;
        for (int twice_s = 1; twice_s <= 9; ++twice_s) {
            const SpinQuantum spin(twice_s);
            const SpinOperators ops = spin_matrices(spin);
            for (int trial = 0; trial < 20; ++trial) {
                const double beta = angle(gen);
                const Eigen::MatrixXcd expected = oracle::hermitian_phase_exp(ops.sy, beta);
                const double err = (wigner_d(spin, beta).entries.cast<std::complex<double>>() -
                                    expected)
                                       .cwiseAbs()
                                       .maxCoeff();
                worst = std::max(worst, err);
            }
        }
        checks.push_back({"wigner d vs exp(-i beta Sy), s <= 9/2", worst, 1e-10});
    }
    {
        double worst = 0.0;
        for (double beta : {1.3, pi / 2, 2.9}) {
            const Eigen::MatrixXd d = wigner_d(SpinQuantum(65), beta).entries;
            worst = std::max(worst,
                             (d.transpose() * d - Eigen::MatrixXd::Identity(66, 66))
                                 .cwiseAbs()
                                 .maxCoeff());
        }
        checks.push_back({"wigner d orthogonality, s = 65/2", worst, 1e-8});
    }
    {
        std::mt19937 gen(3141);
        std::uniform_real_distribution<double> angle(-2.0 * pi, 2.0 * pi);
        double worst = 0.0;
        for (int twice_s = 1; twice_s <= 9; ++twice_s)
            for (int trial = 0; trial < 20; ++trial)
                worst = std::max(worst, oracle::rotation_identity_residual(
                                            SpinQuantum(twice_s), angle(gen)));
        checks.push_back({"z-rotation identity residual, s <= 9/2", worst, 1e-12});
    }
    {
        double worst = 0.0;
        for (int twice_s = 1; twice_s <= 9; ++twice_s)
            for (double omega : {1.0, 1.01, 1.03})
                worst = std::max(worst, oracle::rotated_diagonalization_residual(
                                            SpinQuantum(twice_s), FieldConfig(1.0, 0.01, omega)));
        checks.push_back({"rotating-frame diagonalization residual", worst, 1e-12});
    }
    {
        double worst = 0.0;
        for (int twice_s : {1, 4}) {
            const SpinQuantum spin(twice_s);
            const StateVector initial = StateVector::stretched(spin);
            for (double omega : {1.0, 1.01, 1.03}) {
                const FieldConfig field(1.0, 0.01, omega);
                const DerivedFrame frame = derive_frame(field);
                for (double tau : {0.25, 0.5, 1.0}) {
                    const double t = tau * frame.period;
                    const StateVector closed = evolve(spin, initial, field, t);
                    const StateVector brute =
                        oracle::integrate(spin, initial, field, t, {2e-3});
                    worst = std::max(worst, (closed.amplitudes() - brute.amplitudes())
                                                .cwiseAbs()
                                                .maxCoeff());
                }
            }
        }
        checks.push_back({"closed form vs lab-frame RK4 (s = 1/2, 2)", worst, 1e-6});
    }

    bool all_ok = true;
    for (const auto& check : checks) {
        const bool ok = check.value < check.tolerance;
        all_ok = all_ok && ok;
        std::printf("%s  %-45s %.3e (tolerance %.0e)\n", ok ? "ok  " : "FAIL",
                    check.name.c_str(), check.value, check.tolerance);
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rotating-wave magnetic-resonance dynamics for arbitrary spin"};
    app.require_subcommand(1);
    app.failure_message([](const CLI::App*, const CLI::Error& e) {
        return std::string("error: ") + e.what() + "\n";
    });

    std::string id, out_csv, out_svg, title;
    int samples = 0;
    double periods = 0.0;
    bool list_ids = false;

    auto* cmd_scenario =
        app.add_subcommand("scenario", "Run a built-in scenario (fig1..fig8 x top|middle|bottom)");
    cmd_scenario->add_option("id", id, "Scenario id, e.g. fig1-top");
    cmd_scenario->add_option("--out", out_csv, "CSV output path (default: stdout)");
    cmd_scenario->add_option("--svg", out_svg, "SVG plot output path");
    cmd_scenario->add_option("--samples", samples, "Samples across the run");
    cmd_scenario->add_option("--periods", periods, "Number of periods to cover");
    cmd_scenario->add_flag("--list", list_ids, "List the scenario ids and exit");

    std::string spin_text = "1/2", init_text = "stretched", drive_text, config_path;
    double omega = 0.0, ratio = 0.0;

    auto* cmd_evolve = app.add_subcommand("evolve", "Run a custom configuration");
    auto* opt_spin = cmd_evolve->add_option("--spin", spin_text, "Spin, e.g. 2, 1.5 or 9/2");
    auto* opt_init = cmd_evolve->add_option(
        "--init", init_text, "Initial probabilities p1,p2,... or uniform|stretched");
    auto* opt_drive =
        cmd_evolve->add_option("--drive", drive_text, "Named drive: resonance|peak|off");
    auto* opt_omega = cmd_evolve->add_option("--omega", omega, "Explicit drive frequency");
    opt_omega->excludes(opt_drive);
    auto* opt_ratio = cmd_evolve->add_option("--ratio", ratio, "omega1/omega0 (default 0.01)");
    auto* opt_samples = cmd_evolve->add_option("--samples", samples, "Samples across the run");
    auto* opt_periods = cmd_evolve->add_option("--periods", periods, "Periods to cover");
    cmd_evolve->add_option("--config", config_path, "key=value file; flags override it");
    cmd_evolve->add_option("--out", out_csv, "CSV output path (default: stdout)");
    cmd_evolve->add_option("--svg", out_svg, "SVG plot output path");
    cmd_evolve->add_option("--title", title, "SVG title");

    double from = 0.0, to = 0.0;
    int points = 0;
    auto* cmd_sweep = app.add_subcommand("sweep", "Peak transfer across drive frequencies");
    cmd_sweep->add_option("--spin", spin_text, "Spin, e.g. 2, 1.5 or 9/2");
    cmd_sweep->add_option("--init", init_text,
                          "Initial probabilities (default: stretched)");
    cmd_sweep->add_option("--from", from, "First drive frequency")->required();
    cmd_sweep->add_option("--to", to, "Last drive frequency")->required();
    cmd_sweep->add_option("--points", points, "Sweep points")->required();
    cmd_sweep->add_option("--ratio", ratio, "omega1/omega0 (default 0.01)");
    cmd_sweep->add_option("--samples", samples, "Samples per period (default 201)");
    cmd_sweep->add_option("--out", out_csv, "CSV output path (default: stdout)");

    auto* cmd_validate =
        app.add_subcommand("validate", "Run the oracle cross-check suite and print residuals");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_scenario->parsed()) {
            if (list_ids) {
                for (const auto& name : builtin_scenario_ids())
                    std::cout << name << '\n';
                return 0;
            }
            if (id.empty())
                throw UnknownScenario("scenario: missing id (try --list)");
            Scenario scenario = builtin_scenario(id);
            if (samples > 0)
                scenario.samples = samples;
            if (periods > 0.0)
                scenario.n_periods = periods;
            write_series(run_scenario(scenario), out_csv, out_svg,
                         title.empty() ? scenario.name : title);
        } else if (cmd_evolve->parsed()) {
            Scenario scenario;
            scenario.name = "custom";
            bool init_given = false;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in)
                    throw IoError("cannot read config '" + config_path + "'");
                const auto entries = parse_config_stream(in);
                init_given = entries.count("init") > 0;
                apply_config(scenario, entries);
            }
            if (opt_spin->count() > 0)
                scenario.spin = SpinQuantum::parse(spin_text);
            if (opt_init->count() > 0 || !init_given)
                scenario.initial_probabilities = parse_probabilities(init_text, scenario.spin);
            if (opt_drive->count() > 0)
                scenario.drive = Drive::parse(drive_text);
            if (opt_omega->count() > 0)
                scenario.drive = Drive::at(omega);
            if (opt_ratio->count() > 0)
                scenario.ratio = ratio;
            if (opt_samples->count() > 0)
                scenario.samples = samples;
            if (opt_periods->count() > 0)
                scenario.n_periods = periods;
            write_series(run_scenario(scenario), out_csv, out_svg,
                         title.empty() ? scenario.name : title);
        } else if (cmd_sweep->parsed()) {
            const SpinQuantum spin = SpinQuantum::parse(spin_text);
            const StateVector initial = StateVector::from_probabilities(
                spin, parse_probabilities(init_text, spin));
            const double omega1 = ratio > 0.0 ? ratio : 0.01;
            const ResonanceProfile profile =
                frequency_sweep(spin, initial, 1.0, omega1, from, to, points,
                                samples > 0 ? samples : 201);
            if (!out_csv.empty())
                emit_csv(profile, resolve_output(out_csv));
            else
                emit_csv(profile, std::cout);
        } else if (cmd_validate->parsed()) {
            return run_validate();
        }
    } catch (const std::exception& e) {
        std::string message = e.what();
        for (char& c : message)
            if (c == '\n')
                c = ' ';
        std::cerr << "error: " << message << '\n';
        return 1;
    }
    return 0;
}
