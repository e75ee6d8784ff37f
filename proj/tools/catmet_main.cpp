// Copyright 2026 The Catmet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand emits one SweepTable as CSV or
// JSON, to stdout or --out. Exit codes: 0 success, 2 usage error, 1
// numerical or internal failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catmet/analytic.hpp"
#include "catmet/dephasing.hpp"
#include "catmet/estimation.hpp"
#include "catmet/fisher.hpp"
#include "catmet/kernels.hpp"
#include "catmet/meters.hpp"
#include "catmet/states.hpp"
#include "catmet/table.hpp"
#include "catmet/version.hpp"

namespace {

using catmet::table::SweepTable;

struct OutputOptions {
    std::string format = "csv";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path,
                    "Write the table to this file instead of stdout");
}

void emit(const SweepTable& table, const OutputOptions& opts) {
    std::ostringstream buf;
    if (opts.format == "json") {
        catmet::table::write_json(table, buf);
    } else {
        catmet::table::write_csv(table, buf);
    }
    if (opts.out_path.empty()) {
        std::cout << buf.str();
        return;
    }
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f) {
        throw catmet::Error("cannot open output file " + opts.out_path);
    }
    f << buf.str();
}

std::string format_param(double x) {
    // Integers print bare; everything else keeps full precision.
    if (x == std::floor(x) && std::abs(x) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", x);
        return buf;
    }
    return catmet::table::format_real(x);
}

SweepTable new_table(const std::string& command) {
    SweepTable t;
    t.metadata.command = command;
    t.metadata.version = catmet::kVersion;
    t.metadata.timestamp = catmet::table::current_timestamp();
    return t;
}

std::uint64_t random_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
    std::vector<double> xs(points);
    for (std::size_t i = 0; i < points; ++i) {
        xs[i] = lo + (hi - lo) * static_cast<double>(i) /
                         static_cast<double>(points - 1);
    }
    return xs;
}

std::string n_suffix(double n) {
    std::string s = format_param(n);
    for (auto& c : s) {
        if (c == '.') {
            c = 'p';
        }
    }
    return s;
}

// --- overlap ----------------------------------------------------------------

struct OverlapArgs {
    std::vector<double> n_list;
    double g_max = 0.25;
    std::size_t points = 200;
    std::string mode = "exact";
    std::string preset;
    OutputOptions out;
};

void setup_overlap(CLI::App& app, OverlapArgs& args, bool postselect) {
    const char* name = postselect ? "postselect" : "overlap";
    const char* desc = postselect
                           ? "Post-selection probabilities p_plus/p_minus "
                             "over a grid of interaction strengths"
                           : "Survival amplitude of the initial state over a "
                             "grid of interaction strengths";
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("--n-list", args.n_list,
                    "Mean photon numbers, one column set per value");
    cmd->add_option("--g-max", args.g_max, "Upper end of the g grid")
        ->capture_default_str();
    cmd->add_option("--points", args.points, "Grid size")
        ->capture_default_str();
    if (!postselect) {
        cmd->add_option("--mode", args.mode,
                        "exact closed form or leading small-g form")
            ->check(CLI::IsMember({"exact", "leading"}))
            ->capture_default_str();
    }
    cmd->add_option("--preset", args.preset,
                    "fig1: N in {10, 30, 120}, g up to 0.25, 500 points")
        ->check(CLI::IsMember({"fig1"}));
}

void apply_overlap_preset(const CLI::App* cmd, OverlapArgs& args) {
    if (args.preset == "fig1") {
        if (!cmd->count("--n-list")) {
            args.n_list = {10.0, 30.0, 120.0};
        }
        if (!cmd->count("--g-max")) {
            args.g_max = 0.25;
        }
        if (!cmd->count("--points")) {
            args.points = 500;
        }
    }
    if (args.n_list.empty()) {
        throw CLI::ValidationError("--n-list",
                                   "need at least one photon number");
    }
    if (!(args.g_max > 0.0)) {
        throw CLI::ValidationError("--g-max", "must be positive");
    }
    if (args.points < 2) {
        throw CLI::ValidationError("--points", "need at least two points");
    }
    for (const double n : args.n_list) {
        if (!(n >= 0.0)) {
            throw CLI::ValidationError("--n-list",
                                       "photon numbers must be >= 0");
        }
    }
}

void run_overlap(const CLI::App* cmd, OverlapArgs& args) {
    apply_overlap_preset(cmd, args);
    SweepTable t = new_table("overlap");
    t.metadata.set_param("mode", args.mode);
    t.metadata.set_param("g_max", format_param(args.g_max));
    t.metadata.set_param("points", format_param(double(args.points)));
    if (!args.preset.empty()) {
        t.metadata.set_param("preset", args.preset);
    }
    const std::vector<double> grid = linspace(0.0, args.g_max, args.points);
    t.add_column("g", grid);
    const auto regime = args.mode == "leading"
                            ? catmet::analytic::OverlapRegime::leading_order
                            : catmet::analytic::OverlapRegime::exact;
    for (const double n : args.n_list) {
        std::vector<double> col(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            col[i] = catmet::analytic::overlap(n, grid[i], regime).value;
        }
        t.add_column("overlap_N" + n_suffix(n), std::move(col));
    }
    emit(t, args.out);
}

void run_postselect(const CLI::App* cmd, OverlapArgs& args) {
    apply_overlap_preset(cmd, args);
    SweepTable t = new_table("postselect");
    t.metadata.set_param("g_max", format_param(args.g_max));
    t.metadata.set_param("points", format_param(double(args.points)));
    if (!args.preset.empty()) {
        t.metadata.set_param("preset", args.preset);
    }
    const std::vector<double> grid = linspace(0.0, args.g_max, args.points);
    t.add_column("g", grid);
    for (const double n : args.n_list) {
        std::vector<double> plus(grid.size()), minus(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto p = catmet::analytic::postselect_probs(n, grid[i]);
            plus[i] = p.p_plus;
            minus[i] = p.p_minus;
        }
        t.add_column("p_plus_N" + n_suffix(n), std::move(plus));
        t.add_column("p_minus_N" + n_suffix(n), std::move(minus));
    }
    emit(t, args.out);
}

// --- qfi --------------------------------------------------------------------

struct QfiArgs {
    std::string mode;
    double n_photons = 0.0;
    double sigma = 1.0;
    double phi2 = 0.0;
    double g = 0.0;
    OutputOptions out;
};

void setup_qfi(CLI::App& app, QfiArgs& args) {
    CLI::App* cmd = app.add_subcommand(
        "qfi", "Quantum or classical Fisher information in g");
    cmd->add_option("--mode", args.mode, "Which family to evaluate")
        ->check(CLI::IsMember({"pure-cat", "coherent-only", "gaussian-meter",
                               "dephased", "postselect-cfi"}))
        ->required();
    cmd->add_option("--n", args.n_photons, "Mean photon number")->required();
    cmd->add_option("--sigma", args.sigma,
                    "Gaussian meter width (gaussian-meter mode)")
        ->capture_default_str();
    cmd->add_option("--phi2", args.phi2,
                    "Phase-noise variance (dephased mode)")
        ->capture_default_str();
    cmd->add_option("--g", args.g,
                    "Evaluation point (dephased and postselect-cfi modes)")
        ->capture_default_str();
}

void run_qfi(const QfiArgs& args) {
    namespace fisher = catmet::fisher;
    if (!(args.n_photons > 0.0)) {
        throw CLI::ValidationError("--n", "must be positive");
    }
    SweepTable t = new_table("qfi");
    t.metadata.set_param("mode", args.mode);
    t.metadata.set_param("n", format_param(args.n_photons));
    const double step = fisher::qfi_step_for(args.n_photons);
    const double alpha = std::sqrt(args.n_photons);
    const std::size_t dim = catmet::states::default_fock_dim(args.n_photons);
    fisher::FisherReport rep{};
    if (args.mode == "pure-cat") {
        rep = fisher::qfi_pure(
            fisher::cat_state_family(catmet::states::symmetric_qubit(), alpha,
                                     dim),
            0.0, step);
    } else if (args.mode == "coherent-only") {
        rep = fisher::qfi_pure(fisher::coherent_rotation_family(alpha, dim),
                               0.0, step);
    } else if (args.mode == "gaussian-meter") {
        t.metadata.set_param("sigma", format_param(args.sigma));
        rep = fisher::qfi_gaussian_meter(args.n_photons, args.sigma);
    } else if (args.mode == "dephased") {
        t.metadata.set_param("phi2", format_param(args.phi2));
        t.metadata.set_param("g", format_param(args.g));
        rep = fisher::qfi_mixed_sld(
            fisher::dephased_qubit_family(args.n_photons, args.phi2), args.g,
            step);
    } else {  // postselect-cfi
        t.metadata.set_param("g", format_param(args.g));
        rep = fisher::cfi_postselection(args.n_photons, args.g);
    }
    t.metadata.set_param("method", fisher::method_name(rep.method));
    t.add_column("fisher", {rep.fisher});
    t.add_column("crb", {rep.crb});
    emit(t, args.out);
}

// --- estimate ---------------------------------------------------------------

struct EstimateArgs {
    double n_photons = 0.0;
    double g = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t reps = 0;
    std::optional<std::uint64_t> seed;
    std::string model = "smallg";
    unsigned workers = 0;
    std::string preset;
    OutputOptions out;
};

void setup_estimate(CLI::App& app, EstimateArgs& args) {
    CLI::App* cmd = app.add_subcommand(
        "estimate",
        "Monte Carlo estimation of g from binary post-selection counts");
    cmd->add_option("--n", args.n_photons, "Mean photon number");
    cmd->add_option("--g", args.g, "True interaction strength");
    cmd->add_option("--trials", args.trials, "Post-selection shots per repetition");
    cmd->add_option("--reps", args.reps, "Independent repetitions");
    cmd->add_option("--seed", args.seed,
                    "RNG seed; omitted means a fresh random seed, recorded "
                    "in the output metadata");
    cmd->add_option("--model", args.model, "Outcome probability model")
        ->check(CLI::IsMember({"smallg", "exact"}))
        ->capture_default_str();
    cmd->add_option("--workers", args.workers,
                    "Worker threads (0 = all cores); does not affect values")
        ->capture_default_str();
    cmd->add_option("--preset", args.preset,
                    "fig3: N=120, g=0.005, 10000 trials, 500 reps, "
                    "pinned seed")
        ->check(CLI::IsMember({"fig3"}));
}

void run_estimate(const CLI::App* cmd, EstimateArgs& args) {
    namespace est = catmet::estimation;
    if (args.preset == "fig3") {
        if (!cmd->count("--n")) args.n_photons = 120.0;
        if (!cmd->count("--g")) args.g = 0.005;
        if (!cmd->count("--trials")) args.trials = 10000;
        if (!cmd->count("--reps")) args.reps = 500;
        if (!cmd->count("--seed")) args.seed = 20120;
    }
    est::EstimationRun run;
    run.n_photons = args.n_photons;
    run.g_true = args.g;
    run.trials = args.trials;
    run.repetitions = args.reps;
    run.seed = args.seed ? *args.seed : random_seed();
    run.model = args.model == "exact" ? est::Model::exact
                                      : est::Model::smallg_cos2;
    try {
        run.validate();
    } catch (const catmet::InvalidArgument& e) {
        throw CLI::ValidationError("estimate", e.what());
    }
    const est::EstimationReport rep = est::run_estimation(run, args.workers);
    SweepTable t = new_table("estimate");
    t.metadata.seed = run.seed;
    t.metadata.set_param("n", format_param(run.n_photons));
    t.metadata.set_param("g", format_param(run.g_true));
    t.metadata.set_param("trials", std::to_string(run.trials));
    t.metadata.set_param("reps", std::to_string(run.repetitions));
    t.metadata.set_param("model", est::model_name(run.model));
    if (!args.preset.empty()) {
        t.metadata.set_param("preset", args.preset);
    }
    t.add_column("p_plus_model", {rep.p_plus_model});
    t.add_column("p_hat_mean", {rep.p_hat_mean});
    t.add_column("p_hat_std", {rep.p_hat_std});
    t.add_column("g_hat_mean", {rep.g_hat_mean});
    t.add_column("g_hat_std", {rep.g_hat_std});
    t.add_column("sigma_g_predicted", {rep.sigma_g_predicted});
    t.add_column("sigma_g_predicted_binomial",
                 {rep.sigma_g_predicted_binomial});
    t.add_column("edge_count", {static_cast<double>(rep.edge_count)});
    emit(t, args.out);
}

// --- scaling ----------------------------------------------------------------

struct ScalingArgs {
    std::vector<double> n_list;
    double gn = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t reps = 0;
    std::optional<std::uint64_t> seed;
    std::string model = "smallg";
    unsigned workers = 0;
    OutputOptions out;
};

void setup_scaling(CLI::App& app, ScalingArgs& args) {
    CLI::App* cmd = app.add_subcommand(
        "scaling",
        "Empirical precision scaling of the estimator across photon numbers "
        "at fixed g N");
    cmd->add_option("--n-list", args.n_list, "Photon numbers (>= 2 values)")
        ->required();
    cmd->add_option("--gn", args.gn, "Fixed product g N in (0, pi/2)")
        ->required();
    cmd->add_option("--trials", args.trials, "Shots per repetition")
        ->required();
    cmd->add_option("--reps", args.reps, "Repetitions per photon number")
        ->required();
    cmd->add_option("--seed", args.seed, "RNG seed; omitted means random");
    cmd->add_option("--model", args.model, "Outcome probability model")
        ->check(CLI::IsMember({"smallg", "exact"}))
        ->capture_default_str();
    cmd->add_option("--workers", args.workers,
                    "Worker threads (0 = all cores); does not affect values")
        ->capture_default_str();
}

void run_scaling(const ScalingArgs& args) {
    namespace est = catmet::estimation;
    const std::uint64_t seed = args.seed ? *args.seed : random_seed();
    const est::Model model = args.model == "exact" ? est::Model::exact
                                                   : est::Model::smallg_cos2;
    est::ScalingSweep sweep;
    try {
        sweep = est::scaling_sweep(args.n_list, args.gn, args.trials,
                                   args.reps, seed, model, args.workers);
    } catch (const catmet::InvalidArgument& e) {
        throw CLI::ValidationError("scaling", e.what());
    }
    SweepTable t = new_table("scaling");
    t.metadata.seed = seed;
    t.metadata.set_param("gn", format_param(args.gn));
    t.metadata.set_param("trials", std::to_string(args.trials));
    t.metadata.set_param("reps", std::to_string(args.reps));
    t.metadata.set_param("model", args.model);
    t.metadata.set_param("loglog_slope",
                         catmet::table::format_real(sweep.loglog_slope));
    std::vector<double> n, g, spread, predicted;
    for (const auto& pt : sweep.points) {
        n.push_back(pt.n_photons);
        g.push_back(pt.g_true);
        spread.push_back(pt.g_hat_std);
        predicted.push_back(pt.sigma_predicted);
    }
    t.add_column("n", std::move(n));
    t.add_column("g", std::move(g));
    t.add_column("g_hat_std", std::move(spread));
    t.add_column("sigma_predicted", std::move(predicted));
    emit(t, args.out);
}

// --- meter ------------------------------------------------------------------

struct MeterArgs {
    std::string type;
    double sigma = 0.0;
    double wavelength = 0.0;
    std::vector<double> n_list;
    double d = -1.0;
    double d_max = -1.0;
    std::size_t points = 200;
    std::string criterion;
    bool first_zero = false;
    OutputOptions out;
};

void setup_meter(CLI::App& app, MeterArgs& args) {
    CLI::App* cmd = app.add_subcommand(
        "meter", "Pointer-state meters read out through post-selection");
    cmd->add_option("--type", args.type, "Meter kind")
        ->check(CLI::IsMember({"gaussian", "plane"}))
        ->required();
    cmd->add_option("--sigma", args.sigma, "Gaussian pointer width");
    cmd->add_option("--wavelength", args.wavelength, "Plane-wave wavelength");
    cmd->add_option("--n-list", args.n_list, "Photon numbers")->required();
    cmd->add_option("--d", args.d, "Single displacement to evaluate");
    cmd->add_option("--d-max", args.d_max,
                    "Sweep displacements on [0, d-max] instead");
    cmd->add_option("--points", args.points, "Sweep grid size")
        ->capture_default_str();
    cmd->add_option("--criterion", args.criterion,
                    "Emit the minimum resolvable displacement (gaussian)")
        ->check(CLI::IsMember({"overlap", "crb"}));
    cmd->add_flag("--first-zero", args.first_zero,
                  "Emit the first survival zero per photon number (plane)");
}

void run_meter(const MeterArgs& args) {
    namespace meters = catmet::meters;
    if (args.n_list.empty()) {
        throw CLI::ValidationError("--n-list", "need at least one value");
    }
    SweepTable t = new_table("meter");
    t.metadata.set_param("type", args.type);
    if (args.type == "gaussian") {
        if (!(args.sigma > 0.0)) {
            throw CLI::ValidationError("--sigma",
                                       "gaussian meter needs --sigma > 0");
        }
        t.metadata.set_param("sigma", format_param(args.sigma));
        if (!args.criterion.empty()) {
            const auto crit = args.criterion == "overlap"
                                  ? meters::DminCriterion::overlap
                                  : meters::DminCriterion::crb;
            t.metadata.set_param("criterion", args.criterion);
            std::vector<double> dmin(args.n_list.size());
            for (std::size_t i = 0; i < args.n_list.size(); ++i) {
                dmin[i] = meters::gaussian_dmin(args.sigma, args.n_list[i],
                                                crit);
            }
            t.add_column("n", {args.n_list.begin(), args.n_list.end()});
            t.add_column("d_min", std::move(dmin));
        } else if (args.d_max > 0.0) {
            if (args.points < 2) {
                throw CLI::ValidationError("--points", "need >= 2");
            }
            const auto grid = linspace(0.0, args.d_max, args.points);
            t.add_column("d", grid);
            for (const double n : args.n_list) {
                std::vector<double> col(grid.size());
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    col[i] = meters::gaussian_overlap(
                        meters::GaussianMeter{args.sigma, grid[i]}, n);
                }
                t.add_column("overlap_N" + n_suffix(n), std::move(col));
            }
        } else if (args.d >= 0.0) {
            t.metadata.set_param("d", format_param(args.d));
            std::vector<double> col(args.n_list.size());
            for (std::size_t i = 0; i < args.n_list.size(); ++i) {
                col[i] = meters::gaussian_overlap(
                    meters::GaussianMeter{args.sigma, args.d},
                    args.n_list[i]);
            }
            t.add_column("n", {args.n_list.begin(), args.n_list.end()});
            t.add_column("overlap", std::move(col));
        } else {
            throw CLI::ValidationError(
                "meter", "gaussian mode needs --d, --d-max, or --criterion");
        }
    } else {  // plane
        if (!(args.wavelength > 0.0)) {
            throw CLI::ValidationError("--wavelength",
                                       "plane meter needs --wavelength > 0");
        }
        t.metadata.set_param("wavelength", format_param(args.wavelength));
        const meters::PlaneWaveMeter meter{args.wavelength};
        if (args.first_zero) {
            std::vector<double> zero(args.n_list.size());
            for (std::size_t i = 0; i < args.n_list.size(); ++i) {
                zero[i] = meters::planewave_first_zero(meter, args.n_list[i]);
            }
            t.add_column("n", {args.n_list.begin(), args.n_list.end()});
            t.add_column("d_first_zero", std::move(zero));
        } else if (args.d_max > 0.0) {
            if (args.points < 2) {
                throw CLI::ValidationError("--points", "need >= 2");
            }
            const auto grid = linspace(0.0, args.d_max, args.points);
            t.add_column("d", grid);
            for (const double n : args.n_list) {
                std::vector<double> col(grid.size());
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    col[i] = meters::planewave_postselect(meter, grid[i], n);
                }
                t.add_column("p_plus_N" + n_suffix(n), std::move(col));
            }
        } else if (args.d >= 0.0) {
            t.metadata.set_param("d", format_param(args.d));
            std::vector<double> phase(args.n_list.size()),
                prob(args.n_list.size());
            for (std::size_t i = 0; i < args.n_list.size(); ++i) {
                phase[i] = meters::planewave_phase(meter, args.d) *
                           args.n_list[i];
                prob[i] = meters::planewave_postselect(meter, args.d,
                                                       args.n_list[i]);
            }
            t.add_column("n", {args.n_list.begin(), args.n_list.end()});
            t.add_column("phase", std::move(phase));
            t.add_column("p_plus", std::move(prob));
        } else {
            throw CLI::ValidationError(
                "meter", "plane mode needs --d, --d-max, or --first-zero");
        }
    }
    emit(t, args.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weak-measurement metrology toolkit: closed forms, Fisher "
                 "information, and Monte Carlo estimation for a qubit "
                 "coupled to a coherent field mode"};
    app.set_version_flag("--version", catmet::kVersion);
    app.require_subcommand(1);

    OverlapArgs overlap_args;
    setup_overlap(app, overlap_args, false);
    add_output_options(app.get_subcommand("overlap"), overlap_args.out);

    OverlapArgs postselect_args;
    setup_overlap(app, postselect_args, true);
    add_output_options(app.get_subcommand("postselect"), postselect_args.out);

    QfiArgs qfi_args;
    setup_qfi(app, qfi_args);
    add_output_options(app.get_subcommand("qfi"), qfi_args.out);

    EstimateArgs estimate_args;
    setup_estimate(app, estimate_args);
    add_output_options(app.get_subcommand("estimate"), estimate_args.out);

    ScalingArgs scaling_args;
    setup_scaling(app, scaling_args);
    add_output_options(app.get_subcommand("scaling"), scaling_args.out);

    MeterArgs meter_args;
    setup_meter(app, meter_args);
    add_output_options(app.get_subcommand("meter"), meter_args.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("overlap")) {
            run_overlap(app.get_subcommand("overlap"), overlap_args);
        } else if (app.got_subcommand("postselect")) {
            run_postselect(app.get_subcommand("postselect"), postselect_args);
        } else if (app.got_subcommand("qfi")) {
            run_qfi(qfi_args);
        } else if (app.got_subcommand("estimate")) {
            run_estimate(app.get_subcommand("estimate"), estimate_args);
        } else if (app.got_subcommand("scaling")) {
            run_scaling(scaling_args);
        } else if (app.got_subcommand("meter")) {
            run_meter(meter_args);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const catmet::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
