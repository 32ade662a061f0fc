#include "mltomo/cli.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mltomo/bases.hpp"
#include "mltomo/ensemble.hpp"
#include "mltomo/io.hpp"
#include "mltomo/least_squares.hpp"
#include "mltomo/linear_inversion.hpp"
#include "mltomo/metrics.hpp"

namespace mltomo::cli {

namespace {

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, sep)) {
        parts.push_back(part);
    }
    return parts;
}

std::array<double, 3> parse_bloch(const std::string &text) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 3) {
        throw InvalidConfig("--bloch expects three comma-separated numbers");
    }
    std::array<double, 3> v{};
    for (int j = 0; j < 3; ++j) {
        v[j] = std::stod(parts[j]);
    }
    return v;
}

std::vector<std::uint64_t> parse_shots(const std::string &text,
                                       std::size_t n_observables) {
    const std::vector<std::string> parts = split(text, ',');
    std::vector<std::uint64_t> shots;
    for (const std::string &p : parts) {
        const long long value = std::stoll(p);
        if (value < 1) {
            throw InvalidConfig("--shots entries must be >= 1");
        }
        shots.push_back(static_cast<std::uint64_t>(value));
    }
    if (shots.size() == 1 && n_observables > 1) {
        shots.assign(n_observables, shots.front());
    }
    if (shots.size() != n_observables) {
        std::ostringstream msg;
        msg << "--shots lists " << shots.size() << " budgets for "
            << n_observables << " observables";
        throw InvalidConfig(msg.str());
    }
    return shots;
}

/// N total shots spread over k observables; the first N % k observables
/// absorb the remainder.
std::vector<std::uint64_t> spread_shots(std::uint64_t total, std::size_t k) {
    std::vector<std::uint64_t> shots(k, total / k);
    for (std::size_t o = 0; o < total % k; ++o) {
        ++shots[o];
    }
    return shots;
}

std::vector<ObservableBasis> preset_bases(const std::string &preset) {
    if (preset == "pauli6") {
        return pauli6_bases();
    }
    if (preset.rfind("mub-", 0) == 0) {
        const int dim = std::stoi(preset.substr(4));
        return mub_bases(dim);
    }
    throw InvalidConfig("unknown preset '" + preset + "'");
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char *env = std::getenv("MLQ_SEED")) {
        return std::stoull(env);
    }
    return flag_seed;
}

struct GenerateOptions {
    std::string preset;
    std::string basis;
    std::string bloch;
    std::string state_path;
    std::string shots = "100";
    std::uint64_t seed = 0;
    bool exact = false;
    std::string output;
};

struct EstimateOptions {
    std::string data_path;
    std::string method = "ml";
    double tolerance = 1e-8;
    int max_iterations = 10000;
    double dilution = 1.0;
    double floor = 1e-12;
    double rank_tol = 1e-8;
    std::string output;
};

struct SweepOptions {
    std::string bloch;
    std::string state_path;
    std::string preset = "pauli6";
    std::string n_list;
    int trials = 1;
    std::string estimators = "ml";
    std::uint64_t seed = 0;
    std::string output;
};

struct VerifyOptions {
    std::string state_path;
    std::string data_path;
    double rank_tol = 1e-8;
    double floor = 1e-12;
};

DensityMatrix load_true_state(const std::string &bloch,
                              const std::string &state_path) {
    if (!bloch.empty() && !state_path.empty()) {
        throw InvalidConfig("--bloch and --state are mutually exclusive");
    }
    if (!bloch.empty()) {
        const std::array<double, 3> v = parse_bloch(bloch);
        return DensityMatrix::from_bloch(v[0], v[1], v[2]);
    }
    if (!state_path.empty()) {
        return read_state_file(state_path);
    }
    throw InvalidConfig("need a source state: --bloch or --state");
}

int cmd_generate(const GenerateOptions &opt) {
    DensityMatrix state = load_true_state(opt.bloch, opt.state_path);

    std::vector<ObservableBasis> bases;
    std::string plan_name;
    if (!opt.preset.empty() && !opt.basis.empty()) {
        throw InvalidConfig("--preset and --basis are mutually exclusive");
    }
    if (!opt.preset.empty()) {
        bases = preset_bases(opt.preset);
        plan_name = opt.preset;
    } else if (!opt.basis.empty()) {
        if (opt.basis.size() != 1) {
            throw InvalidConfig("--basis expects one of x, y, z");
        }
        bases.push_back(pauli_basis(opt.basis[0]));
        plan_name = "basis-" + opt.basis;
    } else {
        throw InvalidConfig("need a measurement: --preset or --basis");
    }

    MeasurementPlan plan;
    plan.seed = effective_seed(opt.seed);
    for (ObservableBasis &basis : bases) {
        plan.observables.emplace_back(std::move(basis));
    }
    plan.shots_per_observable =
        parse_shots(opt.shots, plan.observables.size());

    const Dataset data = opt.exact ? exact_dataset(state, plan)
                                   : sample_dataset(state, plan);

    std::map<std::string, std::string> metadata;
    metadata["plan"] = plan_name;
    metadata["seed"] = std::to_string(plan.seed);
    metadata["sampling"] = opt.exact ? "exact" : "sampled";
    write_dataset_file(opt.output, data, metadata);
    std::cout << "wrote " << opt.output << " (dim " << data.dim() << ", "
              << data.size() << " records, " << data.total() << " shots)\n";
    return kExitOk;
}

int cmd_estimate(const EstimateOptions &opt) {
    const DatasetFile file = read_dataset_file(opt.data_path);
    const Dataset &data = file.data;

    EstimatorConfig config;
    config.tolerance = opt.tolerance;
    config.max_iterations = opt.max_iterations;
    config.dilution = opt.dilution;
    config.floor = opt.floor;

    std::cout << "method: " << opt.method << "\n"
              << "dim: " << data.dim() << "\n"
              << "records: " << data.size() << " (total " << data.total()
              << " shots)\n";

    bool converged = true;
    if (opt.method == "ml") {
        const EstimationResult result = estimate_ml(data, config);
        converged = result.converged;
        write_state_file(opt.output, result.estimate);
        double max_gap = 0.0;
        int floored = 0;
        for (const ExpectationCheck &check :
             check_expectation_condition(result.estimate, data, opt.floor)) {
            max_gap = std::max(max_gap, check.gap);
            floored += check.floored ? 1 : 0;
        }
        std::cout << "converged: " << (converged ? "yes" : "no") << "\n"
                  << "iterations: " << result.iterations << "\n"
                  << "log-likelihood (nats/shot): "
                  << csv_double(log_likelihood(result.estimate, data,
                                               opt.floor))
                  << "\n"
                  << "extremal residual: "
                  << csv_double(result.fixed_point_residual) << "\n"
                  << "expectation-condition max gap: " << csv_double(max_gap)
                  << " (" << floored << " floored records)\n"
                  << "subspace completeness residual: "
                  << csv_double(check_subspace_completeness(
                         result.estimate, data, opt.rank_tol, opt.floor))
                  << "\n";
    } else if (opt.method == "ls") {
        const LsResult result = estimate_ls(data, config);
        converged = result.converged;
        write_state_file(opt.output, result.estimate);
        std::cout << "converged: " << (converged ? "yes" : "no") << "\n"
                  << "iterations: " << result.iterations << "\n"
                  << "objective: " << csv_double(result.objective) << "\n"
                  << "lambda: " << csv_double(result.lambda) << "\n"
                  << "extremal residual (least squares): "
                  << csv_double(result.extremal_residual) << "\n"
                  << "log-likelihood (nats/shot): "
                  << csv_double(
                         log_likelihood(result.estimate, data, opt.floor))
                  << "\n";
    } else if (opt.method == "linear") {
        const DensityMatrix estimate = estimate_linear_inversion(data);
        write_state_file(opt.output, estimate);
        std::cout << "log-likelihood (nats/shot): "
                  << csv_double(log_likelihood(estimate, data, opt.floor))
                  << "\n";
    } else {
        throw InvalidConfig("--method must be ml, ls or linear");
    }
    std::cout << "estimate written to: " << opt.output << "\n";
    return converged ? kExitOk : kExitNoConvergence;
}

int cmd_sweep(const SweepOptions &opt) {
    const DensityMatrix state = load_true_state(opt.bloch, opt.state_path);
    std::vector<ObservableBasis> bases = preset_bases(opt.preset);
    const std::size_t n_obs = bases.size();

    std::vector<EstimatorKind> kinds;
    for (const std::string &name : split(opt.estimators, ',')) {
        if (name == "ml") {
            kinds.push_back(EstimatorKind::MaximumLikelihood);
        } else if (name == "ls") {
            kinds.push_back(EstimatorKind::LeastSquares);
        } else if (name == "linear") {
            kinds.push_back(EstimatorKind::LinearInversion);
        } else {
            throw InvalidConfig("unknown estimator '" + name + "'");
        }
    }
    if (kinds.empty()) {
        throw InvalidConfig("--estimators must name at least one estimator");
    }

    std::vector<std::uint64_t> n_values;
    for (const std::string &n : split(opt.n_list, ',')) {
        const long long value = std::stoll(n);
        if (value < 1) {
            throw InvalidConfig("--N entries must be >= 1");
        }
        n_values.push_back(static_cast<std::uint64_t>(value));
    }
    if (n_values.empty()) {
        throw InvalidConfig("--N must list at least one shot total");
    }

    const std::uint64_t seed = effective_seed(opt.seed);

    std::ostringstream csv;
    csv << "N,estimator,metric,value,crb\n";
    for (const std::uint64_t n : n_values) {
        MeasurementPlan plan;
        for (const ObservableBasis &basis : bases) {
            plan.observables.emplace_back(basis);
        }
        plan.shots_per_observable = spread_shots(n, n_obs);
        plan.seed = seed;

        const EnsembleReport report =
            run_ensemble(state, plan, opt.trials, kinds);
        for (EstimatorKind kind : kinds) {
            const EstimatorStats &stats = report.statistics.at(kind);
            const std::string prefix =
                std::to_string(n) + "," + estimator_name(kind) + ",";
            csv << prefix << "mean_fidelity,"
                << csv_double(stats.mean_fidelity) << ",\n";
            csv << prefix << "mean_trace_distance,"
                << csv_double(stats.mean_trace_distance) << ",\n";
            const char axes[3] = {'x', 'y', 'z'};
            double bias_sq = 0.0;
            for (int j = 0; j < 3; ++j) {
                csv << prefix << "bias_" << axes[j] << ","
                    << csv_double(stats.bias[j]) << ",\n";
                bias_sq += stats.bias[j] * stats.bias[j];
            }
            csv << prefix << "bias_magnitude," << csv_double(std::sqrt(bias_sq))
                << ",\n";
            for (int j = 0; j < 3; ++j) {
                csv << prefix << "variance_" << axes[j] << ","
                    << csv_double(stats.variance[j]) << ",";
                if (report.has_crb) {
                    csv << csv_double(report.crb_variance[j]);
                }
                csv << "\n";
            }
            csv << prefix << "excluded_trials,"
                << std::to_string(stats.excluded_trials) << ",\n";
        }
    }

    std::ofstream out(opt.output, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + opt.output);
    }
    out << csv.str();
    std::cout << "wrote " << opt.output << "\n";
    return kExitOk;
}

int cmd_verify(const VerifyOptions &opt) {
    const DensityMatrix state = read_state_file(opt.state_path);
    const DatasetFile file = read_dataset_file(opt.data_path);
    const Dataset &data = file.data;

    std::cout << "extremal residual: "
              << csv_double(extremal_residual(state, data, opt.floor)) << "\n";

    double max_gap = 0.0;
    int floored = 0;
    for (const ExpectationCheck &check :
         check_expectation_condition(state, data, opt.floor)) {
        max_gap = std::max(max_gap, check.gap);
        floored += check.floored ? 1 : 0;
    }
    std::cout << "expectation-condition max gap: " << csv_double(max_gap)
              << " (" << floored << " floored records)\n";
    std::cout << "subspace completeness residual: "
              << csv_double(check_subspace_completeness(state, data,
                                                        opt.rank_tol,
                                                        opt.floor))
              << " (support dim " << state.support_dimension(opt.rank_tol)
              << ")\n";

    std::cout << "least-squares objective: "
              << csv_double(ls_objective(state, data)) << "\n";
    try {
        double max_identity_gap = 0.0;
        double max_frequency_gap = 0.0;
        for (const LsPovmCheck &check : check_ls_povm(state, data)) {
            max_identity_gap = std::max(max_identity_gap, check.identity_gap);
            max_frequency_gap =
                std::max(max_frequency_gap,
                         std::abs(check.expectation - check.frequency));
        }
        std::cout << "ls-povm lambda: " << csv_double(ls_lambda(state, data))
                  << "\n"
                  << "ls-povm max identity gap: "
                  << csv_double(max_identity_gap) << "\n"
                  << "ls-povm max |expectation - frequency|: "
                  << csv_double(max_frequency_gap) << "\n";
    } catch (const DegenerateLambda &) {
        std::cout << "ls-povm: degenerate lambda (exact fit), elements "
                     "undefined\n";
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string> &args) {
    CLI::App app{"Maximum-likelihood quantum state reconstruction from "
                 "sequential incompatible measurements"};
    app.require_subcommand(1);

    GenerateOptions gen;
    CLI::App *generate =
        app.add_subcommand("generate", "Sample a synthetic dataset");
    generate->add_option("--preset", gen.preset,
                         "Measurement preset: pauli6 or mub-<prime dim>");
    generate->add_option("--basis", gen.basis, "Single Pauli basis: x, y or z");
    generate->add_option("--bloch", gen.bloch, "True qubit state as x,y,z");
    generate->add_option("--state", gen.state_path, "True state JSON file");
    generate->add_option("--shots", gen.shots,
                         "Shots per observable (comma list or one value)");
    generate->add_option("--seed", gen.seed, "RNG seed");
    generate->add_flag("--exact", gen.exact,
                       "Round Born probabilities instead of sampling");
    generate->add_option("-o,--output", gen.output, "Dataset output path")
        ->required();

    EstimateOptions est;
    CLI::App *estimate =
        app.add_subcommand("estimate", "Reconstruct a state from a dataset");
    estimate->add_option("--data", est.data_path, "Dataset JSON file")
        ->required();
    estimate->add_option("--method", est.method, "ml, ls or linear");
    estimate->add_option("--tol", est.tolerance, "Fixed-point tolerance");
    estimate->add_option("--max-iter", est.max_iterations, "Iteration cap");
    estimate->add_option("--dilution", est.dilution, "Dilution in (0,1]");
    estimate->add_option("--floor", est.floor, "Probability floor");
    estimate->add_option("--rank-tol", est.rank_tol,
                         "Support rank tolerance for the report");
    estimate->add_option("-o,--output", est.output, "State output path")
        ->required();

    SweepOptions sweep;
    CLI::App *sweep_cmd =
        app.add_subcommand("sweep", "Monte Carlo estimator comparison");
    sweep_cmd->add_option("--bloch", sweep.bloch, "True qubit state as x,y,z");
    sweep_cmd->add_option("--state", sweep.state_path, "True state JSON file");
    sweep_cmd->add_option("--preset", sweep.preset, "Measurement preset");
    sweep_cmd->add_option("--N", sweep.n_list,
                          "Comma list of total shots per trial")
        ->required();
    sweep_cmd->add_option("--trials", sweep.trials, "Trials per N")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--estimators", sweep.estimators,
                          "Comma list from ml, ls, linear");
    sweep_cmd->add_option("--seed", sweep.seed, "RNG seed");
    sweep_cmd->add_option("-o,--output", sweep.output, "CSV output path")
        ->required();

    VerifyOptions verify;
    CLI::App *verify_cmd = app.add_subcommand(
        "verify", "Extremal-equation checks for a state against a dataset");
    verify_cmd->add_option("--state", verify.state_path, "State JSON file")
        ->required();
    verify_cmd->add_option("--data", verify.data_path, "Dataset JSON file")
        ->required();
    verify_cmd->add_option("--rank-tol", verify.rank_tol,
                           "Support rank tolerance");
    verify_cmd->add_option("--floor", verify.floor, "Probability floor");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed()) {
            return cmd_generate(gen);
        }
        if (estimate->parsed()) {
            return cmd_estimate(est);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(sweep);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify);
        }
        std::cerr << app.help();
        return kExitUsage;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidConfig &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidPlan &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

int run(int argc, char **argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc) - 1);
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args);
}

} // namespace mltomo::cli
