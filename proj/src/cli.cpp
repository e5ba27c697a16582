#include "sigdef/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "sigdef/errors.hpp"
#include "sigdef/io.hpp"
#include "sigdef/quantum.hpp"
#include "sigdef/signaling.hpp"
#include "sigdef/simulate.hpp"

namespace sigdef::cli {

namespace {

using nlohmann::json;

// Maps library exceptions onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "error: invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const NormalizationError& e) {
        err << "error: normalization invariant violated: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const NegativeProbability& e) {
        err << "error: nonnegativity invariant violated: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const UnknownStrategy& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
}

Correlation load_input(const RunConfig& config) {
    if (!config.input_path) throw std::invalid_argument("no input file given (positional path or --in)");
    std::ifstream in(*config.input_path);
    if (!in) throw ParseError("cannot read " + *config.input_path);
    return read_correlation(in);
}

int emit(const RunConfig& config, std::ostream& out, std::ostream& err, const std::string& text) {
    if (!config.output_path) {
        out << text;
        return kSuccess;
    }
    std::ofstream file(*config.output_path);
    if (!file) {
        err << "error: cannot write " << *config.output_path << '\n';
        return kUsage;
    }
    file << text;
    return kSuccess;
}

int emit_json(const RunConfig& config, std::ostream& out, std::ostream& err, const json& j) {
    return emit(config, out, err, j.dump(2) + "\n");
}

SignalMeasure parse_measure(const std::string& name) {
    if (name == "info") return SignalMeasure::MutualInformation;
    if (name == "delta") return SignalMeasure::Delta;
    throw std::invalid_argument("unknown signal measure '" + name + "' (expected info or delta)");
}

json demo_payload(const std::string& name, const Correlation& p, const ClassificationReport& report) {
    return json{{"demo", name}, {"correlation", to_json(p)}, {"report", to_json(report)}};
}

}  // namespace

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto measure = parse_measure(config.measure);
        const auto p = load_input(config);
        return emit_json(config, out, err, to_json(classify(p, measure, config.tolerance)));
    });
}

int cmd_decompose(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (config.method != "lp" && config.method != "closed")
            throw std::invalid_argument("unknown method '" + config.method + "' (expected lp or closed)");
        const auto p = load_input(config);
        const auto d = config.method == "lp" ? lp_min_cost(p) : closed_form_decompose(p, config.sigma);
        json j = to_json(d);
        j["method"] = config.method;
        j["communication_cost"] = round_significant(communication_cost(p));
        return emit_json(config, out, err, j);
    });
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto rows = theta_sweep(config.theta_min, config.theta_max, config.steps);
        std::ostringstream csv;
        write_sweep_csv(csv, rows);
        try {
            const double crossover = find_crossover(config.theta_min, config.theta_max);
            char buf[64];
            std::snprintf(buf, sizeof buf, "# crossover=%.12g\n", crossover);
            csv << buf;
        } catch (const NoCrossover&) {
        }
        return emit(config, out, err, csv.str());
    });
}

int cmd_demo(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const std::string& name = config.demo_name;
        if (name == "pr-box") {
            const auto p = pr_box();
            return emit_json(config, out, err, demo_payload(name, p, classify(p, SignalMeasure::MutualInformation, config.tolerance)));
        }
        if (name == "d01") {
            const auto p = as_correlation(catalog("d0_1"));
            json j = demo_payload(name, p, classify(p, SignalMeasure::MutualInformation, config.tolerance));
            j["signal"] = to_json(signal_info(p));
            return emit_json(config, out, err, j);
        }
        if (name == "tsirelson") {
            const auto p = tsirelson_box();
            return emit_json(config, out, err, demo_payload(name, p, classify(p, SignalMeasure::MutualInformation, config.tolerance)));
        }
        if (name == "sigma") {
            const auto setup = sigma_settings();
            const auto p = setup.correlation();
            const auto branches = setup.alice_branches();
            const auto signal = signal_info(p);
            const double lambda_max = lg_value(theta_geometry(std::numbers::pi / 4).correlation());
            json j = demo_payload(name, p, classify(p, SignalMeasure::MutualInformation, config.tolerance));
            j["mu_s"] = round_significant(signal.S);
            j["alpha_star"] = round_significant(signal.alpha_star);
            j["s"] = round_significant(signal.s);
            j["tau"] = round_significant(trace_distance(branches[0], branches[1]));
            j["chi"] = round_significant(max_holevo(branches[0], branches[1]));
            j["bound"] = round_significant(signal_corrected_lg_bound());
            j["max_violation"] = to_json(classify_quantities(lambda_max, signal.S, signal.s));
            return emit_json(config, out, err, j);
        }
        if (name == "qp") {
            const double p_value = config.p.value_or(0.5);
            const auto p = unbalanced_pr(p_value);
            const auto randomness = randomness_report(p_value);
            json j = demo_payload(name, p, classify(p, SignalMeasure::Delta, config.tolerance));
            j["randomness"] = to_json(randomness);
            j["cloning_violation"] = round_significant(cloning_violation(std::min(p_value, 1.0 - p_value)));
            return emit_json(config, out, err, j);
        }
        err << "error: unknown demo '" << name << "' (expected pr-box, d01, tsirelson, sigma, qp)\n";
        return kUsage;
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Signal-deficit classification of two-setting bipartite correlations", "sigdef"};
    app.require_subcommand(1);
    RunConfig config;
    std::optional<std::string> positional;

    auto* analyze = app.add_subcommand("analyze", "Classify a correlation read from JSON");
    auto* decompose = app.add_subcommand("decompose", "Minimal-communication strategy decomposition");
    auto* sweep = app.add_subcommand("sweep", "Qubit theta sweep as CSV");
    auto* demo = app.add_subcommand("demo", "Print a named correlation and its report");

    for (auto* sub : {analyze, decompose}) {
        sub->add_option("input", positional, "Correlation JSON file");
        sub->add_option("--in", config.input_path, "Correlation JSON file");
        sub->add_option("--tol", config.tolerance, "Classicality tolerance");
    }
    analyze->add_option("--measure", config.measure, "Signal measure: info or delta");
    decompose->add_option("--method", config.method, "lp or closed");
    decompose->add_option("--sigma", config.sigma, "Free parameter of the closed form");
    sweep->add_option("--theta-min", config.theta_min, "Lower angle (radians)");
    sweep->add_option("--theta-max", config.theta_max, "Upper angle (radians)");
    sweep->add_option("--steps", config.steps, "Number of rows");
    demo->add_option("name", config.demo_name, "pr-box, d01, tsirelson, sigma or qp")->required();
    demo->add_option("--p", config.p, "Weight of d0_1 for the qp demo");
    demo->add_option("--tol", config.tolerance, "Classicality tolerance");
    for (auto* sub : {analyze, decompose, sweep, demo}) sub->add_option("--out", config.output_path, "Output file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kUsage;
    }
    if (positional && !config.input_path) config.input_path = positional;

    if (*analyze) return cmd_analyze(config, out, err);
    if (*decompose) return cmd_decompose(config, out, err);
    if (*sweep) {
        if (config.steps < 2) {
            err << "usage error: --steps must be at least 2\n";
            return kUsage;
        }
        if (!(config.theta_min < config.theta_max)) {
            err << "usage error: --theta-min must be below --theta-max\n";
            return kUsage;
        }
        return cmd_sweep(config, out, err);
    }
    return cmd_demo(config, out, err);
}

}  // namespace sigdef::cli
