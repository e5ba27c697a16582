#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sigdef::cli {

/// Stable exit codes for scripting.
enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kInvalidInput = 2,
    kDomain = 3,
};

enum class Command { Analyze, Decompose, Sweep, Demo };

struct RunConfig {
    Command command = Command::Analyze;
    std::optional<std::string> input_path;
    std::optional<std::string> output_path;
    double theta_min = 0.9;
    double theta_max = 1.2;
    int steps = 61;
    std::string demo_name;
    std::optional<double> p;
    double tolerance = 1e-9;
    std::string measure = "info";  // analyze: info | delta
    std::string method = "lp";     // decompose: lp | closed
    double sigma = 0.0;
};

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_decompose(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_demo(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (program name first) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigdef::cli
