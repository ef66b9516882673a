#ifndef LCF_COMMANDS_HPP
#define LCF_COMMANDS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lcf/exact.hpp"
#include "lcf/serialize.hpp"

namespace lcf {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { exit_ok = 0, exit_claim_failed = 1, exit_bad_input = 2, exit_budget = 3 };

enum class OutputFormat { json, text, csv };

OutputFormat parse_format(std::string_view name);

struct RunConfig {
    SearchBudget budget;
    SearchOptions options;
    /// Unset: the command's own default (text for eval/bounds, json otherwise).
    std::optional<OutputFormat> format;
    /// Unset: $LCF_CACHE_DIR, or no caching when that is empty too.
    std::optional<std::string> cache_dir;
    bool use_cache = true;
};

struct CommandResult {
    int exit_code = exit_ok;
    std::string output;
    bool from_cache = false;
};

struct EvalArgs {
    std::optional<int> n;
    std::optional<int> m;
    bool uniform = false;
    /// Path to a JSON file holding {m, d, z} or {x, y}.
    std::optional<std::string> assignment_path;
};

struct BoundsArgs {
    std::string which;
    std::optional<long> n;
    std::optional<int> m;
    std::optional<double> eps;
    std::optional<long> edges;
    /// Class counts for dm2/appendix, comma separated.
    std::optional<std::string> parts;
    std::optional<int> d;
    bool corrected = false;
    long n_from = 50;
    long n_to = 5000;
    long n_step = 50;
};

CommandResult cmd_eval(const EvalArgs& args, const RunConfig& config);
CommandResult cmd_min(int n, int m, const RunConfig& config);
CommandResult cmd_witness(int n, int m, const RunConfig& config);
CommandResult cmd_scan(int m, int n_max, const ScanOptions& options, const RunConfig& config);
CommandResult cmd_bounds(const BoundsArgs& args, const RunConfig& config);
/// thm-casework, thm-upper, prop-two, tau-small.
CommandResult cmd_reproduce(const std::string& target, const RunConfig& config);
CommandResult cmd_chromatic(const std::string& family, long n, long m, const RunConfig& config);

/// FNV-1a over (command, canonical args, version), hex.
std::string cache_key(const std::string& command, const std::string& args);

/// Serves a cached result for (command, args) or runs `fn` and stores its result.
/// Budget-exhausted results are never stored.
CommandResult cached(const std::string& command, const std::string& args, const RunConfig& config,
                     const std::function<CommandResult()>& fn);

/// Maps exceptions to exit codes: invalid_argument/out_of_range -> 2, BudgetExceeded -> 3.
CommandResult guarded(const std::function<CommandResult()>& fn);

} // namespace lcf

#endif // LCF_COMMANDS_HPP
