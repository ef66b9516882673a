#include <iostream>

#include <CLI11.hpp>

#include "lcf/commands.hpp"

namespace {

struct Common {
    std::uint64_t max_states = lcf::SearchBudget{}.max_states;
    double max_seconds = lcf::SearchBudget{}.max_seconds;
    int parallel = 1;
    bool no_bound_pruning = false;
    bool symmetry = false;
    std::string format;
    bool text = false;
    std::string cache_dir;
    bool no_cache = false;

    void attach(CLI::App* app, bool search) {
        if (search) {
            app->add_option("--max-states", max_states, "leaf multisets the minimizer may visit")->check(CLI::PositiveNumber);
            app->add_option("--max-seconds", max_seconds, "wall-clock cap")->check(CLI::PositiveNumber);
            app->add_option("--parallel", parallel, "worker threads")->check(CLI::PositiveNumber);
            app->add_flag("--no-bound-pruning", no_bound_pruning, "disable per-pair lower-bound pruning");
            app->add_flag("--symmetry", symmetry, "keep only orbit-least multiplicity vectors");
        }
        app->add_option("--format", format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
        app->add_flag("--text", text, "same as --format text");
        app->add_option("--cache-dir", cache_dir, "result cache (default $LCF_CACHE_DIR)");
        app->add_flag("--no-cache", no_cache, "ignore the cache");
    }

    [[nodiscard]] lcf::RunConfig config() const {
        lcf::RunConfig c;
        c.budget.max_states = max_states;
        c.budget.max_seconds = max_seconds;
        c.budget.parallel_width = parallel;
        c.options.bound_pruning = !no_bound_pruning;
        c.options.symmetry_pruning = symmetry;
        if (text)
            c.format = lcf::OutputFormat::text;
        else if (!format.empty())
            c.format = lcf::parse_format(format);
        if (!cache_dir.empty()) c.cache_dir = cache_dir;
        c.use_cache = !no_cache;
        return c;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"List color function laboratory for K_{2,n}"};
    app.set_version_flag("--version", lcf::kVersion);
    app.require_subcommand(1);

    Common common;
    lcf::CommandResult result;

    lcf::EvalArgs eval;
    int eval_n = 0;
    int eval_m = 0;
    std::string eval_path;
    auto* eval_cmd = app.add_subcommand("eval", "count proper L-colorings of one assignment");
    auto* eval_n_opt = eval_cmd->add_option("--n", eval_n, "y-side size");
    auto* eval_m_opt = eval_cmd->add_option("--m", eval_m, "list size");
    eval_cmd->add_flag("--uniform", eval.uniform, "all lists [m]: P(K_{2,n}, m)");
    auto* eval_path_opt = eval_cmd->add_option("--assignment", eval_path, "JSON file with {m,d,z} or {x,y}")->check(CLI::ExistingFile);
    common.attach(eval_cmd, false);
    eval_cmd->callback([&] {
        if (*eval_n_opt) eval.n = eval_n;
        if (*eval_m_opt) eval.m = eval_m;
        if (*eval_path_opt) eval.assignment_path = eval_path;
        result = lcf::cmd_eval(eval, common.config());
    });

    int n = 0;
    int m = 0;
    auto* min_cmd = app.add_subcommand("min", "exact P_l(K_{2,n}, m) by search");
    min_cmd->add_option("--n", n)->required();
    min_cmd->add_option("--m", m)->required();
    common.attach(min_cmd, true);
    min_cmd->callback([&] { result = lcf::cmd_min(n, m, common.config()); });

    auto* witness_cmd = app.add_subcommand("witness", "assignment with P(G, L) < P(G, m)");
    witness_cmd->add_option("--n", n)->required();
    witness_cmd->add_option("--m", m)->required();
    common.attach(witness_cmd, true);
    witness_cmd->callback([&] { result = lcf::cmd_witness(n, m, common.config()); });

    lcf::ScanOptions scan_options;
    int n_max = 0;
    bool corrected = false;
    auto* scan_cmd = app.add_subcommand("scan", "replay the bound verification loops");
    scan_cmd->add_option("--m", m)->required()->check(CLI::Range(3, 5));
    scan_cmd->add_option("--n-max", n_max)->required();
    scan_cmd->add_option("--n-min", scan_options.n_min, "first n (default 3)");
    scan_cmd->add_flag("--corrected", corrected, "use the corrected m=5, d=2 bound");
    common.attach(scan_cmd, false);
    scan_cmd->callback([&] {
        if (corrected) scan_options.variant = lcf::AppendixVariant::corrected;
        result = lcf::cmd_scan(m, n_max, scan_options, common.config());
    });

    lcf::BoundsArgs bounds;
    long bounds_n = 0;
    int bounds_m = 0;
    double eps = 0;
    long edges = 0;
    int bounds_d = 0;
    std::string parts;
    auto* bounds_cmd = app.add_subcommand("bounds", "analytic bounds and tables");
    bounds_cmd->add_option("which", bounds.which, "tau-upper, wqy, threshold, f, interval, epsilon, rolle, dm2, appendix, compare-csv")
        ->required()
        ->check(CLI::IsMember({"tau-upper", "wqy", "threshold", "f", "interval", "epsilon", "rolle", "dm2", "appendix", "compare-csv"}));
    auto* bn = bounds_cmd->add_option("--n", bounds_n);
    auto* bm = bounds_cmd->add_option("--m", bounds_m);
    auto* be = bounds_cmd->add_option("--eps", eps);
    auto* bedges = bounds_cmd->add_option("--edges", edges);
    auto* bd = bounds_cmd->add_option("--d", bounds_d);
    auto* bparts = bounds_cmd->add_option("--parts", parts, "class counts, e.g. 3,0,1,0");
    bounds_cmd->add_flag("--corrected", bounds.corrected, "corrected m=5, d=2 bound");
    bounds_cmd->add_option("--from", bounds.n_from);
    bounds_cmd->add_option("--to", bounds.n_to);
    bounds_cmd->add_option("--step", bounds.n_step);
    common.attach(bounds_cmd, false);
    bounds_cmd->callback([&] {
        if (*bn) bounds.n = bounds_n;
        if (*bm) bounds.m = bounds_m;
        if (*be) bounds.eps = eps;
        if (*bedges) bounds.edges = edges;
        if (*bd) bounds.d = bounds_d;
        if (*bparts) bounds.parts = parts;
        result = lcf::cmd_bounds(bounds, common.config());
    });

    std::string target;
    auto* repro_cmd = app.add_subcommand("reproduce", "run an evidence chain");
    repro_cmd->add_option("target", target)->required()->check(CLI::IsMember({"thm-casework", "thm-upper", "prop-two", "tau-small"}));
    common.attach(repro_cmd, true);
    repro_cmd->callback([&] { result = lcf::cmd_reproduce(target, common.config()); });

    std::string family;
    long cn = 0;
    long cm = 0;
    auto* chrom_cmd = app.add_subcommand("chromatic", "closed-form chromatic polynomials");
    chrom_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"k2n", "complete", "cycle", "tree"}));
    chrom_cmd->add_option("--n", cn)->required();
    chrom_cmd->add_option("--m", cm)->required();
    common.attach(chrom_cmd, false);
    chrom_cmd->callback([&] { result = lcf::cmd_chromatic(family, cn, cm, common.config()); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : lcf::exit_bad_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return lcf::exit_bad_input;
    }
    if (result.exit_code == lcf::exit_bad_input)
        std::cerr << result.output;
    else
        std::cout << result.output;
    return result.exit_code;
}
