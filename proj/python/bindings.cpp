#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcf/bounds.hpp"
#include "lcf/commands.hpp"
#include "lcf/constructions.hpp"
#include "lcf/exact.hpp"
#include "lcf/serialize.hpp"

namespace py = pybind11;
using namespace lcf;

namespace {

// Exact counts cross the boundary as decimal strings; the Python layer turns them into ints.
std::string dec(const ExactCount& v) { return to_decimal(v); }

SearchBudget make_budget(std::uint64_t max_states, double max_seconds, int parallel_width) {
    SearchBudget b;
    b.max_states = max_states;
    b.max_seconds = max_seconds;
    b.parallel_width = parallel_width;
    return b;
}

ListAssignment make_lists(const std::vector<std::vector<int>>& x, const std::vector<std::vector<int>>& y) {
    ListAssignment l;
    for (const auto& s : x) l.x.push_back(ColorSet::from_labels(s));
    for (const auto& s : y) l.y.push_back(ColorSet::from_labels(s));
    return l;
}

} // namespace

PYBIND11_MODULE(_lcf, mod) {
    py::register_exception<BudgetExceeded>(mod, "BudgetExceeded");
    mod.attr("__version__") = kVersion;

    mod.def("chromatic_poly_k2n", [](long n, long m) { return dec(chromatic_poly_k2n(n, m)); });
    mod.def("chromatic_poly_reference",
            [](const std::string& family, long n, long m) { return dec(chromatic_poly_reference(parse_family(family), n, m)); });
    mod.def("evaluate_pair_product",
            [](int m, int d, std::vector<std::uint64_t> z) { return dec(evaluate_pair_product(CanonicalAssignment(m, d, std::move(z)))); });
    mod.def("evaluate_lists", [](const std::vector<std::vector<int>>& x, const std::vector<std::vector<int>>& y) {
        const auto l = make_lists(x, y);
        return dec(evaluate_general_l(l.x, y_type_counts(l)));
    });
    mod.def("brute_force_count", [](const std::vector<std::vector<int>>& x, const std::vector<std::vector<int>>& y) {
        return dec(brute_force_count(make_lists(x, y)));
    });
    mod.def("canonicalize", [](const std::vector<std::vector<int>>& x, const std::vector<std::vector<int>>& y) {
        return to_json(canonicalize(make_lists(x, y))).dump();
    });
    mod.def(
        "min_list_count",
        [](int n, int m, std::uint64_t max_states, double max_seconds, int parallel_width, bool symmetry) {
            SearchOptions o;
            o.symmetry_pruning = symmetry;
            py::gil_scoped_release release;
            return to_json(min_list_count(n, m, make_budget(max_states, max_seconds, parallel_width), o)).dump();
        },
        py::arg("n"), py::arg("m"), py::arg("max_states") = SearchBudget{}.max_states, py::arg("max_seconds") = SearchBudget{}.max_seconds,
        py::arg("parallel_width") = 1, py::arg("symmetry") = false);
    mod.def(
        "compare_with_chromatic",
        [](int n, int m, std::uint64_t max_states) {
            py::gil_scoped_release release;
            return to_json(compare_with_chromatic(n, m, make_budget(max_states, SearchBudget{}.max_seconds, 1))).dump();
        },
        py::arg("n"), py::arg("m"), py::arg("max_states") = SearchBudget{}.max_states);
    mod.def("construction_witness", [](int n, int m) -> std::optional<std::string> {
        const auto w = construction_witness(n, m);
        if (!w) return std::nullopt;
        return to_json(*w).dump();
    });
    mod.def("general_formula", [](int n, int m, int t) { return dec(general_formula(n, m, t)); });
    mod.def("extension_formula", [](int m, int t, int c) { return dec(extension_formula(m, t, c)); });
    mod.def(
        "scan_first_bad_n",
        [](int m, int n_max, bool corrected) {
            ScanOptions o;
            o.variant = corrected ? AppendixVariant::corrected : AppendixVariant::as_printed;
            std::vector<std::string> out;
            for (const auto& line : scan_first_bad_n(m, n_max, o)) out.push_back(scan_line_text(line));
            return out;
        },
        py::arg("m"), py::arg("n_max"), py::arg("corrected") = false);
    mod.def("counting_distribution", [](int s, int a1, int a2, int a3, int k1, int k2, int k3, int m) {
        return counting_distribution(s, a1, a2, a3, k1, k2, k3, m).counts;
    });
    mod.def("threshold_condition", &threshold_condition);
    mod.def("tau_upper_bound", &tau_upper_bound);
    mod.def("wqy_bound", &wqy_bound);
    mod.def("epsilon_solve", &epsilon_solve);
    mod.def("corollary_interval", &corollary_interval);
    mod.def("lemma_interval", &lemma_interval);
    mod.def("f_functions", &f_functions);
    mod.def("reproduce", [](const std::string& target) {
        RunConfig c;
        c.use_cache = false;
        c.format = OutputFormat::text;
        py::gil_scoped_release release;
        const auto r = cmd_reproduce(target, c);
        return std::make_pair(r.exit_code, r.output);
    });
}
