#include "qtoric/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

struct Args {
    std::vector<std::string> sources;
    std::string output;
    std::optional<int> bound;
    std::optional<std::string> goal;
    std::optional<std::string> base_vertex;
    unsigned jobs = 1;
    std::optional<std::uint64_t> node_budget;
    std::optional<std::size_t> solution_cap;
    std::optional<std::size_t> n;
    std::optional<std::size_t> d;
};

void add_common(CLI::App* sub, Args& a) {
    sub->add_option("inputs", a.sources, "document files or fixtures:<name>");
    sub->add_option("--input,-i", a.sources, "document file or fixtures:<name>");
    sub->add_option("--output,-o", a.output, "write the report here instead of stdout");
    sub->add_option("--bound", a.bound, "entry bound B for search");
    sub->add_option("--goal", a.goal, "unimodular | all-positive");
    sub->add_option("--base-vertex", a.base_vertex, "ordered base tuple, e.g. 2137 or 2,1,3,7");
    sub->add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--node-budget", a.node_budget, "search node budget");
    sub->add_option("--solution-cap", a.solution_cap, "stop after this many solutions");
    sub->add_option("--n", a.n, "number of points for gale");
    sub->add_option("--d", a.d, "dimension for gale");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for characteristic maps, cyclic polytopes and fans"};
    app.require_subcommand(1);
    Args args;
    std::string chosen;
    std::string fixture_name;

    const std::map<std::string, std::string> descriptions = {
        {"fvector", "face numbers and Euler characteristic"},
        {"hvector", "h-vector and Dehn-Sommerville check"},
        {"orient", "pseudomanifold check and coherent orientation"},
        {"dualize", "simple polytope dual to a simplicial sphere"},
        {"gale", "facets of C_d(n) by Gale evenness"},
        {"polar", "origin-interior certificate and polar vertices"},
        {"orient-tuples", "positively ordered vertex tuples from edge vectors"},
        {"check-unimodular", "vertex minors of a characteristic map"},
        {"signs", "sign pattern of a characteristic map"},
        {"almost-complex", "is every vertex sign +1"},
        {"flip-solve", "GF(2) system for sign flips reaching all-positive"},
        {"fan-check", "pairwise interior disjointness of the cones"},
        {"search", "bounded search for characteristic maps"},
    };

    for (const auto& name : qtoric::subcommand_names()) {
        if (name == "cyclic gen") {
            auto* cyclic = app.add_subcommand("cyclic", "cyclic polytope tools");
            cyclic->require_subcommand(1);
            auto* gen = cyclic->add_subcommand("gen", "exact Caratheodory realization from angles");
            add_common(gen, args);
            gen->callback([&] { chosen = "cyclic gen"; });
        } else if (name == "fixtures") {
            auto* sub = app.add_subcommand(name, "print an embedded fixture (no name lists them)");
            sub->add_option("name", fixture_name, "fixture name");
            sub->add_option("--output,-o", args.output, "write the report here instead of stdout");
            sub->callback([&] { chosen = "fixtures"; });
        } else {
            const auto it = descriptions.find(name);
            auto* sub = app.add_subcommand(name, it == descriptions.end() ? "" : it->second);
            add_common(sub, args);
            sub->callback([&, name] { chosen = name; });
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : qtoric::exit_input_error;
    }

    qtoric::Inputs inputs;
    qtoric::Report report;
    try {
        if (chosen == "fixtures" && !fixture_name.empty()) args.sources = {"fixtures:" + fixture_name};
        inputs = qtoric::load_inputs(args.sources);
        qtoric::CliOptions options{args.bound, args.goal, args.base_vertex, args.jobs,
                                   args.node_budget, args.solution_cap, args.n, args.d};
        report = qtoric::run_subcommand(chosen, inputs, options);
    } catch (const std::exception& e) {
        report.check = chosen;
        report.verdict = "error";
        report.provenance = "user-supplied documents";
        report.details["message"] = e.what();
        report.exit_code = qtoric::exit_input_error;
    }

    const std::string text = report.to_json().dump(2) + "\n";
    if (args.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.output);
        if (!out) {
            std::cerr << "cannot write " << args.output << "\n";
            return qtoric::exit_input_error;
        }
        out << text;
    }
    return report.exit_code;
}
