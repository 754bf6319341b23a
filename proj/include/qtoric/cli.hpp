#pragma once

#include "qtoric/document.hpp"
#include "qtoric/fixtures.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qtoric {

/// Process exit codes shared by every subcommand.
enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_input_error = 2 };

struct Report {
    std::string check;
    /// "pass", "fail", "computed" or "error".
    std::string verdict;
    nlohmann::json details = nlohmann::json::object();
    std::string provenance;
    int exit_code = exit_pass;

    nlohmann::json to_json() const;
};

struct CliOptions {
    std::optional<int> bound;
    std::optional<std::string> goal;
    /// "2137" or "2,1,3,7" (1-based).
    std::optional<std::string> base_vertex;
    unsigned jobs = 1;
    std::optional<std::uint64_t> node_budget;
    std::optional<std::size_t> solution_cap;
    std::optional<std::size_t> n;
    std::optional<std::size_t> d;
};

/// Everything a subcommand may read: the parsed documents plus the fixture
/// they came from, if any.
struct Inputs {
    std::vector<Document> documents;
    std::optional<Fixture> fixture;
};

/// Each source is a path or "fixtures:<name>".
Inputs load_inputs(const std::vector<std::string>& sources);

const std::vector<std::string>& subcommand_names();

/// Never throws for bad input: failures become an "error" report with exit code 2.
Report run_subcommand(const std::string& name, const Inputs& inputs, const CliOptions& options = {});

/// 1-based "2137" / "2,1,3,7" to a 0-based tuple.
IndexSet parse_tuple_label(const std::string& text);

}  // namespace qtoric
