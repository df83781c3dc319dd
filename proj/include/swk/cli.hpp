#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "swk/graph.hpp"
#include "swk/oracle.hpp"
#include "swk/report.hpp"

namespace swk {

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
    std::string command;       // homology, table, oracle, euler, relations, check
    std::string input;         // graph file path
    std::string standard;      // or a standard graph description, e.g. "complete 4"
    std::size_t degree = 1;    // homology
    std::size_t weight = 2;    // homology
    std::size_t max_degree = 2;
    std::size_t max_weight = 3;
    bool reduced = true;       // fully reduced complex unless false
    OutputFormat format = OutputFormat::Text;
    std::size_t max_cells = default_max_cells;
    std::size_t jobs = 0;      // 0 = all cores
};

/// Graph named by the config: the file when given, else the standard description.
Graph load_graph(const RunConfig& config);

/// Runs one command on g; throws swk::Error on invalid requests.
RunReport run(const RunConfig& config, const Graph& g);

std::string render(const RunReport& report, OutputFormat format);

/// Command-line entry point. Exit status: 0 pass, 1 check failure, 2 usage or parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace swk
