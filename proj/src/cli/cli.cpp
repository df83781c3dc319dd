#include "swk/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "swk/classes.hpp"
#include "swk/engine.hpp"
#include "swk/error.hpp"
#include "swk/formulas.hpp"
#include "swk/graph_io.hpp"
#include "swk/parallel.hpp"

namespace swk {

namespace {

std::vector<std::size_t> non_isolated(const Graph& g)
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) > 0)
            out.push_back(v);
    return out;
}

bool is_unitrivalent(const Graph& g)
{
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != 1 && g.degree(v) != 3)
            return false;
    return g.num_vertices() > 0;
}

// Every invariant suite that applies to g, in a fixed order.
std::vector<CheckReport> all_suites(const RunConfig& cfg, const Graph& g)
{
    using Task = std::function<CheckReport()>;
    std::size_t maxdeg = cfg.max_degree, maxw = cfg.max_weight;
    std::vector<Task> tasks{
        [&] { return verify_reduced_quasi_iso(g, non_isolated(g), maxdeg, maxw); },
        [&] { return verify_edge_injectivity(g, maxdeg, maxw); },
        [&] { return cross_check(g, maxdeg, maxw, cfg.max_cells); },
        [&] { return euler_check(g, maxw); },
        [&] { return relation_suite(g); },
    };
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) == 0)
            continue;
        tasks.push_back([&g, v, maxw] { return les_check(g, v, g.half_edges_at(v).front(), maxw); });
        if (g.degree(v) == 2 && g.num_components() == 1)
            tasks.push_back([&g, v, maxw]() -> CheckReport {
                try {
                    return one_bridge_check(g, v, maxw);
                } catch (const PreconditionError&) {
                    return {};  // not a cut vertex
                }
            });
    }
    if (is_unitrivalent(g))
        tasks.push_back([&] { return unitrivalent_top_check(g, 0, maxw); });

    auto reports = parallel_map(tasks.size(), [&](std::size_t j) { return tasks[j](); }, cfg.jobs);
    reports.erase(std::remove_if(reports.begin(), reports.end(), [](const CheckReport& r) { return r.name.empty(); }),
                  reports.end());
    return reports;
}

} // namespace

Graph load_graph(const RunConfig& config)
{
    if (!config.input.empty() && !config.standard.empty())
        throw PreconditionError("give either a graph file or --standard, not both");
    if (!config.input.empty())
        return parse_graph_file(config.input);
    if (!config.standard.empty())
        return standard_graph(config.standard);
    throw PreconditionError("no graph given: pass a graph file or --standard");
}

RunReport run(const RunConfig& cfg, const Graph& g)
{
    RunReport r;
    r.graph = g.name();
    r.command = cfg.command;
    auto& opt = r.options;
    if (!cfg.input.empty())
        opt["input"] = cfg.input;
    else
        opt["standard"] = cfg.standard;

    auto complex = [&] { return cfg.reduced ? SwkComplex::fully_reduced(g) : SwkComplex::full(g); };
    const char* reduction = cfg.reduced ? "reduced" : "full";

    if (cfg.command == "homology") {
        opt["degree"] = cfg.degree;
        opt["weight"] = cfg.weight;
        opt["reduction"] = reduction;
        r.results.push_back({cfg.degree, cfg.weight, homology(complex(), cfg.degree, cfg.weight)});
    } else if (cfg.command == "table") {
        opt["max_degree"] = cfg.max_degree;
        opt["max_weight"] = cfg.max_weight;
        opt["reduction"] = reduction;
        r.results = result_rows(homology_table(complex(), cfg.max_degree, cfg.max_weight, cfg.jobs));
    } else if (cfg.command == "oracle") {
        opt["max_degree"] = cfg.max_degree;
        opt["max_weight"] = cfg.max_weight;
        opt["max_cells"] = cfg.max_cells;
        OracleGroups groups;
        r.checks.push_back(cross_check(g, cfg.max_degree, cfg.max_weight, cfg.max_cells, &groups));
        for (const auto& [ik, group] : groups)
            r.results.push_back({ik.first, ik.second, group});
        std::stable_sort(r.results.begin(), r.results.end(), [](const ResultRow& a, const ResultRow& b) {
            return std::pair{a.weight, a.degree} < std::pair{b.weight, b.degree};
        });
    } else if (cfg.command == "euler") {
        opt["max_weight"] = cfg.max_weight;
        r.checks.push_back(euler_check(g, cfg.max_weight));
    } else if (cfg.command == "relations") {
        r.checks.push_back(relation_suite(g));
    } else if (cfg.command == "check") {
        opt["max_degree"] = cfg.max_degree;
        opt["max_weight"] = cfg.max_weight;
        opt["max_cells"] = cfg.max_cells;
        r.checks = all_suites(cfg, g);
    } else {
        throw PreconditionError("unknown command '" + cfg.command + "'");
    }
    return r;
}

std::string render(const RunReport& report, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Json:
        return to_json(report).dump(2) + "\n";
    case OutputFormat::Csv:
        return format_csv(report);
    default:
        return format_text(report);
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Homology of graph configuration spaces via the Swiatkowski complex", "swk"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    std::string reduction = "reduced";
    const std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("graph", cfg.input, "Graph file");
        sub->add_option("--standard", cfg.standard, "Standard graph instead of a file, e.g. \"complete 4\"");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("-j,--jobs", cfg.jobs, "Worker threads (0 = all cores)");
    };
    auto bounds = [&](CLI::App* sub, std::size_t maxdeg, std::size_t maxw) {
        sub->add_option("--max-degree", cfg.max_degree, "Largest degree i")->default_val(maxdeg);
        sub->add_option("--max-weight,--weight", cfg.max_weight, "Largest weight k")->default_val(maxw);
    };
    auto reduction_flag = [&](CLI::App* sub) {
        sub->add_option("--reduction", reduction, "Complex to use")
            ->check(CLI::IsMember({"reduced", "full"}))
            ->default_val("reduced");
    };
    auto cells = [&](CLI::App* sub) {
        sub->add_option("--max-cells", cfg.max_cells, "Cube complex cell ceiling")->default_val(default_max_cells);
    };

    auto* hom = app.add_subcommand("homology", "H_i(B_k) of one slice");
    common(hom);
    hom->add_option("-i,--degree", cfg.degree, "Degree i")->required();
    hom->add_option("-k,--weight", cfg.weight, "Weight k")->required();
    reduction_flag(hom);

    auto* table = app.add_subcommand("table", "H_i(B_k) for every i, k in bounds");
    common(table);
    bounds(table, 2, 3);
    reduction_flag(table);

    auto* oracle = app.add_subcommand("oracle", "Compare with the cube complex of a subdivision");
    common(oracle);
    bounds(oracle, 2, 2);
    cells(oracle);

    auto* euler = app.add_subcommand("euler", "Euler characteristic: formula, chain sum and series");
    common(euler);
    euler->add_option("--max-weight,--weight", cfg.max_weight, "Largest weight k")->default_val(6);

    auto* relations = app.add_subcommand("relations", "Star and loop classes and relation boundaries");
    common(relations);

    auto* check = app.add_subcommand("check", "Every invariant suite that applies to the graph");
    common(check);
    bounds(check, 2, 3);
    cells(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = formats.at(format);
    cfg.reduced = reduction == "reduced";

    Graph g;
    try {
        g = load_graph(cfg);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    RunReport report;
    try {
        report = run(cfg, g);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    out << render(report, cfg.format);
    return report.pass() ? 0 : 1;
}

} // namespace swk
