#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "swk/cli.hpp"
#include "swk/graph_io.hpp"

using namespace swk;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "swk");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* file)
{
    return std::string(SWK_DATA_DIR) + "/" + file;
}

} // namespace

TEST_CASE("sample graph files parse to the standard graphs")
{
    std::vector<std::pair<const char*, const char*>> files{
        {"k4.graph", "K4"},          {"k33.graph", "K3,3"},   {"net.graph", "net"},  {"interval.graph", "I"},
        {"s3.graph", "S3"},          {"s4.graph", "star 4"},  {"c1.graph", "C1"},    {"c3.graph", "C3"},
        {"theta3.graph", "Theta3"}, {"l1.graph", "L1"}};
    for (auto [file, name] : files) {
        Graph a = parse_graph_file(data(file));
        Graph b = standard_graph(name);
        CAPTURE(file);
        CHECK(a.num_vertices() == b.num_vertices());
        CHECK(a.num_edges() == b.num_edges());
        CHECK(homology(a, 1, 2) == homology(b, 1, 2));
    }
}

TEST_CASE("table emits the K4 slice in JSON")
{
    auto r = cli({"table", data("k4.graph"), "--max-degree", "2", "--max-weight", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["graph"] == "K4");
    CHECK(j["command"] == "table");
    CHECK(j["results"].size() == 12);
    bool found = false;
    for (const auto& row : j["results"])
        if (row["i"] == 1 && row["k"] == 2) {
            CHECK(row == Json{{"i", 1}, {"k", 2}, {"betti", 4}, {"torsion", Json::array()}});
            found = true;
        }
    CHECK(found);
}

TEST_CASE("oracle finds the K3,3 torsion")
{
    auto r = cli({"oracle", data("k33.graph"), "--weight", "2", "--format", "json"});
    CHECK(r.code == 0);
    auto report = run_report_from_json(Json::parse(r.out));
    REQUIRE(report.checks.size() == 1);
    CHECK(report.checks[0].pass());
    bool found = false;
    for (const auto& row : report.results)
        if (row.degree == 1 && row.weight == 2) {
            CHECK(row.group.betti == 4);
            CHECK(row.group.torsion == std::vector<BigInt>{2});
            found = true;
        }
    CHECK(found);
}

TEST_CASE("euler rows agree")
{
    auto r = cli({"euler", data("k4.graph"), "--max-weight", "5"});
    CHECK(r.code == 0);
    std::size_t rows = 0;
    for (std::size_t p = 0; (p = r.out.find("formula = chain-sum = series", p)) != std::string::npos; ++p)
        ++rows;
    CHECK(rows == 6);
    CHECK(r.out.find("k=2: formula = chain-sum = series = -3") != std::string::npos);
}

TEST_CASE("relations and check commands pass on small graphs")
{
    CHECK(cli({"relations", data("theta3.graph")}).code == 0);
    CHECK(cli({"relations", "--standard", "K4"}).code == 0);
    auto r = cli({"check", data("s3.graph"), "--max-weight", "2", "--format", "json"});
    CHECK_MESSAGE(r.code == 0, r.out);
    auto report = run_report_from_json(Json::parse(r.out));
    CHECK(report.checks.size() >= 6);
}

TEST_CASE("JSON round-trips")
{
    for (const auto* cmd : {"table", "oracle", "relations"}) {
        auto r = cli({cmd, data("l1.graph"), "--format", "json"});
        REQUIRE(r.code == 0);
        auto j = Json::parse(r.out);
        RunReport report = run_report_from_json(j);
        CHECK(to_json(report) == j);
        CHECK(run_report_from_json(to_json(report)) == report);
    }
    RunReport synthetic{"g", "check", Json{{"max_weight", 2}}, {{0, 1, {2, {BigInt(2), BigInt("123456789012345678901234567890")}}}},
                        {}};
    CheckReport failing{"suite", "params", {}};
    failing.add("a", true, "fine");
    failing.add("b", false, "broken, \"quoted\"");
    failing.skip("c", "too big");
    synthetic.checks.push_back(failing);
    CHECK_FALSE(synthetic.pass());
    CHECK(run_report_from_json(to_json(synthetic)) == synthetic);
    CHECK(format_csv(synthetic).find("\"broken, \"\"quoted\"\"\"") != std::string::npos);
    CHECK_THROWS_AS(run_report_from_json(Json{{"graph", "g"}}), ReportError);
}

TEST_CASE("text output is deterministic across worker counts")
{
    auto a = cli({"table", data("net.graph"), "--max-weight", "3", "-j", "1"});
    auto b = cli({"table", data("net.graph"), "--max-weight", "3", "-j", "4"});
    auto c = cli({"table", data("net.graph"), "--max-weight", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    auto csv = cli({"homology", data("k33.graph"), "-i", "1", "-k", "2", "--format", "csv"});
    CHECK(csv.out == "i,k,betti,torsion\n1,2,4,2\n");
    auto full = cli({"homology", data("k33.graph"), "-i", "1", "-k", "2", "--reduction", "full"});
    CHECK(full.out.find("H1(B2) = Z^4 + Z/2") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"table", data("k4.graph"), "--format", "yaml"}).code == 2);
    CHECK(cli({"table", data("does-not-exist.graph")}).code == 2);
    CHECK(cli({"table"}).code == 2);

    auto bad = std::filesystem::temp_directory_path() / "swk-bad.graph";
    std::ofstream(bad) << "graph bad\nvertex a\nedge e a b\n";
    auto r = cli({"table", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("3") != std::string::npos);
    std::filesystem::remove(bad);
}
