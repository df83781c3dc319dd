#include "swk/report.hpp"

#include <algorithm>
#include <sstream>

#include "swk/error.hpp"

namespace swk {

using Json = nlohmann::ordered_json;

bool RunReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& r) { return r.pass(); });
}

std::vector<ResultRow> result_rows(const HomologyTable& table)
{
    std::vector<ResultRow> out;
    for (std::size_t k = 0; k <= table.max_weight; ++k)
        for (std::size_t i = 0; i <= table.max_degree; ++i)
            out.push_back({i, k, table.at(i, k)});
    return out;
}

Json to_json(const HomologyGroup& g)
{
    Json torsion = Json::array();
    for (const auto& t : g.torsion) {
        if (t.fits_slong_p())
            torsion.push_back(t.get_si());
        else
            torsion.push_back(t.get_str());
    }
    return Json{{"betti", g.betti}, {"torsion", torsion}};
}

HomologyGroup homology_group_from_json(const Json& j)
{
    try {
        HomologyGroup g;
        g.betti = j.at("betti").get<std::size_t>();
        for (const auto& t : j.at("torsion"))
            g.torsion.push_back(t.is_string() ? BigInt(t.get<std::string>()) : BigInt(t.get<long>()));
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ReportError(std::string("homology group: ") + e.what());
    }
}

Json to_json(const CheckReport& r)
{
    Json items = Json::array();
    for (const auto& it : r.items) {
        Json x{{"label", it.label}, {"pass", it.pass}, {"detail", it.detail}};
        if (it.skipped)
            x["skipped"] = true;
        items.push_back(std::move(x));
    }
    return Json{{"name", r.name}, {"pass", r.pass()}, {"detail", r.parameters}, {"items", items}};
}

CheckReport check_report_from_json(const Json& j)
{
    try {
        CheckReport r{j.at("name").get<std::string>(), j.at("detail").get<std::string>(), {}};
        for (const auto& x : j.at("items"))
            r.items.push_back({x.at("label").get<std::string>(), x.at("pass").get<bool>(),
                               x.at("detail").get<std::string>(), x.value("skipped", false)});
        if (r.pass() != j.at("pass").get<bool>())
            throw ReportError("check '" + r.name + "': verdict disagrees with its items");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ReportError(std::string("check report: ") + e.what());
    }
}

Json to_json(const RunReport& r)
{
    Json results = Json::array();
    for (const auto& row : r.results) {
        Json x{{"i", row.degree}, {"k", row.weight}};
        x.update(to_json(row.group));
        results.push_back(std::move(x));
    }
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(to_json(c));
    return Json{{"graph", r.graph}, {"command", r.command}, {"options", r.options},
                {"results", results}, {"checks", checks}, {"pass", r.pass()}};
}

RunReport run_report_from_json(const Json& j)
{
    try {
        RunReport r;
        r.graph = j.at("graph").get<std::string>();
        r.command = j.at("command").get<std::string>();
        r.options = j.at("options");
        for (const auto& x : j.at("results"))
            r.results.push_back({x.at("i").get<std::size_t>(), x.at("k").get<std::size_t>(), homology_group_from_json(x)});
        for (const auto& x : j.at("checks"))
            r.checks.push_back(check_report_from_json(x));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ReportError(std::string("run report: ") + e.what());
    }
}

std::string format_text(const RunReport& r)
{
    std::ostringstream out;
    out << r.command << " on " << r.graph << "\n";
    for (const auto& row : r.results)
        out << "  " << slice_label(row.degree, row.weight) << " = " << row.group.to_string() << "\n";
    for (const auto& c : r.checks) {
        out << (c.pass() ? "PASS " : "FAIL ") << c.name;
        if (!c.parameters.empty())
            out << " [" << c.parameters << "]";
        out << "\n";
        for (const auto& it : c.items)
            out << "  " << (it.skipped ? "skip" : it.pass ? "ok  " : "FAIL") << " " << it.label
                << (it.detail.empty() ? "" : ": " + it.detail) << "\n";
    }
    if (!r.checks.empty())
        out << (r.pass() ? "all checks passed" : "some checks FAILED") << "\n";
    return out.str();
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

} // namespace

std::string format_csv(const RunReport& r)
{
    std::ostringstream out;
    if (!r.results.empty()) {
        out << "i,k,betti,torsion\n";
        for (const auto& row : r.results) {
            out << row.degree << "," << row.weight << "," << row.group.betti << ",";
            for (std::size_t j = 0; j < row.group.torsion.size(); ++j)
                out << (j ? ";" : "") << row.group.torsion[j].get_str();
            out << "\n";
        }
    }
    if (!r.checks.empty()) {
        out << "check,item,status,detail\n";
        for (const auto& c : r.checks)
            for (const auto& it : c.items)
                out << csv_field(c.name) << "," << csv_field(it.label) << ","
                    << (it.skipped ? "skip" : it.pass ? "pass" : "fail") << "," << csv_field(it.detail) << "\n";
    }
    return out.str();
}

bool operator==(const CheckItem& a, const CheckItem& b)
{
    return a.label == b.label && a.pass == b.pass && a.detail == b.detail && a.skipped == b.skipped;
}

bool operator==(const CheckReport& a, const CheckReport& b)
{
    return a.name == b.name && a.parameters == b.parameters && a.items == b.items;
}

bool operator==(const RunReport& a, const RunReport& b)
{
    return a.graph == b.graph && a.command == b.command && a.options == b.options && a.results == b.results &&
           a.checks == b.checks;
}

} // namespace swk
