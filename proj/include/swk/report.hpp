#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "swk/engine.hpp"
#include "swk/error.hpp"
#include "swk/homology_group.hpp"

namespace swk {

/// A JSON document that does not follow the report schema.
class ReportError : public Error {
public:
    using Error::Error;
};

struct ResultRow {
    std::size_t degree = 0;
    std::size_t weight = 0;
    HomologyGroup group;

    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

/// Everything one command emits.
struct RunReport {
    std::string graph;
    std::string command;
    nlohmann::ordered_json options = nlohmann::ordered_json::object();
    std::vector<ResultRow> results;
    std::vector<CheckReport> checks;

    /// True when every check report passes; vacuously true without checks.
    bool pass() const;
};

std::vector<ResultRow> result_rows(const HomologyTable& table);

nlohmann::ordered_json to_json(const HomologyGroup& g);
HomologyGroup homology_group_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const CheckReport& r);
CheckReport check_report_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const RunReport& r);
/// Throws ParseError on documents that do not follow the schema.
RunReport run_report_from_json(const nlohmann::ordered_json& j);

std::string format_text(const RunReport& r);
std::string format_csv(const RunReport& r);

bool operator==(const CheckItem& a, const CheckItem& b);
bool operator==(const CheckReport& a, const CheckReport& b);
bool operator==(const RunReport& a, const RunReport& b);

} // namespace swk
