#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ordercalc::cli {

using ojson = nlohmann::ordered_json;

struct CheckRecord {
    std::string name;
    std::string anchor;  // where the expected value comes from
    ojson expected;
    ojson actual;
    bool pass = false;
};

/// Record whose pass flag is expected == actual.
CheckRecord check(std::string name, std::string anchor, ojson expected, ojson actual);

struct Report {
    std::string command;
    std::string fixture_digest;
    std::vector<CheckRecord> checks;
    ojson data = ojson::object();
    std::optional<double> timing_ms;

    bool pass() const;
    void add(CheckRecord r) { checks.push_back(std::move(r)); }
};

const char* tool_version();

ojson to_json(const Report& r);
std::string render_json(const Report& r);
std::string render_markdown(const Report& r);

}  // namespace ordercalc::cli
