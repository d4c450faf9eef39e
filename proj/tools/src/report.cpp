#include "ordercalc_cli/report.hpp"

#include <algorithm>
#include <sstream>

#ifndef ORDERCALC_VERSION
#define ORDERCALC_VERSION "0.0.0"
#endif

namespace ordercalc::cli {

CheckRecord check(std::string name, std::string anchor, ojson expected, ojson actual)
{
    const bool ok = expected == actual;
    return {std::move(name), std::move(anchor), std::move(expected), std::move(actual), ok};
}

bool Report::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

const char* tool_version()
{
    return ORDERCALC_VERSION;
}

ojson to_json(const Report& r)
{
    ojson j;
    j["tool"] = "ordercalc";
    j["version"] = tool_version();
    j["command"] = r.command;
    j["fixture_digest"] = r.fixture_digest;
    ojson checks = ojson::array();
    for (const auto& c : r.checks) {
        ojson x;
        x["name"] = c.name;
        x["anchor"] = c.anchor;
        x["expected"] = c.expected;
        x["actual"] = c.actual;
        x["pass"] = c.pass;
        checks.push_back(std::move(x));
    }
    j["checks"] = std::move(checks);
    j["data"] = r.data;
    j["pass"] = r.pass();
    if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
    return j;
}

std::string render_json(const Report& r)
{
    return to_json(r).dump(2) + "\n";
}

std::string render_markdown(const Report& r)
{
    std::ostringstream ss;
    ss << "# ordercalc " << r.command << "\n\n";
    ss << "- version: " << tool_version() << "\n";
    ss << "- fixture digest: `" << r.fixture_digest << "`\n";
    ss << "- result: " << (r.pass() ? "PASS" : "FAIL") << "\n";
    if (r.timing_ms) ss << "- time: " << *r.timing_ms << " ms\n";
    if (!r.checks.empty()) {
        ss << "\n| check | anchor | expected | actual | pass |\n|---|---|---|---|---|\n";
        for (const auto& c : r.checks)
            ss << "| " << c.name << " | " << c.anchor << " | `" << c.expected.dump() << "` | `" << c.actual.dump()
               << "` | " << (c.pass ? "yes" : "**no**") << " |\n";
    }
    if (!r.data.empty()) ss << "\n```json\n" << r.data.dump(2) << "\n```\n";
    return ss.str();
}

}  // namespace ordercalc::cli
