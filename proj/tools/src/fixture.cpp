#include "ordercalc_cli/fixture.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ordercalc::cli {

namespace {

using json = nlohmann::ordered_json;

template <std::size_t N>
std::array<std::array<long long, 3>, N> read_rows(const json& j, const char* key)
{
    if (!j.contains(key)) throw InputError(std::string("fixture: missing key \"") + key + "\"");
    const json& v = j.at(key);
    if (!v.is_array() || v.size() != N)
        throw InputError(std::string("fixture: \"") + key + "\" must have " + std::to_string(N) + " rows");
    std::array<std::array<long long, 3>, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        const json& row = v[i];
        if (!row.is_array() || row.size() != 3)
            throw InputError(std::string("fixture: rows of \"") + key + "\" must have 3 entries");
        for (std::size_t k = 0; k < 3; ++k) {
            if (!row[k].is_number_integer())
                throw InputError(std::string("fixture: \"") + key + "\" entries must be integers");
            out[i][k] = row[k].get<long long>();
        }
    }
    return out;
}

Mat3 to_mat(const std::array<std::array<long long, 3>, 3>& a)
{
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) m[i][k] = a[i][k];
    return m;
}

}  // namespace

const std::string& bundled_fixture_text()
{
    static const std::string text = R"({
  "E": [[1, 0, 0], [0, 4, 0], [0, 0, -5]],
  "Eprime": [[4, 0, 0], [0, 1, 0], [0, 0, -5]],
  "base_points": [[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1]],
  "seed": 20240611
}
)";
    return text;
}

Fixture parse_fixture(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("fixture: ") + e.what());
    }
    if (!j.is_object()) throw InputError("fixture: top level must be an object");
    Fixture f;
    f.E = read_rows<3>(j, "E");
    f.Eprime = read_rows<3>(j, "Eprime");
    f.base_points = read_rows<4>(j, "base_points");
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw InputError("fixture: \"seed\" must be a nonnegative integer");
        f.seed = j["seed"].get<std::uint64_t>();
    }
    return f;
}

Fixture load_fixture(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open fixture " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str());
}

ConicPair build_fixture_pair(const Fixture& f)
{
    std::array<ProjPoint, 4> pts{ProjPoint(0, 0, 1), ProjPoint(0, 0, 1), ProjPoint(0, 0, 1), ProjPoint(0, 0, 1)};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& b = f.base_points[i];
        if (b[0] == 0 && b[1] == 0 && b[2] == 0) throw InputError("fixture: base point is the zero vector");
        pts[i] = ProjPoint(b[0], b[1], b[2]);
    }
    try {
        return build_pair(Conic(to_mat(f.E)), Conic(to_mat(f.Eprime)), pts);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("fixture: ") + e.what());
    }
}

std::string canonical_json(const Fixture& f)
{
    json j;
    j["E"] = f.E;
    j["Eprime"] = f.Eprime;
    j["base_points"] = f.base_points;
    if (f.seed) j["seed"] = *f.seed;
    return j.dump();
}

std::string fixture_digest(const Fixture& f)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical_json(f)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ProjPoint parse_point(const std::string& text)
{
    std::array<long long, 3> v{};
    std::stringstream ss(text);
    std::string part;
    std::size_t n = 0;
    while (std::getline(ss, part, ',')) {
        if (n == 3) throw InputError("point must have three coordinates: " + text);
        try {
            const auto first = part.find_first_not_of(" \t");
            const auto last = part.find_last_not_of(" \t");
            const std::string trimmed = first == std::string::npos ? "" : part.substr(first, last - first + 1);
            std::size_t used = 0;
            v[n] = std::stoll(trimmed, &used);
            if (used != trimmed.size()) throw InputError("bad coordinate \"" + part + "\"");
        } catch (const std::logic_error&) {
            throw InputError("bad coordinate \"" + part + "\"");
        }
        ++n;
    }
    if (n != 3) throw InputError("point must have three coordinates: " + text);
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) throw InputError("point (0,0,0) is not a projective point");
    return ProjPoint(v[0], v[1], v[2]);
}

}  // namespace ordercalc::cli
