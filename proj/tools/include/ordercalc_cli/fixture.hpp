#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <ordercalc/conics.hpp>

namespace ordercalc::cli {

/// Malformed input: bad JSON, wrong shapes, bad point syntax.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Fixture {
    std::array<std::array<long long, 3>, 3> E{};
    std::array<std::array<long long, 3>, 3> Eprime{};
    std::array<std::array<long long, 3>, 4> base_points{};
    std::optional<std::uint64_t> seed;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// The fixture shipped with the tool (also tools/fixtures/bundled.json).
const std::string& bundled_fixture_text();

/// Throws InputError on malformed documents.
Fixture parse_fixture(const std::string& text);
Fixture load_fixture(const std::string& path);

/// Throws GeometryError on degenerate or non-incident data and InputError
/// on a non-symmetric matrix.
ConicPair build_fixture_pair(const Fixture& f);

/// Canonical one-line JSON form.
std::string canonical_json(const Fixture& f);
/// FNV-1a 64 of canonical_json, as 16 hex digits.
std::string fixture_digest(const Fixture& f);

/// Parses "a,b,c". Throws InputError on bad syntax or the zero vector.
ProjPoint parse_point(const std::string& text);

}  // namespace ordercalc::cli
