#pragma once

// Fibers of the cover Psi: Hilb A -> dual plane. A dual-plane point p gives
// a curve C_p (the preimage of the line l_p) carrying the degree-4 divisor
// D-bar = C_p . D with its sigma action. Points of the fiber are the
// admissible half-divisors D-bar' with their two module structures, plus two
// extra quotients when C_p is nodal.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordercalc/conics.hpp"

namespace ordercalc {

struct Orbit {
    int id = 0;
    int multiplicity = 1;
    bool sigma_fixed = false;
    bool at_node = false;

    friend bool operator==(const Orbit&, const Orbit&) = default;
};

struct MarkedFiber {
    bool singular = false;
    std::vector<Orbit> orbits;

    /// Sum of multiplicity times orbit size.
    int degree() const;
    /// Throws std::invalid_argument when the invariants fail: degree 4,
    /// positive multiplicities, ids 0..n-1 in order, node orbits fixed and
    /// only on singular curves, at most one node orbit.
    void validate() const;

    friend bool operator==(const MarkedFiber&, const MarkedFiber&) = default;
};

/// Sorts node orbits first, then fixed, then free (higher multiplicity
/// first within a group) and renumbers ids.
MarkedFiber canonical(MarkedFiber f);

MarkedFiber marked_fiber_of_stratum(const Stratum& s);
MarkedFiber marked_fiber_of_stratum(StratumTag t);

/// Built from l_p meeting E'. Equals marked_fiber_of_stratum(classify_point(p, pair)).
MarkedFiber marked_fiber_geometric(const ProjPoint& p, const ConicPair& pair);

enum class Side { Plus, Minus, Fixed };
enum class Component { None, F, FPrime };

struct ChoicePoint {
    int orbit = 0;
    Side side = Side::Fixed;
    Component component = Component::None;

    friend auto operator<=>(const ChoicePoint&, const ChoicePoint&) = default;
};

/// Multiset of degree 2, stored sorted.
struct Choice {
    std::vector<ChoicePoint> points;

    int count(int orbit, Side side) const;
    bool sigma_invariant() const;

    friend auto operator<=>(const Choice&, const Choice&) = default;
};

std::string to_string(const Choice& c);

/// All D-bar' with D-bar' + sigma D-bar' = D-bar. On a nodal curve only
/// node-free choices with one point on each component are returned.
std::vector<Choice> enumerate_choices(const MarkedFiber& f);

enum class FiberKind { StructurePlus, StructureMinus, ExtraF, ExtraFPrime };

std::string to_string(FiberKind k);

struct FiberPoint {
    FiberKind kind = FiberKind::StructurePlus;
    std::optional<Choice> choice;  // empty for extras
    int ram_index = 1;
    std::string branch_label;

    friend bool operator==(const FiberPoint&, const FiberPoint&) = default;
};

/// The sources of a factor 2 in a ramification index.
enum class RamFactor { TangentToEprime, ExtraOverE, Bitangent };

std::string to_string(RamFactor r);

/// Tangency and base-point data read back from a marked fiber.
struct FiberGeometry {
    bool tangent_E = false;
    bool tangent_Eprime = false;
    int base_count = 0;
};

FiberGeometry geometry_of(const MarkedFiber& f);

/// Factors contributing to the ramification index of a point; one
/// Bitangent entry per base point on l_p.
std::vector<RamFactor> ram_factors(const FiberPoint& pt, const MarkedFiber& f);
/// Product of the factors. The stratum must match the fiber.
int assign_ram(const FiberPoint& pt, const MarkedFiber& f, const Stratum& s);

/// Throws std::invalid_argument if f is not the marked fiber of one of the
/// eight strata.
StratumTag infer_stratum(const MarkedFiber& f);

std::vector<FiberPoint> fiber(const MarkedFiber& f);

/// Swaps the two structures on a choice and fixes the extras.
FiberPoint tau(const FiberPoint& pt);

/// Fiber cardinality of each case as listed in the case tables.
int expected_fiber_size(StratumTag t);

struct SurveyReport {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::map<StratumTag, std::uint64_t> strata;
    std::map<int, std::uint64_t> fiber_sizes;
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Classifies each point and counts its fiber, comparing with the table.
SurveyReport survey_points(const ConicPair& pair, const std::vector<ProjPoint>& points);

/// Draws integer points from mt19937_64 seeded with seed. Each coordinate is
/// (raw >> 32) - 2^31, so it is uniform on [-2^31, 2^31); zero vectors are
/// redrawn. The wide range keeps special strata out of generic samples.
std::vector<ProjPoint> sample_points(std::uint64_t count, std::uint64_t seed);

SurveyReport survey(const ConicPair& pair, std::uint64_t sample_count, std::uint64_t seed);

}  // namespace ordercalc
