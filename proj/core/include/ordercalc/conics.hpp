#pragma once

// Smooth plane conics, their duals, and the classification of dual-plane
// points against a pair of branch conics E, E'.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordercalc/projective.hpp"

namespace ordercalc {

class GeometryError : public std::runtime_error {
public:
    enum class Kind {
        SingularConic,
        NonIncidentBasePoint,
        CoincidentPoints,
        IdenticalConics,
        CollinearBasePoints,
        TangentialBasePoint,
        IllegalIncidence,
        Unsupported,
    };

    GeometryError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

std::string_view to_string(GeometryError::Kind k);

/// Symmetric integer matrix up to scale, det != 0. Normalized to content 1
/// with the first nonzero entry (row-major) positive.
class Conic {
public:
    /// Throws std::invalid_argument if m is not symmetric and
    /// GeometryError(SingularConic) if det m = 0.
    explicit Conic(const Mat3& m);
    static Conic diagonal(long long a, long long b, long long c);

    const Mat3& matrix() const { return m_; }
    BigInt form(const Vec3& x) const { return dot(x, mat_vec(m_, x)); }
    bool contains(const ProjPoint& p) const { return form(p.coords()) == 0; }
    bool contains(const QuadPoint& p) const;

    friend bool operator==(const Conic&, const Conic&) = default;
    std::string str() const;

private:
    Mat3 m_;
};

/// Adjugate matrix. Points of the dual conic are the tangent lines of C.
Conic dual_conic(const Conic& c);

bool tangency(const ProjLine& l, const Conic& c);
/// Tangent line at a point of C. Throws std::invalid_argument if p is not on C.
ProjLine tangent_line_at(const ProjPoint& p, const Conic& c);
/// The point where a tangent line touches C. Throws std::invalid_argument
/// if l is not tangent.
ProjPoint tangency_point(const ProjLine& l, const Conic& c);

struct IntersectionPoint {
    QuadPoint point;
    int multiplicity;
};

/// l meets C in two points counted with multiplicity; coordinates live in
/// Q or a single quadratic extension.
std::vector<IntersectionPoint> line_conic_intersection(const ProjLine& l, const Conic& c);

struct ConicPair {
    Conic E;
    Conic Eprime;
    std::array<ProjPoint, 4> base_points;
    Conic E_dual;
    Conic Eprime_dual;
    /// bitangents[i] is base point i read as a line of the dual plane.
    std::array<ProjLine, 4> bitangents;
};

/// Validates incidence and general position. Throws GeometryError.
ConicPair build_pair(const Conic& E, const Conic& Eprime, const std::array<ProjPoint, 4>& base_points);

enum class StratumTag { Case1 = 1, Case2, Case3, Case4, Case5, Case6, Case7, Case8 };

inline constexpr std::array<StratumTag, 8> kAllStrata{StratumTag::Case1, StratumTag::Case2, StratumTag::Case3,
                                                     StratumTag::Case4, StratumTag::Case5, StratumTag::Case6,
                                                     StratumTag::Case7, StratumTag::Case8};

std::string to_string(StratumTag t);
/// 1..8; throws std::out_of_range otherwise.
StratumTag stratum_from_index(int n);
inline int index_of(StratumTag t) { return static_cast<int>(t); }

/// Maps (tangent to E, tangent to E', base points on the line) to a case.
/// Returns nullopt for the combinations that cannot occur in general position.
std::optional<StratumTag> stratum_from_incidence(bool tangent_E, bool tangent_Eprime, int base_point_count);

struct Stratum {
    StratumTag tag = StratumTag::Case1;
    bool tangent_E = false;
    bool tangent_Eprime = false;
    int base_count = 0;
    std::vector<int> base_points_on_line;  // indices into ConicPair::base_points, empty for bare tags
    std::optional<ProjPoint> touch_E;
    std::optional<ProjPoint> touch_Eprime;

    /// Bare tag with the incidence flags it implies and no geometric payload.
    static Stratum from_tag(StratumTag t);
};

/// Classifies the line l_p with p's coordinates. Throws
/// GeometryError(IllegalIncidence) outside the eight legal combinations.
Stratum classify_point(const ProjPoint& p, const ConicPair& pair);

struct SpecialPoints {
    std::vector<ProjPoint> case4;  // meets of two bitangents
    std::vector<ProjPoint> case5;  // tangents to E' at base points
    std::vector<ProjPoint> case7;  // common tangents of E and E'
    std::vector<ProjPoint> case8;  // tangents to E at base points
};

/// The finitely many special points of the dual plane. The common tangents
/// are computed only for diagonal pairs with rational solutions; otherwise
/// GeometryError(Unsupported) is thrown.
SpecialPoints special_points(const ConicPair& pair);

/// One rational representative per stratum, found deterministically.
/// Throws GeometryError(Unsupported) if some stratum has no rational
/// representative reachable by the search.
std::array<ProjPoint, 8> stratum_representatives(const ConicPair& pair);

}  // namespace ordercalc
