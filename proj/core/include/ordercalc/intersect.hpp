#pragma once

// Intersection numbers on Hilb A, expressed through the pullback of the
// line class of the dual plane and the components of the ramification
// divisor R of Psi. Products are evaluated only through a fixed rule table.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ordercalc/chowring.hpp"
#include "ordercalc/conics.hpp"
#include "ordercalc/fibers.hpp"

namespace ordercalc {

enum class Basis : std::size_t { PsiH, R1a, R1b, R2a, R2b, R3, R4, R5, R6, U1, U2 };
inline constexpr std::size_t kBasisSize = 11;

std::string to_string(Basis b);

/// Rational combination of the basis.
class RamExpr {
public:
    RamExpr() { coeff_.fill(Rational(0)); }
    static RamExpr basis(Basis b, Rational c = Rational(1));
    /// Psi^* of a dual-plane class of the given degree.
    static RamExpr pullback(std::int64_t plane_degree);

    const Rational& operator[](Basis b) const { return coeff_[static_cast<std::size_t>(b)]; }
    Rational& operator[](Basis b) { return coeff_[static_cast<std::size_t>(b)]; }

    RamExpr& operator+=(const RamExpr& o);
    RamExpr& operator-=(const RamExpr& o);
    friend RamExpr operator+(RamExpr a, const RamExpr& b) { return a += b; }
    friend RamExpr operator-(RamExpr a, const RamExpr& b) { return a -= b; }
    friend RamExpr operator*(Rational k, RamExpr a);

    bool is_zero() const;
    friend bool operator==(const RamExpr&, const RamExpr&) = default;
    std::string str() const;

private:
    std::array<Rational, kBasisSize> coeff_;
};

// Divisors used throughout.
RamExpr R1();                 // R1a + R1b, over E'-dual
RamExpr R2();                 // R2a + R2b, over E-dual
RamExpr Ri(int i);            // i in 3..6, over the bitangents
RamExpr ramification_divisor();  // R1 + R2 + R3 + ... + R6
RamExpr canonical_hilb();     // Psi^* K + R

/// Dual-plane data: E-dual and E'-dual are conics, each bitangent a line.
inline constexpr std::int64_t kDualConicDegree = 2;
inline constexpr std::int64_t kBitangentDegree = 1;
inline constexpr std::int64_t kPlaneCanonicalDegree = -3;

struct AuditStep {
    std::string lhs;
    std::string rhs;
    std::string rule;
    Rational value;
};

class RuleTable {
public:
    /// Builds the table and closes the self-squares of the split
    /// components by adjunction.
    RuleTable();

    /// Product of two basis elements with the name of the rule that gave it.
    /// Throws std::logic_error if no rule applies.
    std::pair<Rational, std::string> basis_product(Basis a, Basis b) const;

    /// Bilinear extension; appends one step per nonzero basis product when
    /// a log is given.
    Rational pairing(const RamExpr& x, const RamExpr& y, std::vector<AuditStep>* log = nullptr) const;

    /// Psi^* x . R_i through the pushforward Psi_* R_i = 4 L_i.
    Rational pullback_dot_Ri_by_projection(std::int64_t plane_degree, int i) const;
    /// Psi^* x . R_i through R_i = (1/2) Psi^* L_i.
    Rational pullback_dot_Ri_by_substitution(std::int64_t plane_degree, int i) const;

private:
    std::array<Rational, 4> component_square_{};  // R1a, R1b, R2a, R2b
    bool closed_ = false;
};

/// Self-intersection of a genus-0 component C of R1 or R2 solved from
/// -2 = C.(C + K_Hilb), using only cross terms of the table.
Rational adjunction_solve(Basis component);

struct K2Audit {
    std::int64_t pullback = 0;     // (Psi^* K)^2
    std::int64_t cross = 0;        // 2 Psi^*K . R
    std::int64_t squares = 0;      // sum of R_j^2
    std::int64_t mixed = 0;        // 2 sum_{j<k} R_j . R_k
    std::int64_t total = 0;
};

K2Audit canonical_audit();
std::int64_t canonical_self_intersection();

/// 1 - k2/8. Throws std::domain_error when the result is not an integer.
Rational genus_of_pic(std::int64_t k2);

/// Number of special points of each kind in the dual plane.
struct StratumCensus {
    int case4 = 6;
    int case5 = 4;
    int case7 = 4;
    int case8 = 4;
    int bitangents = 4;
};

StratumCensus census_of(const SpecialPoints& sp);

/// Topological Euler characteristic of each stratum of the dual plane.
/// Throws std::invalid_argument when the census is not the general-position one.
std::array<std::int64_t, 8> stratum_euler(const StratumCensus& c);

/// Sum over strata of fiber size times Euler characteristic.
std::int64_t euler_cross_check(const StratumCensus& c = {},
                               const std::function<int(StratumTag)>& fiber_size = {});

/// 4(1 - g) for a ruled surface over a genus g curve, inverted.
Rational genus_from_euler(std::int64_t e);

/// Components of R, grouped by the fiber rule that produces them.
std::vector<RamFactor> ramification_support();

}  // namespace ordercalc
