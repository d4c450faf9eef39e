#pragma once

// Cohomology dimensions of line bundles on P1 and P1 x P1 (Kunneth), Ext
// between split bundles, and the dimension chains used for A-modules.

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string_view>
#include <variant>
#include <vector>

#include "ordercalc/chowring.hpp"

namespace ordercalc {

struct CohomologyP1 {
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
    friend bool operator==(const CohomologyP1&, const CohomologyP1&) = default;
};

struct CohomologyY {
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
    std::int64_t h2 = 0;
    friend bool operator==(const CohomologyY&, const CohomologyY&) = default;
};

struct ExtDims {
    std::int64_t e0 = 0;
    std::int64_t e1 = 0;
    std::int64_t e2 = 0;
    ExtDims& operator+=(const ExtDims& o) { e0 += o.e0; e1 += o.e1; e2 += o.e2; return *this; }
    friend bool operator==(const ExtDims&, const ExtDims&) = default;
};

std::ostream& operator<<(std::ostream& os, const CohomologyY& h);
std::ostream& operator<<(std::ostream& os, const ExtDims& e);

CohomologyP1 h_p1(std::int64_t n);
CohomologyY h_y(DivisorClassY d);

/// Nonempty multiset of line bundles O_Y(d_1) + ... + O_Y(d_k).
class LineBundleSum {
public:
    /// Throws std::invalid_argument on an empty list.
    explicit LineBundleSum(std::vector<DivisorClassY> terms);
    LineBundleSum(std::initializer_list<DivisorClassY> terms);

    const std::vector<DivisorClassY>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    DivisorClassY c1() const;
    ChernData chern() const;
    LineBundleSum shifted(DivisorClassY t) const;

    friend bool operator==(const LineBundleSum&, const LineBundleSum&) = default;

private:
    std::vector<DivisorClassY> terms_;  // sorted
};

/// dim Ext^i_Y(src, dst) = sum over term pairs of h^i(dst_k - src_j).
ExtDims ext_sums(const LineBundleSum& src, const LineBundleSum& dst);

/// Ext^i_A(A (x) N, -) = Ext^i_Y(N, -) evaluated on the underlying O_Y-sum.
ExtDims ext_A_from_induced(DivisorClassY N, const LineBundleSum& target);

/// A-module given either as A (x)_Y N or as an abstract module with a
/// prescribed split underlying O_Y-module.
class AModulePresentation {
public:
    struct Induced { DivisorClassY N; };
    struct Split { LineBundleSum sum; };

    static AModulePresentation induced(DivisorClassY N, DivisorClassY L = {-1, -1});
    /// Throws std::invalid_argument unless the sum has two terms and a
    /// symmetric first Chern class.
    static AModulePresentation split(LineBundleSum sum);

    const std::variant<Induced, Split>& kind() const { return kind_; }
    bool is_induced() const { return std::holds_alternative<Induced>(kind_); }
    const LineBundleSum& underlying() const { return underlying_; }

private:
    AModulePresentation(std::variant<Induced, Split> k, LineBundleSum u)
        : kind_(std::move(k)), underlying_(std::move(u)) {}

    std::variant<Induced, Split> kind_;
    LineBundleSum underlying_;
};

/// Underlying O_Y-module of A (x)_Y N: N + (L + sigma^* N).
LineBundleSum underlying_of_induced(DivisorClassY N, DivisorClassY L = {-1, -1});

/// h^i(C, O_Y(bundle)|_C (x) O_C(twist)) for C a fibre of class (1,0) or (0,1).
/// Throws std::invalid_argument for any other curve class.
CohomologyP1 h_on_ruling(DivisorClassY curve, DivisorClassY bundle, std::int64_t twist = 0);

/// The closed-form dimension chains for torsion and split targets.
enum class TangentCase {
    HilbTangentAtInducedF,       // hom_A(A(-F), A (x) O_F)
    HilbTangentAtInducedFPrime,  // same with F' = sigma^* F
    HomMtoA_split,               // hom_A(M, A), M = O(-1,-1)^2 via Serre duality
    HomMtoA_induced,             // hom_A(A (x) O(-F), A)
    ObstructionAtInducedF,       // ext^1_A(A(-F), A (x) O_F)
    ObstructionAtInducedFPrime,
    ObstructionSplitH1,          // h^1(Y, O(-H) (x) M)
    ObstructionSplitH0,          // h^0(Hom(M, O(-H) (x) M)), bounded through O_Y
};

inline constexpr TangentCase kAllTangentCases[] = {
    TangentCase::HilbTangentAtInducedF,  TangentCase::HilbTangentAtInducedFPrime,
    TangentCase::HomMtoA_split,          TangentCase::HomMtoA_induced,
    TangentCase::ObstructionAtInducedF,  TangentCase::ObstructionAtInducedFPrime,
    TangentCase::ObstructionSplitH1,     TangentCase::ObstructionSplitH0,
};

std::string_view to_string(TangentCase c);
/// Throws std::invalid_argument on an unknown tag.
TangentCase parse_tangent_case(std::string_view tag);

/// Throws std::invalid_argument on a value outside the enumeration.
std::int64_t hom_A_tangent(TangentCase c);

}  // namespace ordercalc
