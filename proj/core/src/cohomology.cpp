#include "ordercalc/cohomology.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ordercalc {

namespace {

constexpr DivisorClassY kOrderL{-1, -1};

// A (x)_Y O_C for a curve C of class `curve` is O_C + L_sigma (x) O_C, and the
// second summand is O_Y(L) restricted to sigma(C).
struct CurveSummand {
    DivisorClassY curve;
    DivisorClassY bundle;
};

std::vector<CurveSummand> underlying_of_induced_curve(DivisorClassY curve)
{
    return {{curve, {0, 0}}, {sigma_pullback(curve), kOrderL}};
}

// dim Ext^i_Y(O_Y(N), O_C(B)) = h^i(C, (B - N)|_C) for C a ruling.
ExtDims ext_line_to_curve_sheaves(DivisorClassY N, const std::vector<CurveSummand>& target)
{
    ExtDims out;
    for (const auto& s : target) {
        const CohomologyP1 h = h_on_ruling(s.curve, s.bundle - N);
        out += ExtDims{h.h0, h.h1, 0};
    }
    return out;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const CohomologyY& h)
{
    return os << '(' << h.h0 << ',' << h.h1 << ',' << h.h2 << ')';
}

std::ostream& operator<<(std::ostream& os, const ExtDims& e)
{
    return os << '(' << e.e0 << ',' << e.e1 << ',' << e.e2 << ')';
}

CohomologyP1 h_p1(std::int64_t n)
{
    return {std::max<std::int64_t>(n + 1, 0), std::max<std::int64_t>(-n - 1, 0)};
}

CohomologyY h_y(DivisorClassY d)
{
    const CohomologyP1 a = h_p1(d.m);
    const CohomologyP1 b = h_p1(d.n);
    return {a.h0 * b.h0, a.h0 * b.h1 + a.h1 * b.h0, a.h1 * b.h1};
}

LineBundleSum::LineBundleSum(std::vector<DivisorClassY> terms) : terms_(std::move(terms))
{
    if (terms_.empty())
        throw std::invalid_argument("LineBundleSum: empty sum");
    std::sort(terms_.begin(), terms_.end());
}

LineBundleSum::LineBundleSum(std::initializer_list<DivisorClassY> terms)
    : LineBundleSum(std::vector<DivisorClassY>(terms))
{
}

DivisorClassY LineBundleSum::c1() const
{
    DivisorClassY s;
    for (auto t : terms_) s += t;
    return s;
}

ChernData LineBundleSum::chern() const
{
    ChernData acc = ChernData::line(terms_.front());
    for (std::size_t i = 1; i < terms_.size(); ++i)
        acc = direct_sum(acc, ChernData::line(terms_[i]));
    return acc;
}

LineBundleSum LineBundleSum::shifted(DivisorClassY t) const
{
    std::vector<DivisorClassY> out;
    out.reserve(terms_.size());
    for (auto d : terms_) out.push_back(d + t);
    return LineBundleSum(std::move(out));
}

ExtDims ext_sums(const LineBundleSum& src, const LineBundleSum& dst)
{
    ExtDims out;
    for (auto s : src.terms()) {
        for (auto d : dst.terms()) {
            const CohomologyY h = h_y(d - s);
            out += ExtDims{h.h0, h.h1, h.h2};
        }
    }
    return out;
}

ExtDims ext_A_from_induced(DivisorClassY N, const LineBundleSum& target)
{
    return ext_sums(LineBundleSum{N}, target);
}

LineBundleSum underlying_of_induced(DivisorClassY N, DivisorClassY L)
{
    return LineBundleSum{N, L + sigma_pullback(N)};
}

AModulePresentation AModulePresentation::induced(DivisorClassY N, DivisorClassY L)
{
    return AModulePresentation(Induced{N}, underlying_of_induced(N, L));
}

AModulePresentation AModulePresentation::split(LineBundleSum sum)
{
    if (sum.size() != 2)
        throw std::invalid_argument("AModulePresentation: split module must have two summands");
    if (!sum.c1().symmetric())
        throw std::invalid_argument("AModulePresentation: c1 of an A-module is symmetric, got " +
                                    to_string(sum.c1()));
    LineBundleSum copy = sum;
    return AModulePresentation(Split{std::move(sum)}, std::move(copy));
}

CohomologyP1 h_on_ruling(DivisorClassY curve, DivisorClassY bundle, std::int64_t twist)
{
    if (curve != kFiberF1 && curve != kFiberF2)
        throw std::invalid_argument("h_on_ruling: curve must be a ruling, got " + to_string(curve));
    return h_p1(intersect(bundle, curve) + twist);
}

std::string_view to_string(TangentCase c)
{
    switch (c) {
    case TangentCase::HilbTangentAtInducedF: return "HilbTangentAtInducedF";
    case TangentCase::HilbTangentAtInducedFPrime: return "HilbTangentAtInducedFPrime";
    case TangentCase::HomMtoA_split: return "HomMtoA_split";
    case TangentCase::HomMtoA_induced: return "HomMtoA_induced";
    case TangentCase::ObstructionAtInducedF: return "ObstructionAtInducedF";
    case TangentCase::ObstructionAtInducedFPrime: return "ObstructionAtInducedFPrime";
    case TangentCase::ObstructionSplitH1: return "ObstructionSplitH1";
    case TangentCase::ObstructionSplitH0: return "ObstructionSplitH0";
    }
    throw std::invalid_argument("unknown TangentCase");
}

TangentCase parse_tangent_case(std::string_view tag)
{
    for (TangentCase c : kAllTangentCases)
        if (to_string(c) == tag) return c;
    throw std::invalid_argument("unknown tangent case tag: " + std::string(tag));
}

std::int64_t hom_A_tangent(TangentCase c)
{
    const LineBundleSum split_m{{-1, -1}, {-1, -1}};
    switch (c) {
    case TangentCase::HilbTangentAtInducedF:
        // hom_Y(O(-F), O_F + O_F'(-1)) = h^0(O_F) + h^0(O_F')
        return ext_line_to_curve_sheaves(-kFiberF1, underlying_of_induced_curve(kFiberF1)).e0;
    case TangentCase::HilbTangentAtInducedFPrime:
        return ext_line_to_curve_sheaves(-kFiberF2, underlying_of_induced_curve(kFiberF2)).e0;
    case TangentCase::HomMtoA_split: {
        // ext^2_Y(O, O(-H) (x) M)^* = h^2(O(-2,-2)^2)
        const ExtDims e = ext_sums(LineBundleSum{{0, 0}}, split_m.shifted(-kPolarizationH));
        return e.e2;
    }
    case TangentCase::HomMtoA_induced:
        return ext_A_from_induced(-kFiberF1, underlying_of_induced({0, 0})).e0;
    case TangentCase::ObstructionAtInducedF:
        return ext_line_to_curve_sheaves(-kFiberF1, underlying_of_induced_curve(kFiberF1)).e1;
    case TangentCase::ObstructionAtInducedFPrime:
        return ext_line_to_curve_sheaves(-kFiberF2, underlying_of_induced_curve(kFiberF2)).e1;
    case TangentCase::ObstructionSplitH1:
        return ext_sums(LineBundleSum{{0, 0}}, split_m.shifted(-kPolarizationH)).e1;
    case TangentCase::ObstructionSplitH0:
        // A-linear maps are in particular O_Y-linear, and the O_Y-Hom already vanishes.
        return ext_sums(split_m, split_m.shifted(-kPolarizationH)).e0;
    }
    throw std::invalid_argument("hom_A_tangent: unknown case");
}

}  // namespace ordercalc
