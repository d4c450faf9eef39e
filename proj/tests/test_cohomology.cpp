#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ordercalc/cohomology.hpp>

#include "support/gen.hpp"

using namespace ordercalc;

namespace {

// h0 of O(a) on P1 counts monomials of degree a; h1 follows from duality.
std::int64_t monomials(std::int64_t a) { return a < 0 ? 0 : a + 1; }

CohomologyY oracle_h(std::int64_t a, std::int64_t b)
{
    const std::int64_t h0a = monomials(a), h0b = monomials(b);
    const std::int64_t h1a = monomials(-2 - a), h1b = monomials(-2 - b);
    return {h0a * h0b, h0a * h1b + h1a * h0b, h1a * h1b};
}

}  // namespace

TEST_CASE("h_p1 examples")
{
    CHECK(h_p1(0) == CohomologyP1{1, 0});
    CHECK(h_p1(-1) == CohomologyP1{0, 0});
    CHECK(h_p1(-2) == CohomologyP1{0, 1});
    for (int n = -20; n <= 20; ++n) CHECK(h_p1(n).h0 - h_p1(n).h1 == n + 1);
}

TEST_CASE("h_y examples")
{
    CHECK(h_y({0, 0}) == CohomologyY{1, 0, 0});
    CHECK(h_y({0, -2}) == CohomologyY{0, 1, 0});
    CHECK(h_y({-2, -2}) == CohomologyY{0, 0, 1});
}

TEST_CASE("h_y against monomial counts, Serre duality and Riemann-Roch on the grid")
{
    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b) {
            const auto h = h_y({a, b});
            CHECK(h == oracle_h(a, b));
            const auto dual = h_y({-2 - a, -2 - b});
            CHECK(h.h0 == dual.h2);
            CHECK(h.h1 == dual.h1);
            CHECK(h.h2 == dual.h0);
            CHECK(h.h0 - h.h1 + h.h2 == (a + 1) * (b + 1));
            CHECK(h.h0 - h.h1 + h.h2 == euler_char(ChernData::line({a, b})));
        }
}

TEST_CASE("ext_sums examples")
{
    CHECK(ext_sums({{-1, 0}}, {{0, 0}, {-1, -1}}) == ExtDims{2, 0, 0});
    CHECK(ext_sums({{0, 0}}, {{0, 0}}) == ExtDims{1, 0, 0});
    CHECK(ext_sums({{-1, 0}}, {{-1, 0}, {-1, -2}}) == ExtDims{1, 1, 0});
}

TEST_CASE("ext_sums is shift invariant and additive")
{
    testgen::Gen g(21);
    for (int k = 0; k < 200; ++k) {
        const LineBundleSum src{g.divisor(4), g.divisor(4)};
        const LineBundleSum dst{g.divisor(4), g.divisor(4), g.divisor(4)};
        const auto t = g.divisor(4);
        CHECK(ext_sums(src.shifted(t), dst.shifted(t)) == ext_sums(src, dst));
        ExtDims by_pairs;
        for (const auto& s : src.terms())
            for (const auto& d : dst.terms()) {
                const auto h = oracle_h(d.m - s.m, d.n - s.n);
                by_pairs += ExtDims{h.h0, h.h1, h.h2};
            }
        CHECK(ext_sums(src, dst) == by_pairs);
    }
}

TEST_CASE("ext_A_from_induced agrees with ext_sums")
{
    CHECK(ext_A_from_induced({0, 0}, {{0, 0}, {-1, -1}}) == ExtDims{1, 0, 0});
    CHECK(ext_A_from_induced({-1, 0}, {{-1, 0}, {-1, -2}}) == ExtDims{1, 1, 0});
    testgen::Gen g(22);
    for (int k = 0; k < 200; ++k) {
        const auto n = g.divisor(4);
        const auto target = underlying_of_induced(g.divisor(4));
        CHECK(ext_A_from_induced(n, target) == ext_sums({n}, target));
    }
}

TEST_CASE("LineBundleSum ignores order and rejects empty input")
{
    CHECK(LineBundleSum{{1, 0}, {0, 1}} == LineBundleSum{{0, 1}, {1, 0}});
    CHECK_THROWS_AS(LineBundleSum(std::vector<DivisorClassY>{}), std::invalid_argument);
    CHECK(LineBundleSum({{-1, 0}, {0, -1}}).c1() == DivisorClassY{-1, -1});
}

TEST_CASE("underlying_of_induced and presentations")
{
    CHECK(underlying_of_induced({0, 0}) == LineBundleSum{{0, 0}, {-1, -1}});
    CHECK(underlying_of_induced({-1, 0}) == LineBundleSum{{-1, 0}, {-1, -2}});
    CHECK(AModulePresentation::induced({2, -1}).is_induced());
    CHECK_NOTHROW(AModulePresentation::split({{-1, -1}, {-1, -1}}));
    CHECK_THROWS_AS(AModulePresentation::split({{-1, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(AModulePresentation::split({{-1, -1}}), std::invalid_argument);
}

TEST_CASE("h_on_ruling restricts to the fibre")
{
    CHECK(h_on_ruling({1, 0}, {0, 0}) == CohomologyP1{1, 0});
    CHECK(h_on_ruling({1, 0}, {0, -1}) == CohomologyP1{0, 0});
    CHECK(h_on_ruling({0, 1}, {-3, 5}) == CohomologyP1{0, 2});
    CHECK_THROWS_AS(h_on_ruling({1, 1}, {0, 0}), std::invalid_argument);
}

TEST_CASE("tangent and obstruction dimensions")
{
    CHECK(hom_A_tangent(TangentCase::HilbTangentAtInducedF) == 2);
    CHECK(hom_A_tangent(TangentCase::HilbTangentAtInducedFPrime) == 2);
    CHECK(hom_A_tangent(TangentCase::HomMtoA_split) == 2);
    CHECK(hom_A_tangent(TangentCase::HomMtoA_induced) == 2);
    CHECK(hom_A_tangent(TangentCase::ObstructionAtInducedF) == 0);
    CHECK(hom_A_tangent(TangentCase::ObstructionAtInducedFPrime) == 0);
    CHECK(hom_A_tangent(TangentCase::ObstructionSplitH1) == 0);
    CHECK(hom_A_tangent(TangentCase::ObstructionSplitH0) == 0);
    CHECK_THROWS_AS(hom_A_tangent(static_cast<TangentCase>(99)), std::invalid_argument);
}

TEST_CASE("tangent case tags round trip")
{
    for (auto c : kAllTangentCases) CHECK(parse_tangent_case(to_string(c)) == c);
    CHECK_THROWS_AS(parse_tangent_case("NoSuchCase"), std::invalid_argument);
}
