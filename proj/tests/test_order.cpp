#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>

#include <ordercalc/order.hpp>

#include "support/gen.hpp"

using namespace ordercalc;

TEST_CASE("validate_order")
{
    CHECK(validate_order(OrderData::reference_instance()).ok());

    OrderData bad;
    bad.L = {-1, 0};
    CHECK_FALSE(validate_order(bad).ok());

    OrderData other;
    other.L = {-2, -2};
    other.D = {4, 4};
    CHECK(validate_order(other).ok());

    OrderData asym;
    asym.L = {-1, -2};
    asym.D = {3, 2};
    CHECK_FALSE(validate_order(asym).ok());
}

TEST_CASE("canonical twist")
{
    const auto o = OrderData::reference_instance();
    CHECK(canonical_twist(o) == DivisorClassY{-1, -1});
    CHECK(canonical_twist(o) == -kPolarizationH);
    CHECK(is_del_pezzo(o));
    CHECK(is_ample(o.e * -canonical_twist(o)));
    CHECK(canonical_twist_via_base(o) == canonical_twist(o));

    OrderData other;
    other.L = {-2, -2};
    other.D = {4, 4};
    CHECK(canonical_twist(other) == DivisorClassY{0, 0});
    CHECK_FALSE(is_del_pezzo(other));

    OrderData bad;
    bad.L = {-1, 0};
    CHECK_THROWS_AS(canonical_twist(bad), std::invalid_argument);
}

TEST_CASE("chern_of_induced examples")
{
    CHECK(chern_of_induced({0, 0}) == ChernData{2, {-1, -1}, 0});
    CHECK(chern_of_induced({-1, 0}) == ChernData{2, {-2, -2}, 2});
    for (int n = -3; n <= 3; ++n) CHECK(chern_of_induced({0, n + 1}).c1 == DivisorClassY{n, n});
}

TEST_CASE("chern_of_induced matches the Whitney product of its summands")
{
    for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b) {
            const DivisorClassY n{a, b};
            const DivisorClassY other = DivisorClassY{-1, -1} + sigma_pullback(n);
            const ChowClassY total = chow_mul(total_chern_line(n), total_chern_line(other));
            const auto c = chern_of_induced(n);
            CHECK(c.rank == 2);
            CHECK(c.total() == total);
            CHECK(c.c1.symmetric());
        }
}

TEST_CASE("twist examples")
{
    CHECK(twist({2, {-2, -2}, 2}, {1, 1}) == ChernData{2, {0, 0}, 0});
    const ChernData c{2, {3, -1}, 7};
    CHECK(twist(c, {0, 0}) == c);
    // c2' = 0 + (-1,-1).(1,1) + (1,1)^2 = 0, so Delta stays -2
    CHECK(twist({2, {-1, -1}, 0}, {1, 1}) == ChernData{2, {1, 1}, 0});
    CHECK(discriminant(twist({2, {-1, -1}, 0}, {1, 1})) == -2);
    CHECK_THROWS_AS(twist({1, {0, 0}, 0}, {1, 1}), std::invalid_argument);
}

TEST_CASE("twist agrees with tensoring the Chern roots")
{
    // For a split bundle O(x) + O(y), twisting by T gives O(x+T) + O(y+T).
    testgen::Gen g(31);
    for (int k = 0; k < 300; ++k) {
        const auto x = g.divisor(), y = g.divisor(), t = g.divisor();
        const ChernData split = direct_sum(ChernData::line(x), ChernData::line(y));
        CHECK(twist(split, t) == direct_sum(ChernData::line(x + t), ChernData::line(y + t)));
    }
}

TEST_CASE("normalize_c1")
{
    const auto r = normalize_c1({2, {2, 2}, 5});
    CHECK(r.n == -2);
    CHECK(r.chern.c1 == DivisorClassY{-2, -2});
    CHECK(r.chern == twist(twist({2, {2, 2}, 5}, {-1, -1}), {-1, -1}));

    const auto id = normalize_c1({2, {-1, -1}, 0});
    CHECK(id.n == 0);
    CHECK(id.chern == ChernData{2, {-1, -1}, 0});

    CHECK_THROWS_AS(normalize_c1({2, {1, 0}, 0}), std::invalid_argument);
}

TEST_CASE("normalize_c1 is idempotent and its twist count inverts")
{
    testgen::Gen g(32);
    for (int k = 0; k < 300; ++k) {
        const auto s = g.in(-9, 9);
        const ChernData c{2, {s, s}, g.in(-30, 30)};
        const auto once = normalize_c1(c);
        const auto twice = normalize_c1(once.chern);
        CHECK(twice.n == 0);
        CHECK(twice.chern == once.chern);
        CHECK(twist(once.chern, -once.n * kPolarizationH) == c);
        CHECK(discriminant(once.chern) == discriminant(c));
    }
}

TEST_CASE("check_bogomolov")
{
    CHECK(check_bogomolov({2, {-1, -1}, 0}));
    CHECK(discriminant({2, {-1, -1}, 0}) == -2);
    CHECK_FALSE(check_bogomolov({2, {-2, -2}, 1}));
    for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b) {
            CHECK(check_bogomolov(chern_of_induced({a, b})));
            const std::int64_t closed = 4 * (a * a - a + b * b - b) - 2 * (a + b - 1) * (a + b - 1);
            CHECK(discriminant(chern_of_induced({a, b})) == closed);
        }
}

TEST_CASE("minimal discriminant set matches brute force")
{
    // Delta(A (x) N) = 2(a - b)^2 - 2, computed here from the two summands
    // directly: minimal exactly on the diagonal a = b.
    std::set<std::pair<int, int>> minimal, expected;
    for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b) {
            const DivisorClassY n{a, b};
            const DivisorClassY m = DivisorClassY{-1, -1} + sigma_pullback(n);
            const std::int64_t c1sq = intersect(n + m, n + m);
            if (4 * intersect(n, m) - c1sq == -2) expected.insert({a, b});
            if (discriminant(chern_of_induced(n)) == -2) minimal.insert({a, b});
        }
    CHECK(minimal == expected);
    CHECK(minimal.size() == 11);
    for (const auto& [a, b] : minimal) CHECK(a == b);
}

TEST_CASE("slope_gap_witness")
{
    const auto a = chern_of_induced({0, 0});
    CHECK(slope_gap_witness({0, 0}, a) == Rational(1));
    CHECK(slope_gap_witness({-1, -1}, {2, {-2, -2}, 2}) == Rational(0));
    for (int x = -5; x <= 5; ++x)
        for (int y = -5; y <= 5; ++y) CHECK(slope_gap_witness({x, y}, chern_of_induced({x, y})) == Rational(1));
}
