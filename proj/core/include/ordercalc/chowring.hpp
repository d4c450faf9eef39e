#pragma once

// Truncated Chow ring of Y = P1 x P1: divisor classes, total Chern classes,
// Riemann-Roch, slope and discriminant. Everything is exact integer or
// rational arithmetic.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/rational.hpp>

namespace ordercalc {

using Rational = boost::rational<std::int64_t>;

/// Class of O_Y(m, n) in Pic Y = Z + Z.
struct DivisorClassY {
    std::int64_t m = 0;
    std::int64_t n = 0;

    constexpr DivisorClassY() = default;
    constexpr DivisorClassY(std::int64_t m_, std::int64_t n_) : m(m_), n(n_) {}

    constexpr DivisorClassY operator+(DivisorClassY o) const { return {m + o.m, n + o.n}; }
    constexpr DivisorClassY operator-(DivisorClassY o) const { return {m - o.m, n - o.n}; }
    constexpr DivisorClassY operator-() const { return {-m, -n}; }
    constexpr DivisorClassY& operator+=(DivisorClassY o) { m += o.m; n += o.n; return *this; }
    constexpr DivisorClassY& operator-=(DivisorClassY o) { m -= o.m; n -= o.n; return *this; }
    friend constexpr DivisorClassY operator*(std::int64_t k, DivisorClassY d) { return {k * d.m, k * d.n}; }

    constexpr bool symmetric() const { return m == n; }

    friend constexpr auto operator<=>(const DivisorClassY&, const DivisorClassY&) = default;
};

std::ostream& operator<<(std::ostream& os, DivisorClassY d);
std::string to_string(DivisorClassY d);

// Fixed classes of the ambient surface.
inline constexpr DivisorClassY kFiberF1{1, 0};
inline constexpr DivisorClassY kFiberF2{0, 1};
inline constexpr DivisorClassY kPolarizationH{1, 1};
inline constexpr DivisorClassY kCanonicalY{-2, -2};

/// Intersection pairing; f1^2 = f2^2 = 0, f1.f2 = 1.
constexpr std::int64_t intersect(DivisorClassY a, DivisorClassY b) { return a.m * b.n + b.m * a.n; }

/// Pairing on Pic P2 = Z h with h.h = 1.
constexpr std::int64_t intersect_plane(std::int64_t a, std::int64_t b) { return a * b; }

/// The covering involution swaps the two rulings.
constexpr DivisorClassY sigma_pullback(DivisorClassY a) { return {a.n, a.m}; }

constexpr bool is_ample(DivisorClassY a) { return a.m > 0 && a.n > 0; }

/// r + d + p.[pt], truncated above degree 2.
struct ChowClassY {
    std::int64_t r = 0;
    DivisorClassY d{};
    std::int64_t p = 0;

    friend constexpr bool operator==(const ChowClassY&, const ChowClassY&) = default;
};

std::ostream& operator<<(std::ostream& os, const ChowClassY& c);

inline constexpr ChowClassY kChowUnit{1, {0, 0}, 0};

ChowClassY chow_mul(const ChowClassY& x, const ChowClassY& y);

/// Solves chow_mul(total_sub, q) = total_ambient for q.
/// Throws std::domain_error unless total_sub has degree-0 part +1 or -1.
ChowClassY whitney_div(const ChowClassY& total_ambient, const ChowClassY& total_sub);

/// Truncated inverse of a class with unit degree-0 part.
ChowClassY chow_inverse(const ChowClassY& x);

/// Total Chern class of the line bundle O_Y(d).
constexpr ChowClassY total_chern_line(DivisorClassY d) { return {1, d, 0}; }

/// (rank, c1, c2) of a coherent sheaf on Y.
struct ChernData {
    std::int64_t rank = 1;
    DivisorClassY c1{};
    std::int64_t c2 = 0;

    /// Throws std::invalid_argument when rank < 1.
    static ChernData make(std::int64_t rank, DivisorClassY c1, std::int64_t c2);
    static ChernData line(DivisorClassY d) { return {1, d, 0}; }

    ChowClassY total() const { return {1, c1, c2}; }

    friend bool operator==(const ChernData&, const ChernData&) = default;
};

std::ostream& operator<<(std::ostream& os, const ChernData& c);

/// Chern data of a direct sum (Whitney product of the totals).
ChernData direct_sum(const ChernData& a, const ChernData& b);

/// Riemann-Roch with chi(O_Y) = 1: rank + c1.(c1 - K)/2 - c2.
std::int64_t euler_char(const ChernData& c);

/// 4 c2 - c1.c1.
std::int64_t discriminant(const ChernData& c);

/// c1.H / rank with H = (1,1).
Rational slope(const ChernData& c);

/// Total Chern class of a rank-0 sheaf N pushed forward from a smooth
/// curve of class `curve` on Y, with deg N = `degree`. The genus comes from
/// adjunction, and c2 from Riemann-Roch: c2 = curve.(curve - K)/2 - chi(N).
ChowClassY curve_sheaf_total(DivisorClassY curve, std::int64_t degree);

/// Arithmetic genus of a curve of class c via adjunction.
std::int64_t arithmetic_genus(DivisorClassY c);

}  // namespace ordercalc
