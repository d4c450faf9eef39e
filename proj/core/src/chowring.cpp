#include "ordercalc/chowring.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ordercalc {

std::ostream& operator<<(std::ostream& os, DivisorClassY d)
{
    return os << '(' << d.m << ',' << d.n << ')';
}

std::string to_string(DivisorClassY d)
{
    std::ostringstream ss;
    ss << d;
    return ss.str();
}

std::ostream& operator<<(std::ostream& os, const ChowClassY& c)
{
    return os << '(' << c.r << ", " << c.d << ", " << c.p << ')';
}

std::ostream& operator<<(std::ostream& os, const ChernData& c)
{
    return os << "{rank " << c.rank << ", c1 " << c.c1 << ", c2 " << c.c2 << '}';
}

ChowClassY chow_mul(const ChowClassY& x, const ChowClassY& y)
{
    return {
        x.r * y.r,
        x.r * y.d + y.r * x.d,
        x.r * y.p + y.r * x.p + intersect(x.d, y.d),
    };
}

ChowClassY chow_inverse(const ChowClassY& x)
{
    if (x.r != 1 && x.r != -1)
        throw std::domain_error("chow_inverse: degree-0 part is not a unit");
    // (u, d, p)(u, -d, q) = (1, 0, u(p + q) - d.d)  =>  q = u d.d - p
    return {x.r, -x.d, x.r * intersect(x.d, x.d) - x.p};
}

ChowClassY whitney_div(const ChowClassY& total_ambient, const ChowClassY& total_sub)
{
    if (total_sub.r != 1 && total_sub.r != -1)
        throw std::domain_error("whitney_div: divisor has non-unit degree-0 part");
    return chow_mul(total_ambient, chow_inverse(total_sub));
}

ChernData ChernData::make(std::int64_t rank, DivisorClassY c1, std::int64_t c2)
{
    if (rank < 1)
        throw std::invalid_argument("ChernData: rank must be at least 1");
    return {rank, c1, c2};
}

ChernData direct_sum(const ChernData& a, const ChernData& b)
{
    const ChowClassY t = chow_mul(a.total(), b.total());
    return {a.rank + b.rank, t.d, t.p};
}

std::int64_t euler_char(const ChernData& c)
{
    // (m,n).(m+2,n+2) = 2(mn + m + n) is always even.
    const std::int64_t twice = intersect(c.c1, c.c1 - kCanonicalY);
    return c.rank + twice / 2 - c.c2;
}

std::int64_t discriminant(const ChernData& c)
{
    return 4 * c.c2 - intersect(c.c1, c.c1);
}

Rational slope(const ChernData& c)
{
    if (c.rank < 1)
        throw std::invalid_argument("slope: rank must be at least 1");
    return Rational(intersect(c.c1, kPolarizationH), c.rank);
}

std::int64_t arithmetic_genus(DivisorClassY c)
{
    return 1 + intersect(c, c + kCanonicalY) / 2;
}

ChowClassY curve_sheaf_total(DivisorClassY curve, std::int64_t degree)
{
    const std::int64_t chi = degree + 1 - arithmetic_genus(curve);
    return {1, curve, intersect(curve, curve - kCanonicalY) / 2 - chi};
}

}  // namespace ordercalc
