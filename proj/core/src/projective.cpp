#include "ordercalc/projective.hpp"

#include <ostream>

namespace ordercalc {

Vec3 normalize_projective(Vec3 v)
{
    BigInt g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]));
    if (g == 0)
        throw std::invalid_argument("projective coordinates must not all vanish");
    for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

BigInt dot(const Vec3& a, const Vec3& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 mat_vec(const Mat3& m, const Vec3& v)
{
    return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

BigInt det3(const Mat3& m)
{
    return dot(m[0], cross(m[1], m[2]));
}

Mat3 adjugate(const Mat3& m)
{
    // columns of the adjugate are the cross products of row pairs
    const Vec3 c0 = cross(m[1], m[2]);
    const Vec3 c1 = cross(m[2], m[0]);
    const Vec3 c2 = cross(m[0], m[1]);
    return {Vec3{c0[0], c1[0], c2[0]}, Vec3{c0[1], c1[1], c2[1]}, Vec3{c0[2], c1[2], c2[2]}};
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const ProjLine& l) { return os << '[' << l.str() << ']'; }

ProjLine join(const ProjPoint& a, const ProjPoint& b)
{
    if (a == b) throw std::invalid_argument("join: points coincide");
    return ProjLine(cross(a.coords(), b.coords()));
}

ProjPoint meet(const ProjLine& a, const ProjLine& b)
{
    if (a == b) throw std::invalid_argument("meet: lines coincide");
    return ProjPoint(cross(a.coords(), b.coords()));
}

QuadPoint::QuadPoint(QuadScalar x, QuadScalar y, QuadScalar z) : c_{std::move(x), std::move(y), std::move(z)}
{
    std::size_t lead = 0;
    while (lead < 3 && c_[lead].is_zero()) ++lead;
    if (lead == 3)
        throw std::invalid_argument("QuadPoint: coordinates must not all vanish");
    const QuadScalar s = c_[lead];
    for (auto& q : c_) q /= s;
}

QuadPoint::QuadPoint(const ProjPoint& p)
    : QuadPoint(QuadScalar(BigRational(p[0])), QuadScalar(BigRational(p[1])), QuadScalar(BigRational(p[2])))
{
}

bool QuadPoint::is_rational() const
{
    return c_[0].is_rational() && c_[1].is_rational() && c_[2].is_rational();
}

ProjPoint QuadPoint::to_rational() const
{
    if (!is_rational())
        throw std::domain_error("QuadPoint: point is not rational");
    return ProjPoint::from_rationals(c_[0].a(), c_[1].a(), c_[2].a());
}

std::string QuadPoint::str() const
{
    return "(" + c_[0].str() + "," + c_[1].str() + "," + c_[2].str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadPoint& p) { return os << p.str(); }

}  // namespace ordercalc
