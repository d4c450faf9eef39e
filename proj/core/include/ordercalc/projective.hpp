#pragma once

// Points and lines of the projective plane with exact coordinates.
// Rational points and lines are stored as primitive integer triples whose
// first nonzero entry is positive, so projective equality is coordinate
// equality. Points over Q(sqrt d) are scaled so their first nonzero entry is 1.

#include <array>
#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ordercalc/quad_scalar.hpp"

namespace ordercalc {

using Vec3 = std::array<BigInt, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Divides out the content and fixes the sign. Throws std::invalid_argument
/// on the zero vector.
Vec3 normalize_projective(Vec3 v);

Vec3 cross(const Vec3& a, const Vec3& b);
BigInt dot(const Vec3& a, const Vec3& b);
Vec3 mat_vec(const Mat3& m, const Vec3& v);
BigInt det3(const Mat3& m);
Mat3 adjugate(const Mat3& m);

template <class Tag>
class ProjVec {
public:
    ProjVec(const BigInt& x, const BigInt& y, const BigInt& z) : c_(normalize_projective({x, y, z})) {}
    explicit ProjVec(const Vec3& v) : c_(normalize_projective(v)) {}

    /// Clears denominators first.
    static ProjVec from_rationals(const BigRational& x, const BigRational& y, const BigRational& z)
    {
        const BigInt l = lcm(lcm(denominator(x), denominator(y)), denominator(z));
        auto scale = [&](const BigRational& q) { return BigInt(numerator(q) * (l / denominator(q))); };
        return ProjVec(scale(x), scale(y), scale(z));
    }

    const Vec3& coords() const { return c_; }
    const BigInt& operator[](std::size_t i) const { return c_[i]; }

    friend bool operator==(const ProjVec&, const ProjVec&) = default;
    friend auto operator<=>(const ProjVec& a, const ProjVec& b) { return a.c_ <=> b.c_; }

    std::string str() const
    {
        return "(" + c_[0].str() + "," + c_[1].str() + "," + c_[2].str() + ")";
    }

private:
    Vec3 c_;
};

struct PointTag {};
struct LineTag {};
using ProjPoint = ProjVec<PointTag>;
using ProjLine = ProjVec<LineTag>;

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);
std::ostream& operator<<(std::ostream& os, const ProjLine& l);

inline bool incident(const ProjLine& l, const ProjPoint& p) { return dot(l.coords(), p.coords()) == 0; }

/// Line through two distinct points. Throws std::invalid_argument if equal.
ProjLine join(const ProjPoint& a, const ProjPoint& b);
/// Intersection of two distinct lines.
ProjPoint meet(const ProjLine& a, const ProjLine& b);

/// Reads a point of one plane as a line of the dual plane and vice versa.
inline ProjLine dual_line(const ProjPoint& p) { return ProjLine(p.coords()); }
inline ProjPoint dual_point(const ProjLine& l) { return ProjPoint(l.coords()); }

/// Point with coordinates in Q(sqrt d), first nonzero coordinate scaled to 1.
class QuadPoint {
public:
    /// Throws std::invalid_argument on the zero vector.
    QuadPoint(QuadScalar x, QuadScalar y, QuadScalar z);
    explicit QuadPoint(const ProjPoint& p);

    const std::array<QuadScalar, 3>& coords() const { return c_; }
    bool is_rational() const;
    /// Throws std::domain_error if some coordinate is irrational.
    ProjPoint to_rational() const;

    friend bool operator==(const QuadPoint&, const QuadPoint&) = default;
    std::string str() const;

private:
    std::array<QuadScalar, 3> c_;
};

std::ostream& operator<<(std::ostream& os, const QuadPoint& p);

}  // namespace ordercalc
