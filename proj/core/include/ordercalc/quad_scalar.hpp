#pragma once

#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordercalc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// a + b sqrt(d) with a, b rational and d a non-square integer. Rational
/// values carry d = 0. Mixing two different radicals throws std::domain_error.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(BigRational a);  // NOLINT: implicit from rationals is intended
    QuadScalar(BigRational a, BigRational b, BigInt d);
    QuadScalar(long long a) : QuadScalar(BigRational(a)) {}  // NOLINT

    const BigRational& a() const { return a_; }
    const BigRational& b() const { return b_; }
    const BigInt& d() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadScalar operator-() const { return {-a_, -b_, d_}; }
    QuadScalar& operator+=(const QuadScalar& o);
    QuadScalar& operator-=(const QuadScalar& o);
    QuadScalar& operator*=(const QuadScalar& o);
    /// Throws std::domain_error on division by zero.
    QuadScalar& operator/=(const QuadScalar& o);

    friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
    friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
    friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
    friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }

    /// a - b sqrt(d)
    QuadScalar conjugate() const { return {a_, -b_, d_}; }
    /// x * conjugate(x), always rational.
    BigRational norm() const;

    friend bool operator==(const QuadScalar& x, const QuadScalar& y);

    std::string str() const;

private:
    static BigInt common_radical(const QuadScalar& x, const QuadScalar& y);

    BigRational a_{0};
    BigRational b_{0};
    BigInt d_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadScalar& q);

struct SquareSplit {
    BigInt root;     // n = root^2 * core (for n >= 0)
    BigInt core;
};

/// Splits |n| into root^2 * core by trial division over primes below 20000
/// followed by a perfect-square test of the cofactor. The core is squarefree
/// whenever the cofactor left after trial division is below 8e12.
/// The sign of n is kept on core.
SquareSplit square_split(const BigInt& n);

/// Exact square root of a rational in Q or Q(sqrt d).
QuadScalar sqrt_rational(const BigRational& q);

bool is_perfect_square(const BigInt& n);

}  // namespace ordercalc
