#include "ordercalc/quad_scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ordercalc {

namespace {

constexpr unsigned kTrialBound = 20000;

const std::vector<unsigned>& small_primes()
{
    static const std::vector<unsigned> primes = [] {
        std::vector<bool> composite(kTrialBound, false);
        std::vector<unsigned> out;
        for (unsigned i = 2; i < kTrialBound; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = static_cast<unsigned long>(i) * i; j < kTrialBound; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

}  // namespace

bool is_perfect_square(const BigInt& n)
{
    if (n < 0) return false;
    const BigInt r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

SquareSplit square_split(const BigInt& n)
{
    if (n == 0) return {0, 0};
    BigInt rest = abs(n);
    BigInt root = 1;
    BigInt core = 1;
    for (unsigned p : small_primes()) {
        const BigInt pp = BigInt(p) * p;
        if (pp > rest) break;
        while (rest % pp == 0) {
            rest /= pp;
            root *= p;
        }
        if (rest % p == 0) {
            rest /= p;
            core *= p;
        }
    }
    if (is_perfect_square(rest)) {
        root *= boost::multiprecision::sqrt(rest);
    } else {
        core *= rest;
    }
    if (n < 0) core = -core;
    return {root, core};
}

QuadScalar sqrt_rational(const BigRational& q)
{
    if (q == 0) return QuadScalar{};
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    const SquareSplit s = square_split(num * den);
    const BigRational coeff(s.root, den);
    if (s.core == 1) return QuadScalar(coeff);
    return QuadScalar(0, coeff, s.core);
}

QuadScalar::QuadScalar(BigRational a) : a_(std::move(a)) {}

QuadScalar::QuadScalar(BigRational a, BigRational b, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d))
{
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    if (d_ == 0 || d_ == 1 || is_perfect_square(d_))
        throw std::domain_error("QuadScalar: radicand must be a non-square integer");
}

BigInt QuadScalar::common_radical(const QuadScalar& x, const QuadScalar& y)
{
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_)
        throw std::domain_error("QuadScalar: mixing sqrt(" + x.d_.str() + ") and sqrt(" +
                                y.d_.str() + ")");
    return x.d_;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o)
{
    const BigInt d = common_radical(*this, o);
    *this = QuadScalar(a_ + o.a_, b_ + o.b_, d);
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o)
{
    const BigInt d = common_radical(*this, o);
    *this = QuadScalar(a_ - o.a_, b_ - o.b_, d);
    return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o)
{
    const BigInt d = common_radical(*this, o);
    BigRational a = a_ * o.a_ + b_ * o.b_ * BigRational(d);
    BigRational b = a_ * o.b_ + b_ * o.a_;
    *this = QuadScalar(std::move(a), std::move(b), d);
    return *this;
}

BigRational QuadScalar::norm() const
{
    return a_ * a_ - b_ * b_ * BigRational(d_);
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o)
{
    if (o.is_zero())
        throw std::domain_error("QuadScalar: division by zero");
    const BigRational n = o.norm();
    // n != 0 because d is not a square
    QuadScalar inv(o.a_ / n, -o.b_ / n, o.d_);
    return *this *= inv;
}

bool operator==(const QuadScalar& x, const QuadScalar& y)
{
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.b_ == 0 || x.d_ == y.d_;
}

std::string QuadScalar::str() const
{
    std::ostringstream ss;
    if (b_ == 0) {
        ss << a_;
        return ss.str();
    }
    if (a_ != 0) ss << a_ << (b_ > 0 ? "+" : "-");
    else if (b_ < 0) ss << "-";
    const BigRational mag = b_ > 0 ? b_ : BigRational(-b_);
    if (mag != 1) ss << mag << "*";
    ss << "sqrt(" << d_ << ")";
    return ss.str();
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& q)
{
    return os << q.str();
}

}  // namespace ordercalc
