#include "ordercalc/order.hpp"

#include <sstream>
#include <stdexcept>

namespace ordercalc {

OrderValidation validate_order(const OrderData& o)
{
    OrderValidation v;
    if (o.e < 2) {
        v.violations.push_back("cyclic order e must be at least 2");
    }
    const DivisorClassY overlap = o.L + sigma_pullback(o.L);
    if (overlap != -o.D) {
        std::ostringstream ss;
        ss << "L + sigma^*L = " << overlap << " but -D = " << -o.D;
        v.violations.push_back(ss.str());
    }
    if (sigma_pullback(o.D) != o.D) {
        std::ostringstream ss;
        ss << "D = " << o.D << " is not sigma-invariant";
        v.violations.push_back(ss.str());
    }
    return v;
}

DivisorClassY canonical_twist(const OrderData& o)
{
    const OrderValidation v = validate_order(o);
    if (!v.ok())
        throw std::invalid_argument("canonical_twist: " + v.violations.front());
    return o.L + o.D + o.K_Y;
}

DivisorClassY canonical_twist_via_base(const OrderData& o)
{
    return o.L + (o.e - 1) * o.R + o.D + o.pullback_K_base;
}

bool is_del_pezzo(const OrderData& o)
{
    return is_ample(-canonical_twist(o));
}

ChernData chern_of_induced(DivisorClassY N, const OrderData& o)
{
    const DivisorClassY other = o.L + sigma_pullback(N);
    return {2, N + other, intersect(N, other)};
}

ChernData twist(const ChernData& c, DivisorClassY T)
{
    if (c.rank != 2)
        throw std::invalid_argument("twist: rank-2 data required");
    return {2, c.c1 + 2 * T, c.c2 + intersect(c.c1, T) + intersect(T, T)};
}

TwistResult normalize_c1(const ChernData& c, DivisorClassY H)
{
    if (c.rank != 2)
        throw std::invalid_argument("normalize_c1: rank-2 data required");
    if (!c.c1.symmetric())
        throw std::invalid_argument("normalize_c1: c1 = " + to_string(c.c1) +
                                    " is not of the form (k,k)");
    const std::int64_t k = c.c1.m;
    // k + 2n in {-2, -1}
    std::int64_t num = -1 - k;
    std::int64_t n = num >= 0 ? num / 2 : -((-num + 1) / 2);
    return {n, twist(c, n * H)};
}

bool check_bogomolov(const ChernData& c)
{
    return discriminant(c) >= -2;
}

Rational slope_gap_witness(DivisorClassY sub, const ChernData& amb)
{
    if (amb.rank != 2)
        throw std::invalid_argument("slope_gap_witness: ambient must have rank 2");
    return slope(ChernData::line(sub)) - slope(amb);
}

}  // namespace ordercalc
