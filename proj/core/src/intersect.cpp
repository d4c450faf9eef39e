#include "ordercalc/intersect.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ordercalc {

namespace {

constexpr std::array<Basis, kBasisSize> kAllBasis{Basis::PsiH, Basis::R1a, Basis::R1b, Basis::R2a,
                                                  Basis::R2b,  Basis::R3,  Basis::R4,  Basis::R5,
                                                  Basis::R6,   Basis::U1,  Basis::U2};

bool is_R1(Basis b) { return b == Basis::R1a || b == Basis::R1b; }
bool is_R2(Basis b) { return b == Basis::R2a || b == Basis::R2b; }
bool is_component(Basis b) { return is_R1(b) || is_R2(b); }
bool is_bitangent(Basis b) { return b >= Basis::R3 && b <= Basis::R6; }
bool is_U(Basis b) { return b == Basis::U1 || b == Basis::U2; }

std::size_t component_slot(Basis b)
{
    return static_cast<std::size_t>(b) - static_cast<std::size_t>(Basis::R1a);
}

// Psi_* of a basis divisor, as a dual-plane degree.
std::int64_t pushforward_degree(Basis b)
{
    if (is_component(b)) return kDualConicDegree;  // each section maps isomorphically
    if (is_bitangent(b)) return 4 * kBitangentDegree;
    throw std::logic_error("no pushforward rule for " + to_string(b));
}

std::int64_t to_integer(const Rational& r, const char* what)
{
    if (r.denominator() != 1) {
        std::ostringstream ss;
        ss << what << " is not an integer: " << r;
        throw std::logic_error(ss.str());
    }
    return r.numerator();
}

}  // namespace

std::string to_string(Basis b)
{
    static constexpr std::array<const char*, kBasisSize> names{"Psi^*h", "R1'", "R1''", "R2'", "R2''", "R3",
                                                               "R4",     "R5",  "R6",   "U1",  "U2"};
    return names.at(static_cast<std::size_t>(b));
}

RamExpr RamExpr::basis(Basis b, Rational c)
{
    RamExpr e;
    e[b] = c;
    return e;
}

RamExpr RamExpr::pullback(std::int64_t plane_degree)
{
    return basis(Basis::PsiH, Rational(plane_degree));
}

RamExpr& RamExpr::operator+=(const RamExpr& o)
{
    for (std::size_t i = 0; i < kBasisSize; ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

RamExpr& RamExpr::operator-=(const RamExpr& o)
{
    for (std::size_t i = 0; i < kBasisSize; ++i) coeff_[i] -= o.coeff_[i];
    return *this;
}

RamExpr operator*(Rational k, RamExpr a)
{
    for (auto& c : a.coeff_) c *= k;
    return a;
}

bool RamExpr::is_zero() const
{
    return std::all_of(coeff_.begin(), coeff_.end(), [](const Rational& c) { return c == Rational(0); });
}

std::string RamExpr::str() const
{
    std::ostringstream ss;
    bool first = true;
    for (Basis b : kAllBasis) {
        const Rational& c = (*this)[b];
        if (c == Rational(0)) continue;
        if (!first) ss << " + ";
        first = false;
        if (c != Rational(1)) ss << c << '*';
        ss << to_string(b);
    }
    if (first) ss << '0';
    return ss.str();
}

RamExpr R1() { return RamExpr::basis(Basis::R1a) + RamExpr::basis(Basis::R1b); }
RamExpr R2() { return RamExpr::basis(Basis::R2a) + RamExpr::basis(Basis::R2b); }

RamExpr Ri(int i)
{
    if (i < 3 || i > 6) throw std::out_of_range("Ri: index must be in 3..6");
    return RamExpr::basis(static_cast<Basis>(static_cast<std::size_t>(Basis::R3) + static_cast<std::size_t>(i - 3)));
}

RamExpr ramification_divisor()
{
    RamExpr r = R1() + R2();
    for (int i = 3; i <= 6; ++i) r += Ri(i);
    return r;
}

RamExpr canonical_hilb()
{
    return RamExpr::pullback(kPlaneCanonicalDegree) + ramification_divisor();
}

RuleTable::RuleTable()
{
    for (Basis c : {Basis::R1a, Basis::R1b, Basis::R2a, Basis::R2b}) {
        // -2 = C^2 + C.K, with C.K = k C^2 + (terms not involving C^2)
        const RamExpr K = canonical_hilb();
        Rational rest(0);
        for (Basis b : kAllBasis)
            if (b != c && K[b] != Rational(0)) rest += K[b] * basis_product(c, b).first;
        component_square_[component_slot(c)] = (Rational(-2) - rest) / (Rational(1) + K[c]);
    }
    closed_ = true;
}

std::pair<Rational, std::string> RuleTable::basis_product(Basis a, Basis b) const
{
    if (is_U(a) || is_U(b)) {
        // Psi^* E'dual = 2 R1 + U1 and Psi^* E-dual = 2 R2 + U2
        auto expand = [](Basis x) {
            if (x == Basis::U1) return RamExpr::pullback(kDualConicDegree) - Rational(2) * R1();
            if (x == Basis::U2) return RamExpr::pullback(kDualConicDegree) - Rational(2) * R2();
            return RamExpr::basis(x);
        };
        return {pairing(expand(a), expand(b)), "U = Psi^*(dual conic) - 2R"};
    }
    if (b < a) std::swap(a, b);

    if (a == Basis::PsiH && b == Basis::PsiH)
        return {Rational(8 * intersect_plane(1, 1)), "Psi^*x.Psi^*y = 8 x.y"};
    if (a == Basis::PsiH)
        return {Rational(intersect_plane(1, pushforward_degree(b))), "projection formula"};
    if (is_bitangent(a) || is_bitangent(b)) {
        // R_i = (1/2) Psi^* L_i
        const Basis other = is_bitangent(a) ? b : a;
        Rational v = Rational(1, 2) * basis_product(Basis::PsiH, other).first;
        return {v, "R_i = (1/2) Psi^*L_i"};
    }
    if ((is_R1(a) && is_R2(b)) || (is_R2(a) && is_R1(b)))
        return {Rational(0), "R1.R2 = 0"};
    if (a != b) return {Rational(0), "disjoint sections"};
    if (!closed_) throw std::logic_error("self-square of " + to_string(a) + " requested before adjunction");
    return {component_square_[component_slot(a)], "adjunction"};
}

Rational RuleTable::pairing(const RamExpr& x, const RamExpr& y, std::vector<AuditStep>* log) const
{
    Rational total(0);
    for (Basis a : kAllBasis) {
        if (x[a] == Rational(0)) continue;
        for (Basis b : kAllBasis) {
            if (y[b] == Rational(0)) continue;
            const auto [v, rule] = basis_product(a, b);
            const Rational term = x[a] * y[b] * v;
            total += term;
            if (log && term != Rational(0)) log->push_back({to_string(a), to_string(b), rule, term});
        }
    }
    return total;
}

Rational RuleTable::pullback_dot_Ri_by_projection(std::int64_t plane_degree, int i) const
{
    (void)Ri(i);
    return Rational(intersect_plane(plane_degree, 4 * kBitangentDegree));
}

Rational RuleTable::pullback_dot_Ri_by_substitution(std::int64_t plane_degree, int i) const
{
    (void)Ri(i);
    return Rational(1, 2) * pairing(RamExpr::pullback(plane_degree), RamExpr::pullback(kBitangentDegree));
}

Rational adjunction_solve(Basis component)
{
    if (!is_component(component))
        throw std::invalid_argument("adjunction_solve: " + to_string(component) + " is not a component of R1 or R2");
    const RuleTable t;
    return t.basis_product(component, component).first;
}

K2Audit canonical_audit()
{
    const RuleTable t;
    const RamExpr PK = RamExpr::pullback(kPlaneCanonicalDegree);
    const std::vector<RamExpr> parts{R1(), R2(), Ri(3), Ri(4), Ri(5), Ri(6)};

    K2Audit a;
    a.pullback = to_integer(t.pairing(PK, PK), "(Psi^*K)^2");
    a.cross = to_integer(Rational(2) * t.pairing(PK, ramification_divisor()), "2 Psi^*K.R");
    Rational sq(0), mixed(0);
    for (std::size_t j = 0; j < parts.size(); ++j) {
        sq += t.pairing(parts[j], parts[j]);
        for (std::size_t k = j + 1; k < parts.size(); ++k) mixed += Rational(2) * t.pairing(parts[j], parts[k]);
    }
    a.squares = to_integer(sq, "sum of squares");
    a.mixed = to_integer(mixed, "mixed terms");
    a.total = to_integer(t.pairing(canonical_hilb(), canonical_hilb()), "K^2");
    if (a.total != a.pullback + a.cross + a.squares + a.mixed)
        throw std::logic_error("K^2 audit does not add up");
    return a;
}

std::int64_t canonical_self_intersection()
{
    return canonical_audit().total;
}

Rational genus_of_pic(std::int64_t k2)
{
    const Rational g = Rational(1) - Rational(k2, 8);
    if (g.denominator() != 1)
        throw std::domain_error("K^2 = " + std::to_string(k2) + " gives a non-integral genus");
    return g;
}

StratumCensus census_of(const SpecialPoints& sp)
{
    return {static_cast<int>(sp.case4.size()), static_cast<int>(sp.case5.size()), static_cast<int>(sp.case7.size()),
            static_cast<int>(sp.case8.size()), 4};
}

std::array<std::int64_t, 8> stratum_euler(const StratumCensus& c)
{
    const StratumCensus g;
    if (c.case4 != g.case4 || c.case5 != g.case5 || c.case7 != g.case7 || c.case8 != g.case8 ||
        c.bitangents != g.bitangents)
        throw std::invalid_argument("stratum census is not that of a general-position pair");
    std::array<std::int64_t, 8> e{};
    e[3] = c.case4;
    e[4] = c.case5;
    e[6] = c.case7;
    e[7] = c.case8;
    // E'-dual loses its Case-5 and Case-7 points, E-dual its Case-8 and Case-7 points
    e[1] = 2 - (c.case5 + c.case7);
    e[5] = 2 - (c.case8 + c.case7);
    // each Case-4 point lies on two bitangents, Case-5 and Case-8 points on one
    e[2] = 2 * c.bitangents - (2 * c.case4 + c.case5 + c.case8);
    std::int64_t rest = 0;
    for (std::size_t i = 1; i < 8; ++i) rest += e[i];
    e[0] = 3 - rest;
    return e;
}

std::int64_t euler_cross_check(const StratumCensus& c, const std::function<int(StratumTag)>& fiber_size)
{
    const auto e = stratum_euler(c);
    std::int64_t sum = 0;
    for (StratumTag t : kAllStrata) {
        const int n = fiber_size ? fiber_size(t) : static_cast<int>(fiber(marked_fiber_of_stratum(t)).size());
        sum += static_cast<std::int64_t>(n) * e[static_cast<std::size_t>(index_of(t) - 1)];
    }
    return sum;
}

Rational genus_from_euler(std::int64_t e)
{
    const Rational g = Rational(1) - Rational(e, 4);
    if (g.denominator() != 1)
        throw std::domain_error("Euler characteristic " + std::to_string(e) + " gives a non-integral genus");
    return g;
}

std::vector<RamFactor> ramification_support()
{
    const RamExpr r = ramification_divisor();
    std::vector<RamFactor> out;
    for (Basis b : kAllBasis) {
        if (r[b] == Rational(0)) continue;
        if (is_R1(b)) out.push_back(RamFactor::TangentToEprime);
        else if (is_R2(b)) out.push_back(RamFactor::ExtraOverE);
        else if (is_bitangent(b)) out.push_back(RamFactor::Bitangent);
        else throw std::logic_error("unexpected basis element in R");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace ordercalc
