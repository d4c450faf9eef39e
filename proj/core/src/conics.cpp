#include "ordercalc/conics.hpp"

#include <algorithm>
#include <sstream>

namespace ordercalc {

namespace {

Mat3 normalize_matrix(Mat3 m)
{
    BigInt g = 0;
    for (const auto& row : m)
        for (const auto& x : row) g = gcd(g, abs(x));
    if (g == 0) throw GeometryError(GeometryError::Kind::SingularConic, "conic matrix is zero");
    bool flip = false;
    for (const auto& row : m) {
        auto it = std::find_if(row.begin(), row.end(), [](const BigInt& x) { return x != 0; });
        if (it != row.end()) {
            flip = *it < 0;
            break;
        }
    }
    for (auto& row : m)
        for (auto& x : row) {
            x /= g;
            if (flip) x = -x;
        }
    return m;
}

QuadScalar qform(const Mat3& m, const std::array<QuadScalar, 3>& x)
{
    QuadScalar s;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            s += x[i] * QuadScalar(BigRational(m[i][j])) * x[j];
    return s;
}

BigInt bilinear(const Mat3& m, const Vec3& x, const Vec3& y)
{
    return dot(x, mat_vec(m, y));
}

bool is_zero(const Vec3& v)
{
    return v[0] == 0 && v[1] == 0 && v[2] == 0;
}

bool is_diagonal(const Mat3& m)
{
    return m[0][1] == 0 && m[0][2] == 0 && m[1][2] == 0;
}

QuadPoint affine_combination(const Vec3& p, const QuadScalar& t, const Vec3& r)
{
    std::array<QuadScalar, 3> c;
    for (std::size_t i = 0; i < 3; ++i) c[i] = QuadScalar(BigRational(p[i])) + t * QuadScalar(BigRational(r[i]));
    return QuadPoint(c[0], c[1], c[2]);
}

// Small integer directions in a fixed order, used by the representative search.
std::vector<Vec3> search_directions(int bound)
{
    std::vector<Vec3> out;
    for (int a = -bound; a <= bound; ++a)
        for (int b = -bound; b <= bound; ++b)
            for (int c = -bound; c <= bound; ++c)
                if (a != 0 || b != 0 || c != 0) out.push_back({a, b, c});
    std::stable_sort(out.begin(), out.end(), [](const Vec3& x, const Vec3& y) {
        return abs(x[0]) + abs(x[1]) + abs(x[2]) < abs(y[0]) + abs(y[1]) + abs(y[2]);
    });
    return out;
}

// Second intersection of the line through p0 in direction r with the conic.
std::optional<ProjPoint> reparametrize(const Conic& c, const ProjPoint& p0, const Vec3& r)
{
    const Mat3& m = c.matrix();
    const BigInt q = bilinear(m, r, r);
    const BigInt b = bilinear(m, p0.coords(), r);
    Vec3 v;
    for (std::size_t i = 0; i < 3; ++i) v[i] = q * p0[i] - 2 * b * r[i];
    if (is_zero(v)) return std::nullopt;
    return ProjPoint(v);
}

std::vector<ProjPoint> common_tangents(const ConicPair& pair)
{
    const Mat3& a = pair.E_dual.matrix();
    const Mat3& b = pair.Eprime_dual.matrix();
    if (!is_diagonal(a) || !is_diagonal(b))
        throw GeometryError(GeometryError::Kind::Unsupported,
                            "common tangents are only computed for diagonal pairs");
    // squares of the line coordinates solve two linear equations
    Vec3 sq = cross(Vec3{a[0][0], a[1][1], a[2][2]}, Vec3{b[0][0], b[1][1], b[2][2]});
    sq = normalize_projective(sq);
    if (sq[0] < 0 || sq[1] < 0 || sq[2] < 0)
        throw GeometryError(GeometryError::Kind::Unsupported, "common tangents are not real");
    BigInt lead = 0;
    for (const auto& x : sq)
        if (x != 0) {
            lead = x;
            break;
        }
    Vec3 root;
    for (std::size_t i = 0; i < 3; ++i) {
        const BigInt s = sq[i] * lead;
        if (!is_perfect_square(s))
            throw GeometryError(GeometryError::Kind::Unsupported, "common tangents are irrational");
        root[i] = boost::multiprecision::sqrt(s);
    }
    std::vector<ProjPoint> out;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            ProjPoint p(root[0], s1 * root[1], s2 * root[2]);
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        }
    return out;
}

template <class Gen>
ProjPoint first_in_stratum(const ConicPair& pair, StratumTag want, Gen&& candidates)
{
    for (const ProjPoint& p : candidates()) {
        try {
            if (classify_point(p, pair).tag == want) return p;
        } catch (const GeometryError&) {
        }
    }
    throw GeometryError(GeometryError::Kind::Unsupported, "no rational representative found for " + to_string(want));
}

}  // namespace

std::string_view to_string(GeometryError::Kind k)
{
    switch (k) {
    case GeometryError::Kind::SingularConic: return "singular-conic";
    case GeometryError::Kind::NonIncidentBasePoint: return "non-incident-base-point";
    case GeometryError::Kind::CoincidentPoints: return "coincident-points";
    case GeometryError::Kind::IdenticalConics: return "identical-conics";
    case GeometryError::Kind::CollinearBasePoints: return "collinear-base-points";
    case GeometryError::Kind::TangentialBasePoint: return "tangential-base-point";
    case GeometryError::Kind::IllegalIncidence: return "illegal-incidence";
    case GeometryError::Kind::Unsupported: return "unsupported";
    }
    return "unknown";
}

Conic::Conic(const Mat3& m)
{
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (m[i][j] != m[j][i])
                throw std::invalid_argument("conic matrix must be symmetric");
    if (det3(m) == 0)
        throw GeometryError(GeometryError::Kind::SingularConic, "conic matrix is singular");
    m_ = normalize_matrix(m);
}

Conic Conic::diagonal(long long a, long long b, long long c)
{
    return Conic(Mat3{Vec3{a, 0, 0}, Vec3{0, b, 0}, Vec3{0, 0, c}});
}

bool Conic::contains(const QuadPoint& p) const
{
    return qform(m_, p.coords()).is_zero();
}

std::string Conic::str() const
{
    std::ostringstream ss;
    ss << '[';
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) ss << ';';
        ss << m_[i][0] << ',' << m_[i][1] << ',' << m_[i][2];
    }
    ss << ']';
    return ss.str();
}

Conic dual_conic(const Conic& c)
{
    return Conic(adjugate(c.matrix()));
}

bool tangency(const ProjLine& l, const Conic& c)
{
    return bilinear(adjugate(c.matrix()), l.coords(), l.coords()) == 0;
}

ProjLine tangent_line_at(const ProjPoint& p, const Conic& c)
{
    if (!c.contains(p))
        throw std::invalid_argument("tangent_line_at: " + p.str() + " is not on the conic");
    return ProjLine(mat_vec(c.matrix(), p.coords()));
}

ProjPoint tangency_point(const ProjLine& l, const Conic& c)
{
    if (!tangency(l, c))
        throw std::invalid_argument("tangency_point: line is not tangent");
    return ProjPoint(mat_vec(adjugate(c.matrix()), l.coords()));
}

std::vector<IntersectionPoint> line_conic_intersection(const ProjLine& l, const Conic& c)
{
    // two points spanning l
    std::vector<Vec3> span;
    for (std::size_t i = 0; i < 3 && span.size() < 2; ++i) {
        Vec3 e{0, 0, 0};
        e[i] = 1;
        Vec3 v = cross(l.coords(), e);
        if (is_zero(v)) continue;
        if (!span.empty() && is_zero(cross(span.front(), v))) continue;
        span.push_back(v);
    }
    const Vec3& p = span[0];
    const Vec3& r = span[1];
    const Mat3& m = c.matrix();
    const BigRational A(bilinear(m, p, p));
    const BigRational B(bilinear(m, p, r));
    const BigRational C(bilinear(m, r, r));
    // Q(p + t r) = A + 2Bt + Ct^2
    std::vector<IntersectionPoint> out;
    if (C != 0) {
        const BigRational disc = B * B - A * C;
        if (disc == 0) {
            out.push_back({affine_combination(p, QuadScalar(-B / C), r), 2});
        } else {
            const QuadScalar root = sqrt_rational(disc);
            out.push_back({affine_combination(p, (QuadScalar(-B) + root) / QuadScalar(C), r), 1});
            out.push_back({affine_combination(p, (QuadScalar(-B) - root) / QuadScalar(C), r), 1});
        }
        return out;
    }
    const QuadPoint at_r(ProjPoint{r});
    if (B == 0) {
        if (A == 0) throw std::logic_error("line_conic_intersection: line lies on a smooth conic");
        out.push_back({at_r, 2});
        return out;
    }
    out.push_back({at_r, 1});
    out.push_back({affine_combination(p, QuadScalar(-A / (2 * B)), r), 1});
    return out;
}

ConicPair build_pair(const Conic& E, const Conic& Eprime, const std::array<ProjPoint, 4>& base_points)
{
    using K = GeometryError::Kind;
    if (E == Eprime) throw GeometryError(K::IdenticalConics, "E and E' coincide");
    for (const auto& b : base_points) {
        if (!E.contains(b)) throw GeometryError(K::NonIncidentBasePoint, "base point " + b.str() + " is not on E");
        if (!Eprime.contains(b))
            throw GeometryError(K::NonIncidentBasePoint, "base point " + b.str() + " is not on E'");
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (base_points[i] == base_points[j])
                throw GeometryError(K::CoincidentPoints, "base point " + base_points[i].str() + " repeats");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            for (std::size_t k = j + 1; k < 4; ++k)
                if (det3(Mat3{base_points[i].coords(), base_points[j].coords(), base_points[k].coords()}) == 0)
                    throw GeometryError(K::CollinearBasePoints, "three base points are collinear");
    for (const auto& b : base_points)
        if (tangent_line_at(b, E) == tangent_line_at(b, Eprime))
            throw GeometryError(K::TangentialBasePoint, "E and E' are tangent at " + b.str());
    std::array<ProjLine, 4> bitangents{dual_line(base_points[0]), dual_line(base_points[1]),
                                       dual_line(base_points[2]), dual_line(base_points[3])};
    return ConicPair{E, Eprime, base_points, dual_conic(E), dual_conic(Eprime), bitangents};
}

std::string to_string(StratumTag t)
{
    return "Case" + std::to_string(index_of(t));
}

StratumTag stratum_from_index(int n)
{
    if (n < 1 || n > 8) throw std::out_of_range("stratum index must be in 1..8, got " + std::to_string(n));
    return static_cast<StratumTag>(n);
}

std::optional<StratumTag> stratum_from_incidence(bool tE, bool tEp, int k)
{
    if (!tE && !tEp && k == 0) return StratumTag::Case1;
    if (!tE && tEp && k == 0) return StratumTag::Case2;
    if (!tE && !tEp && k == 1) return StratumTag::Case3;
    if (!tE && !tEp && k == 2) return StratumTag::Case4;
    if (!tE && tEp && k == 1) return StratumTag::Case5;
    if (tE && !tEp && k == 0) return StratumTag::Case6;
    if (tE && tEp && k == 0) return StratumTag::Case7;
    if (tE && !tEp && k == 1) return StratumTag::Case8;
    return std::nullopt;
}

Stratum Stratum::from_tag(StratumTag t)
{
    Stratum s;
    s.tag = t;
    switch (t) {
    case StratumTag::Case1: break;
    case StratumTag::Case2: s.tangent_Eprime = true; break;
    case StratumTag::Case3: s.base_count = 1; break;
    case StratumTag::Case4: s.base_count = 2; break;
    case StratumTag::Case5: s.tangent_Eprime = true; s.base_count = 1; break;
    case StratumTag::Case6: s.tangent_E = true; break;
    case StratumTag::Case7: s.tangent_E = true; s.tangent_Eprime = true; break;
    case StratumTag::Case8: s.tangent_E = true; s.base_count = 1; break;
    }
    return s;
}

Stratum classify_point(const ProjPoint& p, const ConicPair& pair)
{
    const ProjLine l = dual_line(p);
    Stratum s;
    s.tangent_E = tangency(l, pair.E);
    s.tangent_Eprime = tangency(l, pair.Eprime);
    for (int i = 0; i < 4; ++i)
        if (incident(l, pair.base_points[static_cast<std::size_t>(i)])) s.base_points_on_line.push_back(i);
    s.base_count = static_cast<int>(s.base_points_on_line.size());
    const auto tag = stratum_from_incidence(s.tangent_E, s.tangent_Eprime, s.base_count);
    if (!tag) {
        std::ostringstream ss;
        ss << "point " << p << " has incidence (" << s.tangent_E << "," << s.tangent_Eprime << ","
           << s.base_count << "), which general position excludes";
        throw GeometryError(GeometryError::Kind::IllegalIncidence, ss.str());
    }
    s.tag = *tag;
    if (s.tangent_E) s.touch_E = tangency_point(l, pair.E);
    if (s.tangent_Eprime) s.touch_Eprime = tangency_point(l, pair.Eprime);
    return s;
}

SpecialPoints special_points(const ConicPair& pair)
{
    SpecialPoints sp;
    const auto& b = pair.base_points;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) sp.case4.push_back(dual_point(join(b[i], b[j])));
    for (const auto& x : b) {
        sp.case5.push_back(dual_point(tangent_line_at(x, pair.Eprime)));
        sp.case8.push_back(dual_point(tangent_line_at(x, pair.E)));
    }
    sp.case7 = common_tangents(pair);
    return sp;
}

std::array<ProjPoint, 8> stratum_representatives(const ConicPair& pair)
{
    const SpecialPoints sp = special_points(pair);
    const std::vector<Vec3> dirs = search_directions(3);

    auto plain = [&] {
        std::vector<ProjPoint> out;
        for (const auto& v : dirs) out.emplace_back(v);
        return out;
    };
    auto through_base = [&] {
        std::vector<ProjPoint> out;
        for (const auto& v : dirs) {
            const Vec3 l = cross(pair.base_points[0].coords(), v);
            if (!is_zero(l)) out.emplace_back(l);
        }
        return out;
    };
    auto tangents_of = [&](const Conic& c) {
        return [&pair, &dirs, &c] {
            std::vector<ProjPoint> out;
            for (const auto& v : dirs)
                if (auto q = reparametrize(c, pair.base_points[0], v)) out.push_back(dual_point(tangent_line_at(*q, c)));
            return out;
        };
    };

    if (sp.case4.empty() || sp.case5.empty() || sp.case7.empty() || sp.case8.empty())
        throw GeometryError(GeometryError::Kind::Unsupported, "special points missing");
    return {first_in_stratum(pair, StratumTag::Case1, plain),
            first_in_stratum(pair, StratumTag::Case2, tangents_of(pair.Eprime)),
            first_in_stratum(pair, StratumTag::Case3, through_base),
            sp.case4.front(),
            sp.case5.front(),
            first_in_stratum(pair, StratumTag::Case6, tangents_of(pair.E)),
            sp.case7.front(),
            sp.case8.front()};
}

}  // namespace ordercalc
