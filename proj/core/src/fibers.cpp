#include "ordercalc/fibers.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ordercalc {

namespace {

int slots_of(const Orbit& o)
{
    return o.sigma_fixed ? o.multiplicity / 2 : o.multiplicity;
}

Component component_for(Side s, bool singular)
{
    if (!singular) return Component::None;
    if (s == Side::Plus) return Component::F;
    if (s == Side::Minus) return Component::FPrime;
    return Component::None;
}

// Degenerations of the four generic choices, as signs on the two points of
// l_p meeting E' (slot 0 and slot 1).
constexpr std::array<std::array<Side, 2>, 4> kGenericChoices{{
    {Side::Plus, Side::Plus},
    {Side::Minus, Side::Minus},
    {Side::Plus, Side::Minus},
    {Side::Minus, Side::Plus},
}};

Choice image_of_generic(const MarkedFiber& f, const std::array<Side, 2>& signs)
{
    Choice c;
    std::size_t slot = 0;
    for (const Orbit& o : f.orbits) {
        const int k = slots_of(o);
        for (int i = 0; i < k; ++i, ++slot) {
            const Side s = o.sigma_fixed ? Side::Fixed : signs.at(slot);
            c.points.push_back({o.id, s, component_for(s, f.singular)});
        }
    }
    std::sort(c.points.begin(), c.points.end());
    return c;
}

struct Target {
    FiberKind kind;
    std::optional<Choice> choice;
};

bool same_target(const Target& t, const FiberPoint& p)
{
    return t.kind == p.kind && t.choice == p.choice;
}

}  // namespace

int MarkedFiber::degree() const
{
    int d = 0;
    for (const Orbit& o : orbits) d += o.multiplicity * (o.sigma_fixed ? 1 : 2);
    return d;
}

void MarkedFiber::validate() const
{
    int nodes = 0;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const Orbit& o = orbits[i];
        if (o.id != static_cast<int>(i)) throw std::invalid_argument("orbit ids must be 0..n-1 in order");
        if (o.multiplicity < 1) throw std::invalid_argument("orbit multiplicity must be positive");
        if (o.at_node) {
            if (!singular) throw std::invalid_argument("node orbit on a smooth curve");
            if (!o.sigma_fixed) throw std::invalid_argument("node orbit must be sigma-fixed");
            ++nodes;
        } else if (o.sigma_fixed && singular) {
            throw std::invalid_argument("sigma has no fixed points off the node of a nodal curve");
        }
    }
    if (nodes > 1) throw std::invalid_argument("more than one node orbit");
    if (degree() != 4)
        throw std::invalid_argument("marked divisor has degree " + std::to_string(degree()) + ", expected 4");
}

MarkedFiber canonical(MarkedFiber f)
{
    std::stable_sort(f.orbits.begin(), f.orbits.end(), [](const Orbit& a, const Orbit& b) {
        if (a.at_node != b.at_node) return a.at_node;
        if (a.sigma_fixed != b.sigma_fixed) return a.sigma_fixed;
        return a.multiplicity > b.multiplicity;
    });
    for (std::size_t i = 0; i < f.orbits.size(); ++i) f.orbits[i].id = static_cast<int>(i);
    return f;
}

MarkedFiber marked_fiber_of_stratum(StratumTag t)
{
    MarkedFiber f;
    auto add = [&f](int mult, bool fixed, bool node = false) {
        f.orbits.push_back({static_cast<int>(f.orbits.size()), mult, fixed, node});
    };
    switch (t) {
    case StratumTag::Case1: add(1, false); add(1, false); break;
    case StratumTag::Case2: add(2, false); break;
    case StratumTag::Case3: add(2, true); add(1, false); break;
    case StratumTag::Case4: add(2, true); add(2, true); break;
    case StratumTag::Case5: add(4, true); break;
    case StratumTag::Case6: f.singular = true; add(1, false); add(1, false); break;
    case StratumTag::Case7: f.singular = true; add(2, false); break;
    case StratumTag::Case8: f.singular = true; add(2, true, true); add(1, false); break;
    }
    return f;
}

MarkedFiber marked_fiber_of_stratum(const Stratum& s)
{
    return marked_fiber_of_stratum(s.tag);
}

MarkedFiber marked_fiber_geometric(const ProjPoint& p, const ConicPair& pair)
{
    const Stratum s = classify_point(p, pair);
    MarkedFiber f;
    f.singular = s.tangent_E;
    const std::optional<QuadPoint> node = s.touch_E ? std::optional<QuadPoint>(QuadPoint(*s.touch_E)) : std::nullopt;
    for (const IntersectionPoint& ip : line_conic_intersection(dual_line(p), pair.Eprime)) {
        Orbit o;
        o.sigma_fixed = pair.E.contains(ip.point);
        o.at_node = node && *node == ip.point;
        // a branch point pulls back with doubled multiplicity
        o.multiplicity = o.sigma_fixed ? 2 * ip.multiplicity : ip.multiplicity;
        f.orbits.push_back(o);
    }
    return canonical(std::move(f));
}

int Choice::count(int orbit, Side side) const
{
    return static_cast<int>(std::count_if(points.begin(), points.end(), [&](const ChoicePoint& p) {
        return p.orbit == orbit && p.side == side;
    }));
}

bool Choice::sigma_invariant() const
{
    for (const ChoicePoint& p : points)
        if (p.side == Side::Plus && count(p.orbit, Side::Plus) != count(p.orbit, Side::Minus)) return false;
    for (const ChoicePoint& p : points)
        if (p.side == Side::Minus && count(p.orbit, Side::Plus) != count(p.orbit, Side::Minus)) return false;
    return true;
}

std::string to_string(const Choice& c)
{
    std::ostringstream ss;
    ss << '{';
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const ChoicePoint& p = c.points[i];
        if (i) ss << ',';
        ss << 'x' << p.orbit;
        switch (p.side) {
        case Side::Plus: ss << '+'; break;
        case Side::Minus: ss << '-'; break;
        case Side::Fixed: break;
        }
        if (p.component == Component::F) ss << "@F";
        if (p.component == Component::FPrime) ss << "@F'";
    }
    ss << '}';
    return ss.str();
}

std::vector<Choice> enumerate_choices(const MarkedFiber& f)
{
    f.validate();
    // per-orbit options, combined as a product
    std::vector<std::vector<std::vector<ChoicePoint>>> options;
    for (const Orbit& o : f.orbits) {
        std::vector<std::vector<ChoicePoint>> opts;
        if (o.sigma_fixed) {
            if (o.multiplicity % 2 != 0) return {};
            if (o.at_node) return {};  // node-meeting pairings become extras
            opts.emplace_back(static_cast<std::size_t>(o.multiplicity / 2),
                              ChoicePoint{o.id, Side::Fixed, Component::None});
        } else {
            for (int k = 0; k <= o.multiplicity; ++k) {
                std::vector<ChoicePoint> v;
                for (int i = 0; i < k; ++i) v.push_back({o.id, Side::Plus, component_for(Side::Plus, f.singular)});
                for (int i = k; i < o.multiplicity; ++i)
                    v.push_back({o.id, Side::Minus, component_for(Side::Minus, f.singular)});
                opts.push_back(std::move(v));
            }
        }
        options.push_back(std::move(opts));
    }

    std::vector<Choice> out{Choice{}};
    for (const auto& opts : options) {
        std::vector<Choice> next;
        for (const Choice& partial : out)
            for (const auto& v : opts) {
                Choice c = partial;
                c.points.insert(c.points.end(), v.begin(), v.end());
                next.push_back(std::move(c));
            }
        out = std::move(next);
    }
    if (f.singular) {
        std::erase_if(out, [](const Choice& c) {
            int plus = 0, minus = 0, fixed = 0;
            for (const ChoicePoint& p : c.points) {
                plus += p.side == Side::Plus;
                minus += p.side == Side::Minus;
                fixed += p.side == Side::Fixed;
            }
            return !(plus == 1 && minus == 1 && fixed == 0);
        });
    }
    for (Choice& c : out) std::sort(c.points.begin(), c.points.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(FiberKind k)
{
    switch (k) {
    case FiberKind::StructurePlus: return "structure+";
    case FiberKind::StructureMinus: return "structure-";
    case FiberKind::ExtraF: return "extra-F";
    case FiberKind::ExtraFPrime: return "extra-F'";
    }
    return "unknown";
}

std::string to_string(RamFactor r)
{
    switch (r) {
    case RamFactor::TangentToEprime: return "tangent-to-E'";
    case RamFactor::ExtraOverE: return "extra-over-E";
    case RamFactor::Bitangent: return "bitangent";
    }
    return "unknown";
}

FiberGeometry geometry_of(const MarkedFiber& f)
{
    FiberGeometry g;
    g.tangent_E = f.singular;
    for (const Orbit& o : f.orbits) {
        if (o.sigma_fixed) ++g.base_count;
        if (slots_of(o) == 2) g.tangent_Eprime = true;
    }
    return g;
}

std::vector<RamFactor> ram_factors(const FiberPoint& pt, const MarkedFiber& f)
{
    const FiberGeometry g = geometry_of(f);
    std::vector<RamFactor> out;
    const bool extra = pt.kind == FiberKind::ExtraF || pt.kind == FiberKind::ExtraFPrime;
    if (extra) out.push_back(RamFactor::ExtraOverE);
    if (!extra && pt.choice && pt.choice->sigma_invariant() && g.tangent_Eprime)
        out.push_back(RamFactor::TangentToEprime);
    for (int i = 0; i < g.base_count; ++i) out.push_back(RamFactor::Bitangent);
    return out;
}

StratumTag infer_stratum(const MarkedFiber& f)
{
    f.validate();
    const FiberGeometry g = geometry_of(f);
    const auto tag = stratum_from_incidence(g.tangent_E, g.tangent_Eprime, g.base_count);
    if (!tag || marked_fiber_of_stratum(*tag) != f)
        throw std::invalid_argument("marked fiber does not belong to any stratum");
    return *tag;
}

int assign_ram(const FiberPoint& pt, const MarkedFiber& f, const Stratum& s)
{
    if (infer_stratum(f) != s.tag)
        throw std::invalid_argument("assign_ram: fiber does not match " + to_string(s.tag));
    int r = 1;
    for (RamFactor x : ram_factors(pt, f)) {
        (void)x;
        r *= 2;
    }
    return r;
}

std::vector<FiberPoint> fiber(const MarkedFiber& f)
{
    const StratumTag tag = infer_stratum(f);
    const Stratum s = Stratum::from_tag(tag);
    const std::vector<Choice> choices = enumerate_choices(f);

    std::vector<FiberPoint> pts;
    for (const Choice& c : choices) {
        pts.push_back({FiberKind::StructurePlus, c, 1, {}});
        pts.push_back({FiberKind::StructureMinus, c, 1, {}});
    }
    if (f.singular) {
        pts.push_back({FiberKind::ExtraF, std::nullopt, 1, {}});
        pts.push_back({FiberKind::ExtraFPrime, std::nullopt, 1, {}});
    }

    for (std::size_t n = 0; n < kGenericChoices.size(); ++n) {
        const Choice img = image_of_generic(f, kGenericChoices[n]);
        const bool admissible = std::binary_search(choices.begin(), choices.end(), img);
        for (const char structure : {'a', 'b'}) {
            Target t;
            if (admissible) {
                t = {structure == 'a' ? FiberKind::StructurePlus : FiberKind::StructureMinus, img};
            } else {
                const int plus = static_cast<int>(std::count_if(
                    img.points.begin(), img.points.end(), [](const ChoicePoint& p) { return p.side == Side::Plus; }));
                const int minus = static_cast<int>(std::count_if(
                    img.points.begin(), img.points.end(), [](const ChoicePoint& p) { return p.side == Side::Minus; }));
                t = {plus > minus ? FiberKind::ExtraF : FiberKind::ExtraFPrime, std::nullopt};
            }
            auto it = std::find_if(pts.begin(), pts.end(), [&](const FiberPoint& p) { return same_target(t, p); });
            if (it == pts.end()) throw std::logic_error("branch label lands outside the fiber");
            if (!it->branch_label.empty()) it->branch_label += '+';
            it->branch_label += std::to_string(n + 1) + structure;
        }
    }
    for (FiberPoint& p : pts) p.ram_index = assign_ram(p, f, s);
    return pts;
}

FiberPoint tau(const FiberPoint& pt)
{
    FiberPoint out = pt;
    if (pt.kind == FiberKind::StructurePlus) out.kind = FiberKind::StructureMinus;
    else if (pt.kind == FiberKind::StructureMinus) out.kind = FiberKind::StructurePlus;
    return out;
}

int expected_fiber_size(StratumTag t)
{
    static constexpr std::array<int, 8> table{8, 6, 4, 2, 2, 6, 4, 2};
    return table.at(static_cast<std::size_t>(index_of(t) - 1));
}

SurveyReport survey_points(const ConicPair& pair, const std::vector<ProjPoint>& points)
{
    SurveyReport r;
    r.samples = points.size();
    for (const ProjPoint& p : points) {
        const Stratum s = classify_point(p, pair);
        const MarkedFiber f = marked_fiber_geometric(p, pair);
        ++r.strata[s.tag];
        if (f != marked_fiber_of_stratum(s)) {
            r.mismatches.push_back(p.str() + ": marked fiber disagrees with " + to_string(s.tag));
            continue;
        }
        const std::vector<FiberPoint> pts = fiber(f);
        const int n = static_cast<int>(pts.size());
        ++r.fiber_sizes[n];
        if (n != expected_fiber_size(s.tag))
            r.mismatches.push_back(p.str() + ": fiber size " + std::to_string(n) + " in " + to_string(s.tag));
        const int deg = std::accumulate(pts.begin(), pts.end(), 0,
                                        [](int acc, const FiberPoint& q) { return acc + q.ram_index; });
        if (deg != 8) r.mismatches.push_back(p.str() + ": ramification sum " + std::to_string(deg));
    }
    return r;
}

std::vector<ProjPoint> sample_points(std::uint64_t count, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    auto coord = [&gen] { return static_cast<long long>(gen() >> 32) - (1LL << 31); };
    std::vector<ProjPoint> out;
    out.reserve(count);
    while (out.size() < count) {
        const long long x = coord(), y = coord(), z = coord();
        if (x == 0 && y == 0 && z == 0) continue;
        out.emplace_back(x, y, z);
    }
    return out;
}

SurveyReport survey(const ConicPair& pair, std::uint64_t sample_count, std::uint64_t seed)
{
    SurveyReport r = survey_points(pair, sample_points(sample_count, seed));
    r.seed = seed;
    return r;
}

}  // namespace ordercalc
