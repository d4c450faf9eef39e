#pragma once

// Independent reference implementations shared by the unit tests and the
// acceptance binary. None of these call into the library's enumeration or
// rule tables.

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include <ordercalc/fibers.hpp>

#include "support/gen.hpp"

namespace oracle {

using ordercalc::Choice;
using ordercalc::ChoicePoint;
using ordercalc::Component;
using ordercalc::MarkedFiber;
using ordercalc::Orbit;
using ordercalc::Side;

/// Validity of a marked fiber, written from the definitions.
inline bool valid_marked_fiber(const MarkedFiber& f)
{
    int degree = 0;
    int nodes = 0;
    for (std::size_t i = 0; i < f.orbits.size(); ++i) {
        const Orbit& o = f.orbits[i];
        if (o.id != static_cast<int>(i)) return false;
        if (o.multiplicity < 1) return false;
        if (o.at_node && (!o.sigma_fixed || !f.singular)) return false;
        if (f.singular && o.sigma_fixed && !o.at_node) return false;
        nodes += o.at_node ? 1 : 0;
        degree += o.multiplicity * (o.sigma_fixed ? 1 : 2);
    }
    return degree == 4 && nodes <= 1;
}

using Pt = std::pair<int, Side>;

inline Side flip(Side s)
{
    return s == Side::Plus ? Side::Minus : s == Side::Minus ? Side::Plus : Side::Fixed;
}

/// All multisets of degree at most 2 over the orbit points with
/// c + sigma(c) = D-bar, filtered by the nodal-curve rules.
inline std::vector<Choice> brute_force_choices(const MarkedFiber& f)
{
    std::map<Pt, int> dbar;
    std::vector<Pt> pts;
    for (const Orbit& o : f.orbits) {
        if (o.sigma_fixed) {
            dbar[{o.id, Side::Fixed}] += o.multiplicity;
            pts.push_back({o.id, Side::Fixed});
        } else {
            dbar[{o.id, Side::Plus}] += o.multiplicity;
            dbar[{o.id, Side::Minus}] += o.multiplicity;
            pts.push_back({o.id, Side::Plus});
            pts.push_back({o.id, Side::Minus});
        }
    }
    auto node = [&f](int id) { return f.orbits[static_cast<std::size_t>(id)].at_node; };

    std::vector<std::vector<Pt>> candidates{{}};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        candidates.push_back({pts[i]});
        for (std::size_t j = i; j < pts.size(); ++j) candidates.push_back({pts[i], pts[j]});
    }

    std::set<Choice> out;
    for (const auto& cand : candidates) {
        std::map<Pt, int> sum;
        for (const Pt& p : cand) {
            ++sum[p];
            ++sum[{p.first, flip(p.second)}];
        }
        if (sum != dbar) continue;
        if (f.singular) {
            int on_f = 0, on_fprime = 0;
            bool bad = false;
            for (const Pt& p : cand) {
                if (node(p.first) || p.second == Side::Fixed) bad = true;
                on_f += p.second == Side::Plus ? 1 : 0;
                on_fprime += p.second == Side::Minus ? 1 : 0;
            }
            if (bad || on_f != 1 || on_fprime != 1) continue;
        }
        Choice c;
        for (const Pt& p : cand) {
            Component comp = Component::None;
            if (f.singular) comp = p.second == Side::Plus ? Component::F : Component::FPrime;
            c.points.push_back({p.first, p.second, comp});
        }
        std::sort(c.points.begin(), c.points.end());
        out.insert(c);
    }
    return {out.begin(), out.end()};
}

/// One random edit of the multiplicity, fixedness, node or singular data.
inline MarkedFiber perturb(MarkedFiber f, testgen::Gen& g)
{
    const int edit = static_cast<int>(g.in(0, 6));
    const auto pick = [&]() -> Orbit& {
        return f.orbits[static_cast<std::size_t>(g.in(0, static_cast<long long>(f.orbits.size()) - 1))];
    };
    switch (edit) {
    case 0: pick().multiplicity += 1; break;
    case 1: pick().multiplicity -= 1; break;
    case 2: pick().sigma_fixed ^= true; break;
    case 3: pick().at_node ^= true; break;
    case 4: f.singular = !f.singular; break;
    case 5: {
        Orbit o;
        o.id = static_cast<int>(f.orbits.size());
        o.multiplicity = static_cast<int>(g.in(1, 2));
        o.sigma_fixed = g.coin();
        f.orbits.push_back(o);
        break;
    }
    default:
        // move multiplicity between orbits, keeping the total when possible
        if (f.orbits.size() >= 2) {
            Orbit& a = f.orbits[0];
            Orbit& b = f.orbits[1];
            const int ka = a.sigma_fixed ? 1 : 2, kb = b.sigma_fixed ? 1 : 2;
            if (ka == kb && a.multiplicity > 1) {
                --a.multiplicity;
                ++b.multiplicity;
            } else {
                a.multiplicity += 1;
            }
        } else {
            pick().multiplicity += 2;
        }
        break;
    }
    return f;
}

/// Random marked fiber built from scratch; frequently invalid.
inline MarkedFiber random_marked_fiber(testgen::Gen& g)
{
    MarkedFiber f;
    f.singular = g.coin();
    const int n = static_cast<int>(g.in(1, 4));
    for (int i = 0; i < n; ++i) {
        Orbit o;
        o.id = i;
        o.multiplicity = static_cast<int>(g.in(1, 4));
        o.sigma_fixed = g.in(0, 2) == 0;
        o.at_node = o.sigma_fixed && g.in(0, 2) == 0;
        f.orbits.push_back(o);
    }
    return f;
}

}  // namespace oracle
