#include "ordercalc_cli/commands.hpp"

#include <limits>
#include <numeric>
#include <sstream>

#include <ordercalc/chowring.hpp>
#include <ordercalc/cohomology.hpp>
#include <ordercalc/intersect.hpp>
#include <ordercalc/order.hpp>

namespace ordercalc::cli {

namespace {

ojson rational_json(const Rational& r)
{
    if (r.denominator() == 1) return r.numerator();
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ojson divisor_json(DivisorClassY d)
{
    return ojson::array({d.m, d.n});
}

ojson chow_json(const ChowClassY& c)
{
    return ojson::array({c.r, divisor_json(c.d), c.p});
}

ojson ext_json(const ExtDims& e)
{
    return ojson::array({e.e0, e.e1, e.e2});
}

ojson coordinate_json(const BigInt& x)
{
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (x >= lo && x <= hi) return x.convert_to<long long>();
    return x.str();
}

ojson point_json(const ProjPoint& p)
{
    return ojson::array({coordinate_json(p[0]), coordinate_json(p[1]), coordinate_json(p[2])});
}

std::string side_name(Side s)
{
    switch (s) {
    case Side::Plus: return "plus";
    case Side::Minus: return "minus";
    case Side::Fixed: return "fixed";
    }
    return "?";
}

std::string component_name(Component c)
{
    switch (c) {
    case Component::None: return "";
    case Component::F: return "F";
    case Component::FPrime: return "F'";
    }
    return "?";
}

int ram_sum(const std::vector<FiberPoint>& pts)
{
    return std::accumulate(pts.begin(), pts.end(), 0, [](int a, const FiberPoint& p) { return a + p.ram_index; });
}

void add_geometry_checks(Report& r, const ConicPair& pair, std::uint64_t samples, std::uint64_t seed)
{
    static constexpr std::array<int, 8> kChoices{4, 3, 2, 1, 1, 2, 1, 0};
    const auto reps = stratum_representatives(pair);
    for (StratumTag t : kAllStrata) {
        const std::size_t k = static_cast<std::size_t>(index_of(t) - 1);
        const std::string tag = to_string(t);
        const Stratum s = classify_point(reps[k], pair);
        r.add(check("classify." + tag, "case headings: incidence of l_p", tag, to_string(s.tag)));
        const MarkedFiber geo = marked_fiber_geometric(reps[k], pair);
        r.add(check("marked_fiber." + tag, "geometric and combinatorial marked divisors agree", true,
                    geo == marked_fiber_of_stratum(t)));
        const auto pts = fiber(geo);
        r.add(check("fiber_count." + tag, "case tables: number of A-quotients with support C_p",
                    expected_fiber_size(t), pts.size()));
        r.add(check("choices." + tag, "case tables: choices of D-bar'", kChoices[k],
                    enumerate_choices(geo).size()));
        r.add(check("ram_sum." + tag, "Psi is an 8:1 cover", 8, ram_sum(pts)));
        bool involution = true;
        std::size_t fixed = 0;
        for (const auto& p : pts) {
            involution = involution && tau(tau(p)) == p;
            if (tau(p) == p) ++fixed;
        }
        r.add(check("tau." + tag, "tau is an involution fixing exactly the non-O_Y quotients",
                    ojson::array({true, geo.singular ? 2 : 0}), ojson::array({involution, fixed})));
    }
    const SurveyReport sv = survey(pair, samples, seed);
    r.add(check("generic_degree", "Psi is an 8:1 cover", samples, sv.fiber_sizes.count(8) ? sv.fiber_sizes.at(8) : 0));
    const SpecialPoints sp = special_points(pair);
    r.add(check("special_point_census", "general position: 6 + 4 + 4 + 4 special points",
                ojson::array({6, 4, 4, 4}),
                ojson::array({sp.case4.size(), sp.case5.size(), sp.case7.size(), sp.case8.size()})));
}

void add_intersection_checks(Report& r, const ConicPair& pair)
{
    const RuleTable t;
    const RamExpr PK = RamExpr::pullback(kPlaneCanonicalDegree);
    auto pr = [&t](const RamExpr& a, const RamExpr& b) { return rational_json(t.pairing(a, b)); };
    const std::string A = "final theorem proof: intersection bullets";
    r.add(check("K.K pullback", A, 72, pr(PK, PK)));
    r.add(check("Psi^*K.R1", A, -12, pr(PK, R1())));
    r.add(check("Psi^*K.R2", A, -12, pr(PK, R2())));
    for (int i = 3; i <= 6; ++i) r.add(check("Psi^*K.R" + std::to_string(i), A, -12, pr(PK, Ri(i))));
    r.add(check("R1.R2", A, 0, pr(R1(), R2())));
    for (int i = 3; i <= 6; ++i) {
        const std::string s = std::to_string(i);
        r.add(check("R1.R" + s, A, 2, pr(R1(), Ri(i))));
        r.add(check("R2.R" + s, A, 2, pr(R2(), Ri(i))));
        r.add(check("R" + s + "^2", A, 2, pr(Ri(i), Ri(i))));
        for (int j = i + 1; j <= 6; ++j)
            r.add(check("R" + s + ".R" + std::to_string(j), A, 2, pr(Ri(i), Ri(j))));
    }
    for (Basis c : {Basis::R1a, Basis::R1b, Basis::R2a, Basis::R2b})
        r.add(check("adjunction " + to_string(c), "adjunction on a genus-0 component", 0,
                    rational_json(adjunction_solve(c))));
    r.add(check("R1^2", A, 0, pr(R1(), R1())));
    r.add(check("R2^2", A, 0, pr(R2(), R2())));
    const K2Audit a = canonical_audit();
    r.add(check("K^2 audit", "72 - 144 + 8 + 56", ojson::array({72, -144, 8, 56}),
                ojson::array({a.pullback, a.cross, a.squares, a.mixed})));
    r.add(check("K^2", "K_Hilb^2 = -8", -8, a.total));
    r.add(check("genus of Pic A", "g(Pic A) = 2", 2, rational_json(genus_of_pic(a.total))));
    const std::int64_t e = euler_cross_check(census_of(special_points(pair)));
    r.add(check("Euler characteristic", "ruled surface over a genus-2 curve: 4(1-g)", -4, e));
    r.add(check("genus from Euler", "g(Pic A) = 2", 2, rational_json(genus_from_euler(e))));
}

void add_calculus_checks(Report& r)
{
    const OrderData o = OrderData::reference_instance();
    r.add(check("canonical twist", "omega_A = A (x) O_Y(-H)", divisor_json({-1, -1}),
                divisor_json(canonical_twist(o))));
    r.add(check("del Pezzo", "-omega_A twist is ample", true, is_del_pezzo(o)));
    r.add(check("order relation", "L + sigma^*L = -D", true, validate_order(o).ok()));

    const ChernData cA = chern_of_induced({0, 0}, o);
    r.add(check("c(A)", "c1(A) = (-1,-1), c2(A) = 0", ojson::array({divisor_json({-1, -1}), 0}),
                ojson::array({divisor_json(cA.c1), cA.c2})));
    r.add(check("Delta(A)", "the smallest value Delta = -2", -2, discriminant(cA)));
    r.add(check("Delta(A(-1,0))", "Delta = 0 for A (x) O_Y(-1,0)", 0, discriminant(chern_of_induced({-1, 0}, o))));
    std::int64_t lowest = discriminant(cA);
    for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b) lowest = std::min(lowest, discriminant(chern_of_induced({a, b}, o)));
    r.add(check("Bogomolov bound", "4c2 - c1^2 >= -2 on |a|,|b| <= 5", -2, lowest));
    r.add(check("slope of A", "mu(A) = -1", -1, rational_json(slope(cA))));
    r.add(check("slope gap O_Y < A", "the inequality is tight", 1, rational_json(slope_gap_witness({0, 0}, cA))));

    const ChowClassY M = chow_mul(total_chern_line({-1, -1}), total_chern_line({-1, -1}));
    r.add(check("Whitney quotient", "c1(Q) = (1,1), c2(Q) = 2", chow_json({1, {1, 1}, 2}),
                chow_json(whitney_div(cA.total(), M))));
    r.add(check("twist M -> M1", "c2(M1) = 2 - 4 + 2 = 0", 0, twist({2, {-2, -2}, 2}, {1, 1}).c2));

    ojson exist = ojson::array();
    ojson want = ojson::array();
    const ChowClassY AH = chern_of_induced({1, 1}, o).total();
    for (int n = 0; n <= 5; ++n) {
        const ChowClassY k = whitney_div(AH, curve_sheaf_total({1, 1}, n + 2));
        exist.push_back(chow_json(k));
        want.push_back(chow_json({1, {0, 0}, n}));
    }
    r.add(check("existence kernels", "kernels of A(1,1) -> O_C(n+2) have c1 = 0, c2 = n", want, exist));

    bool serre = true, chi = true;
    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b) {
            const CohomologyY h = h_y({a, b});
            const CohomologyY d = h_y({-2 - a, -2 - b});
            serre = serre && h.h0 == d.h2 && h.h1 == d.h1 && h.h2 == d.h0;
            chi = chi && h.h0 - h.h1 + h.h2 == (a + 1) * (b + 1) && h.h0 - h.h1 + h.h2 == euler_char(ChernData::line({a, b}));
        }
    r.add(check("Serre duality grid", "h^i(D) = h^{2-i}(K - D) on |a|,|b| <= 6", true, serre));
    r.add(check("chi grid", "chi(O(a,b)) = (a+1)(b+1)", true, chi));

    r.add(check("Ext^1_A(A,A)", "Ext^1_A(A,A) = 0", ext_json({1, 0, 0}),
                ext_json(ext_A_from_induced({0, 0}, underlying_of_induced({0, 0})))));
    r.add(check("tangent dimension", "ext^1 has dimension 1", 1,
                ext_A_from_induced({-1, 0}, underlying_of_induced({-1, 0})).e1));
    r.add(check("hom_Y(O(-F), A)", "hom = 2", 2, ext_sums({{-1, 0}}, {{0, 0}, {-1, -1}}).e0));
    for (TangentCase c : kAllTangentCases) {
        const bool obstruction = std::string_view(to_string(c)).rfind("Obstruction", 0) == 0;
        r.add(check(std::string(to_string(c)),
                    obstruction ? "smoothness: obstruction space vanishes" : "dimension chain",
                    obstruction ? 0 : 2, hom_A_tangent(c)));
    }
}

}  // namespace

ojson stratum_json(const Stratum& s)
{
    ojson j;
    j["case"] = to_string(s.tag);
    j["tangent_E"] = s.tangent_E;
    j["tangent_Eprime"] = s.tangent_Eprime;
    j["base_point_count"] = s.base_count;
    j["base_points_on_line"] = s.base_points_on_line;
    j["touch_E"] = s.touch_E ? point_json(*s.touch_E) : ojson(nullptr);
    j["touch_Eprime"] = s.touch_Eprime ? point_json(*s.touch_Eprime) : ojson(nullptr);
    return j;
}

ojson marked_fiber_json(const MarkedFiber& f)
{
    ojson j;
    j["singular"] = f.singular;
    ojson orbits = ojson::array();
    for (const Orbit& o : f.orbits)
        orbits.push_back({{"id", o.id}, {"multiplicity", o.multiplicity}, {"sigma_fixed", o.sigma_fixed},
                          {"at_node", o.at_node}});
    j["orbits"] = std::move(orbits);
    return j;
}

ojson fiber_point_json(const FiberPoint& p)
{
    ojson j;
    j["kind"] = to_string(p.kind);
    if (p.choice) {
        ojson c = ojson::array();
        for (const ChoicePoint& q : p.choice->points) {
            ojson x{{"orbit", q.orbit}, {"side", side_name(q.side)}};
            if (q.component != Component::None) x["component"] = component_name(q.component);
            c.push_back(std::move(x));
        }
        j["choice"] = std::move(c);
    } else {
        j["choice"] = nullptr;
    }
    j["ram_index"] = p.ram_index;
    j["branch_label"] = p.branch_label;
    return j;
}

Report run_verify(const Fixture& fx, const ConicPair& pair, std::uint64_t samples, std::uint64_t seed)
{
    Report r;
    r.command = "verify";
    r.fixture_digest = fixture_digest(fx);
    r.data["samples"] = samples;
    r.data["seed"] = seed;
    r.data["rng"] = kRngDescription;
    add_geometry_checks(r, pair, samples, seed);
    add_intersection_checks(r, pair);
    add_calculus_checks(r);
    return r;
}

Report run_classify(const Fixture& fx, const ConicPair& pair, const ProjPoint& p)
{
    Report r;
    r.command = "classify";
    r.fixture_digest = fixture_digest(fx);
    const Stratum s = classify_point(p, pair);
    const MarkedFiber f = marked_fiber_geometric(p, pair);
    r.data["point"] = point_json(p);
    r.data["stratum"] = stratum_json(s);
    r.data["marked_fiber"] = marked_fiber_json(f);
    r.data["fiber_size"] = fiber(f).size();
    r.add(check("marked_fiber", "geometric and combinatorial marked divisors agree", true,
                f == marked_fiber_of_stratum(s)));
    return r;
}

Report run_fiber(const Fixture& fx, const ConicPair& pair, std::optional<ProjPoint> p,
                 std::optional<StratumTag> stratum)
{
    Report r;
    r.command = "fiber";
    r.fixture_digest = fixture_digest(fx);
    MarkedFiber f;
    StratumTag tag;
    if (p) {
        const Stratum s = classify_point(*p, pair);
        tag = s.tag;
        f = marked_fiber_geometric(*p, pair);
        r.data["point"] = point_json(*p);
        r.data["stratum"] = stratum_json(s);
    } else {
        tag = stratum.value();
        f = marked_fiber_of_stratum(tag);
        r.data["stratum"] = stratum_json(Stratum::from_tag(tag));
    }
    const auto pts = fiber(f);
    r.data["marked_fiber"] = marked_fiber_json(f);
    ojson list = ojson::array();
    for (const auto& q : pts) list.push_back(fiber_point_json(q));
    r.data["points"] = std::move(list);
    r.data["total_ram"] = ram_sum(pts);
    r.add(check("fiber_count." + to_string(tag), "case tables", expected_fiber_size(tag), pts.size()));
    r.add(check("ram_sum." + to_string(tag), "Psi is an 8:1 cover", 8, ram_sum(pts)));
    return r;
}

Report run_survey(const Fixture& fx, const ConicPair& pair, std::uint64_t samples, std::uint64_t seed,
                  bool include_strata)
{
    Report r;
    r.command = "survey";
    r.fixture_digest = fixture_digest(fx);
    std::vector<ProjPoint> pts = sample_points(samples, seed);
    if (include_strata) {
        const SpecialPoints sp = special_points(pair);
        for (const auto* v : {&sp.case4, &sp.case5, &sp.case7, &sp.case8}) pts.insert(pts.end(), v->begin(), v->end());
        const auto reps = stratum_representatives(pair);
        for (StratumTag t : {StratumTag::Case1, StratumTag::Case2, StratumTag::Case3, StratumTag::Case6})
            pts.push_back(reps[static_cast<std::size_t>(index_of(t) - 1)]);
    }
    const SurveyReport sv = survey_points(pair, pts);
    r.data["samples"] = samples;
    r.data["seed"] = seed;
    r.data["rng"] = kRngDescription;
    r.data["include_strata"] = include_strata;
    ojson strata = ojson::object();
    for (const auto& [t, n] : sv.strata) strata[to_string(t)] = n;
    ojson sizes = ojson::object();
    for (const auto& [s, n] : sv.fiber_sizes) sizes[std::to_string(s)] = n;
    r.data["strata"] = std::move(strata);
    r.data["fiber_sizes"] = std::move(sizes);
    r.data["mismatches"] = sv.mismatches;
    r.add(check("survey mismatches", "case tables and 8:1 degree", 0, sv.mismatches.size()));
    return r;
}

}  // namespace ordercalc::cli
