// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <ordercalc/chowring.hpp>
#include <ordercalc/cohomology.hpp>
#include <ordercalc/conics.hpp>
#include <ordercalc/fibers.hpp>
#include <ordercalc/intersect.hpp>
#include <ordercalc/order.hpp>
#include <ordercalc_cli/fixture.hpp>

#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace ordercalc;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

template <class T>
std::string show(const T& v)
{
    std::ostringstream ss;
    ss << v;
    return ss.str();
}

ConicPair load_pair()
{
    const auto fx = cli::load_fixture(ORDERCALC_FIXTURE_DIR "/bundled.json");
    return cli::build_fixture_pair(fx);
}

Outcome fiber_table(const ConicPair& pair)
{
    Outcome o;
    static constexpr int expected[8] = {8, 6, 4, 2, 2, 6, 4, 2};
    const auto reps = stratum_representatives(pair);
    for (std::size_t i = 0; i < 8; ++i) {
        const Stratum s = classify_point(reps[i], pair);
        const auto n = fiber(marked_fiber_geometric(reps[i], pair)).size();
        o.expect(index_of(s.tag) == static_cast<int>(i) + 1, "representative " + reps[i].str() + " is " + to_string(s.tag));
        o.expect(static_cast<int>(n) == expected[i],
                 to_string(s.tag) + " fiber " + std::to_string(n) + " != " + std::to_string(expected[i]));
    }
    return o;
}

Outcome generic_degree(const ConicPair& pair)
{
    Outcome o;
    const auto pts = sample_points(1000, cli::kDefaultSeed);
    o.expect(pts.size() == 1000, "sample size");
    for (const auto& p : pts) {
        const auto n = fiber(marked_fiber_geometric(p, pair)).size();
        o.expect(n == 8, p.str() + " has fiber " + std::to_string(n));
    }
    return o;
}

Outcome ramification_sums()
{
    Outcome o;
    for (auto t : kAllStrata) {
        int sum = 0;
        for (const auto& p : fiber(marked_fiber_of_stratum(t))) sum += p.ram_index;
        o.expect(sum == 8, to_string(t) + " ramification sum " + std::to_string(sum));
    }
    return o;
}

Outcome intersection_pipeline()
{
    Outcome o;
    const RuleTable t;
    const RamExpr K = RamExpr::pullback(kPlaneCanonicalDegree);
    auto eq = [&](const RamExpr& x, const RamExpr& y, std::int64_t want, const std::string& name) {
        const Rational got = t.pairing(x, y);
        o.expect(got == Rational(want), name + " = " + show(got) + ", expected " + std::to_string(want));
    };
    eq(K, K, 72, "(Psi^*K)^2");
    eq(K, R1(), -12, "Psi^*K.R1");
    eq(K, R2(), -12, "Psi^*K.R2");
    eq(R1(), R2(), 0, "R1.R2");
    eq(R1(), R1(), 0, "R1^2");
    eq(R2(), R2(), 0, "R2^2");
    for (int i = 3; i <= 6; ++i) {
        const std::string ri = "R" + std::to_string(i);
        eq(K, Ri(i), -12, "Psi^*K." + ri);
        eq(R1(), Ri(i), 2, "R1." + ri);
        eq(R2(), Ri(i), 2, "R2." + ri);
        eq(Ri(i), Ri(i), 2, ri + "^2");
        for (int j = i + 1; j <= 6; ++j) eq(Ri(i), Ri(j), 2, ri + ".R" + std::to_string(j));
    }
    const auto a = canonical_audit();
    o.expect(a.pullback == 72 && a.cross == -144 && a.squares == 8 && a.mixed == 56,
             "component audit " + std::to_string(a.pullback) + " " + std::to_string(a.cross) + " " +
                 std::to_string(a.squares) + " " + std::to_string(a.mixed));
    o.expect(a.total == -8, "K^2 = " + std::to_string(a.total));
    o.expect(canonical_self_intersection() == -8, "canonical_self_intersection");
    return o;
}

Outcome genus()
{
    Outcome o;
    o.expect(genus_of_pic(-8) == Rational(2), "genus_of_pic(-8)");
    const auto e = euler_cross_check();
    o.expect(e == -4, "Euler route gives " + std::to_string(e));
    o.expect(e == 4 * (1 - 2), "Euler route disagrees with 4(1-g)");
    const std::int64_t explicit_sum = 8 * 9 + 6 * (-6) + 6 * (-6) + 4 * 4 * (-3) + 2 * 6 + 2 * 4 + 4 * 4 + 2 * 4;
    o.expect(e == explicit_sum, "Euler route disagrees with the explicit stratified sum");
    o.expect(genus_from_euler(e) == genus_of_pic(canonical_self_intersection()), "two genus routes disagree");
    return o;
}

Outcome cohomology_suite()
{
    Outcome o;
    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b) {
            const auto h = h_y({a, b});
            const auto d = h_y({-2 - a, -2 - b});
            const std::string at = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            o.expect(h.h0 == d.h2 && h.h1 == d.h1 && h.h2 == d.h0, "Serre duality at " + at);
            o.expect(h.h0 - h.h1 + h.h2 == (a + 1) * (b + 1), "chi at " + at);
        }
    o.expect(ext_A_from_induced({0, 0}, underlying_of_induced({0, 0})).e1 == 0, "Ext^1_A(A,A) != 0");
    o.expect(ext_sums({{-1, 0}}, {{-1, 0}, {-1, -2}}).e1 == 1, "tangent dimension != 1");
    o.expect(hom_A_tangent(TangentCase::HomMtoA_split) == 2, "hom_A(M,A) split branch != 2");
    o.expect(hom_A_tangent(TangentCase::HomMtoA_induced) == 2, "hom_A(M,A) induced branch != 2");
    o.expect(ext_sums({{-1, 0}}, {{0, 0}, {-1, -1}}).e0 == 2, "hom_Y(O(-F), O + O(-1,-1)) != 2");
    o.expect(hom_A_tangent(TangentCase::HilbTangentAtInducedF) == 2, "Hilb tangent dimension != 2");
    o.expect(hom_A_tangent(TangentCase::HilbTangentAtInducedFPrime) == 2, "Hilb tangent dimension at F' != 2");
    for (auto c : {TangentCase::ObstructionAtInducedF, TangentCase::ObstructionAtInducedFPrime,
                   TangentCase::ObstructionSplitH1, TangentCase::ObstructionSplitH0})
        o.expect(hom_A_tangent(c) == 0, std::string(to_string(c)) + " != 0");
    return o;
}

Outcome chern_calculus()
{
    Outcome o;
    const ChernData a = chern_of_induced({0, 0});
    o.expect(discriminant(a) == -2, "Delta(A) = " + std::to_string(discriminant(a)));
    o.expect(discriminant(chern_of_induced({-1, 0})) == 0, "Delta(A (x) O(-1,0)) != 0");
    for (int x = -5; x <= 5; ++x)
        for (int y = -5; y <= 5; ++y)
            o.expect(discriminant(chern_of_induced({x, y})) >= -2,
                     "Delta(A (x) O(" + std::to_string(x) + "," + std::to_string(y) + ")) < -2");
    testgen::Gen g(20240611);
    for (int k = 0; k < 500; ++k) {
        const auto c = g.rank2();
        const auto t = g.divisor();
        o.expect(discriminant(twist(c, t)) == discriminant(c), "twist changed Delta");
    }
    const ChernData m{2, {-2, -2}, 2};
    const ChowClassY q = whitney_div(a.total(), m.total());
    o.expect(q == ChowClassY{1, {1, 1}, 2}, "c(Q) = " + show(q));
    return o;
}

Outcome canonical_bimodule()
{
    Outcome o;
    const auto inst = OrderData::reference_instance();
    o.expect(validate_order(inst).ok(), "order data does not validate");
    const auto w = canonical_twist(inst);
    o.expect(w == DivisorClassY{-1, -1} && w == -kPolarizationH, "canonical twist " + to_string(w));
    o.expect(is_ample(-w) && is_del_pezzo(inst), "dual canonical bimodule not ample");
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    for (auto t : kAllStrata) {
        const auto f = marked_fiber_of_stratum(t);
        o.expect(enumerate_choices(f) == oracle::brute_force_choices(f), to_string(t) + " choices disagree");
    }
    testgen::Gen g(97);
    int matched = 0, rejected = 0;
    for (int k = 0; k < 400; ++k) {
        const auto base = marked_fiber_of_stratum(kAllStrata[static_cast<std::size_t>(k % 8)]);
        MarkedFiber f = oracle::perturb(base, g);
        if (k % 3 == 0) f = oracle::perturb(f, g);
        const bool valid = oracle::valid_marked_fiber(f);
        bool threw = false;
        std::vector<Choice> got;
        try {
            got = enumerate_choices(f);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        if (valid) {
            o.expect(!threw, "valid perturbation rejected");
            o.expect(got == oracle::brute_force_choices(f), "perturbation choices disagree");
            ++matched;
        } else {
            o.expect(threw, "invalid perturbation accepted");
            ++rejected;
        }
    }
    o.expect(matched + rejected >= 100, "too few perturbations");
    o.expect(matched > 0 && rejected > 0, "perturbations exercised only one branch");
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double limit_ms;  // 0: no limit
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    ConicPair pair = [] {
        try {
            return load_pair();
        } catch (const std::exception& e) {
            std::cerr << "cannot load the bundled fixture: " << e.what() << "\n";
            std::exit(2);
        }
    }();

    const std::vector<Criterion> criteria{
        {1, "fiber-count table", 1000, [&] { return fiber_table(pair); }},
        {2, "generic degree over 1000 seeded points", 5000, [&] { return generic_degree(pair); }},
        {3, "ramification sums", 0, ramification_sums},
        {4, "intersection pipeline", 1000, intersection_pipeline},
        {5, "genus by two routes", 0, genus},
        {6, "cohomology suite", 0, cohomology_suite},
        {7, "Chern calculus", 0, chern_calculus},
        {8, "canonical bimodule", 0, canonical_bimodule},
        {9, "oracle equivalence", 0, oracle_equivalence},
    };

    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_ms > 0 && ms > c.limit_ms) {
            std::ostringstream ss;
            ss << "took " << ms << " ms, limit " << c.limit_ms << " ms";
            o.expect(false, ss.str());
        }
        all = all && o.pass;
        std::printf("%s criterion %d: %s (%.1f ms)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), ms);
        for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i)
            std::printf("    %s\n", o.failures[i].c_str());
    }
    return all ? 0 : 1;
}
