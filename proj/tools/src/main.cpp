#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ordercalc_cli/commands.hpp"

using namespace ordercalc;
using namespace ordercalc::cli;

namespace {

struct Options {
    std::string fixture;
    std::string out;
    std::string format = "json";
    bool timing = false;
    std::uint64_t samples = 1000;
    std::optional<std::uint64_t> seed;
    std::optional<int> stratum;
    std::string point;
    bool include_strata = false;
};

int emit(const Report& r, const Options& o)
{
    const std::string text = o.format == "md" ? render_markdown(r) : render_json(r);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "ordercalc: cannot write " << o.out << "\n";
            return kExitInputError;
        }
        f << text;
    }
    return r.pass() ? kExitPass : kExitCheckFailure;
}

int fail(const char* what, const std::exception& e, int code)
{
    std::cerr << "ordercalc: " << what << ": " << e.what() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks for the cyclic order on P2 ramified on two conics"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    Options o;
    app.add_option("--fixture", o.fixture, "Fixture JSON (default: the bundled pair)");
    app.add_option("--out", o.out, "Write the report here instead of standard output");
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "md"}));
    app.add_flag("--timing", o.timing, "Record wall-clock time in the report");

    auto* verify = app.add_subcommand("verify", "Run the full verification suite");
    verify->add_option("--samples", o.samples, "Random points for the generic degree check");
    verify->add_option("--seed", o.seed, "Sampling seed (default: fixture seed)");

    auto* classify = app.add_subcommand("classify", "Classify a dual-plane point");
    classify->add_option("--point", o.point, "Coordinates a,b,c")->required();

    auto* fib = app.add_subcommand("fiber", "List the fiber over a point or a stratum");
    auto* fib_point = fib->add_option("--point", o.point, "Coordinates a,b,c");
    auto* fib_stratum = fib->add_option("--stratum", o.stratum, "Case number 1..8")->check(CLI::Range(1, 8));
    fib_point->excludes(fib_stratum);

    auto* surv = app.add_subcommand("survey", "Histogram of strata and fiber sizes over random points");
    surv->add_option("--samples", o.samples, "Number of random points");
    surv->add_option("--seed", o.seed, "Sampling seed (default: fixture seed)");
    surv->add_flag("--include-strata", o.include_strata, "Also sample every special point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    const auto start = std::chrono::steady_clock::now();
    Fixture fx;
    ConicPair pair = [&] {
        try {
            fx = o.fixture.empty() ? parse_fixture(bundled_fixture_text()) : load_fixture(o.fixture);
            return std::optional<ConicPair>(build_fixture_pair(fx));
        } catch (const InputError& e) {
            std::exit(fail("input error", e, kExitInputError));
        } catch (const GeometryError& e) {
            const int code = e.kind() == GeometryError::Kind::NonIncidentBasePoint ? kExitInputError : kExitDegenerate;
            std::exit(fail(code == kExitInputError ? "input error" : "degenerate fixture", e, code));
        }
    }().value();
    const std::uint64_t seed = o.seed.value_or(fx.seed.value_or(kDefaultSeed));

    try {
        Report r;
        if (*verify) {
            r = run_verify(fx, pair, o.samples, seed);
        } else if (*classify) {
            r = run_classify(fx, pair, parse_point(o.point));
        } else if (*fib) {
            if (o.point.empty() && !o.stratum) {
                std::cerr << "ordercalc: fiber needs --point or --stratum\n";
                return kExitInputError;
            }
            std::optional<ProjPoint> p;
            if (!o.point.empty()) p = parse_point(o.point);
            std::optional<StratumTag> t;
            if (o.stratum) t = stratum_from_index(*o.stratum);
            r = run_fiber(fx, pair, p, t);
        } else {
            r = run_survey(fx, pair, o.samples, seed, o.include_strata);
        }
        if (o.timing)
            r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return emit(r, o);
    } catch (const InputError& e) {
        return fail("input error", e, kExitInputError);
    } catch (const GeometryError& e) {
        return fail("geometry", e, e.kind() == GeometryError::Kind::Unsupported ? kExitInputError : kExitDegenerate);
    } catch (const std::out_of_range& e) {
        return fail("input error", e, kExitInputError);
    }
}
