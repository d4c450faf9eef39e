#pragma once

#include <cstdint>
#include <optional>

#include <ordercalc/conics.hpp>
#include <ordercalc/fibers.hpp>

#include "ordercalc_cli/fixture.hpp"
#include "ordercalc_cli/report.hpp"

namespace ordercalc::cli {

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitInputError = 2, kExitDegenerate = 3 };

inline constexpr const char* kRngDescription = "mt19937_64; coordinate = (raw >> 32) - 2^31; zero vectors redrawn";

ojson stratum_json(const Stratum& s);
ojson marked_fiber_json(const MarkedFiber& f);
ojson fiber_point_json(const FiberPoint& p);

/// The full suite of checks against the bundled fixture's geometry and the
/// Chern, cohomology and intersection calculus.
Report run_verify(const Fixture& fx, const ConicPair& pair, std::uint64_t samples, std::uint64_t seed);

Report run_classify(const Fixture& fx, const ConicPair& pair, const ProjPoint& p);

/// Fiber over a point, or over the bare stratum when p is empty.
Report run_fiber(const Fixture& fx, const ConicPair& pair, std::optional<ProjPoint> p,
                 std::optional<StratumTag> stratum);

/// Seeded sample; with include_strata the special points and one
/// representative of every stratum are appended.
Report run_survey(const Fixture& fx, const ConicPair& pair, std::uint64_t samples, std::uint64_t seed,
                  bool include_strata);

}  // namespace ordercalc::cli
