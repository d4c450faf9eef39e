#pragma once

// Picard-level model of the cyclic order A = O_Y + L_sigma with
// L_sigma^2 = O_Y(-D): consistency of the class data, the canonical
// bimodule twist, Chern classes of induced modules, normalisation of c1 and
// the discriminant bound.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordercalc/chowring.hpp"

namespace ordercalc {

struct OrderData {
    std::int64_t e = 2;                    // order of the cyclic cover
    DivisorClassY L{-1, -1};
    DivisorClassY D{2, 2};                 // pullback of the second branch conic
    DivisorClassY H{1, 1};
    DivisorClassY K_Y{-2, -2};
    DivisorClassY R{1, 1};                 // reduced pullback of the cover branch curve
    DivisorClassY pullback_K_base{-3, -3}; // pi^* K of the base plane
    std::string branch_label = "E";
    std::string relation_label = "E'";

    /// L = (-1,-1), D = (2,2), H = (1,1) on P1 x P1 over P2.
    static OrderData reference_instance() { return {}; }
};

struct OrderValidation {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks L + sigma^* L = -D and sigma^* D = D.
OrderValidation validate_order(const OrderData& o);

/// omega_A = A (x) O_Y(L + D + K_Y). Throws std::invalid_argument if the
/// order data does not validate.
DivisorClassY canonical_twist(const OrderData& o);

/// The same twist written through the base: L + (e-1) R + D + pi^* K_X.
DivisorClassY canonical_twist_via_base(const OrderData& o);

/// -canonical_twist is ample.
bool is_del_pezzo(const OrderData& o);

/// Chern data of A (x)_Y N, whose underlying module is N + (L + sigma^* N).
ChernData chern_of_induced(DivisorClassY N, const OrderData& o = OrderData::reference_instance());

/// Rank-2 twist by O_Y(T): c1 + 2T, c2 + c1.T + T.T.
/// Throws std::invalid_argument for rank != 2.
ChernData twist(const ChernData& c, DivisorClassY T);

struct TwistResult {
    std::int64_t n = 0;  // number of H-twists applied
    ChernData chern;
};

/// Twists by a multiple of H until c1 is (-1,-1) or (-2,-2).
/// Throws std::invalid_argument if c1 is not symmetric or rank != 2.
TwistResult normalize_c1(const ChernData& c, DivisorClassY H = kPolarizationH);

/// Delta >= -2.
bool check_bogomolov(const ChernData& c);

/// mu(sub) - mu(amb) for a rank-one subsheaf O_Y(sub) of a rank-2 module.
Rational slope_gap_witness(DivisorClassY sub, const ChernData& amb);

}  // namespace ordercalc
