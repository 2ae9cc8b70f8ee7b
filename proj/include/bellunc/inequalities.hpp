#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bellunc/profile.hpp"
#include "bellunc/quantum.hpp"

namespace bellunc {

enum class InequalityId {
    General,             // squared correlation combination <= variance product
    DispersionFree,      // same with all variances set to zero
    EprGeneral,          // General, closed form for the singlet
    EprDispersionFree,   // DispersionFree, closed form for the singlet
    GhzGeneral,          // General for the four-qubit GHZ state
    GhzDispersionFree,   // DispersionFree for the four-qubit GHZ state
    Chsh,                // |E(A,C) + E(A,D) + E(B,C) - E(B,D)| <= 2
};

std::string_view to_string(InequalityId id);
// Accepts the snake_case names (e.g. "ghz_general"); also '-' for '_'.
std::optional<InequalityId> parse_inequality_id(std::string_view name);

inline constexpr double kDefaultViolationTolerance = 1e-9;

struct InequalityVerdict {
    InequalityId id = InequalityId::General;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // lhs - rhs
    bool violated = false;  // margin > tolerance
    double tolerance = kDefaultViolationTolerance;
};

// Throws NumericError if lhs, rhs or their difference is not finite.
InequalityVerdict make_verdict(InequalityId id, double lhs, double rhs, double tolerance);

// (eAC + eAD - eBC - eBD)
double correlation_combination(const CorrelationProfile& p);

// lhs = (eAC + eAD - eBC - eBD)^2, rhs = (varA + varB - 2 eAB)(varC + varD + 2 eCD)
InequalityVerdict general_verdict(const CorrelationProfile& p, double tolerance = kDefaultViolationTolerance);

// lhs = (eAC + eAD - eBC - eBD)^2 + 4 eAB eCD, rhs = 0; variances ignored.
InequalityVerdict dispersion_free_verdict(const CorrelationProfile& p,
                                          double tolerance = kDefaultViolationTolerance);

// lhs = |eAC + eAD + eBC - eBD|, rhs = 2.
InequalityVerdict chsh_verdict(const CorrelationProfile& p, double tolerance = kDefaultViolationTolerance);

enum class Mode { DispersionFree, General };

// Singlet closed forms written in dot products:
//   dispersion-free: (a.c + a.d - b.c - b.d)^2 + 4 (a.b)(c.d) <= 0
//   general:         (a.c + a.d - b.c - b.d)^2 <= 4 (1 - a.b)(1 + c.d)
InequalityVerdict epr_closed_form(const quantum::PairDots& dots, Mode mode,
                                  double tolerance = kDefaultViolationTolerance);
InequalityVerdict epr_closed_form(const quantum::Direction& a, const quantum::Direction& b,
                                  const quantum::Direction& c, const quantum::Direction& d, Mode mode,
                                  double tolerance = kDefaultViolationTolerance);

// The generic verdict for `mode` applied to ghz_profile, relabelled as a GHZ verdict.
InequalityVerdict ghz_closed_form(quantum::PlanarAngle alpha, quantum::PlanarAngle beta, quantum::PlanarAngle gamma,
                                  quantum::PlanarAngle delta, Mode mode,
                                  double tolerance = kDefaultViolationTolerance);

// The GHZ inequality with the alternative sign pattern
//   (-cos2(a-g) - cos2(b-g) + cos2(a-d) + cos2(b-d))
// in the squared term, i.e. eAC + eBC - eAD - eBD. Kept only for
// side-by-side reporting; it is not the consistent instantiation.
InequalityVerdict ghz_alternate_sign_form(quantum::PlanarAngle alpha, quantum::PlanarAngle beta,
                                          quantum::PlanarAngle gamma, quantum::PlanarAngle delta, Mode mode,
                                          double tolerance = kDefaultViolationTolerance);

// Dispatch a generic id (General, DispersionFree, Chsh) on a profile. Throws
// InputError for the state-specific ids.
InequalityVerdict evaluate_profile(InequalityId id, const CorrelationProfile& p,
                                   double tolerance = kDefaultViolationTolerance);

bool is_generic(InequalityId id);

}  // namespace bellunc
