#pragma once

// The command layer behind the CLI. Each command returns its report as data;
// the CLI only handles flags, output streams and exit codes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bellunc/inequalities.hpp"
#include "bellunc/report.hpp"
#include "bellunc/scenario.hpp"
#include "bellunc/search.hpp"

namespace bellunc::commands {

enum class Target { Epr, Ghz };

// Published example settings. The singlet example is given as angles between
// direction pairs (ab, ac, ad, bc, bd, cd), in degrees.
inline constexpr std::array<double, 6> kEprExamplePairAnglesDeg{120.0, 30.0, 120.0, 140.0, 160.0, 45.0};
inline constexpr std::array<double, 4> kGhzExampleAnglesDeg{45.0, 60.0, 120.0, 150.0};

// Published figures for the general inequality at those settings.
inline constexpr double kPublishedEprGeneralLhs = 0.38;
inline constexpr double kPublishedEprGeneralRhs = 10.2;
inline constexpr double kPublishedGhzGeneralLhs = 0.0275;
inline constexpr double kPublishedGhzGeneralRhs = 6.804;

quantum::PairDots epr_example_dots();

report::Json reproduce(Target target);

// `inequality` / `tolerance` override the scenario's own fields.
report::Json evaluate(const scenario::Scenario& s, std::optional<InequalityId> inequality = std::nullopt,
                      std::optional<double> tolerance = std::nullopt);

struct SearchRequest {
    InequalityId inequality = InequalityId::DispersionFree;
    search::SpaceKind space = search::SpaceKind::PlanarEpr;
    double resolution_deg = 5.0;
    bool refine = false;
    unsigned threads = 0;
    double tolerance = kDefaultViolationTolerance;
};

report::Json run_search(const SearchRequest& request);

struct LhvCheckRequest {
    std::size_t models = 10'000;
    std::size_t points = 8;
    double bound = 5.0;
    std::uint64_t seed = 0;
    double tolerance = kDefaultViolationTolerance;
};

struct LhvCheckOutcome {
    report::Json report;
    bool passed = false;
};

// Model i is random_model(seed + i, points, bound); each must satisfy the
// general inequality with margin <= tolerance.
LhvCheckOutcome lhv_check(const LhvCheckRequest& request);

struct SweepRequest {
    InequalityId inequality = InequalityId::GhzGeneral;
    search::SpaceKind space = search::SpaceKind::GhzAngles;
    std::vector<double> base_deg;
    std::size_t axis = 0;
    double lo_deg = 0.0;
    double hi_deg = 180.0;
    std::size_t steps = 181;
    double tolerance = kDefaultViolationTolerance;
};

// Rows of (coord, lhs, rhs, margin) with coord in degrees.
std::vector<search::SweepPoint> run_sweep(const SweepRequest& request);

// "coord,lhs,rhs,margin\n" followed by one line per point, 17 significant digits.
std::string sweep_csv(const std::vector<search::SweepPoint>& rows);
report::Json sweep_json(const SweepRequest& request, const std::vector<search::SweepPoint>& rows);

}  // namespace bellunc::commands
