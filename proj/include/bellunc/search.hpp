#pragma once

// Derivative-free maximization of inequality margins over measurement
// settings: exhaustive lattice scan, compass refinement, 1-D sweeps.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bellunc/inequalities.hpp"

namespace bellunc::search {

enum class SpaceKind {
    PlanarEpr,  // singlet, four in-plane angles (a, b, c, d)
    GhzAngles,  // GHZ, four in-plane angles (alpha, beta, gamma, delta)
    Vectors3d,  // singlet, (polar, azimuth) per vector; a's azimuth pinned to 0
};

std::string_view to_string(SpaceKind kind);
// "planar-epr", "ghz-angles", "vectors3d" (underscores also accepted)
std::optional<SpaceKind> parse_space_kind(std::string_view name);

// Closed interval [lo, hi], or [lo, hi) when `periodic` (the endpoints name the
// same setting). lo == hi pins the coordinate.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool periodic = false;

    bool pinned() const { return lo == hi; }
};

struct ParameterSpace {
    SpaceKind kind = SpaceKind::PlanarEpr;
    std::vector<Interval> bounds;

    // planar-epr: [0, 2pi)^4; ghz-angles: [0, pi)^4;
    // vectors3d: polar [0, pi], azimuth [0, 2pi), a's azimuth pinned at 0.
    static ParameterSpace standard(SpaceKind kind);

    std::size_t dimension() const { return bounds.size(); }
    // Wraps periodic coordinates into [lo, hi) and clamps the rest.
    std::vector<double> normalize(std::span<const double> point) const;
    bool contains(std::span<const double> point) const;
};

// Throws InputError if `id` is not defined on `kind` (e.g. a GHZ id on a
// singlet space).
void check_compatible(InequalityId id, SpaceKind kind);

// Evaluates `id` at a point of `space`. Generic ids act on the matrix-computed
// profile of the space's state; state-specific ids use their closed forms.
InequalityVerdict evaluate(InequalityId id, const ParameterSpace& space, std::span<const double> params,
                           double tolerance = kDefaultViolationTolerance);

// Margins are ranked on a 1e-12 grid so that settings equal up to roundoff
// tie (and then fall to the lexicographic rule). Monotone in `margin`.
inline constexpr double kMarginQuantum = 1e-12;
double margin_key(double margin);

struct SearchResult {
    std::vector<double> best_params;
    InequalityVerdict best_verdict;
    std::size_t evaluations = 0;
    double resolution = 0.0;
};

// Lattice coordinates lo + k * resolution along one axis.
std::vector<double> lattice_axis(const Interval& interval, double resolution);

struct GridOptions {
    unsigned threads = 0;  // 0: hardware concurrency
    double tolerance = kDefaultViolationTolerance;
};

// Maximum-margin lattice point; margin-key ties go to the lexicographically
// smallest coordinate vector, so the result does not depend on `threads`.
SearchResult grid_search(InequalityId id, const ParameterSpace& space, double resolution,
                         const GridOptions& options = {});

struct RefineOptions {
    double initial_step = 0.0;
    double shrink = 0.5;
    double min_step = 1e-9;
    std::size_t max_evaluations = 1'000'000;
    double tolerance = kDefaultViolationTolerance;
};

// Compass search: probe +step then -step along each free coordinate in order,
// take the first strict improvement of margin_key and rescan; when none improves, multiply
// step by `shrink`. Stops once step <= min_step.
SearchResult refine(InequalityId id, const ParameterSpace& space, std::span<const double> start,
                    const RefineOptions& options);

struct SweepPoint {
    double coord = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
};

// `steps` evenly spaced values of coordinate `axis` over [lo, hi] inclusive,
// other coordinates held at `base`.
std::vector<SweepPoint> sweep(InequalityId id, const ParameterSpace& space, std::span<const double> base,
                              std::size_t axis, double lo, double hi, std::size_t steps,
                              double tolerance = kDefaultViolationTolerance);

}  // namespace bellunc::search
