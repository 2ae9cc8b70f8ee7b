#include "bellunc/search.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>

#include "bellunc/errors.hpp"
#include "bellunc/quantum.hpp"

namespace bellunc::search {

namespace {

using quantum::Direction;
using quantum::PlanarAngle;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxLatticePoints = 1'000'000'000;

struct Candidate {
    std::vector<double> params;
    InequalityVerdict verdict;
    bool valid = false;
};

// Total order: larger margin key first, then lexicographically smaller coordinates.
bool better(const Candidate& a, const Candidate& b) {
    if (!a.valid) return false;
    if (!b.valid) return true;
    const double ka = margin_key(a.verdict.margin);
    const double kb = margin_key(b.verdict.margin);
    if (ka != kb) return ka > kb;
    return std::lexicographical_compare(a.params.begin(), a.params.end(), b.params.begin(), b.params.end());
}

std::array<Direction, 4> singlet_directions(SpaceKind kind, std::span<const double> p) {
    if (kind == SpaceKind::PlanarEpr)
        return {Direction::planar(p[0]), Direction::planar(p[1]), Direction::planar(p[2]), Direction::planar(p[3])};
    return {Direction::spherical(p[0], p[1]), Direction::spherical(p[2], p[3]), Direction::spherical(p[4], p[5]),
            Direction::spherical(p[6], p[7])};
}

}  // namespace

double margin_key(double margin) { return std::round(margin / kMarginQuantum); }

std::string_view to_string(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::PlanarEpr:
            return "planar-epr";
        case SpaceKind::GhzAngles:
            return "ghz-angles";
        case SpaceKind::Vectors3d:
            return "vectors3d";
    }
    return "unknown";
}

std::optional<SpaceKind> parse_space_kind(std::string_view name) {
    std::string n(name);
    std::replace(n.begin(), n.end(), '_', '-');
    if (n == "planar-epr") return SpaceKind::PlanarEpr;
    if (n == "ghz-angles") return SpaceKind::GhzAngles;
    if (n == "vectors3d") return SpaceKind::Vectors3d;
    return std::nullopt;
}

ParameterSpace ParameterSpace::standard(SpaceKind kind) {
    ParameterSpace s;
    s.kind = kind;
    switch (kind) {
        case SpaceKind::PlanarEpr:
            s.bounds.assign(4, Interval{0.0, kTwoPi, true});
            break;
        case SpaceKind::GhzAngles:
            s.bounds.assign(4, Interval{0.0, std::numbers::pi, true});
            break;
        case SpaceKind::Vectors3d:
            for (int v = 0; v < 4; ++v) {
                s.bounds.push_back(Interval{0.0, std::numbers::pi, false});
                s.bounds.push_back(v == 0 ? Interval{0.0, 0.0, false} : Interval{0.0, kTwoPi, true});
            }
            break;
    }
    return s;
}

std::vector<double> ParameterSpace::normalize(std::span<const double> point) const {
    if (point.size() != bounds.size()) throw InputError("parameter vector has the wrong dimension for this space");
    std::vector<double> out(point.begin(), point.end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Interval& iv = bounds[i];
        if (iv.periodic && !iv.pinned()) {
            const double period = iv.hi - iv.lo;
            double x = std::fmod(out[i] - iv.lo, period);
            if (x < 0.0) x += period;
            if (x >= period) x = 0.0;
            out[i] = iv.lo + x;
        } else {
            out[i] = std::clamp(out[i], iv.lo, iv.hi);
        }
    }
    return out;
}

bool ParameterSpace::contains(std::span<const double> point) const {
    if (point.size() != bounds.size()) return false;
    for (std::size_t i = 0; i < point.size(); ++i) {
        const Interval& iv = bounds[i];
        if (!(point[i] >= iv.lo)) return false;
        if (iv.periodic && !iv.pinned() ? !(point[i] < iv.hi) : !(point[i] <= iv.hi)) return false;
    }
    return true;
}

void check_compatible(InequalityId id, SpaceKind kind) {
    if (is_generic(id)) return;
    const bool ghz_id = id == InequalityId::GhzGeneral || id == InequalityId::GhzDispersionFree;
    if (ghz_id != (kind == SpaceKind::GhzAngles)) {
        throw InputError(std::string("inequality '") + std::string(to_string(id)) + "' is not defined on space '" +
                         std::string(to_string(kind)) + "'");
    }
}

InequalityVerdict evaluate(InequalityId id, const ParameterSpace& space, std::span<const double> params,
                           double tolerance) {
    check_compatible(id, space.kind);
    if (params.size() != space.dimension()) throw InputError("parameter vector has the wrong dimension for this space");
    if (space.kind == SpaceKind::GhzAngles) {
        const PlanarAngle a{params[0]}, b{params[1]}, c{params[2]}, d{params[3]};
        switch (id) {
            case InequalityId::GhzGeneral:
                return ghz_closed_form(a, b, c, d, Mode::General, tolerance);
            case InequalityId::GhzDispersionFree:
                return ghz_closed_form(a, b, c, d, Mode::DispersionFree, tolerance);
            default:
                return evaluate_profile(id, quantum::ghz_profile(a, b, c, d), tolerance);
        }
    }
    const auto v = singlet_directions(space.kind, params);
    switch (id) {
        case InequalityId::EprGeneral:
            return epr_closed_form(v[0], v[1], v[2], v[3], Mode::General, tolerance);
        case InequalityId::EprDispersionFree:
            return epr_closed_form(v[0], v[1], v[2], v[3], Mode::DispersionFree, tolerance);
        default:
            return evaluate_profile(id, quantum::epr_profile(v[0], v[1], v[2], v[3]), tolerance);
    }
}

std::vector<double> lattice_axis(const Interval& iv, double resolution) {
    if (!std::isfinite(resolution) || resolution <= 0.0) throw InputError("resolution must be positive");
    if (!(iv.hi >= iv.lo)) throw InputError("interval bounds are reversed");
    if (iv.pinned()) return {iv.lo};
    const double span = iv.hi - iv.lo;
    // Slack absorbs the rounding of e.g. 15 degrees into radians.
    const double slack = 1e-9 * resolution;
    std::vector<double> out;
    for (std::size_t k = 0;; ++k) {
        const double offset = static_cast<double>(k) * resolution;
        if (iv.periodic ? offset >= span - slack : offset > span + slack) break;
        out.push_back(std::min(iv.lo + offset, iv.hi));
    }
    if (out.size() < 2) {
        std::ostringstream os;
        os << "resolution " << resolution << " leaves fewer than 2 lattice points on [" << iv.lo << ", " << iv.hi
           << "]";
        throw InputError(os.str());
    }
    return out;
}

SearchResult grid_search(InequalityId id, const ParameterSpace& space, double resolution, const GridOptions& options) {
    check_compatible(id, space.kind);
    if (space.dimension() == 0) throw InputError("empty parameter space");
    std::vector<std::vector<double>> axes;
    std::size_t total = 1;
    for (const Interval& iv : space.bounds) {
        axes.push_back(lattice_axis(iv, resolution));
        if (total > kMaxLatticePoints / axes.back().size()) throw InputError("lattice exceeds 1e9 points");
        total *= axes.back().size();
    }
    if (total == 0) throw InputError("empty lattice");

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));

    std::vector<Candidate> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    const auto scan = [&](unsigned t) {
        try {
            const std::size_t begin = total * t / threads;
            const std::size_t end = total * (t + 1) / threads;
            Candidate current;
            current.params.resize(axes.size());
            for (std::size_t flat = begin; flat < end; ++flat) {
                // Mixed radix, last coordinate fastest.
                std::size_t rest = flat;
                for (std::size_t i = axes.size(); i-- > 0;) {
                    current.params[i] = axes[i][rest % axes[i].size()];
                    rest /= axes[i].size();
                }
                current.verdict = evaluate(id, space, current.params, options.tolerance);
                current.valid = true;
                if (better(current, partial[t])) partial[t] = current;
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (threads == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(scan, t);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    Candidate best;
    for (const auto& c : partial)
        if (better(c, best)) best = c;
    return SearchResult{best.params, best.verdict, total, resolution};
}

SearchResult refine(InequalityId id, const ParameterSpace& space, std::span<const double> start,
                    const RefineOptions& options) {
    check_compatible(id, space.kind);
    if (!std::isfinite(options.initial_step) || options.initial_step <= 0.0)
        throw InputError("refine: initial_step must be positive");
    if (!(options.shrink > 0.0 && options.shrink < 1.0)) throw InputError("refine: shrink must lie in (0, 1)");
    if (!std::isfinite(options.min_step) || options.min_step <= 0.0)
        throw InputError("refine: min_step must be positive");
    if (!space.contains(start)) throw InputError("refine: start point lies outside the parameter space");

    std::vector<double> x(start.begin(), start.end());
    InequalityVerdict fx = evaluate(id, space, x, options.tolerance);
    std::size_t evaluations = 1;
    double step = options.initial_step;

    while (step > options.min_step && evaluations < options.max_evaluations) {
        bool moved = false;
        for (std::size_t i = 0; i < x.size() && !moved; ++i) {
            if (space.bounds[i].pinned()) continue;
            for (double sign : {+1.0, -1.0}) {
                std::vector<double> trial = x;
                trial[i] += sign * step;
                trial = space.normalize(trial);
                if (trial == x) continue;
                const InequalityVerdict ft = evaluate(id, space, trial, options.tolerance);
                ++evaluations;
                if (margin_key(ft.margin) > margin_key(fx.margin)) {
                    x = std::move(trial);
                    fx = ft;
                    moved = true;
                    break;
                }
                if (evaluations >= options.max_evaluations) break;
            }
        }
        if (!moved) step *= options.shrink;
    }
    return SearchResult{x, fx, evaluations, step};
}

std::vector<SweepPoint> sweep(InequalityId id, const ParameterSpace& space, std::span<const double> base,
                              std::size_t axis, double lo, double hi, std::size_t steps, double tolerance) {
    check_compatible(id, space.kind);
    if (base.size() != space.dimension()) throw InputError("sweep: base point has the wrong dimension");
    if (axis >= space.dimension()) throw InputError("sweep: axis out of range");
    if (steps < 2) throw InputError("sweep: steps must be >= 2");
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw InputError("sweep: range must be finite");
    std::vector<SweepPoint> out;
    out.reserve(steps);
    std::vector<double> p(base.begin(), base.end());
    for (std::size_t k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(steps - 1);
        p[axis] = k + 1 == steps ? hi : lo + (hi - lo) * t;
        const InequalityVerdict v = evaluate(id, space, p, tolerance);
        out.push_back({p[axis], v.lhs, v.rhs, v.margin});
    }
    return out;
}

}  // namespace bellunc::search
