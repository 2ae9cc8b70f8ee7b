#include "bellunc/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bellunc/errors.hpp"
#include "bellunc/geometry.hpp"
#include "bellunc/lhv.hpp"
#include "bellunc/quantum.hpp"

namespace bellunc::commands {

namespace {

using report::Json;
using report::degrees_to_radians;
using quantum::Direction;
using quantum::PlanarAngle;

int decimals_of(double published) {
    // Printed figures carry at most four decimals.
    for (int d = 0; d <= 4; ++d) {
        const double scaled = published * std::pow(10.0, d);
        if (std::abs(scaled - std::round(scaled)) < 1e-9) return d;
    }
    return 4;
}

report::Discrepancy discrepancy(std::string location, double published, double computed) {
    return {std::move(location), published, decimals_of(published), computed};
}

std::array<PlanarAngle, 4> planar_from_degrees(const std::array<double, 4>& deg) {
    return {PlanarAngle{degrees_to_radians(deg[0])}, PlanarAngle{degrees_to_radians(deg[1])},
            PlanarAngle{degrees_to_radians(deg[2])}, PlanarAngle{degrees_to_radians(deg[3])}};
}

Json degrees_echo(const std::array<double, 4>& deg) {
    Json j;
    j["degrees"] = Json::array();
    j["radians"] = Json::array();
    for (double d : deg) {
        j["degrees"].push_back(d);
        j["radians"].push_back(degrees_to_radians(d));
    }
    return j;
}

Json vectors_json(const std::array<Direction, 4>& v) {
    Json j = Json::array();
    for (const auto& d : v) j.push_back(Json::array({d.x(), d.y(), d.z()}));
    return j;
}

Json pairs_json(const quantum::PairDots& d) {
    Json j;
    j["ab"] = d.ab;
    j["ac"] = d.ac;
    j["ad"] = d.ad;
    j["bc"] = d.bc;
    j["bd"] = d.bd;
    j["cd"] = d.cd;
    return j;
}

InequalityVerdict singlet_verdict(InequalityId id, const quantum::PairDots& dots, const CorrelationProfile& profile,
                                  double tol) {
    switch (id) {
        case InequalityId::EprGeneral:
            return epr_closed_form(dots, Mode::General, tol);
        case InequalityId::EprDispersionFree:
            return epr_closed_form(dots, Mode::DispersionFree, tol);
        case InequalityId::GhzGeneral:
        case InequalityId::GhzDispersionFree:
            throw InputError("GHZ inequalities need a ghz scenario");
        default:
            return evaluate_profile(id, profile, tol);
    }
}

Json evaluate_epr(const scenario::Scenario& s, InequalityId id, double tol, Json& parameters) {
    Json out;
    std::optional<std::array<Direction, 4>> vectors;
    if (s.angles_deg) {
        const auto angles = planar_from_degrees(*s.angles_deg);
        vectors = geometry::planar(angles);
        parameters["angles"] = degrees_echo(*s.angles_deg);
    } else if (s.vectors) {
        const auto& v = *s.vectors;
        vectors = std::array<Direction, 4>{Direction(v[0][0], v[0][1], v[0][2]), Direction(v[1][0], v[1][1], v[1][2]),
                                           Direction(v[2][0], v[2][1], v[2][2]), Direction(v[3][0], v[3][1], v[3][2])};
        parameters["vectors"] = vectors_json(*vectors);
    }

    quantum::PairDots dots;
    CorrelationProfile profile;
    std::optional<geometry::Realizability> realizability;
    std::string profile_source = "matrix";
    if (vectors) {
        const auto& v = *vectors;
        dots = quantum::pair_dots(v[0], v[1], v[2], v[3]);
        profile = quantum::epr_profile(v[0], v[1], v[2], v[3]);
        realizability = geometry::classify(geometry::gram_of(v));
    } else {
        const auto config = geometry::DotProductConfig::from_pairs(*s.dot_products);
        dots = config.dots();
        realizability = geometry::classify(config);
        parameters["dot_products"] = pairs_json(dots);
        if (realizability->in_three_dimensions) {
            const auto v = geometry::embed_in_three_dimensions(config);
            profile = quantum::epr_profile(v[0], v[1], v[2], v[3]);
            parameters["embedded_vectors"] = vectors_json(v);
        } else {
            profile = quantum::epr_closed_profile(dots);
            profile_source = "closed_form";
        }
    }
    out["profile_source"] = profile_source;
    out["profile"] = report::to_json(profile);
    out["verdicts"] = Json::array({report::to_json(singlet_verdict(id, dots, profile, tol))});
    out["realizability"] = report::to_json(*realizability);
    return out;
}

Json evaluate_ghz(const scenario::Scenario& s, InequalityId id, double tol, Json& parameters) {
    if (id == InequalityId::EprGeneral || id == InequalityId::EprDispersionFree)
        throw InputError("singlet inequalities need an epr scenario");
    const auto a = planar_from_degrees(*s.angles_deg);
    parameters["angles"] = degrees_echo(*s.angles_deg);
    const CorrelationProfile profile = quantum::ghz_profile(a[0], a[1], a[2], a[3]);
    InequalityVerdict v;
    if (id == InequalityId::GhzGeneral)
        v = ghz_closed_form(a[0], a[1], a[2], a[3], Mode::General, tol);
    else if (id == InequalityId::GhzDispersionFree)
        v = ghz_closed_form(a[0], a[1], a[2], a[3], Mode::DispersionFree, tol);
    else
        v = evaluate_profile(id, profile, tol);
    Json out;
    out["profile_source"] = "matrix";
    out["profile"] = report::to_json(profile);
    out["verdicts"] = Json::array({report::to_json(v)});
    return out;
}

}  // namespace

quantum::PairDots epr_example_dots() {
    const auto c = [](double deg) { return std::cos(degrees_to_radians(deg)); };
    const auto& a = kEprExamplePairAnglesDeg;
    return {c(a[0]), c(a[1]), c(a[2]), c(a[3]), c(a[4]), c(a[5])};
}

Json reproduce(Target target) {
    Json j;
    j["command"] = "reproduce";
    Json discrepancies = Json::array();
    if (target == Target::Epr) {
        j["target"] = "epr";
        const quantum::PairDots dots = epr_example_dots();
        Json params;
        Json angles;
        const std::array<const char*, 6> names{"ab", "ac", "ad", "bc", "bd", "cd"};
        for (std::size_t i = 0; i < 6; ++i) {
            angles[names[i]]["degrees"] = kEprExamplePairAnglesDeg[i];
            angles[names[i]]["radians"] = degrees_to_radians(kEprExamplePairAnglesDeg[i]);
        }
        params["pair_angles"] = angles;
        params["dot_products"] = pairs_json(dots);
        j["parameters"] = params;

        const auto df = epr_closed_form(dots, Mode::DispersionFree);
        const auto gen = epr_closed_form(dots, Mode::General);
        j["profile"] = report::to_json(quantum::epr_closed_profile(dots));
        j["verdicts"] = Json::array({report::to_json(df), report::to_json(gen)});
        j["realizability"] = report::to_json(geometry::classify(geometry::DotProductConfig::from_pairs(dots)));
        discrepancies.push_back(
            report::to_json(discrepancy("EPR general inequality, lhs", kPublishedEprGeneralLhs, gen.lhs)));
        discrepancies.push_back(
            report::to_json(discrepancy("EPR general inequality, rhs", kPublishedEprGeneralRhs, gen.rhs)));
    } else {
        j["target"] = "ghz";
        const auto a = planar_from_degrees(kGhzExampleAnglesDeg);
        Json params;
        params["angles"] = degrees_echo(kGhzExampleAnglesDeg);
        j["parameters"] = params;

        const auto df = ghz_closed_form(a[0], a[1], a[2], a[3], Mode::DispersionFree);
        const auto gen = ghz_closed_form(a[0], a[1], a[2], a[3], Mode::General);
        const auto alt_df = ghz_alternate_sign_form(a[0], a[1], a[2], a[3], Mode::DispersionFree);
        const auto alt_gen = ghz_alternate_sign_form(a[0], a[1], a[2], a[3], Mode::General);
        j["profile"] = report::to_json(quantum::ghz_profile(a[0], a[1], a[2], a[3]));
        j["verdicts"] = Json::array({report::to_json(df), report::to_json(gen)});
        j["alternate_sign_verdicts"] = Json::array({report::to_json(alt_df), report::to_json(alt_gen)});

        Json lhs = report::to_json(discrepancy("GHZ general inequality, lhs", kPublishedGhzGeneralLhs, gen.lhs));
        lhs["computed_alternate_sign"] = alt_gen.lhs;
        Json rhs = report::to_json(discrepancy("GHZ general inequality, rhs", kPublishedGhzGeneralRhs, gen.rhs));
        rhs["computed_alternate_sign"] = alt_gen.rhs;
        discrepancies.push_back(lhs);
        discrepancies.push_back(rhs);
    }
    j["discrepancies"] = discrepancies;
    return j;
}

Json evaluate(const scenario::Scenario& s, std::optional<InequalityId> inequality, std::optional<double> tolerance) {
    const std::optional<InequalityId> id = inequality ? inequality : s.inequality;
    if (!id) throw InputError("no inequality given (scenario field 'inequality' or --inequality)");
    const double tol = tolerance ? *tolerance : s.tolerance.value_or(kDefaultViolationTolerance);

    Json j;
    j["command"] = "evaluate";
    Json echo;
    echo["kind"] = std::string(scenario::to_string(s.kind));
    echo["inequality"] = std::string(to_string(*id));
    echo["tolerance"] = tol;
    Json parameters = Json::object();
    Json body;
    switch (s.kind) {
        case scenario::Kind::Epr:
            body = evaluate_epr(s, *id, tol, parameters);
            break;
        case scenario::Kind::Ghz:
            body = evaluate_ghz(s, *id, tol, parameters);
            break;
        case scenario::Kind::Profile: {
            parameters["profile"] = report::to_json(*s.profile);
            body["profile"] = report::to_json(*s.profile);
            body["verdicts"] = Json::array({report::to_json(evaluate_profile(*id, *s.profile, tol))});
            break;
        }
        case scenario::Kind::Lhv: {
            const lhv::LhvModel& m = *s.model;
            Json model;
            model["points"] = m.size();
            model["bound"] = m.bound();
            model["dispersion_free"] = lhv::is_dispersion_free(m);
            parameters["model"] = model;
            const CorrelationProfile p = lhv::lhv_profile(m);
            body["profile"] = report::to_json(p);
            body["verdicts"] = Json::array({report::to_json(evaluate_profile(*id, p, tol))});
            const auto w = lhv::schwarz_witness(m);
            body["schwarz_witness"] = {{"inner", w.inner}, {"norm_u", w.norm_u}, {"norm_v", w.norm_v}};
            break;
        }
    }
    echo["parameters"] = parameters;
    j["scenario"] = echo;
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    j["discrepancies"] = Json::array();
    return j;
}

Json run_search(const SearchRequest& r) {
    if (!std::isfinite(r.resolution_deg) || r.resolution_deg <= 0.0) throw InputError("resolution must be positive");
    const auto space = search::ParameterSpace::standard(r.space);
    const double resolution = degrees_to_radians(r.resolution_deg);
    search::GridOptions grid;
    grid.threads = r.threads;
    grid.tolerance = r.tolerance;
    const search::SearchResult result = search::grid_search(r.inequality, space, resolution, grid);

    Json j;
    j["command"] = "search";
    j["inequality"] = std::string(to_string(r.inequality));
    j["space"] = std::string(search::to_string(r.space));
    j["resolution"] = {{"degrees", r.resolution_deg}, {"radians", resolution}};
    Json grid_json;
    grid_json["best_params"] = report::angle_pair(result.best_params);
    grid_json["verdict"] = report::to_json(result.best_verdict);
    grid_json["evaluations"] = result.evaluations;
    j["grid"] = grid_json;
    if (r.refine) {
        search::RefineOptions opts;
        opts.initial_step = resolution / 2.0;
        opts.shrink = 0.5;
        opts.min_step = 1e-9;
        opts.tolerance = r.tolerance;
        const search::SearchResult refined = search::refine(r.inequality, space, result.best_params, opts);
        Json rj;
        rj["best_params"] = report::angle_pair(refined.best_params);
        rj["verdict"] = report::to_json(refined.best_verdict);
        rj["evaluations"] = refined.evaluations;
        rj["final_step"] = {{"degrees", report::radians_to_degrees(refined.resolution)},
                            {"radians", refined.resolution}};
        j["refined"] = rj;
    }
    return j;
}

LhvCheckOutcome lhv_check(const LhvCheckRequest& r) {
    if (r.models < 1) throw InputError("--models must be >= 1");
    if (r.points < 1) throw InputError("--points must be >= 1");
    double max_margin = -std::numeric_limits<double>::infinity();
    std::uint64_t max_seed = r.seed;
    Json failures = Json::array();
    for (std::size_t i = 0; i < r.models; ++i) {
        const std::uint64_t seed = r.seed + i;
        const lhv::LhvModel m = lhv::random_model(seed, r.points, r.bound);
        const InequalityVerdict v = general_verdict(lhv::lhv_profile(m), r.tolerance);
        if (v.margin > max_margin) {
            max_margin = v.margin;
            max_seed = seed;
        }
        if (v.violated) failures.push_back({{"seed", seed}, {"margin", v.margin}});
    }
    LhvCheckOutcome out;
    out.passed = failures.empty();
    Json& j = out.report;
    j["command"] = "lhv-check";
    j["models"] = r.models;
    j["points"] = r.points;
    j["bound"] = r.bound;
    j["seed"] = r.seed;
    j["inequality"] = std::string(to_string(InequalityId::General));
    j["tolerance"] = r.tolerance;
    j["max_margin"] = max_margin;
    j["max_margin_seed"] = max_seed;
    j["passed"] = out.passed;
    j["failures"] = failures;
    return out;
}

std::vector<search::SweepPoint> run_sweep(const SweepRequest& r) {
    const auto space = search::ParameterSpace::standard(r.space);
    if (r.base_deg.size() != space.dimension())
        throw InputError("--base needs " + std::to_string(space.dimension()) + " values for space " +
                         std::string(search::to_string(r.space)));
    std::vector<double> base(r.base_deg.size());
    std::transform(r.base_deg.begin(), r.base_deg.end(), base.begin(), degrees_to_radians);
    auto rows = search::sweep(r.inequality, space, base, r.axis, degrees_to_radians(r.lo_deg),
                              degrees_to_radians(r.hi_deg), r.steps, r.tolerance);
    // Report the coordinate as the exact degree lattice rather than a round trip through radians.
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(rows.size() - 1);
        rows[k].coord = k + 1 == rows.size() ? r.hi_deg : r.lo_deg + (r.hi_deg - r.lo_deg) * t;
    }
    return rows;
}

std::string sweep_csv(const std::vector<search::SweepPoint>& rows) {
    std::string out = "coord,lhs,rhs,margin\n";
    for (const auto& p : rows) {
        out += report::format_double(p.coord);
        out += ',';
        out += report::format_double(p.lhs);
        out += ',';
        out += report::format_double(p.rhs);
        out += ',';
        out += report::format_double(p.margin);
        out += '\n';
    }
    return out;
}

Json sweep_json(const SweepRequest& r, const std::vector<search::SweepPoint>& rows) {
    Json j;
    j["command"] = "sweep";
    j["inequality"] = std::string(to_string(r.inequality));
    j["space"] = std::string(search::to_string(r.space));
    Json base;
    base["degrees"] = Json::array();
    base["radians"] = Json::array();
    for (double d : r.base_deg) {
        base["degrees"].push_back(d);
        base["radians"].push_back(degrees_to_radians(d));
    }
    j["base"] = base;
    j["axis"] = r.axis;
    j["range_degrees"] = Json::array({r.lo_deg, r.hi_deg});
    j["steps"] = r.steps;
    Json series = Json::array();
    for (const auto& p : rows)
        series.push_back({{"coord", p.coord}, {"lhs", p.lhs}, {"rhs", p.rhs}, {"margin", p.margin}});
    j["series"] = series;
    return j;
}

}  // namespace bellunc::commands
