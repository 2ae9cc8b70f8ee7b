#include "bellunc/inequalities.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "bellunc/errors.hpp"

namespace bellunc {

namespace {

constexpr std::array<std::pair<InequalityId, std::string_view>, 7> kNames{{
    {InequalityId::General, "general"},
    {InequalityId::DispersionFree, "dispersion_free"},
    {InequalityId::EprGeneral, "epr_general"},
    {InequalityId::EprDispersionFree, "epr_dispersion_free"},
    {InequalityId::GhzGeneral, "ghz_general"},
    {InequalityId::GhzDispersionFree, "ghz_dispersion_free"},
    {InequalityId::Chsh, "chsh"},
}};

void check_tolerance(double tolerance) {
    if (!std::isfinite(tolerance) || tolerance < 0.0) throw InputError("violation tolerance must be finite and >= 0");
}

InequalityVerdict relabel(InequalityVerdict v, InequalityId id) {
    v.id = id;
    return v;
}

}  // namespace

void validate(const CorrelationProfile& p, double slack) {
    const std::array<std::pair<const char*, double>, 10> fields{{
        {"eAC", p.eAC}, {"eAD", p.eAD}, {"eBC", p.eBC}, {"eBD", p.eBD}, {"eAB", p.eAB},
        {"eCD", p.eCD}, {"varA", p.varA}, {"varB", p.varB}, {"varC", p.varC}, {"varD", p.varD},
    }};
    for (const auto& [name, value] : fields)
        if (!std::isfinite(value)) throw InputError(std::string("profile field ") + name + " is not finite");
    for (std::size_t i = 6; i < fields.size(); ++i) {
        if (fields[i].second < -slack) {
            std::ostringstream os;
            os << "profile variance " << fields[i].first << " = " << fields[i].second << " is negative";
            throw InputError(os.str());
        }
    }
}

std::string_view to_string(InequalityId id) {
    for (const auto& [k, name] : kNames)
        if (k == id) return name;
    return "unknown";
}

std::optional<InequalityId> parse_inequality_id(std::string_view name) {
    std::string normalized(name);
    for (char& ch : normalized)
        if (ch == '-') ch = '_';
    for (const auto& [k, n] : kNames)
        if (n == normalized) return k;
    return std::nullopt;
}

bool is_generic(InequalityId id) {
    return id == InequalityId::General || id == InequalityId::DispersionFree || id == InequalityId::Chsh;
}

InequalityVerdict make_verdict(InequalityId id, double lhs, double rhs, double tolerance) {
    check_tolerance(tolerance);
    if (!std::isfinite(lhs) || !std::isfinite(rhs) || !std::isfinite(lhs - rhs))
        throw NumericError(std::string(to_string(id)) + ": evaluation overflowed to a non-finite value");
    InequalityVerdict v;
    v.id = id;
    v.lhs = lhs;
    v.rhs = rhs;
    v.margin = lhs - rhs;
    v.violated = v.margin > tolerance;
    v.tolerance = tolerance;
    return v;
}

double correlation_combination(const CorrelationProfile& p) { return p.eAC + p.eAD - p.eBC - p.eBD; }

InequalityVerdict general_verdict(const CorrelationProfile& p, double tolerance) {
    validate(p);
    const double s = correlation_combination(p);
    const double rhs = (p.varA + p.varB - 2.0 * p.eAB) * (p.varC + p.varD + 2.0 * p.eCD);
    return make_verdict(InequalityId::General, s * s, rhs, tolerance);
}

InequalityVerdict dispersion_free_verdict(const CorrelationProfile& p, double tolerance) {
    validate(p);
    const double s = correlation_combination(p);
    return make_verdict(InequalityId::DispersionFree, s * s + 4.0 * p.eAB * p.eCD, 0.0, tolerance);
}

InequalityVerdict chsh_verdict(const CorrelationProfile& p, double tolerance) {
    validate(p);
    return make_verdict(InequalityId::Chsh, std::abs(p.eAC + p.eAD + p.eBC - p.eBD), 2.0, tolerance);
}

InequalityVerdict epr_closed_form(const quantum::PairDots& d, Mode mode, double tolerance) {
    const std::array<double, 6> all{d.ab, d.ac, d.ad, d.bc, d.bd, d.cd};
    for (double x : all)
        if (!std::isfinite(x) || std::abs(x) > 1.0 + 1e-12) throw InputError("dot products must lie in [-1, 1]");
    const double s = d.ac + d.ad - d.bc - d.bd;
    if (mode == Mode::DispersionFree)
        return make_verdict(InequalityId::EprDispersionFree, s * s + 4.0 * d.ab * d.cd, 0.0, tolerance);
    return make_verdict(InequalityId::EprGeneral, s * s, 4.0 * (1.0 - d.ab) * (1.0 + d.cd), tolerance);
}

InequalityVerdict epr_closed_form(const quantum::Direction& a, const quantum::Direction& b,
                                  const quantum::Direction& c, const quantum::Direction& d, Mode mode,
                                  double tolerance) {
    return epr_closed_form(quantum::pair_dots(a, b, c, d), mode, tolerance);
}

InequalityVerdict ghz_closed_form(quantum::PlanarAngle alpha, quantum::PlanarAngle beta, quantum::PlanarAngle gamma,
                                  quantum::PlanarAngle delta, Mode mode, double tolerance) {
    const CorrelationProfile p = quantum::ghz_profile(alpha, beta, gamma, delta);
    if (mode == Mode::DispersionFree)
        return relabel(dispersion_free_verdict(p, tolerance), InequalityId::GhzDispersionFree);
    return relabel(general_verdict(p, tolerance), InequalityId::GhzGeneral);
}

InequalityVerdict ghz_alternate_sign_form(quantum::PlanarAngle alpha, quantum::PlanarAngle beta,
                                          quantum::PlanarAngle gamma, quantum::PlanarAngle delta, Mode mode,
                                          double tolerance) {
    const CorrelationProfile p = quantum::ghz_closed_profile(alpha, beta, gamma, delta);
    const double s = p.eAC + p.eBC - p.eAD - p.eBD;
    if (mode == Mode::DispersionFree)
        return make_verdict(InequalityId::GhzDispersionFree, s * s + 4.0 * p.eAB * p.eCD, 0.0, tolerance);
    return make_verdict(InequalityId::GhzGeneral, s * s, 4.0 * (1.0 - p.eAB) * (1.0 + p.eCD), tolerance);
}

InequalityVerdict evaluate_profile(InequalityId id, const CorrelationProfile& p, double tolerance) {
    switch (id) {
        case InequalityId::General:
            return general_verdict(p, tolerance);
        case InequalityId::DispersionFree:
            return dispersion_free_verdict(p, tolerance);
        case InequalityId::Chsh:
            return chsh_verdict(p, tolerance);
        default:
            throw InputError(std::string("inequality '") + std::string(to_string(id)) +
                             "' needs a quantum state, not a bare profile");
    }
}

}  // namespace bellunc
