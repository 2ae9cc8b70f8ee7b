#include "bellunc/lhv.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "bellunc/errors.hpp"

namespace bellunc::lhv {

namespace {

double weighted_sum(std::span<const double> w, std::span<const double> x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * x[i];
    return acc;
}

double centered_product(const LhvModel& m, Observable x, Observable y) {
    const auto w = m.weights();
    const auto tx = m.table(x);
    const auto ty = m.table(y);
    const double mx = weighted_sum(w, tx);
    const double my = weighted_sum(w, ty);
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * (tx[i] - mx) * (ty[i] - my);
    return acc;
}

double raw_product(const LhvModel& m, Observable x, Observable y) {
    const auto w = m.weights();
    const auto tx = m.table(x);
    const auto ty = m.table(y);
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * tx[i] * ty[i];
    return acc;
}

}  // namespace

LhvModel::LhvModel(std::vector<double> weights, std::array<std::vector<double>, 4> tables, double bound)
    : weights_(std::move(weights)), tables_(std::move(tables)), bound_(bound) {
    if (weights_.empty()) throw InputError("LHV model needs at least one point");
    if (!std::isfinite(bound_) || bound_ <= 0.0) throw InputError("LHV model bound must be positive and finite");
    static constexpr const char* kNames[4] = {"A", "B", "C", "D"};
    for (std::size_t k = 0; k < 4; ++k) {
        if (tables_[k].size() != weights_.size()) {
            std::ostringstream os;
            os << "LHV table " << kNames[k] << " has " << tables_[k].size() << " entries, expected "
               << weights_.size();
            throw InputError(os.str());
        }
        for (double v : tables_[k]) {
            if (!std::isfinite(v) || std::abs(v) > bound_) {
                std::ostringstream os;
                os << "LHV table " << kNames[k] << " value " << v << " is not finite or exceeds bound " << bound_;
                throw InputError(os.str());
            }
        }
    }
    double total = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0) throw InputError("LHV weights must be finite and nonnegative");
        total += w;
    }
    if (std::abs(total - 1.0) > kWeightSumTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "LHV weights sum to " << total << ", not 1";
        throw InputError(os.str());
    }
}

LhvModel LhvModel::with_implied_bound(std::vector<double> weights, std::array<std::vector<double>, 4> tables) {
    double bound = 0.0;
    for (const auto& t : tables)
        for (double v : t)
            if (std::isfinite(v)) bound = std::max(bound, std::abs(v));
    if (bound == 0.0) bound = 1.0;
    return LhvModel(std::move(weights), std::move(tables), bound);
}

double lhv_mean(const LhvModel& model, Observable which) { return weighted_sum(model.weights(), model.table(which)); }

double lhv_variance(const LhvModel& model, Observable which) { return centered_product(model, which, which); }

double lhv_covariance(const LhvModel& model, Observable x, Observable y) { return centered_product(model, x, y); }

CorrelationProfile lhv_profile(const LhvModel& m) {
    using enum Observable;
    CorrelationProfile p;
    p.eAC = lhv_covariance(m, A, C);
    p.eAD = lhv_covariance(m, A, D);
    p.eBC = lhv_covariance(m, B, C);
    p.eBD = lhv_covariance(m, B, D);
    p.eAB = lhv_covariance(m, A, B);
    p.eCD = lhv_covariance(m, C, D);
    p.varA = lhv_variance(m, A);
    p.varB = lhv_variance(m, B);
    p.varC = lhv_variance(m, C);
    p.varD = lhv_variance(m, D);
    return p;
}

CorrelationProfile lhv_moment_profile(const LhvModel& m) {
    using enum Observable;
    CorrelationProfile p;
    p.eAC = raw_product(m, A, C);
    p.eAD = raw_product(m, A, D);
    p.eBC = raw_product(m, B, C);
    p.eBD = raw_product(m, B, D);
    p.eAB = raw_product(m, A, B);
    p.eCD = raw_product(m, C, D);
    p.varA = raw_product(m, A, A);
    p.varB = raw_product(m, B, B);
    p.varC = raw_product(m, C, C);
    p.varD = raw_product(m, D, D);
    return p;
}

SchwarzWitness schwarz_witness(const LhvModel& m) {
    using enum Observable;
    const auto w = m.weights();
    const auto a = m.table(A);
    const auto b = m.table(B);
    const auto c = m.table(C);
    const auto d = m.table(D);
    const double u_mean = lhv_mean(m, A) - lhv_mean(m, B);
    const double v_mean = lhv_mean(m, C) + lhv_mean(m, D);
    SchwarzWitness out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double u = (a[i] - b[i]) - u_mean;
        const double v = (c[i] + d[i]) - v_mean;
        out.inner += w[i] * u * v;
        out.norm_u += w[i] * u * u;
        out.norm_v += w[i] * v * v;
    }
    return out;
}

LhvModel random_model(std::uint64_t seed, std::size_t n_points, double bound) {
    if (n_points == 0) throw InputError("random_model: n_points must be >= 1");
    if (!std::isfinite(bound) || bound <= 0.0) throw InputError("random_model: bound must be positive");
    std::mt19937_64 rng(seed);
    // Strictly positive raw weights; (0, 1] avoids a zero total.
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> value(-bound, bound);
    std::vector<double> weights(n_points);
    double total = 0.0;
    for (auto& w : weights) {
        w = 1.0 - unit(rng);
        total += w;
    }
    for (auto& w : weights) w /= total;
    std::array<std::vector<double>, 4> tables;
    for (auto& t : tables) {
        t.resize(n_points);
        for (auto& v : t) v = value(rng);
    }
    return LhvModel(std::move(weights), std::move(tables), bound);
}

bool is_dispersion_free(const LhvModel& model, double tol) {
    for (Observable o : {Observable::A, Observable::B, Observable::C, Observable::D})
        if (lhv_variance(model, o) > tol) return false;
    return true;
}

}  // namespace bellunc::lhv
