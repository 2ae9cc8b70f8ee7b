#pragma once

// Local hidden-variable models over a finite weighted set of hidden states.
// Every observable is a real table O(lambda); statistics are weighted sums.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bellunc/profile.hpp"

namespace bellunc::lhv {

enum class Observable { A = 0, B = 1, C = 2, D = 3 };

inline constexpr double kWeightSumTolerance = 1e-12;

class LhvModel {
public:
    // Throws InputError unless: at least one point, all tables the same length
    // as `weights`, weights >= 0 summing to 1 within 1e-12, every table value
    // finite with |value| <= bound, bound > 0 and finite.
    LhvModel(std::vector<double> weights, std::array<std::vector<double>, 4> tables, double bound);

    // Same, with the bound taken as the largest |value| in the tables (or 1
    // for an all-zero model).
    static LhvModel with_implied_bound(std::vector<double> weights, std::array<std::vector<double>, 4> tables);

    std::size_t size() const { return weights_.size(); }
    double bound() const { return bound_; }
    std::span<const double> weights() const { return weights_; }
    std::span<const double> table(Observable which) const { return tables_[static_cast<std::size_t>(which)]; }

    friend bool operator==(const LhvModel&, const LhvModel&) = default;

private:
    std::vector<double> weights_;
    std::array<std::vector<double>, 4> tables_;
    double bound_;
};

// sum rho O
double lhv_mean(const LhvModel& model, Observable which);

// sum rho (O - <O>)^2
double lhv_variance(const LhvModel& model, Observable which);

// sum rho XY - <X><Y>, evaluated in centered form.
double lhv_covariance(const LhvModel& model, Observable x, Observable y);

CorrelationProfile lhv_profile(const LhvModel& model);

// Uncentered second moments sum rho XY in the correlation slots and
// sum rho X^2 in the variance slots. This is what the CHSH baseline uses for
// dichotomic models.
CorrelationProfile lhv_moment_profile(const LhvModel& model);

// Weighted inner product and norms of
//   u = (A - B) - (<A> - <B>),   v = (C + D) - (<C> + <D>).
struct SchwarzWitness {
    double inner = 0.0;
    double norm_u = 0.0;
    double norm_v = 0.0;
};

SchwarzWitness schwarz_witness(const LhvModel& model);

// Deterministic in `seed`: positive weights normalized to 1, tables uniform in
// [-bound, bound]. Throws InputError for n_points == 0 or bound <= 0.
LhvModel random_model(std::uint64_t seed, std::size_t n_points, double bound);

// True iff all four variances are <= tol.
bool is_dispersion_free(const LhvModel& model, double tol = 1e-12);

}  // namespace bellunc::lhv
