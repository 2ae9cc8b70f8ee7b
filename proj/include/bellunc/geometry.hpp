#pragma once

#include <array>

#include "bellunc/quantum.hpp"

namespace bellunc::geometry {

// Symmetric 4x4 matrix of pairwise dot products among a, b, c, d. The
// diagonal is exactly 1 and off-diagonal entries lie in [-1, 1].
class DotProductConfig {
public:
    // Throws InputError for asymmetric input, a diagonal other than 1, or an
    // off-diagonal entry outside [-1, 1] or non-finite.
    explicit DotProductConfig(const std::array<std::array<double, 4>, 4>& gram);

    // Serialized order (ab, ac, ad, bc, bd, cd).
    static DotProductConfig from_pairs(const std::array<double, 6>& pairs);
    static DotProductConfig from_pairs(const quantum::PairDots& dots);

    const std::array<std::array<double, 4>, 4>& gram() const { return gram_; }
    double operator()(int i, int j) const { return gram_[i][j]; }
    std::array<double, 6> pairs() const;
    quantum::PairDots dots() const;

private:
    std::array<std::array<double, 4>, 4> gram_;
};

DotProductConfig gram_of(const std::array<quantum::Direction, 4>& vectors);

// Eigenvalues sorted descending.
std::array<double, 4> eigenvalues(const DotProductConfig& config);

struct Realizability {
    bool realizable = false;  // min eigenvalue >= -tol
    int dimension = 0;        // eigenvalues > tol
    bool in_three_dimensions = false;
    std::array<double, 4> eigenvalues{};
};

Realizability classify(const DotProductConfig& config, double tol = 1e-9);

// min eigenvalue >= -tol
bool realizable(const DotProductConfig& config, double tol = 1e-9);

// Reconstructs unit vectors in R^3 reproducing the Gram matrix. Throws
// InputError unless the configuration is realizable in three dimensions.
std::array<quantum::Direction, 4> embed_in_three_dimensions(const DotProductConfig& config, double tol = 1e-9);

std::array<quantum::Direction, 4> planar(const std::array<quantum::PlanarAngle, 4>& angles);

}  // namespace bellunc::geometry
