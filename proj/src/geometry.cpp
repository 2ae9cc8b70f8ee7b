#include "bellunc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "bellunc/errors.hpp"

namespace bellunc::geometry {

namespace {

constexpr double kSymmetryTolerance = 1e-12;

Eigen::Matrix4d to_eigen(const DotProductConfig& config) {
    Eigen::Matrix4d m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = config(i, j);
    return m;
}

}  // namespace

DotProductConfig::DotProductConfig(const std::array<std::array<double, 4>, 4>& gram) : gram_(gram) {
    for (int i = 0; i < 4; ++i) {
        if (gram_[i][i] != 1.0) throw InputError("Gram diagonal must be exactly 1");
        for (int j = 0; j < 4; ++j) {
            const double v = gram_[i][j];
            if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
                std::ostringstream os;
                os << "dot product (" << i << ", " << j << ") = " << v << " lies outside [-1, 1]";
                throw InputError(os.str());
            }
            if (std::abs(v - gram_[j][i]) > kSymmetryTolerance) throw InputError("Gram matrix is not symmetric");
        }
    }
}

DotProductConfig DotProductConfig::from_pairs(const std::array<double, 6>& p) {
    return DotProductConfig({{
        {1.0, p[0], p[1], p[2]},
        {p[0], 1.0, p[3], p[4]},
        {p[1], p[3], 1.0, p[5]},
        {p[2], p[4], p[5], 1.0},
    }});
}

DotProductConfig DotProductConfig::from_pairs(const quantum::PairDots& d) {
    return from_pairs(std::array<double, 6>{d.ab, d.ac, d.ad, d.bc, d.bd, d.cd});
}

std::array<double, 6> DotProductConfig::pairs() const {
    return {gram_[0][1], gram_[0][2], gram_[0][3], gram_[1][2], gram_[1][3], gram_[2][3]};
}

quantum::PairDots DotProductConfig::dots() const {
    const auto p = pairs();
    return {p[0], p[1], p[2], p[3], p[4], p[5]};
}

DotProductConfig gram_of(const std::array<quantum::Direction, 4>& v) {
    std::array<std::array<double, 4>, 4> g{};
    for (int i = 0; i < 4; ++i) {
        g[i][i] = 1.0;
        for (int j = i + 1; j < 4; ++j) g[i][j] = g[j][i] = std::clamp(v[i].dot(v[j]), -1.0, 1.0);
    }
    return DotProductConfig(g);
}

std::array<double, 4> eigenvalues(const DotProductConfig& config) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(to_eigen(config), Eigen::EigenvaluesOnly);
    const Eigen::Vector4d ev = solver.eigenvalues();  // ascending
    return {ev(3), ev(2), ev(1), ev(0)};
}

Realizability classify(const DotProductConfig& config, double tol) {
    if (!std::isfinite(tol) || tol < 0.0) throw InputError("realizability tolerance must be >= 0");
    Realizability r;
    r.eigenvalues = eigenvalues(config);
    r.realizable = r.eigenvalues[3] >= -tol;
    r.dimension = static_cast<int>(std::count_if(r.eigenvalues.begin(), r.eigenvalues.end(),
                                                 [tol](double e) { return e > tol; }));
    r.in_three_dimensions = r.realizable && r.dimension <= 3;
    return r;
}

bool realizable(const DotProductConfig& config, double tol) { return classify(config, tol).realizable; }

std::array<quantum::Direction, 4> embed_in_three_dimensions(const DotProductConfig& config, double tol) {
    const Realizability r = classify(config, tol);
    if (!r.in_three_dimensions)
        throw InputError(r.realizable ? "dot products are realizable only in four dimensions"
                                      : "dot products are not realizable by unit vectors");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(to_eigen(config));
    const Eigen::Vector4d ev = solver.eigenvalues();
    const Eigen::Matrix4d vecs = solver.eigenvectors();
    // Rows of V sqrt(Lambda) over the three largest eigenvalues.
    Eigen::Matrix<double, 4, 3> coords;
    for (int k = 0; k < 3; ++k) {
        const double s = std::sqrt(std::max(ev(3 - k), 0.0));
        coords.col(k) = vecs.col(3 - k) * s;
    }
    std::array<quantum::Direction, 4> out{quantum::Direction(0, 0, 1), quantum::Direction(0, 0, 1),
                                          quantum::Direction(0, 0, 1), quantum::Direction(0, 0, 1)};
    for (int i = 0; i < 4; ++i) {
        Eigen::Vector3d row = coords.row(i).transpose();
        row.normalize();
        out[i] = quantum::Direction(row(0), row(1), row(2));
    }
    return out;
}

std::array<quantum::Direction, 4> planar(const std::array<quantum::PlanarAngle, 4>& angles) {
    return {angles[0].direction(), angles[1].direction(), angles[2].direction(), angles[3].direction()};
}

}  // namespace bellunc::geometry
