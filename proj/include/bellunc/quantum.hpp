#pragma once

// Pure-state spin-1/2 toolkit for up to four qubits: states, Pauli
// observables along arbitrary directions, and their exact second-order
// statistics by dense matrix arithmetic.
//
// Basis convention: qubit 0 is the most significant bit of the basis index,
// and spin-up |+> is bit value 0. For two qubits the order is
// |++>, |+->, |-+>, |-->.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "bellunc/profile.hpp"

namespace bellunc::quantum {

using Complex = std::complex<double>;

inline constexpr double kUnitTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kImagResidueLimit = 1e-9;
inline constexpr double kClosedFormTolerance = 1e-10;

// Unit vector in R^3. Construction rejects |v|^2 off by more than 1e-12.
class Direction {
public:
    Direction(double x, double y, double z);

    // (cos theta, sin theta, 0)
    static Direction planar(double theta);
    // (sin polar cos azimuth, sin polar sin azimuth, cos polar)
    static Direction spherical(double polar, double azimuth);

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

    double dot(const Direction& other) const { return x_ * other.x_ + y_ * other.y_ + z_ * other.z_; }
    Direction operator-() const { return Direction(-x_, -y_, -z_); }

private:
    double x_;
    double y_;
    double z_;
};

// Angle in the x-y plane, radians.
struct PlanarAngle {
    double theta = 0.0;

    Direction direction() const { return Direction::planar(theta); }
};

// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    ComplexMatrix(std::size_t dim, std::vector<Complex> row_major);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    ComplexMatrix adjoint() const;
    // Largest entrywise |M - M^dagger|.
    double hermitian_defect() const;
    double max_abs_entry() const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Self-adjoint operator. Construction rejects matrices whose Hermitian
// defect exceeds 1e-12, or whose dimension is not a power of two.
class HermitianOperator {
public:
    explicit HermitianOperator(ComplexMatrix m);

    std::size_t dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    // y = O x
    std::vector<Complex> apply(std::span<const Complex> x) const;

private:
    ComplexMatrix m_;
};

// Normalized pure state over 2^n amplitudes, 1 <= n <= 4.
class StateVector {
public:
    explicit StateVector(std::vector<Complex> amplitudes);

    std::size_t qubits() const { return qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

private:
    std::vector<Complex> amplitudes_;
    std::size_t qubits_ = 0;
};

// Computational basis state; `index` follows the big-endian convention above.
StateVector basis_state(std::size_t qubits, std::size_t index);

HermitianOperator pauli_x();
HermitianOperator pauli_y();
HermitianOperator pauli_z();

// x sigma_x + y sigma_y + z sigma_z
HermitianOperator pauli_dot(const Direction& direction);

// Embed a single-qubit operator at `slot` of an n-qubit register.
HermitianOperator lift(const HermitianOperator& op, std::size_t slot, std::size_t qubits);

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b);

// Product of two commuting observables. Throws InputError if XY is not
// self-adjoint (i.e. X and Y do not commute).
HermitianOperator product(const HermitianOperator& x, const HermitianOperator& y);

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);

// (|+-> - |-+>)/sqrt2
StateVector epr_state();
// (|++--> - |--++>)/sqrt2
StateVector ghz_state();

// <psi|O|psi>. Throws NumericError if the imaginary part exceeds 1e-9.
double expectation(const StateVector& state, const HermitianOperator& op);

// <(XY + YX)/2> - <X><Y>
double covariance(const StateVector& state, const HermitianOperator& x, const HermitianOperator& y);

// <X^2> - <X>^2; the same code path as covariance(state, x, x).
double variance(const StateVector& state, const HermitianOperator& x);

// Observables A = sigma_1.a, B = sigma_1.b, C = sigma_2.c, D = sigma_2.d.
std::array<HermitianOperator, 4> epr_observables(const Direction& a, const Direction& b, const Direction& c,
                                                 const Direction& d);

// Observables A = (sigma_1.a)(sigma_2.a), B likewise on qubits 1-2 with b,
// C = (sigma_3.c)(sigma_4.c), D likewise with d; all directions planar.
std::array<HermitianOperator, 4> ghz_observables(PlanarAngle alpha, PlanarAngle beta, PlanarAngle gamma,
                                                 PlanarAngle delta);

// Six pairwise dot products among the measurement directions a, b, c, d.
struct PairDots {
    double ab = 0.0;
    double ac = 0.0;
    double ad = 0.0;
    double bc = 0.0;
    double bd = 0.0;
    double cd = 0.0;
};

PairDots pair_dots(const Direction& a, const Direction& b, const Direction& c, const Direction& d);

// Singlet statistics in closed form: E(A,C) = -a.c, E(A,B) = a.b, unit variances.
CorrelationProfile epr_closed_profile(const PairDots& dots);

// GHZ statistics in closed form: E(A,C) = -cos 2(alpha - gamma),
// E(A,B) = cos 2(alpha - beta), unit variances.
CorrelationProfile ghz_closed_profile(PlanarAngle alpha, PlanarAngle beta, PlanarAngle gamma, PlanarAngle delta);

// Matrix-computed singlet profile. Each entry is cross-checked against the
// closed form; a mismatch above 1e-10 throws NumericError.
CorrelationProfile epr_profile(const Direction& a, const Direction& b, const Direction& c, const Direction& d);

// Matrix-computed (16x16) GHZ profile with the same closed-form self-check.
CorrelationProfile ghz_profile(PlanarAngle alpha, PlanarAngle beta, PlanarAngle gamma, PlanarAngle delta);

}  // namespace bellunc::quantum
