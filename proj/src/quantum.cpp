#include "bellunc/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "bellunc/errors.hpp"

namespace bellunc::quantum {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t log2_exact(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

void require_same_dim(std::size_t state_dim, std::size_t op_dim, const char* what) {
    if (state_dim != op_dim) {
        std::ostringstream os;
        os << what << ": dimension mismatch (state " << state_dim << ", operator " << op_dim << ")";
        throw InputError(os.str());
    }
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

// Cached O|psi> for a set of observables, from which means and symmetrized
// second moments follow by inner products alone.
struct Applied {
    std::vector<Complex> image;
    double mean = 0.0;
};

Applied apply_to(const StateVector& state, const HermitianOperator& op) {
    require_same_dim(state.dim(), op.dim(), "expectation");
    Applied out;
    out.image = op.apply(state.amplitudes());
    const Complex value = inner(state.amplitudes(), out.image);
    if (std::abs(value.imag()) > kImagResidueLimit) {
        std::ostringstream os;
        os << "expectation has imaginary part " << value.imag();
        throw NumericError(os.str());
    }
    out.mean = value.real();
    return out;
}

double covariance_of(const Applied& x, const Applied& y) {
    // <psi|(XY + YX)/2|psi> = Re <X psi|Y psi> for self-adjoint X, Y.
    return inner(x.image, y.image).real() - x.mean * y.mean;
}

CorrelationProfile profile_from(const StateVector& state, const std::array<HermitianOperator, 4>& obs) {
    const Applied a = apply_to(state, obs[0]);
    const Applied b = apply_to(state, obs[1]);
    const Applied c = apply_to(state, obs[2]);
    const Applied d = apply_to(state, obs[3]);
    CorrelationProfile p;
    p.eAC = covariance_of(a, c);
    p.eAD = covariance_of(a, d);
    p.eBC = covariance_of(b, c);
    p.eBD = covariance_of(b, d);
    p.eAB = covariance_of(a, b);
    p.eCD = covariance_of(c, d);
    p.varA = covariance_of(a, a);
    p.varB = covariance_of(b, b);
    p.varC = covariance_of(c, c);
    p.varD = covariance_of(d, d);
    return p;
}

void check_against(const CorrelationProfile& computed, const CorrelationProfile& closed, const char* label) {
    const std::array<std::pair<const char*, std::pair<double, double>>, 10> rows{{
        {"E(A,C)", {computed.eAC, closed.eAC}},
        {"E(A,D)", {computed.eAD, closed.eAD}},
        {"E(B,C)", {computed.eBC, closed.eBC}},
        {"E(B,D)", {computed.eBD, closed.eBD}},
        {"E(A,B)", {computed.eAB, closed.eAB}},
        {"E(C,D)", {computed.eCD, closed.eCD}},
        {"var A", {computed.varA, closed.varA}},
        {"var B", {computed.varB, closed.varB}},
        {"var C", {computed.varC, closed.varC}},
        {"var D", {computed.varD, closed.varD}},
    }};
    for (const auto& [name, values] : rows) {
        const double diff = std::abs(values.first - values.second);
        if (!(diff <= kClosedFormTolerance)) {
            std::ostringstream os;
            os.precision(17);
            os << label << " profile: " << name << " matrix value " << values.first << " differs from closed form "
               << values.second << " by " << diff;
            throw NumericError(os.str());
        }
    }
}

}  // namespace

Direction::Direction(double x, double y, double z) : x_(x), y_(y), z_(z) {
    const double n2 = x * x + y * y + z * z;
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kUnitTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "direction (" << x << ", " << y << ", " << z << ") is not a unit vector";
        throw InputError(os.str());
    }
}

Direction Direction::planar(double theta) { return Direction(std::cos(theta), std::sin(theta), 0.0); }

Direction Direction::spherical(double polar, double azimuth) {
    const double s = std::sin(polar);
    return Direction(s * std::cos(azimuth), s * std::sin(azimuth), std::cos(polar));
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> row_major) : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim * dim) throw InputError("matrix entry count does not match dimension");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

double ComplexMatrix::hermitian_defect() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r; c < dim_; ++c)
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

double ComplexMatrix::max_abs_entry() const {
    double worst = 0.0;
    for (const auto& v : data_) worst = std::max(worst, std::abs(v));
    return worst;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw InputError("matrix product: dimension mismatch");
    const std::size_t n = a.dim_;
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) continue;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw InputError("matrix sum: dimension mismatch");
    ComplexMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw InputError("matrix difference: dimension mismatch");
    ComplexMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t ra = 0; ra < na; ++ra)
        for (std::size_t ca = 0; ca < na; ++ca) {
            const Complex s = a(ra, ca);
            if (s == Complex{}) continue;
            for (std::size_t rb = 0; rb < nb; ++rb)
                for (std::size_t cb = 0; cb < nb; ++cb) out(ra * nb + rb, ca * nb + cb) = s * b(rb, cb);
        }
    return out;
}

HermitianOperator::HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {
    if (!is_power_of_two(m_.dim())) throw InputError("operator dimension must be a power of two");
    const double defect = m_.hermitian_defect();
    if (!(defect <= kHermitianTolerance)) {
        std::ostringstream os;
        os << "operator is not self-adjoint (defect " << defect << ")";
        throw InputError(os.str());
    }
}

std::vector<Complex> HermitianOperator::apply(std::span<const Complex> x) const {
    const std::size_t n = dim();
    if (x.size() != n) throw InputError("operator apply: dimension mismatch");
    std::vector<Complex> y(n);
    for (std::size_t r = 0; r < n; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < n; ++c) acc += m_(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    const std::size_t n = amplitudes_.size();
    if (!is_power_of_two(n) || n < 2 || n > 16) throw InputError("state length must be 2^n with 1 <= n <= 4");
    qubits_ = log2_exact(n);
    double norm2 = 0.0;
    for (const auto& a : amplitudes_) norm2 += std::norm(a);
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kUnitTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "state is not normalized (norm^2 = " << norm2 << ")";
        throw InputError(os.str());
    }
}

StateVector basis_state(std::size_t qubits, std::size_t index) {
    if (qubits < 1 || qubits > 4) throw InputError("basis_state: qubit count must be in [1, 4]");
    const std::size_t dim = std::size_t{1} << qubits;
    if (index >= dim) throw InputError("basis_state: index out of range");
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

HermitianOperator pauli_x() { return HermitianOperator(ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0})); }

HermitianOperator pauli_y() {
    return HermitianOperator(ComplexMatrix(2, {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0}));
}

HermitianOperator pauli_z() { return HermitianOperator(ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0})); }

HermitianOperator pauli_dot(const Direction& n) {
    return HermitianOperator(ComplexMatrix(2, {
                                                  Complex{n.z(), 0.0},
                                                  Complex{n.x(), -n.y()},
                                                  Complex{n.x(), n.y()},
                                                  Complex{-n.z(), 0.0},
                                              }));
}

HermitianOperator lift(const HermitianOperator& op, std::size_t slot, std::size_t qubits) {
    if (op.dim() != 2) throw InputError("lift: operator must act on a single qubit");
    if (qubits < 1 || qubits > 4) throw InputError("lift: qubit count must be in [1, 4]");
    if (slot >= qubits) throw InputError("lift: slot out of range");
    ComplexMatrix m = ComplexMatrix::identity(1);
    for (std::size_t q = 0; q < qubits; ++q) m = kron(m, q == slot ? op.matrix() : ComplexMatrix::identity(2));
    return HermitianOperator(std::move(m));
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b) {
    return HermitianOperator(kron(a.matrix(), b.matrix()));
}

HermitianOperator product(const HermitianOperator& x, const HermitianOperator& y) {
    if (x.dim() != y.dim()) throw InputError("product: dimension mismatch");
    ComplexMatrix xy = x.matrix() * y.matrix();
    if (xy.hermitian_defect() > kHermitianTolerance) throw InputError("product: factors do not commute");
    return HermitianOperator(std::move(xy));
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) { return x * y - y * x; }

StateVector epr_state() {
    const double h = std::numbers::sqrt2 / 2.0;
    return StateVector({0.0, h, -h, 0.0});
}

StateVector ghz_state() {
    const double h = std::numbers::sqrt2 / 2.0;
    std::vector<Complex> amps(16);
    amps[0b0011] = h;   // |++-->
    amps[0b1100] = -h;  // |--++>
    return StateVector(std::move(amps));
}

double expectation(const StateVector& state, const HermitianOperator& op) { return apply_to(state, op).mean; }

double covariance(const StateVector& state, const HermitianOperator& x, const HermitianOperator& y) {
    return covariance_of(apply_to(state, x), apply_to(state, y));
}

double variance(const StateVector& state, const HermitianOperator& x) {
    const Applied ax = apply_to(state, x);
    return covariance_of(ax, ax);
}

std::array<HermitianOperator, 4> epr_observables(const Direction& a, const Direction& b, const Direction& c,
                                                 const Direction& d) {
    return {lift(pauli_dot(a), 0, 2), lift(pauli_dot(b), 0, 2), lift(pauli_dot(c), 1, 2), lift(pauli_dot(d), 1, 2)};
}

std::array<HermitianOperator, 4> ghz_observables(PlanarAngle alpha, PlanarAngle beta, PlanarAngle gamma,
                                                 PlanarAngle delta) {
    // (sigma.n) x (sigma.n) on a pair, padded with the identity on the other pair.
    const HermitianOperator id4(ComplexMatrix::identity(4));
    const auto pair = [](PlanarAngle angle) {
        const HermitianOperator s = pauli_dot(angle.direction());
        return kron(s, s);
    };
    return {kron(pair(alpha), id4), kron(pair(beta), id4), kron(id4, pair(gamma)), kron(id4, pair(delta))};
}

PairDots pair_dots(const Direction& a, const Direction& b, const Direction& c, const Direction& d) {
    return {a.dot(b), a.dot(c), a.dot(d), b.dot(c), b.dot(d), c.dot(d)};
}

CorrelationProfile epr_closed_profile(const PairDots& dots) {
    CorrelationProfile p;
    p.eAC = -dots.ac;
    p.eAD = -dots.ad;
    p.eBC = -dots.bc;
    p.eBD = -dots.bd;
    p.eAB = dots.ab;
    p.eCD = dots.cd;
    p.varA = p.varB = p.varC = p.varD = 1.0;
    return p;
}

CorrelationProfile ghz_closed_profile(PlanarAngle alpha, PlanarAngle beta, PlanarAngle gamma, PlanarAngle delta) {
    const auto c2 = [](double x) { return std::cos(2.0 * x); };
    CorrelationProfile p;
    p.eAC = -c2(alpha.theta - gamma.theta);
    p.eAD = -c2(alpha.theta - delta.theta);
    p.eBC = -c2(beta.theta - gamma.theta);
    p.eBD = -c2(beta.theta - delta.theta);
    p.eAB = c2(alpha.theta - beta.theta);
    p.eCD = c2(gamma.theta - delta.theta);
    p.varA = p.varB = p.varC = p.varD = 1.0;
    return p;
}

CorrelationProfile epr_profile(const Direction& a, const Direction& b, const Direction& c, const Direction& d) {
    const CorrelationProfile p = profile_from(epr_state(), epr_observables(a, b, c, d));
    check_against(p, epr_closed_profile(pair_dots(a, b, c, d)), "EPR");
    return p;
}

CorrelationProfile ghz_profile(PlanarAngle alpha, PlanarAngle beta, PlanarAngle gamma, PlanarAngle delta) {
    const CorrelationProfile p = profile_from(ghz_state(), ghz_observables(alpha, beta, gamma, delta));
    check_against(p, ghz_closed_profile(alpha, beta, gamma, delta), "GHZ");
    return p;
}

}  // namespace bellunc::quantum
