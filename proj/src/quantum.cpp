#include "sigdef/quantum.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "sigdef/errors.hpp"
#include "sigdef/optimize.hpp"
#include "sigdef/signaling.hpp"

namespace sigdef {

namespace {

constexpr double kStateTol = 1e-12;
constexpr double kEigenFloor = -1e-10;
constexpr double kRouteMismatch = 1e-8;

using cd = std::complex<double>;

double expectation(const Matrix2c& op, const Matrix2c& rho) { return (op * rho).trace().real(); }

double entropy_of_spectrum(const std::array<double, 2>& ev) {
    double h = 0.0;
    for (double l : ev) {
        l = std::max(0.0, l);
        if (l > 0.0) h -= l * std::log2(l);
    }
    return h;
}

}  // namespace

const std::array<Matrix2c, 3>& pauli() {
    static const std::array<Matrix2c, 3> s = [] {
        std::array<Matrix2c, 3> m;
        m[0] << 0, 1, 1, 0;
        m[1] << 0, cd(0, -1), cd(0, 1), 0;
        m[2] << 1, 0, 0, -1;
        return m;
    }();
    return s;
}

// ---------------------------------------------------------------------------

Observable::Observable(const Eigen::Vector3d& n) : n_(n) {
    if (!n.allFinite() || std::abs(n.norm() - 1.0) > kStateTol)
        throw DomainError("observable direction must be a unit vector, |n| = " + std::to_string(n.norm()));
}

Observable Observable::in_xz_plane(double phi) { return Observable(Eigen::Vector3d(std::sin(phi), 0.0, std::cos(phi))); }

Observable Observable::along(const Eigen::Vector3d& v) {
    if (!(v.norm() > 0.0)) throw DomainError("observable direction must be nonzero");
    return Observable(v.normalized());
}

Matrix2c Observable::matrix() const {
    const auto& s = pauli();
    return n_.x() * s[0] + n_.y() * s[1] + n_.z() * s[2];
}

Matrix2c Observable::projector(int value) const {
    return 0.5 * (Matrix2c::Identity() + static_cast<double>(value) * matrix());
}

// ---------------------------------------------------------------------------

QubitState::QubitState(const Matrix2c& rho) : rho_(rho) {
    if (!rho.allFinite()) throw DomainError("density matrix has non-finite entries");
    if (std::abs(rho.trace() - cd(1.0, 0.0)) > kStateTol)
        throw DomainError("density matrix trace must be 1, got " + std::to_string(rho.trace().real()));
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kStateTol) throw DomainError("density matrix is not Hermitian");
    if (hermitian_eigenvalues(rho)[0] < kEigenFloor) throw DomainError("density matrix has a negative eigenvalue");
}

QubitState QubitState::from_bloch(const Eigen::Vector3d& r) {
    if (r.norm() > 1.0 + kStateTol) throw DomainError("Bloch vector longer than 1");
    const auto& s = pauli();
    return QubitState(0.5 * (Matrix2c::Identity() + r.x() * s[0] + r.y() * s[1] + r.z() * s[2]));
}

QubitState QubitState::maximally_mixed() { return QubitState(0.5 * Matrix2c::Identity()); }

QubitState QubitState::eigenstate(const Observable& o) { return from_bloch(o.direction()); }

Eigen::Vector3d QubitState::bloch() const {
    const auto& s = pauli();
    return {expectation(s[0], rho_), expectation(s[1], rho_), expectation(s[2], rho_)};
}

std::array<double, 2> hermitian_eigenvalues(const Matrix2c& m) {
    const double a = m(0, 0).real(), d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double half_gap = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return {mean - half_gap, mean + half_gap};
}

// ---------------------------------------------------------------------------

Correlation::Vector sequential_table_expanded(const QubitState& state, const Observable& a0, const Observable& a1,
                                              const Observable& b0, const Observable& b1) {
    const Matrix2c& rho = state.rho();
    const std::array<Matrix2c, 2> alice{a0.matrix(), a1.matrix()};
    const std::array<Matrix2c, 2> bob{b0.matrix(), b1.matrix()};
    Correlation::Vector v;
    for (int a = 0; a < 2; ++a) {
        const Matrix2c& A = alice[a];
        const double ta = expectation(A, rho);
        for (int b = 0; b < 2; ++b) {
            const Matrix2c& B = bob[b];
            const double tb = expectation(B, rho);
            const double anti = expectation(A * B + B * A, rho);
            const double aba = expectation(A * B * A, rho);
            for (int x = 0; x < 2; ++x) {
                for (int y = 0; y < 2; ++y) {
                    const double xv = outcome_value(x), yv = outcome_value(y);
                    v[flat_index(a, b, x, y)] =
                        0.25 + xv / 4.0 * ta + yv / 8.0 * tb + xv * yv / 8.0 * anti + yv / 8.0 * aba;
                }
            }
        }
    }
    return v;
}

Correlation::Vector sequential_table_projective(const QubitState& state, const Observable& a0, const Observable& a1,
                                                const Observable& b0, const Observable& b1) {
    const std::array<const Observable*, 2> alice{&a0, &a1};
    const std::array<const Observable*, 2> bob{&b0, &b1};
    Correlation::Vector v;
    for (int a = 0; a < 2; ++a) {
        for (int x = 0; x < 2; ++x) {
            const Matrix2c pa = alice[a]->projector(outcome_value(x));
            // Unnormalized branch; its trace is P(x|a).
            const Matrix2c branch = pa * state.rho() * pa;
            for (int b = 0; b < 2; ++b)
                for (int y = 0; y < 2; ++y)
                    v[flat_index(a, b, x, y)] = expectation(bob[b]->projector(outcome_value(y)), branch);
        }
    }
    return v;
}

Correlation sequential_correlation(const QubitState& rho, const Observable& a0, const Observable& a1,
                                   const Observable& b0, const Observable& b1) {
    const auto expanded = sequential_table_expanded(rho, a0, a1, b0, b1);
    const auto projective = sequential_table_projective(rho, a0, a1, b0, b1);
    const double gap = (expanded - projective).cwiseAbs().maxCoeff();
    if (gap > kRouteMismatch)
        throw ConsistencyError("closed-form and projector-update probabilities differ by " + std::to_string(gap));
    return make_correlation(expanded);
}

QubitState post_measurement_state(const QubitState& rho, const Observable& a) {
    const Matrix2c plus = a.projector(1), minus = a.projector(-1);
    Matrix2c out = plus * rho.rho() * plus + minus * rho.rho() * minus;
    out = 0.5 * (out + out.adjoint()).eval();
    return QubitState(out);
}

double trace_distance(const QubitState& r0, const QubitState& r1) {
    const auto ev = hermitian_eigenvalues(r0.rho() - r1.rho());
    return 0.5 * (std::abs(ev[0]) + std::abs(ev[1]));
}

double von_neumann_entropy(const QubitState& rho) { return entropy_of_spectrum(hermitian_eigenvalues(rho.rho())); }

double holevo(double alpha, const QubitState& r0, const QubitState& r1) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0,1], got " + std::to_string(alpha));
    const double beta = 1.0 - alpha;
    const Matrix2c avg = alpha * r0.rho() + beta * r1.rho();
    const double chi = entropy_of_spectrum(hermitian_eigenvalues(avg)) - alpha * von_neumann_entropy(r0) -
                       beta * von_neumann_entropy(r1);
    return std::max(0.0, chi);
}

double max_holevo(const QubitState& r0, const QubitState& r1, double tol) {
    return golden_section_maximize([&](double a) { return holevo(a, r0, r1); }, 0.0, 1.0, tol).value;
}

// ---------------------------------------------------------------------------

std::array<QubitState, 2> MeasurementSetup::alice_branches() const {
    return {post_measurement_state(state, a0), post_measurement_state(state, a1)};
}

MeasurementSetup sigma_settings() {
    const Observable z(Eigen::Vector3d::UnitZ());
    const Observable x(Eigen::Vector3d::UnitX());
    return MeasurementSetup{QubitState::eigenstate(z), z, x, z, x};
}

MeasurementSetup theta_geometry(double theta) {
    if (!(theta > 0.0 && theta < std::numbers::pi / 2))
        throw DomainError("theta must lie in (0, pi/2), got " + std::to_string(theta));
    const auto b0 = Observable::in_xz_plane(0.0);
    const auto a0 = Observable::in_xz_plane(theta);
    const auto b1 = Observable::in_xz_plane(2.0 * theta);
    const auto a1 = Observable::in_xz_plane(3.0 * theta);
    return MeasurementSetup{QubitState::eigenstate(a1), a0, a1, b0, b1};
}

SweepRow sweep_row(double theta) {
    const auto setup = theta_geometry(theta);
    const auto p = setup.correlation();
    const auto branches = setup.alice_branches();
    SweepRow row;
    row.theta = theta;
    row.lambda = lg_value(p);
    row.lambda_norm = row.lambda / 2.0;
    row.S_restricted = signal_info(p).S;
    row.c_lambda = disturbance_cost(p);
    row.chi = max_holevo(branches[0], branches[1]);
    row.classical = row.S_restricted >= row.c_lambda;
    return row;
}

std::vector<SweepRow> theta_sweep(double theta_min, double theta_max, int steps) {
    if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps, got " + std::to_string(steps));
    if (!(theta_min < theta_max)) throw std::invalid_argument("sweep needs theta_min < theta_max");
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double theta =
            i == steps - 1 ? theta_max : theta_min + (theta_max - theta_min) * static_cast<double>(i) / (steps - 1);
        rows.push_back(sweep_row(theta));
    }
    return rows;
}

double find_crossover(double theta_min, double theta_max, double tol) {
    if (!(theta_min < theta_max)) throw NoCrossover("empty bracket for crossover search");
    const auto gap = [](double theta) {
        const auto row = sweep_row(theta);
        return row.S_restricted - row.c_lambda;
    };
    double lo = theta_min, hi = theta_max;
    double f_lo = gap(lo);
    const double f_hi = gap(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo > 0.0) == (f_hi > 0.0))
        throw NoCrossover("S_restricted - c_lambda keeps its sign on [" + std::to_string(theta_min) + ", " +
                          std::to_string(theta_max) + "]");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = gap(mid);
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double max_qubit_signal() { return signal_info(sigma_settings().correlation()).S; }

double signal_corrected_lg_bound() { return 2.0 * (max_qubit_signal() + 1.0); }

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "theta,lambda,lambda_norm,S_restricted,c_lambda,chi,classical\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%d\n", r.theta, r.lambda, r.lambda_norm,
                      r.S_restricted, r.c_lambda, r.chi, r.classical ? 1 : 0);
        out << buf;
    }
}

}  // namespace sigdef
