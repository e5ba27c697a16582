#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "sigdef/correlation.hpp"

namespace sigdef {

using Matrix2c = Eigen::Matrix2cd;

/// Pauli matrices sigma_x, sigma_y, sigma_z.
const std::array<Matrix2c, 3>& pauli();

/// A +-1 valued qubit observable n.sigma with unit Bloch direction n.
class Observable {
public:
    /// Throws DomainError unless |n| = 1 within 1e-12.
    explicit Observable(const Eigen::Vector3d& n);

    /// Unit vector at angle phi from +z towards +x.
    static Observable in_xz_plane(double phi);
    static Observable along(const Eigen::Vector3d& v);  ///< normalizes v

    const Eigen::Vector3d& direction() const { return n_; }
    Matrix2c matrix() const;
    /// (1 + value * n.sigma) / 2 for value = +-1.
    Matrix2c projector(int value) const;

private:
    Eigen::Vector3d n_;
};

class QubitState {
public:
    /// Throws DomainError unless rho is a trace-1 Hermitian PSD matrix.
    explicit QubitState(const Matrix2c& rho);

    static QubitState from_bloch(const Eigen::Vector3d& r);
    static QubitState maximally_mixed();
    /// +1 eigenstate of the observable.
    static QubitState eigenstate(const Observable& o);

    const Matrix2c& rho() const { return rho_; }
    Eigen::Vector3d bloch() const;

private:
    Matrix2c rho_;
};

/// Eigenvalues (ascending) of a 2x2 Hermitian matrix, closed form.
std::array<double, 2> hermitian_eigenvalues(const Matrix2c& m);

/**
 * Correlation for Alice measuring first (a0 or a1), then Bob (b0 or b1) on the
 * same qubit. Computed twice, from the expanded trace formula and by explicit
 * projector update; throws ConsistencyError if the two disagree beyond 1e-8.
 */
Correlation sequential_correlation(const QubitState& rho, const Observable& a0, const Observable& a1,
                                   const Observable& b0, const Observable& b1);

/// The two routes separately; exposed for cross-checking.
Correlation::Vector sequential_table_expanded(const QubitState& rho, const Observable& a0, const Observable& a1,
                                              const Observable& b0, const Observable& b1);
Correlation::Vector sequential_table_projective(const QubitState& rho, const Observable& a0, const Observable& a1,
                                                const Observable& b0, const Observable& b1);

/// Unread projective measurement: sum over outcomes of P rho P.
QubitState post_measurement_state(const QubitState& rho, const Observable& a);

double trace_distance(const QubitState& r0, const QubitState& r1);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const QubitState& rho);

/// S(alpha r0 + (1-alpha) r1) - alpha S(r0) - (1-alpha) S(r1), bits.
double holevo(double alpha, const QubitState& r0, const QubitState& r1);

/// holevo() maximized over alpha by golden-section search.
double max_holevo(const QubitState& r0, const QubitState& r1, double tol = 1e-10);

/// A state plus Alice's (a0, a1) and Bob's (b0, b1) observables.
struct MeasurementSetup {
    QubitState state;
    Observable a0, a1, b0, b1;

    Correlation correlation() const { return sequential_correlation(state, a0, a1, b0, b1); }
    /// States after Alice's unread measurement of a0 and a1 respectively.
    std::array<QubitState, 2> alice_branches() const;
};

/// |0>, a0 = sigma_z, a1 = sigma_x, b0 = sigma_z; b1 = sigma_x carries no signal.
MeasurementSetup sigma_settings();

/**
 * xz-plane chain b0 = 0, a0 = theta, b1 = 2 theta, a1 = 3 theta, so the
 * negatively signed pair (a1, b0) spans 3 theta and lg_value = 3cos(theta) - cos(3 theta).
 * The state is the +1 eigenstate of a1, the chain-end Alice observable.
 * Throws DomainError unless 0 < theta < pi/2.
 */
MeasurementSetup theta_geometry(double theta);

struct SweepRow {
    double theta = 0.0;
    double lambda = 0.0;
    double lambda_norm = 0.0;
    double S_restricted = 0.0;
    double c_lambda = 0.0;
    double chi = 0.0;
    bool classical = false;
};

SweepRow sweep_row(double theta);

/// Evenly spaced rows over [theta_min, theta_max], ascending. Needs steps >= 2 and theta_min < theta_max.
std::vector<SweepRow> theta_sweep(double theta_min, double theta_max, int steps);

/// Bisection root of S_restricted - c_lambda to 1e-4. Throws NoCrossover without a sign change.
double find_crossover(double theta_min, double theta_max, double tol = 1e-4);

/// Maximal qubit signal log2(5) - 2, computed over the Sigma settings.
double max_qubit_signal();

/// 2 (mu_s + 1): lg_values above it are nonclassical whatever the signal.
double signal_corrected_lg_bound();

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace sigdef
