#pragma once

#include <map>
#include <span>
#include <string>

#include "sigdef/correlation.hpp"

namespace sigdef {

/// Weights over catalog strategies that reproduce a correlation.
struct Decomposition {
    std::map<std::string, double> weights;  ///< strategy id -> probability
    double cost = 0.0;                      ///< total weight on one-bit strategies, bits
    double residual = 0.0;                  ///< max-norm reconstruction error
};

/// Which quantity plays the role of the available signal S.
enum class SignalMeasure {
    MutualInformation,  ///< maximal I(A:Y)
    Delta,              ///< max_j delta_j
};

struct ClassificationReport {
    double lambda = 0.0;
    double c_lambda = 0.0;
    double S = 0.0;  ///< the selected measure
    double s = 0.0;
    double C = 0.0;  ///< max(c_lambda, S)
    double eta = 0.0;
    bool classical = true;

    SignalMeasure measure = SignalMeasure::MutualInformation;
    double S_info = 0.0;
    double S_delta = 0.0;
    bool classical_info = true;
    bool classical_delta = true;
};

/**
 * Explicit protocol for correlations whose only no-signaling violation is the
 * Bob-side condition at b = 0 (delta_03). One-bit weights follow the
 * closed form in (c_lambda, sigma, signed delta_03); the eight named local
 * weights come from solving the remaining linear system.
 *
 * Throws PreconditionError if another delta is nonzero, delta_03 > c_lambda,
 * sigma lies outside [0, c_lambda], or delta_03 > (c_lambda + 3 sigma)/4.
 * Throws InfeasibleError if a local weight comes out negative or the
 * reconstruction misses P by more than 1e-9.
 */
Decomposition closed_form_decompose(const Correlation& p, double sigma = 0.0);

/// Minimal average communication over the given strategy basis, by linear programming.
Decomposition lp_min_cost(const Correlation& p, std::span<const Strategy> basis);
Decomposition lp_min_cost(const Correlation& p);  ///< full 32-strategy basis

/// Max-norm error between p and the weighted strategy sum.
double verify_reconstruction(const Correlation& p, const Decomposition& d);

/// max(c_lambda, max_j delta_j), bits.
double communication_cost(const Correlation& p);

/// Report from precomputed quantities; S_info and S_delta both default to S.
ClassificationReport classify_quantities(double lambda, double S, double s);

/// classical when eta <= tol.
ClassificationReport classify(const Correlation& p, SignalMeasure measure = SignalMeasure::MutualInformation,
                              double tol = 1e-9);

}  // namespace sigdef
