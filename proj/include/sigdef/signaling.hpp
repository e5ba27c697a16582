#pragma once

#include <initializer_list>
#include <span>

#include "sigdef/correlation.hpp"

namespace sigdef {

/// Bob settings over which signaling is maximized.
inline constexpr std::array<int, 2> kBothBobSettings{0, 1};

struct SignalReport {
    double s = 0.0;           ///< max marginal shift |P_0^b - P_1^b|
    double S = 0.0;           ///< maximal mutual information I(A:Y), bits
    double alpha_star = 0.5;  ///< maximizing probability of a = 0
    int b_star = 0;
};

struct RandomnessReport {
    double p = 0.0;
    double I = 0.0;  ///< intrinsic randomness min{p, 1-p}
    double s = 0.0;
    double tradeoff = 0.0;  ///< s + 2I
};

/// Binary entropy in bits, with 0 log 0 = 0.
double binary_entropy(double p);

/**
 * Mutual information I(A:Y) in bits between Alice's setting, chosen with
 * P(a=0) = alpha, and Bob's outcome, given P(y=+1|a=0) = p0 and
 * P(y=+1|a=1) = p1. Zero-probability terms are dropped.
 */
double mutual_information(double alpha, double p0, double p1);

/// P(y=+1 | a, b) read off the correlation.
double bob_plus_probability(const Correlation& p, int a, int b);

double signal_strength(const Correlation& p, std::span<const int> b_set = kBothBobSettings);

/// Alice-to-Bob signaling information maximized over b in b_set and alpha.
SignalReport signal_info(const Correlation& p, std::span<const int> b_set = kBothBobSettings, double tol = 1e-10);

/// p * d0_1 + (1 - p) * d3_1. Throws DomainError outside [0,1].
Correlation unbalanced_pr(double p);

RandomnessReport randomness_report(double p);

/// Bits by which perfect cloning of Q(p) exceeds the available linear signal 1 - 2p.
double cloning_violation(double p);

}  // namespace sigdef
