#include "sigdef/signaling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sigdef/errors.hpp"
#include "sigdef/optimize.hpp"

namespace sigdef {

namespace {

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// joint * log2(joint / (marginal_a * marginal_y)), dropping vanishing terms
double mi_term(double joint, double pa, double py) {
    if (joint <= 0.0 || pa <= 0.0 || py <= 0.0) return 0.0;
    return joint * std::log2(joint / (pa * py));
}

void check_b_set(std::span<const int> b_set) {
    if (b_set.empty()) throw std::invalid_argument("Bob setting set must be nonempty");
    for (const int b : b_set)
        if (b != 0 && b != 1) throw std::invalid_argument("Bob setting must be 0 or 1, got " + std::to_string(b));
}

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError(std::string(what) + " must lie in [0,1], got " + std::to_string(p));
}

}  // namespace

double binary_entropy(double p) { return -plogp(p) - plogp(1.0 - p); }

double mutual_information(double alpha, double p0, double p1) {
    const double beta = 1.0 - alpha;
    const double q0 = 1.0 - p0, q1 = 1.0 - p1;
    const double p_bar = alpha * p0 + beta * p1;
    const double q_bar = alpha * q0 + beta * q1;
    const double mi = mi_term(alpha * p0, alpha, p_bar) + mi_term(beta * p1, beta, p_bar) +
                      mi_term(alpha * q0, alpha, q_bar) + mi_term(beta * q1, beta, q_bar);
    return std::max(0.0, mi);
}

double bob_plus_probability(const Correlation& p, int a, int b) { return marginal(p, Side::Bob, b, a)[0]; }

double signal_strength(const Correlation& p, std::span<const int> b_set) {
    check_b_set(b_set);
    double s = 0.0;
    for (const int b : b_set) s = std::max(s, std::abs(bob_plus_probability(p, 0, b) - bob_plus_probability(p, 1, b)));
    return s;
}

SignalReport signal_info(const Correlation& p, std::span<const int> b_set, double tol) {
    check_b_set(b_set);
    SignalReport best;
    best.s = signal_strength(p, b_set);
    best.S = -1.0;
    for (const int b : b_set) {
        const double p0 = bob_plus_probability(p, 0, b);
        const double p1 = bob_plus_probability(p, 1, b);
        const auto info = [&](double alpha) { return mutual_information(alpha, p0, p1); };

        auto m = golden_section_maximize(info, 0.0, 1.0, tol);
        // Concavity guard: a coarse grid that beats the search means the bracket got lost.
        const auto coarse = grid_maximize(info, 0.0, 1.0, 101);
        if (coarse.value > m.value + 1e-12) {
            const auto fine = grid_maximize(info, 0.0, 1.0, 10001);
            const double step = 1e-4;
            m = golden_section_maximize(info, std::max(0.0, fine.argmax - step), std::min(1.0, fine.argmax + step), tol);
            if (fine.value > m.value) m = fine;
        }
        if (m.value < 1e-15) m = {0.5, 0.0};  // no signal: report the uniform input
        if (m.value > best.S) {
            best.S = m.value;
            best.alpha_star = m.argmax;
            best.b_star = b;
        }
    }
    return best;
}

Correlation unbalanced_pr(double p) {
    check_probability(p, "unbalanced PR weight p");
    return mix({{p, as_correlation(catalog("d0_1"))}, {1.0 - p, as_correlation(catalog("d3_1"))}});
}

RandomnessReport randomness_report(double p) {
    check_probability(p, "unbalanced PR weight p");
    RandomnessReport r;
    r.p = p;
    r.I = std::min(p, 1.0 - p);
    r.s = signal_strength(unbalanced_pr(p));
    r.tradeoff = r.s + 2.0 * r.I;
    return r;
}

double cloning_violation(double p) {
    if (!(p >= 0.0 && p <= 0.5))
        throw DomainError("cloning violation is defined for p in [0,1/2] (use p -> 1-p), got " + std::to_string(p));
    // One bit recovered by the cloning attack, minus the linear signal max_j delta_j = 1 - 2p.
    return 1.0 - max_delta(unbalanced_pr(p));
}

}  // namespace sigdef
