#include "sigdef/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/QR>

#include "sigdef/errors.hpp"
#include "sigdef/signaling.hpp"
#include "sigdef/simplex.hpp"

namespace sigdef {

namespace {

constexpr double kDeltaZero = 1e-9;
constexpr double kBoundSlack = 1e-12;
constexpr double kNegativeWeight = 1e-9;
constexpr double kReconstructionTol = 1e-9;
constexpr double kClassicalTol = 1e-9;

double bob_zero(const Correlation& p, int a, int b) { return marginal(p, Side::Bob, b, a)[0]; }

}  // namespace

Decomposition closed_form_decompose(const Correlation& p, double sigma) {
    const double c_lambda = disturbance_cost(p);
    const DeltaVector d = no_signaling_deltas(p);
    if (d.d12 > kDeltaZero || d.d47 > kDeltaZero || d.d56 > kDeltaZero)
        throw PreconditionError("closed form handles only the delta_03 signaling condition");
    if (d.d03 > c_lambda + kDeltaZero)
        throw PreconditionError("delta_03 = " + std::to_string(d.d03) + " exceeds c_lambda = " + std::to_string(c_lambda));
    if (!(sigma >= 0.0 && sigma <= c_lambda + kBoundSlack))
        throw PreconditionError("sigma must lie in [0, c_lambda], got " + std::to_string(sigma));
    if (d.d03 > (c_lambda + 3.0 * sigma) / 4.0 + kBoundSlack)
        throw PreconditionError("delta_03 exceeds the positivity bound (c_lambda + 3 sigma)/4");

    // q0_1 - q3_1 is the signed shift of Bob's b=0 marginal.
    const double signed_delta = bob_zero(p, 0, 0) - bob_zero(p, 1, 0);
    const double pair = (c_lambda + 3.0 * sigma) / 8.0;
    const double rest = (c_lambda - sigma) / 8.0;

    Decomposition out;
    Correlation::Vector one_bit_part = Correlation::Vector::Zero();
    for (const auto& s : one_bit_strategies()) {
        double q = rest;
        if (s.id == "d0_1") q = pair + signed_delta / 2.0;
        if (s.id == "d3_1") q = pair - signed_delta / 2.0;
        out.weights[s.id] = std::max(0.0, q);
        one_bit_part += out.weights[s.id] * as_correlation(s).vector();
    }

    const auto locals = named_local_strategies();
    Eigen::Matrix<double, 16, 8> basis;
    for (int j = 0; j < 8; ++j) basis.col(j) = as_correlation(locals[static_cast<std::size_t>(j)]).vector();
    const Correlation::Vector remainder = p.vector() - one_bit_part;
    const Eigen::Matrix<double, 8, 1> w = basis.colPivHouseholderQr().solve(remainder);

    for (int j = 0; j < 8; ++j) {
        if (w[j] < -kNegativeWeight)
            throw InfeasibleError("local weight for " + locals[static_cast<std::size_t>(j)].id + " is " +
                                  std::to_string(w[j]));
        out.weights[locals[static_cast<std::size_t>(j)].id] = std::max(0.0, w[j]);
    }
    out.cost = c_lambda;
    out.residual = verify_reconstruction(p, out);
    if (out.residual > kReconstructionTol)
        throw InfeasibleError("closed form reconstruction misses by " + std::to_string(out.residual));
    return out;
}

Decomposition lp_min_cost(const Correlation& p, std::span<const Strategy> basis) {
    if (basis.empty()) throw InfeasibleError("empty strategy basis");
    const auto n = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd A(17, n);
    Eigen::VectorXd b(17), c(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const auto& s = basis[static_cast<std::size_t>(j)];
        A.col(j).head<16>() = as_correlation(s).vector();
        A(16, j) = 1.0;
        c[j] = s.cost();
    }
    b.head<16>() = p.vector();
    b[16] = 1.0;

    const auto lp = solve_lp<double>(A, b, c);
    if (lp.status != LpStatus::Optimal) throw InfeasibleError("correlation lies outside the hull of the basis");

    Decomposition out;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (lp.x[j] <= 0.0) continue;
        const auto& s = basis[static_cast<std::size_t>(j)];
        out.weights[s.id] += lp.x[j];
        out.cost += s.cost() * lp.x[j];
    }
    out.residual = (A.topRows<16>() * lp.x - p.vector()).cwiseAbs().maxCoeff();
    return out;
}

Decomposition lp_min_cost(const Correlation& p) {
    const auto basis = full_basis();
    return lp_min_cost(p, basis);
}

double verify_reconstruction(const Correlation& p, const Decomposition& d) {
    Correlation::Vector acc = Correlation::Vector::Zero();
    for (const auto& [id, w] : d.weights) acc += w * as_correlation(catalog(id)).vector();
    return (acc - p.vector()).cwiseAbs().maxCoeff();
}

double communication_cost(const Correlation& p) { return std::max(disturbance_cost(p), max_delta(p)); }

ClassificationReport classify_quantities(double lambda, double S, double s) {
    ClassificationReport r;
    r.lambda = lambda;
    r.c_lambda = std::max(0.0, lambda / 2.0 - 1.0);
    r.S = r.S_info = r.S_delta = S;
    r.s = s;
    r.C = std::max(r.c_lambda, S);
    r.eta = r.C - S;
    r.classical = r.classical_info = r.classical_delta = r.eta <= kClassicalTol;
    return r;
}

ClassificationReport classify(const Correlation& p, SignalMeasure measure, double tol) {
    ClassificationReport r;
    r.measure = measure;
    r.lambda = lg_value(p);
    r.c_lambda = disturbance_cost(p);
    r.s = signal_strength(p);
    r.S_info = signal_info(p).S;
    r.S_delta = max_delta(p);
    r.S = measure == SignalMeasure::MutualInformation ? r.S_info : r.S_delta;
    r.C = std::max(r.c_lambda, r.S);
    r.eta = r.C - r.S;
    r.classical = r.eta <= tol;
    r.classical_info = r.S_info >= r.c_lambda - tol;
    r.classical_delta = r.S_delta >= r.c_lambda - tol;
    return r;
}

}  // namespace sigdef
