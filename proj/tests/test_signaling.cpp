#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "sigdef/errors.hpp"
#include "sigdef/quantum.hpp"
#include "sigdef/signaling.hpp"

using namespace sigdef;
using doctest::Approx;

namespace {

const double kMuS = std::log2(5.0) - 2.0;

// Independent I(A:Y): H(A) + H(Y) - H(A,Y) from the joint table.
double mi_from_joint(double alpha, double p0, double p1) {
    const double joint[2][2] = {{alpha * p0, alpha * (1 - p0)}, {(1 - alpha) * p1, (1 - alpha) * (1 - p1)}};
    const auto h = [](std::initializer_list<double> ps) {
        double s = 0.0;
        for (double p : ps)
            if (p > 0) s -= p * std::log2(p);
        return s;
    };
    return h({joint[0][0] + joint[0][1], joint[1][0] + joint[1][1]}) +
           h({joint[0][0] + joint[1][0], joint[0][1] + joint[1][1]}) -
           h({joint[0][0], joint[0][1], joint[1][0], joint[1][1]});
}

Correlation random_local_mixture(std::mt19937_64& rng) {
    std::gamma_distribution<double> gamma(1.0, 1.0);
    std::vector<double> w;
    double total = 0.0;
    for (std::size_t i = 0; i < local_strategies().size(); ++i) total += w.emplace_back(gamma(rng));
    Correlation::Vector v = Correlation::Vector::Zero();
    for (std::size_t i = 0; i < w.size(); ++i) v += (w[i] / total) * as_correlation(local_strategies()[i]).vector();
    return make_correlation(v);
}

}  // namespace

TEST_CASE("signal_strength") {
    CHECK(signal_strength(sigma_settings().correlation()) == Approx(0.5).epsilon(1e-12));
    CHECK(signal_strength(pr_box()) == 0.0);
    CHECK(signal_strength(unbalanced_pr(0.2)) == Approx(0.6).epsilon(1e-12));

    const std::array<int, 1> only_one{1};
    CHECK(signal_strength(as_correlation(catalog("d0_1")), only_one) == 0.0);
    CHECK_THROWS_AS(signal_strength(pr_box(), std::span<const int>{}), std::invalid_argument);
}

TEST_CASE("mutual_information matches the joint-entropy form") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double alpha = u(rng), p0 = u(rng), p1 = u(rng);
        CHECK(mutual_information(alpha, p0, p1) == Approx(mi_from_joint(alpha, p0, p1)).epsilon(1e-12));
    }
    CHECK(mutual_information(0.5, 1.0, 0.0) == Approx(1.0));
    CHECK(mutual_information(0.0, 0.3, 0.9) == 0.0);
}

TEST_CASE("signal_info") {
    SUBCASE("d0_1 carries one bit at b = 0") {
        // y = a(1-b) is informative only at b=0, whatever the prose says about b=1.
        const auto r = signal_info(as_correlation(catalog("d0_1")));
        CHECK(r.S == Approx(1.0).epsilon(1e-12));
        CHECK(r.alpha_star == Approx(0.5).epsilon(1e-6));
        CHECK(r.b_star == 0);
    }
    SUBCASE("Sigma settings reach log2(5) - 2 at alpha = 3/5") {
        const auto r = signal_info(sigma_settings().correlation());
        CHECK(r.S == Approx(kMuS).epsilon(1e-10));
        CHECK(r.alpha_star == Approx(0.6).epsilon(1e-6));
        CHECK(r.b_star == 0);
    }
    SUBCASE("closed-form Sigma curve") {
        // H(a) + a log(2a/(1+a)) + (1-a)/2 log((1-a)/(1+a)) at a = 3/5
        const double a = 0.6;
        const double h = -a * std::log2(a) - (1 - a) * std::log2(1 - a);
        const double curve = h + a * std::log2(2 * a / (1 + a)) + (1 - a) / 2 * std::log2((1 - a) / (1 + a));
        CHECK(curve == Approx(kMuS).epsilon(1e-12));
    }
    SUBCASE("PR box has no signal") { CHECK(signal_info(pr_box()).S < 1e-12); }
}

TEST_CASE("signal_info agrees with a 101-point grid") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const double p0 = u(rng), p1 = u(rng);
        Correlation::Vector v = Correlation::Vector::Zero();
        for (int b = 0; b < 2; ++b) {
            v[flat_index(0, b, 0, 0)] = p0;
            v[flat_index(0, b, 0, 1)] = 1 - p0;
            v[flat_index(1, b, 0, 0)] = p1;
            v[flat_index(1, b, 0, 1)] = 1 - p1;
        }
        const auto r = signal_info(make_correlation(v));
        double grid = 0.0;
        double previous = -1.0;
        bool rising = true;
        int turns = 0;
        for (int k = 0; k <= 100; ++k) {
            const double value = mi_from_joint(k / 100.0, p0, p1);
            grid = std::max(grid, value);
            if (previous >= 0.0 && rising && value < previous - 1e-15) {
                rising = false;
                ++turns;
            } else if (previous >= 0.0 && !rising && value > previous + 1e-15) {
                ++turns;
            }
            previous = value;
        }
        CHECK(turns <= 1);  // unimodal
        CHECK(r.S >= grid - 1e-12);
        double fine = 0.0;
        for (int k = 0; k <= 10000; ++k) fine = std::max(fine, mi_from_joint(k / 10000.0, p0, p1));
        CHECK(r.S == Approx(fine).epsilon(1e-6).scale(1.0));
        CHECK(r.S <= binary_entropy(r.alpha_star) + 1e-12);
        CHECK(r.S <= 1.0 + 1e-12);
    }
}

TEST_CASE("S vanishes exactly when s does") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_local_mixture(rng);
        CHECK(signal_info(p).S < 1e-9);
        CHECK(signal_strength(p) < 1e-9);
    }
    const auto q = unbalanced_pr(0.3);
    CHECK(signal_strength(q) > 1e-9);
    CHECK(signal_info(q).S > 1e-9);
}

TEST_CASE("S is convex under mixing") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const auto p = unbalanced_pr(u(rng));
        const auto q = sigma_settings().correlation();
        const double lam = u(rng);
        const auto m = mix({{lam, p}, {1.0 - lam, q}});
        CHECK(signal_info(m).S <= lam * signal_info(p).S + (1 - lam) * signal_info(q).S + 1e-9);
    }
}

TEST_CASE("unbalanced_pr") {
    CHECK((unbalanced_pr(0.5).vector() - pr_box().vector()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(unbalanced_pr(0.0).vector() == as_correlation(catalog("d3_1")).vector());
    CHECK_THROWS_AS(unbalanced_pr(1.2), DomainError);
    CHECK_THROWS_AS(unbalanced_pr(-0.01), DomainError);

    for (int i = 0; i <= 20; ++i) CHECK(lg_value(unbalanced_pr(i / 20.0)) == Approx(4.0));

    // Mutual information is the binary-symmetric-channel capacity, not the linear 1 - 2p.
    const auto q = unbalanced_pr(0.3);
    CHECK(signal_strength(q) == Approx(0.4).epsilon(1e-12));
    CHECK(signal_info(q).S == Approx(1.0 - binary_entropy(0.3)).epsilon(1e-10));
    CHECK(max_delta(q) == Approx(0.4).epsilon(1e-12));
}

TEST_CASE("randomness_report") {
    const auto half = randomness_report(0.5);
    CHECK(half.I == 0.5);
    CHECK(half.s == 0.0);
    CHECK(half.tradeoff == Approx(1.0));

    const auto zero = randomness_report(0.0);
    CHECK(zero.I == 0.0);
    CHECK(zero.s == 1.0);
    CHECK(zero.tradeoff == 1.0);

    const auto quarter = randomness_report(0.25);
    CHECK(quarter.I == 0.25);
    CHECK(quarter.s == Approx(0.5).epsilon(1e-12));

    for (int i = 0; i <= 100; ++i) CHECK(std::abs(randomness_report(i / 100.0).tradeoff - 1.0) <= 1e-12);
    CHECK_THROWS_AS(randomness_report(2.0), DomainError);
}

TEST_CASE("cloning_violation") {
    CHECK(cloning_violation(0.5) == Approx(1.0));
    CHECK(cloning_violation(0.0) == 0.0);
    CHECK(cloning_violation(0.2) == Approx(0.4).epsilon(1e-12));
    // cross-check against the signal strength
    CHECK(cloning_violation(0.2) == Approx(1.0 - signal_strength(unbalanced_pr(0.2))).epsilon(1e-12));
    CHECK_THROWS_AS(cloning_violation(0.7), DomainError);
}
