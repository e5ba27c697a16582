#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "sigdef/errors.hpp"
#include "sigdef/signaling.hpp"
#include "sigdef/simulate.hpp"

using namespace sigdef;
using namespace sigdef::testing;
using doctest::Approx;

namespace {

std::vector<Strategy> basis_without_primed() {
    std::vector<Strategy> out;
    for (const auto& s : local_strategies()) out.push_back(s);
    for (const auto& s : one_bit_strategies()) out.push_back(s);
    return out;
}

// x = i, y = ab + k and x = ab + i, y = k: another Lambda <= 2 family with one bit of signaling.
std::vector<Strategy> basis_with_alternative_primed() {
    auto out = basis_without_primed();
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            const std::string tag = std::to_string(i) + std::to_string(k);
            Strategy y_ab{"alt_y" + tag, StrategyClass::OneBitNonViolating, {}, {}};
            Strategy x_ab{"alt_x" + tag, StrategyClass::OneBitNonViolating, {}, {}};
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    y_ab.x_rule[a][b] = i;
                    y_ab.y_rule[a][b] = (a * b) ^ k;
                    x_ab.x_rule[a][b] = (a * b) ^ i;
                    x_ab.y_rule[a][b] = k;
                }
            out.push_back(y_ab);
            out.push_back(x_ab);
        }
    return out;
}

}  // namespace

TEST_CASE("closed form on Tsirelson box") {
    const auto t = tsirelson_box();
    const double c = std::sqrt(2.0) - 1.0;
    const auto d = closed_form_decompose(t);
    CHECK(d.cost == Approx(c).epsilon(1e-12));
    CHECK(d.residual < 1e-9);
    for (const auto& s : one_bit_strategies()) CHECK(d.weights.at(s.id) == Approx(c / 8.0).epsilon(1e-12));
    double total = 0.0;
    for (const auto& [id, w] : d.weights) total += w;
    CHECK(total == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("closed form on unbalanced PR boxes") {
    for (int i = 0; i <= 20; ++i) {
        const double p = i / 20.0;
        const auto q = unbalanced_pr(p);
        const auto d = closed_form_decompose(q, 1.0);
        CHECK(d.cost == Approx(1.0));
        CHECK(d.weights.at("d0_1") == Approx(p).epsilon(1e-12).scale(1.0));
        CHECK(d.weights.at("d3_1") == Approx(1.0 - p).epsilon(1e-12).scale(1.0));
        CHECK(d.residual < 1e-9);
    }
    CHECK_THROWS_AS(closed_form_decompose(unbalanced_pr(0.1), 0.0), PreconditionError);
}

TEST_CASE("closed form on a local mixture") {
    const auto m = mix({{0.2, as_correlation(catalog("d0_0"))},
                        {0.5, as_correlation(catalog("d4_0"))},
                        {0.3, as_correlation(catalog("d7_0"))}});
    const auto d = closed_form_decompose(m);
    CHECK(d.cost == 0.0);
    CHECK(d.weights.at("d0_0") == Approx(0.2));
    CHECK(d.weights.at("d4_0") == Approx(0.5));
    CHECK(d.weights.at("d7_0") == Approx(0.3));
    CHECK(d.weights.at("d0_1") == 0.0);
}

TEST_CASE("closed form failures") {
    CHECK_THROWS_AS(closed_form_decompose(as_correlation(catalog("d1_1"))), PreconditionError);
    CHECK_THROWS_AS(closed_form_decompose(tsirelson_box(), -0.1), PreconditionError);
    CHECK_THROWS_AS(closed_form_decompose(tsirelson_box(), 0.5), PreconditionError);
    // delta_03 = 1/2 above c_lambda = 0
    const auto m = mix({{0.5, as_correlation(catalog("d0_1"))}, {0.5, as_correlation(catalog("loc_0_1"))}});
    CHECK_THROWS_AS(closed_form_decompose(m), PreconditionError);
    // outside the span of the named locals
    CHECK_THROWS_AS(closed_form_decompose(as_correlation(catalog("loc_0_1"))), InfeasibleError);
}

TEST_CASE("closed form recovers the closed-form family for every admissible sigma") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        double sigma = 0.0;
        const auto p = closed_form_family(rng, sigma);
        const auto d = closed_form_decompose(p, sigma);
        CHECK(d.residual < 1e-9);
        CHECK(d.cost == Approx(disturbance_cost(p)).epsilon(1e-12));
        CHECK(lp_min_cost(p).cost == Approx(d.cost).epsilon(1e-7).scale(1.0));
    }
    // sigma is a free parameter: every admissible value gives the same cost.
    const auto t = tsirelson_box();
    const double c = disturbance_cost(t);
    for (int k = 0; k <= 10; ++k) {
        const auto d = closed_form_decompose(t, c * k / 10.0);
        CHECK(d.cost == Approx(c));
        CHECK(d.residual < 1e-9);
    }
}

TEST_CASE("LP examples") {
    CHECK(lp_min_cost(pr_box()).cost == Approx(1.0).epsilon(1e-9));
    CHECK(lp_min_cost(as_correlation(catalog("d0_1"))).cost == Approx(1.0).epsilon(1e-9));

    // Lower bound max(c_lambda, delta) = 0.4 and the mixture itself witnesses it.
    const auto m = mix({{0.6, as_correlation(catalog("d4_0"))}, {0.4, as_correlation(catalog("d0_1"))}});
    const auto d = lp_min_cost(m);
    CHECK(d.cost == Approx(0.4).epsilon(1e-9));
    CHECK(d.residual < 1e-9);
    CHECK(verify_reconstruction(m, d) < 1e-9);

    CHECK(lp_min_cost(tsirelson_box()).cost == Approx(std::sqrt(2.0) - 1.0).epsilon(1e-9));
    CHECK(lp_min_cost(as_correlation(catalog("d2_0"))).cost == Approx(0.0).scale(1.0));
}

TEST_CASE("LP reports infeasibility outside the hull") {
    const std::vector<Strategy> locals(local_strategies().begin(), local_strategies().end());
    CHECK_THROWS_AS(lp_min_cost(pr_box(), locals), InfeasibleError);
    CHECK_THROWS_AS(lp_min_cost(pr_box(), std::span<const Strategy>{}), InfeasibleError);
}

TEST_CASE("communication_cost and classify") {
    CHECK(communication_cost(pr_box()) == Approx(1.0));
    CHECK(communication_cost(unbalanced_pr(0.2)) == Approx(1.0));
    CHECK(communication_cost(tsirelson_box()) == Approx(std::sqrt(2.0) - 1.0));

    const auto pr = classify(pr_box());
    CHECK(pr.lambda == Approx(4.0));
    CHECK(pr.C == Approx(1.0));
    CHECK(pr.S == Approx(0.0).scale(1.0));
    CHECK(pr.eta == Approx(1.0));
    CHECK_FALSE(pr.classical);

    const auto d01 = classify(as_correlation(catalog("d0_1")));
    CHECK(d01.S == Approx(1.0));
    CHECK(d01.eta == Approx(0.0).scale(1.0));
    CHECK(d01.classical);

    const auto q = classify(unbalanced_pr(0.3), SignalMeasure::Delta);
    CHECK(q.S == Approx(0.4));
    CHECK_FALSE(q.classical);
    CHECK(q.S_info == Approx(1.0 - binary_entropy(0.3)));

    const auto local = classify(as_correlation(catalog("d5_0")));
    CHECK(local.C == 0.0);
    CHECK(local.classical);

    const auto quantities = classify_quantities(2.5, 0.3, 0.4);
    CHECK(quantities.c_lambda == Approx(0.25));
    CHECK(quantities.C == Approx(0.3));
    CHECK(quantities.classical);
}

TEST_CASE("cost is max(c_lambda, delta) for single-pair mixtures") {
    std::mt19937_64 rng(41);
    const auto reduced = basis_without_primed();
    const auto alternative = basis_with_alternative_primed();
    for (int i = 0; i < 200; ++i) {
        const auto [p, pair] = single_pair_mixture(rng);
        const double expected = communication_cost(p);
        const auto d = no_signaling_deltas(p).as_array();
        for (int k = 0; k < 4; ++k)
            if (k != pair) CHECK(d[static_cast<std::size_t>(k)] < 1e-12);

        const auto full = lp_min_cost(p);
        CHECK(full.cost == Approx(expected).epsilon(1e-7).scale(1.0));
        CHECK(full.residual < 1e-9);
        // the non-violating family plays no role
        CHECK(lp_min_cost(p, reduced).cost == Approx(full.cost).epsilon(1e-7).scale(1.0));
        CHECK(lp_min_cost(p, alternative).cost == Approx(full.cost).epsilon(1e-7).scale(1.0));
    }
}

TEST_CASE("the max(c_lambda, delta) formula is only a lower bound in general") {
    const auto p = mix({{0.5, as_correlation(catalog("dp0_1"))}, {0.5, as_correlation(catalog("dp4_1"))}});
    CHECK(communication_cost(p) == Approx(0.5));
    CHECK(lp_min_cost(p).cost == Approx(1.0).epsilon(1e-9));

    std::mt19937_64 rng(43);
    const auto basis = full_basis();
    for (int i = 0; i < 200; ++i) {
        const auto w = dirichlet(rng, basis.size());
        std::vector<std::pair<double, const Strategy*>> parts;
        for (std::size_t j = 0; j < basis.size(); ++j) parts.emplace_back(w[j], &basis[j]);
        const auto q = weighted(parts);
        CHECK(lp_min_cost(q).cost >= communication_cost(q) - 1e-9);
    }
}

TEST_CASE("signal never exceeds the cost") {
    std::mt19937_64 rng(47);
    const auto basis = full_basis();
    for (int i = 0; i < 200; ++i) {
        const auto w = dirichlet(rng, basis.size());
        std::vector<std::pair<double, const Strategy*>> parts;
        for (std::size_t j = 0; j < basis.size(); ++j) parts.emplace_back(w[j], &basis[j]);
        const auto q = weighted(parts);
        const auto r = classify(q);
        CHECK(r.S <= r.C + 1e-12);
        CHECK(r.S_info <= r.S_delta + 1e-9);
        CHECK(r.eta >= 0.0);
    }
}
