#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace sigdef {

/// Nested table indexed [a][b][x][y].
using Table4 = std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2>;

/// Flat position of P(x,y|a,b) in the 16-entry row-major layout.
constexpr int flat_index(int a, int b, int x, int y) { return ((a * 2 + b) * 2 + x) * 2 + y; }

/// Measurement value carried by an outcome label: 0 -> +1, 1 -> -1.
constexpr int outcome_value(int label) { return label == 0 ? 1 : -1; }

/**
 * A two-setting, two-outcome bipartite conditional distribution P(x,y|a,b).
 *
 * Settings a (Alice) and b (Bob) and outcome labels x, y all range over {0,1}.
 * Instances are only created through make_correlation() or the helpers built
 * on it, so every (a,b) slice is a probability distribution.
 */
class Correlation {
public:
    using Vector = Eigen::Matrix<double, 16, 1>;

    double operator()(int a, int b, int x, int y) const { return p_[flat_index(a, b, x, y)]; }

    const Vector& vector() const { return p_; }
    Table4 table() const;

private:
    explicit Correlation(const Vector& p) : p_(p) {}
    friend Correlation make_correlation(const Vector& entries);

    Vector p_;
};

/// Validates and clamps a raw table. Throws NormalizationError or NegativeProbability.
Correlation make_correlation(const Correlation::Vector& entries);
Correlation make_correlation(const Table4& table);

/// Entrywise convex combination. Throws WeightError on negative or non-normalized weights.
Correlation mix(std::span<const std::pair<double, Correlation>> components);
Correlation mix(std::initializer_list<std::pair<double, Correlation>> components);

/// E(a,b) = sum_{x,y} (-1)^x (-1)^y P(x,y|a,b).
double correlator(const Correlation& p, int a, int b);

/// |E(0,0) + E(0,1) - E(1,0) + E(1,1)|, the LG/CHSH functional.
double lg_value(const Correlation& p);

/// max(0, lg_value/2 - 1) in bits.
double disturbance_cost(const Correlation& p);

enum class Side { Alice, Bob };

/// Outcome distribution of one side for the joint settings (own, other).
std::array<double, 2> marginal(const Correlation& p, Side side, int own_setting, int other_setting);

/// Violations of the four independent no-signaling conditions.
struct DeltaVector {
    double d03 = 0.0;  ///< Bob's marginal at b=0, across a
    double d12 = 0.0;  ///< Bob's marginal at b=1, across a
    double d47 = 0.0;  ///< Alice's marginal at a=1, across b
    double d56 = 0.0;  ///< Alice's marginal at a=0, across b

    double max() const;
    std::array<double, 4> as_array() const { return {d03, d12, d47, d56}; }
};

DeltaVector no_signaling_deltas(const Correlation& p);

/// Strategy-space signal measure max_j delta_j.
double max_delta(const Correlation& p);

// ---------------------------------------------------------------------------
// Deterministic strategies

enum class StrategyClass { Local, OneBitViolating, OneBitNonViolating };

/// Outcome label as a function of the settings, indexed [a][b].
using LabelRule = std::array<std::array<int, 2>, 2>;

struct Strategy {
    std::string id;
    StrategyClass kind = StrategyClass::Local;
    LabelRule x_rule{};
    LabelRule y_rule{};

    bool x_depends_on_b() const;
    bool y_depends_on_a() const;
    /// Bits of communication the rule consumes.
    int cost() const { return kind == StrategyClass::Local ? 0 : 1; }
};

/**
 * Looks up a catalog strategy by id. Throws UnknownStrategy.
 *
 * Ids: "d<j>_0" for the eight named local strategies, "d<j>_1" for the eight
 * Bell-violating one-bit strategies, "dp<j>_1" for the eight non-violating
 * one-bit strategies, and "loc_<x>_<y>" (x in {0,1,a,na}, y in {0,1,b,nb}) for
 * any of the sixteen local rules. TeX-ish spellings such as "d^{0_1}" and
 * "d'^{0_1}" are accepted too.
 */
const Strategy& catalog(std::string_view id);

Correlation as_correlation(const Strategy& s);

/// All sixteen product-form local rules; the eight named ones use their d<j>_0 ids.
std::span<const Strategy> local_strategies();
/// The eight local strategies d0_0 .. d7_0.
std::span<const Strategy> named_local_strategies();
/// The eight one-bit strategies d0_1 .. d7_1, each with lg_value 4.
std::span<const Strategy> one_bit_strategies();
/// The eight signaling non-violating strategies dp0_1 .. dp7_1.
std::span<const Strategy> non_violating_strategies();
/// Local (16) + one-bit violating (8) + non-violating (8).
std::vector<Strategy> full_basis();

// Named boxes

/// Uniform mixture of d0_1 and d3_1.
Correlation pr_box();
/// Non-signaling box with uniform marginals and correlators v * (-1)^{a(1-b)}.
Correlation isotropic_box(double visibility);
/// isotropic_box(1/sqrt(2)); lg_value = 2*sqrt(2).
Correlation tsirelson_box();

}  // namespace sigdef
