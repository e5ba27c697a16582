#include "sigdef/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "sigdef/errors.hpp"

namespace sigdef {

namespace {

constexpr double kValidationTol = 1e-9;
constexpr double kWeightTol = 1e-12;

std::string describe_slice(int a, int b) {
    return "(a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")";
}

}  // namespace

Table4 Correlation::table() const {
    Table4 t{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) t[a][b][x][y] = (*this)(a, b, x, y);
    return t;
}

Correlation make_correlation(const Correlation::Vector& entries) {
    Correlation::Vector p = entries;
    for (int i = 0; i < 16; ++i) {
        if (!std::isfinite(p[i])) throw NegativeProbability("non-finite probability entry");
        if (p[i] < -kValidationTol)
            throw NegativeProbability("negative probability " + std::to_string(p[i]) + " at flat index " +
                                      std::to_string(i));
    }
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double sum = p.segment<4>(flat_index(a, b, 0, 0)).sum();
            if (std::abs(sum - 1.0) > kValidationTol)
                throw NormalizationError("slice " + describe_slice(a, b) + " sums to " + std::to_string(sum));
        }
    }
    p = p.cwiseMax(0.0).cwiseMin(1.0);
    return Correlation(p);
}

Correlation make_correlation(const Table4& table) {
    Correlation::Vector v;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) v[flat_index(a, b, x, y)] = table[a][b][x][y];
    return make_correlation(v);
}

Correlation mix(std::span<const std::pair<double, Correlation>> components) {
    if (components.empty()) throw WeightError("empty mixture");
    double total = 0.0;
    Correlation::Vector acc = Correlation::Vector::Zero();
    for (const auto& [w, box] : components) {
        if (!(w >= 0.0)) throw WeightError("negative mixture weight " + std::to_string(w));
        total += w;
        acc += w * box.vector();
    }
    if (std::abs(total - 1.0) > kWeightTol) throw WeightError("mixture weights sum to " + std::to_string(total));
    return make_correlation(acc);
}

Correlation mix(std::initializer_list<std::pair<double, Correlation>> components) {
    return mix(std::span<const std::pair<double, Correlation>>(components.begin(), components.size()));
}

double correlator(const Correlation& p, int a, int b) {
    double e = 0.0;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) e += outcome_value(x) * outcome_value(y) * p(a, b, x, y);
    return e;
}

double lg_value(const Correlation& p) {
    double sum = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) sum += (a == 1 && b == 0 ? -1.0 : 1.0) * correlator(p, a, b);
    return std::abs(sum);
}

double disturbance_cost(const Correlation& p) { return std::max(0.0, 0.5 * lg_value(p) - 1.0); }

std::array<double, 2> marginal(const Correlation& p, Side side, int own_setting, int other_setting) {
    std::array<double, 2> m{0.0, 0.0};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            if (side == Side::Alice)
                m[x] += p(own_setting, other_setting, x, y);
            else
                m[y] += p(other_setting, own_setting, x, y);
        }
    }
    return m;
}

double DeltaVector::max() const { return std::max({d03, d12, d47, d56}); }

DeltaVector no_signaling_deltas(const Correlation& p) {
    const auto bob = [&](int a, int b) { return marginal(p, Side::Bob, b, a)[0]; };
    const auto alice = [&](int a, int b) { return marginal(p, Side::Alice, a, b)[0]; };
    return DeltaVector{
        std::abs(bob(0, 0) - bob(1, 0)),
        std::abs(bob(0, 1) - bob(1, 1)),
        std::abs(alice(1, 0) - alice(1, 1)),
        std::abs(alice(0, 0) - alice(0, 1)),
    };
}

double max_delta(const Correlation& p) { return no_signaling_deltas(p).max(); }

// ---------------------------------------------------------------------------

bool Strategy::x_depends_on_b() const {
    return x_rule[0][0] != x_rule[0][1] || x_rule[1][0] != x_rule[1][1];
}

bool Strategy::y_depends_on_a() const {
    return y_rule[0][0] != y_rule[1][0] || y_rule[0][1] != y_rule[1][1];
}

namespace {

template <typename F>
LabelRule make_rule(F f) {
    LabelRule r{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) r[a][b] = f(a, b) & 1;
    return r;
}

Strategy make_strategy(std::string id, StrategyClass kind, LabelRule x, LabelRule y) {
    return Strategy{std::move(id), kind, x, y};
}

struct Catalog {
    std::vector<Strategy> local;  // 16, named ones first
    std::vector<Strategy> one_bit;
    std::vector<Strategy> non_violating;
    std::map<std::string, const Strategy*, std::less<>> by_id;

    Catalog() {
        // Single-party rules; the codes double as id fragments.
        const std::vector<std::pair<std::string, LabelRule>> x_rules = {
            {"0", make_rule([](int, int) { return 0; })},
            {"1", make_rule([](int, int) { return 1; })},
            {"a", make_rule([](int a, int) { return a; })},
            {"na", make_rule([](int a, int) { return 1 - a; })},
        };
        const std::vector<std::pair<std::string, LabelRule>> y_rules = {
            {"0", make_rule([](int, int) { return 0; })},
            {"1", make_rule([](int, int) { return 1; })},
            {"b", make_rule([](int, int b) { return b; })},
            {"nb", make_rule([](int, int b) { return 1 - b; })},
        };
        const auto rule_of = [](const auto& rules, std::string_view code) {
            return std::find_if(rules.begin(), rules.end(), [&](const auto& r) { return r.first == code; })->second;
        };

        // d^{j_0}, in order j = 0..7.
        const std::array<std::pair<const char*, const char*>, 8> named = {{
            {"0", "0"}, {"a", "0"}, {"0", "nb"}, {"na", "nb"}, {"a", "b"}, {"1", "b"}, {"na", "1"}, {"1", "1"},
        }};
        std::map<std::string, std::string> alias;
        for (int j = 0; j < 8; ++j) {
            const auto [xc, yc] = named[j];
            const std::string id = "d" + std::to_string(j) + "_0";
            local.push_back(make_strategy(id, StrategyClass::Local, rule_of(x_rules, xc), rule_of(y_rules, yc)));
            alias[std::string("loc_") + xc + "_" + yc] = id;
        }
        for (const auto& [xc, xr] : x_rules) {
            for (const auto& [yc, yr] : y_rules) {
                const std::string generic = "loc_" + xc + "_" + yc;
                if (alias.count(generic)) continue;
                local.push_back(make_strategy(generic, StrategyClass::Local, xr, yr));
            }
        }

        const auto nb = [](int b) { return 1 - b; };
        const auto na = [](int a) { return 1 - a; };
        const auto v = StrategyClass::OneBitViolating;
        one_bit = {
            make_strategy("d0_1", v, make_rule([](int, int) { return 0; }),
                          make_rule([&](int a, int b) { return a * nb(b); })),
            make_strategy("d1_1", v, make_rule([&](int a, int) { return na(a); }),
                          make_rule([](int a, int b) { return a * b + 1; })),
            make_strategy("d2_1", v, make_rule([](int a, int) { return a; }),
                          make_rule([](int a, int b) { return a * b; })),
            make_strategy("d3_1", v, make_rule([](int, int) { return 1; }),
                          make_rule([&](int a, int b) { return a * nb(b) + 1; })),
            make_strategy("d4_1", v, make_rule([&](int a, int b) { return a * nb(b); }),
                          make_rule([](int, int) { return 0; })),
            make_strategy("d5_1", v, make_rule([&](int a, int b) { return na(a) * nb(b); }),
                          make_rule([&](int, int b) { return nb(b); })),
            make_strategy("d6_1", v, make_rule([&](int a, int b) { return na(a) * nb(b) + 1; }),
                          make_rule([](int, int b) { return b; })),
            make_strategy("d7_1", v, make_rule([&](int a, int b) { return a * nb(b) + 1; }),
                          make_rule([](int, int) { return 1; })),
        };

        // dp<j>_1 with j = 4*src + 2*i + k: src 0 -> (a^i, a^k), src 1 -> (b^i, b^k).
        for (int j = 0; j < 8; ++j) {
            const int src = j / 4, i = (j / 2) % 2, k = j % 2;
            const auto setting = [src](int a, int b) { return src == 0 ? a : b; };
            non_violating.push_back(make_strategy("dp" + std::to_string(j) + "_1", StrategyClass::OneBitNonViolating,
                                                  make_rule([=](int a, int b) { return setting(a, b) ^ i; }),
                                                  make_rule([=](int a, int b) { return setting(a, b) ^ k; })));
        }

        for (const auto* group : {&local, &one_bit, &non_violating})
            for (const auto& s : *group) by_id[s.id] = &s;
        for (const auto& [generic, id] : alias) by_id[generic] = by_id.at(id);
    }
};

const Catalog& the_catalog() {
    static const Catalog c;
    return c;
}

std::string normalize_id(std::string_view raw) {
    std::string out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const char c = raw[i];
        if (c == '^' || c == '{' || c == '}' || c == ' ') continue;
        if (c == '\'') {
            out += 'p';
        } else if (raw.substr(i, 3) == "\xE2\x80\xB2") {  // U+2032 prime
            out += 'p';
            i += 2;
        } else {
            out += c;
        }
    }
    return out;
}

}  // namespace

const Strategy& catalog(std::string_view id) {
    const auto& c = the_catalog();
    const auto it = c.by_id.find(normalize_id(id));
    if (it == c.by_id.end()) throw UnknownStrategy("unknown strategy id '" + std::string(id) + "'");
    return *it->second;
}

Correlation as_correlation(const Strategy& s) {
    Correlation::Vector v = Correlation::Vector::Zero();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) v[flat_index(a, b, s.x_rule[a][b], s.y_rule[a][b])] = 1.0;
    return make_correlation(v);
}

std::span<const Strategy> local_strategies() { return the_catalog().local; }

std::span<const Strategy> named_local_strategies() { return local_strategies().first(8); }

std::span<const Strategy> one_bit_strategies() { return the_catalog().one_bit; }

std::span<const Strategy> non_violating_strategies() { return the_catalog().non_violating; }

std::vector<Strategy> full_basis() {
    std::vector<Strategy> out;
    for (auto group : {local_strategies(), one_bit_strategies(), non_violating_strategies()})
        out.insert(out.end(), group.begin(), group.end());
    return out;
}

Correlation pr_box() { return mix({{0.5, as_correlation(catalog("d0_1"))}, {0.5, as_correlation(catalog("d3_1"))}}); }

Correlation isotropic_box(double visibility) {
    if (!(visibility >= 0.0 && visibility <= 1.0))
        throw DomainError("isotropic visibility must lie in [0,1], got " + std::to_string(visibility));
    Correlation::Vector v;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) {
                    const int parity = x ^ y ^ (a * (1 - b));
                    v[flat_index(a, b, x, y)] = 0.25 * (1.0 + (parity ? -visibility : visibility));
                }
    return make_correlation(v);
}

Correlation tsirelson_box() { return isotropic_box(1.0 / std::sqrt(2.0)); }

}  // namespace sigdef
