#include "sigdef/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <string>

#include "sigdef/errors.hpp"

namespace sigdef {

using nlohmann::json;

double round_significant(double value, int digits) {
    if (!std::isfinite(value) || value == 0.0) return value;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return std::strtod(buf, nullptr);
}

namespace {

const json& expect_pair(const json& node, const char* level) {
    if (!node.is_array() || node.size() != 2)
        throw ParseError(std::string("correlation JSON: expected a 2-element array at the ") + level + " level");
    return node;
}

const char* measure_name(SignalMeasure m) { return m == SignalMeasure::MutualInformation ? "info" : "delta"; }

}  // namespace

Correlation correlation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p")) throw ParseError("correlation JSON: missing \"p\"");
    Table4 t{};
    const json& pa = expect_pair(j.at("p"), "a");
    for (int a = 0; a < 2; ++a) {
        const json& pb = expect_pair(pa[a], "b");
        for (int b = 0; b < 2; ++b) {
            const json& px = expect_pair(pb[b], "x");
            for (int x = 0; x < 2; ++x) {
                const json& py = expect_pair(px[x], "y");
                for (int y = 0; y < 2; ++y) {
                    if (!py[y].is_number())
                        throw ParseError("correlation JSON: entry [" + std::to_string(a) + "][" + std::to_string(b) +
                                         "][" + std::to_string(x) + "][" + std::to_string(y) + "] is not a number");
                    t[a][b][x][y] = py[y].get<double>();
                }
            }
        }
    }
    return make_correlation(t);
}

Correlation parse_correlation(std::string_view text) {
    json j = json::parse(text.begin(), text.end(), nullptr, false);
    if (j.is_discarded()) throw ParseError("correlation JSON: malformed document");
    return correlation_from_json(j);
}

Correlation read_correlation(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_correlation(text);
}

json to_json(const Correlation& p) {
    json outer = json::array();
    for (int a = 0; a < 2; ++a) {
        json jb = json::array();
        for (int b = 0; b < 2; ++b) {
            json jx = json::array();
            for (int x = 0; x < 2; ++x)
                jx.push_back({round_significant(p(a, b, x, 0)), round_significant(p(a, b, x, 1))});
            jb.push_back(jx);
        }
        outer.push_back(jb);
    }
    return json{{"p", outer}};
}

json to_json(const ClassificationReport& r) {
    return json{
        {"lambda", round_significant(r.lambda)},
        {"c_lambda", round_significant(r.c_lambda)},
        {"S", round_significant(r.S)},
        {"s", round_significant(r.s)},
        {"C", round_significant(r.C)},
        {"eta", round_significant(r.eta)},
        {"classical", r.classical},
        {"measure", measure_name(r.measure)},
        {"S_info", round_significant(r.S_info)},
        {"S_delta", round_significant(r.S_delta)},
        {"classical_info", r.classical_info},
        {"classical_delta", r.classical_delta},
    };
}

json to_json(const Decomposition& d) {
    json w = json::object();
    for (const auto& [id, value] : d.weights) w[id] = round_significant(value);
    return json{{"weights", w}, {"cost", round_significant(d.cost)}, {"residual", round_significant(d.residual)}};
}

json to_json(const SignalReport& r) {
    return json{{"s", round_significant(r.s)},
                {"S", round_significant(r.S)},
                {"alpha_star", round_significant(r.alpha_star)},
                {"b_star", r.b_star}};
}

json to_json(const RandomnessReport& r) {
    return json{{"p", round_significant(r.p)},
                {"I", round_significant(r.I)},
                {"s", round_significant(r.s)},
                {"tradeoff", round_significant(r.tradeoff)}};
}

}  // namespace sigdef
