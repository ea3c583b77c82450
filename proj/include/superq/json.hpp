#pragma once

#include "superq/quotient.hpp"

#include <json.hpp>

namespace superq {

using Json = nlohmann::json;

inline Json to_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

inline Json to_json(const Weight& w) { return Json{{"m", w.m}, {"even", w.even}, {"odd", w.odd}}; }

inline Weight weight_from_json(const Json& j) {
    auto w = make_weight(j.at("even").get<std::vector<long>>(), j.at("odd").get<long>());
    if (j.contains("m") && j.at("m").get<int>() != w.m) throw std::invalid_argument("weight m disagrees with even part");
    return w;
}

inline Json to_json(const WeightDiagram& d) {
    Json out = Json::array();
    for (const auto& [pos, mark] : d.labels)
        out.push_back(Json::array({pos, mark == Mark::cross ? "x" : mark == Mark::circle ? "o" : "v"}));
    return out;
}

inline Json to_json(const RationalWeight& w) { return w.parts; }
inline Json to_json(const Partition& p) { return p.parts; }

inline Json to_json(const WeightMultiset& ms) {
    Json out = Json::array();
    for (const auto& [w, c] : ms) out.push_back(Json::array({w.parts, to_json(c)}));
    return out;
}

inline Json to_json(const IndecompLabel& x) {
    return Json{{"label", format_label(x)}, {"kind", kind_name(x.kind)}, {"block", x.block.crosses},
                {"lo", x.lo}, {"hi", x.hi}, {"parity", x.parity}};
}

inline Json to_json(const FormalObject& f) {
    Json out = Json::array();
    for (const auto& [x, c] : f.summands) out.push_back(Json{{"summand", to_json(x)}, {"mult", to_json(c)}});
    return out;
}

inline Json to_json(const Triple& t) {
    return Json{{"d", t.d}, {"b", t.b}, {"core", t.core.parts}, {"parity", t.parity}};
}

inline Json to_json(const SlTriple& t) { return Json{{"d", t.d}, {"core", t.core.parts}, {"parity", t.parity}}; }

inline Triple triple_from_json(const Json& j) {
    return {j.at("d").get<long>(), j.at("b").get<long>(), RationalWeight{j.at("core").get<std::vector<long>>()},
            j.at("parity").get<int>()};
}

inline Json to_json(const GradedGlObject& g) {
    Json pieces = Json::array();
    for (const auto& [k, c] : g.pieces)
        pieces.push_back(Json{{"degree", k.degree}, {"core", k.core.parts}, {"parity", k.parity}, {"mult", to_json(c)}});
    return Json{{"rank", g.rank}, {"pieces", pieces}};
}

inline Json to_json(const Sl21Label& z) {
    auto [p, q] = sl21_charges(z);
    return Json{{"name", std::string(z.bar ? "Zbar" : "Z") + "^" + std::to_string(2 * z.p + 1) + "(" +
                             std::to_string(z.j) + ")"},
                {"charges", {p, q}}};
}

}  // namespace superq
