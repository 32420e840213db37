#pragma once

#include <json.hpp>

#include "sp4gtz/action.hpp"
#include "sp4gtz/diagrams.hpp"
#include "sp4gtz/entry_poly.hpp"
#include "sp4gtz/gamma_series.hpp"

namespace sp4gtz {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json diagram_to_json(const GTZDiagram& d) {
    return Json::array({d.m2, d.m1, d.k2, d.k1, d.h2, d.h1});
}

inline GTZDiagram diagram_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 6) throw std::invalid_argument("diagram: expected array of 6 integers");
    std::array<int, 6> e{};
    for (std::size_t i = 0; i < 6; ++i) e[i] = j[i].get<int>();
    return GTZDiagram::from_entries(e);
}

inline Json exponents_to_json(const ExponentVector& v) {
    Json a = Json::array();
    for (int i = 0; i < 10; ++i) a.push_back(v[i]);
    return a;
}

inline ExponentVector exponents_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 10) throw std::invalid_argument("shift: expected array of 10 integers");
    ExponentVector v{};
    for (int i = 0; i < 10; ++i) v[i] = j[static_cast<std::size_t>(i)].get<int>();
    return v;
}

inline Json poly_to_json(const SparsePoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json exps = Json::object();
        for (int i = 0; i < kNumLabels; ++i)
            if (m[static_cast<std::size_t>(i)] != 0) exps[label_name(static_cast<DetLabel>(i))] = m[static_cast<std::size_t>(i)];
        terms.push_back({{"exponents", exps}, {"coeff", to_string(c)}});
    }
    return terms;
}

inline SparsePoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial: expected array of terms");
    SparsePoly p;
    for (const auto& t : j) {
        WorkingExponents m{};
        for (const auto& [name, v] : t.at("exponents").items()) {
            const auto l = label_from_name(name);
            if (!l) throw std::invalid_argument("unknown label: " + name);
            m[static_cast<std::size_t>(*l)] = v.get<int>();
        }
        p.add_term(m, rational_from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

inline Json entry_poly_to_json(const EntryPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json exps = Json::object();
        for (int i = 0; i < 8; ++i)
            if (m[static_cast<std::size_t>(i)] != 0) exps[entry_name(i)] = m[static_cast<std::size_t>(i)];
        terms.push_back({{"exponents", exps}, {"coeff", to_string(c)}});
    }
    return terms;
}

inline Json graded_solution_to_json(const GradedSolution& sol) {
    Json layers = Json::array();
    for (const auto& [s, p] : sol.parts)
        layers.push_back({{"s", Json::array({s[0], s[1], s[2]})}, {"poly", poly_to_json(p)}});
    return Json{{"shift", exponents_to_json(sol.shift.gamma)}, {"layers", layers}};
}

inline Json matrix_to_json(const GeneratorMatrix& M) {
    Json entries = Json::array();
    for (const auto& [rc, v] : M.entries) entries.push_back(Json::array({rc.first, rc.second, to_string(v)}));
    return Json{{"schema", kSchemaVersion},
                {"weight", Json::array({M.weight.m2, M.weight.m1})},
                {"generator", generator_name(M.generator)},
                {"dim", M.dim},
                {"entries", entries}};
}

} // namespace sp4gtz
