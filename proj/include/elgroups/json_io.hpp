#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "form_ring.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "ring.hpp"

namespace elgroups {

using nlohmann::json;

/// {"kind":"integers"} | {"kind":"modular","m":5}
/// | {"kind":"free","gens":["x","y"],"involution":true,"epsilon":-1}
/// | {"kind":"group_ring","perm_gens":[[2,1,3],[2,3,1]]}
inline RingPtr ring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("ring spec must be an object with a \"kind\" key");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "integers") return RingSpec::integers();
    if (kind == "modular") {
        if (!j.contains("m")) throw ParseError("modular ring spec requires \"m\"");
        return RingSpec::modular(Int(j.at("m").get<long long>()));
    }
    if (kind == "free") {
        if (!j.contains("gens")) throw ParseError("free ring spec requires \"gens\"");
        std::vector<std::string> gens = j.at("gens").get<std::vector<std::string>>();
        bool invo = j.value("involution", false);
        int eps = j.value("epsilon", 1);
        return RingSpec::free_ring(std::move(gens), invo, eps);
    }
    if (kind == "group_ring") {
        if (!j.contains("perm_gens"))
            throw ParseError("group ring spec requires \"perm_gens\"");
        auto pg = j.at("perm_gens").get<std::vector<std::vector<int>>>();
        return RingSpec::group_ring(pg);
    }
    throw ParseError("unknown ring kind: " + kind);
}

inline json ring_to_json(const RingPtr& R) {
    json j;
    switch (R->kind()) {
        case RingKind::Integers:
            j["kind"] = "integers";
            break;
        case RingKind::Modular:
            j["kind"] = "modular";
            j["m"] = R->modulus().convert_to<long long>();
            break;
        case RingKind::Free:
            j["kind"] = "free";
            j["gens"] = R->generator_names();
            j["involution"] = R->free_involution();
            j["epsilon"] = R->epsilon_sign();
            break;
        case RingKind::GroupRing: {
            j["kind"] = "group_ring";
            std::vector<std::vector<int>> pg;
            for (const auto& p : R->group_generators()) {
                std::vector<int> row;
                for (auto v : p) row.push_back(static_cast<int>(v) + 1);
                pg.push_back(std::move(row));
            }
            j["perm_gens"] = pg;
            break;
        }
    }
    return j;
}

/// {"base":<ring>, "epsilon":-1, "lambda":"maximal"|"minimal"|{"generated":[...]}}
inline FormRing form_from_json(const json& j) {
    if (!j.is_object() || !j.contains("base"))
        throw ParseError("form ring spec must be an object with a \"base\" key");
    RingPtr base = ring_from_json(j.at("base"));
    int eps = j.value("epsilon", 1);
    const json& lam = j.contains("lambda") ? j.at("lambda") : json("maximal");
    if (lam.is_string()) {
        const std::string s = lam.get<std::string>();
        if (s == "maximal") return FormRing(base, eps, LambdaStrategy::Maximal);
        if (s == "minimal") return FormRing(base, eps, LambdaStrategy::Minimal);
        throw ParseError("unknown lambda strategy: " + s);
    }
    if (lam.is_object() && lam.contains("generated")) {
        std::vector<RingElement> gens;
        for (const auto& lit : lam.at("generated"))
            gens.push_back(parse_element(base, lit.get<std::string>()));
        return FormRing(base, eps, LambdaStrategy::Generated, std::move(gens));
    }
    throw ParseError("lambda must be \"maximal\", \"minimal\" or {\"generated\":[...]}");
}

inline json form_to_json(const FormRing& F) {
    json j;
    j["base"] = ring_to_json(F.base());
    j["epsilon"] = F.epsilon_sign();
    if (F.strategy() == LambdaStrategy::Generated) {
        std::vector<std::string> gens;
        for (const auto& g : F.lambda_generators()) gens.push_back(g.str());
        j["lambda"] = json{{"generated", gens}};
    } else {
        j["lambda"] = strategy_name(F.strategy());
    }
    return j;
}

/// {"rows":n,"cols":n,"entries":[["1","0"],["x","2"]]} with element literals.
inline Matrix matrix_from_json(const json& j, const RingPtr& R) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix json requires rows, cols, entries");
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& ent = j.at("entries");
    if (!ent.is_array() || ent.size() != rows)
        throw ParseError("matrix entries must be an array of rows");
    Matrix m(R, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = ent.at(i);
        if (!row.is_array() || row.size() != cols)
            throw ParseError("matrix row " + std::to_string(i) + " has wrong length");
        for (std::size_t jx = 0; jx < cols; ++jx) {
            const auto& cell = row.at(jx);
            if (cell.is_number_integer())
                m.set(i, jx, RingElement::from_int(R, cell.get<long long>()));
            else
                m.set(i, jx, parse_element(R, cell.get<std::string>()));
        }
    }
    return m;
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

/// Canonical report serialization: checks sorted by id, wall time omitted
/// so a fixed seed yields byte-identical output.
inline json report_to_json(const Report& rep) {
    json checks = json::array();
    Report sorted = rep;
    sorted.sort();
    for (const auto& c : sorted.checks)
        checks.push_back(json{{"id", c.id},
                              {"citation", c.citation},
                              {"status", status_name(c.status)},
                              {"witness", c.witness}});
    return json{{"checks", checks},
                {"summary",
                 {{"pass", rep.count(CheckStatus::Pass)},
                  {"fail", rep.count(CheckStatus::Fail)},
                  {"partial", rep.count(CheckStatus::Partial)}}}};
}

}  // namespace elgroups
