#pragma once

#include <json.hpp>

#include "fusion/bethe_fusion.hpp"
#include "fusion/identities.hpp"
#include "fusion/numeric.hpp"
#include "fusion/partition.hpp"
#include "fusion/plactic.hpp"
#include "fusion/spectrum.hpp"
#include "fusion/vertex.hpp"

namespace fusion {

using nlohmann::json;

inline json to_json(const Partition& p) { return json(p.parts()); }

inline json to_json(const SchurExpansion& e) {
    json terms = json::array();
    for (const auto& [shape, coeff] : e.terms()) {
        terms.push_back({{"shape", shape.parts()}, {"coeff", coeff.to_long_long()}});
    }
    return json{{"terms", terms}};
}

inline json to_json(const FusionExpansion& e) {
    json terms = json::array();
    for (const auto& [shape, coeff] : e.terms) {
        terms.push_back({{"shape", shape.parts()}, {"coeff", coeff.to_long_long()}});
    }
    return json{{"n", e.n}, {"k", e.k}, {"terms", terms}};
}

inline SchurExpansion schur_expansion_from_json(const json& j) {
    SchurExpansion e;
    for (const auto& t : j.at("terms"))
        e.add(Partition(t.at("shape").get<std::vector<int>>()),
              BigInt(t.at("coeff").get<long long>()));
    return e;
}

inline FusionExpansion fusion_expansion_from_json(const json& j) {
    FusionExpansion e;
    e.n = j.at("n").get<int>();
    e.k = j.at("k").get<int>();
    for (const auto& t : j.at("terms")) {
        BigInt c(t.at("coeff").get<long long>());
        if (!c.is_zero()) e.terms[Partition(t.at("shape").get<std::vector<int>>())] = c;
    }
    return e;
}

inline json to_json(const ComplexMatrix& m, const FusionContext& ctx) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j)
            row.push_back({m.at(i, j).real(), m.at(i, j).imag()});
        rows.push_back(row);
    }
    json basis = json::array();
    for (const auto& w : ctx.basis()) basis.push_back(w.dynkin);
    return json{{"n", ctx.n()}, {"k", ctx.k()}, {"basis", basis}, {"matrix", rows}};
}

inline json to_json(const PlacticOperator& op, const FusionContext& src,
                    const FusionContext& dst) {
    json entries = json::array();
    for (int c = 0; c < op.source_dim; ++c) {
        for (const auto& [row, e] : op.cols[c]) {
            json zmap = json::object();
            for (const auto& [deg, v] : e.coeffs()) zmap[std::to_string(deg)] = v.to_long_long();
            entries.push_back({{"row", dst.weight(row).dynkin},
                               {"col", src.weight(c).dynkin},
                               {"z", zmap}});
        }
    }
    return json{{"n", op.n},
                {"source_level", op.source_level},
                {"target_level", op.target_level},
                {"entries", entries}};
}

inline json to_json(const BetheRoots& br, const ComplexVector& vec, double residual) {
    json roots = json::array();
    for (const auto& x : br.roots) roots.push_back({x.real(), x.imag()});
    json v = json::array();
    for (const auto& x : vec) v.push_back({x.real(), x.imag()});
    return json{{"sigma", br.sigma.parts()}, {"roots", roots}, {"residual", residual},
                {"vector", v}};
}

inline json to_json(const LatticeConfig& cfg) {
    json rows = json::array();
    auto quads = cfg.quadruples();
    for (size_t i = 0; i < quads.size(); ++i) {
        json cells = json::array();
        for (const auto& q : quads[i]) cells.push_back({q[0], q[1], q[2], q[3]});
        rows.push_back({{"cells", cells}, {"seam", cfg.moves[i][cfg.n - 1]}});
    }
    return json{{"bottom", cfg.bottom}, {"rows", rows}};
}

inline json to_json(const ValidationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}};
        if (!c.detail.empty()) entry["counterexample"] = c.detail;
        checks.push_back(entry);
    }
    return json{{"n", rep.n}, {"k", rep.k}, {"pass", rep.all_pass()}, {"checks", checks}};
}

}  // namespace fusion
