#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "plreeb/isomorphism.hpp"
#include "plreeb/topology.hpp"

namespace plreeb {

struct DecoratedVertex {
    std::string id;
    /// Compact-surface signature of the vertex piece; condition (cob) forces
    /// gamma.boundary_count == degree because every fiber is a circle.
    SurfaceSignature gamma;
    std::optional<long long> height;
};

struct DecoratedEdge {
    std::string id;
    int a = 0, b = 0; // vertex indices
};

/// Loop-free multigraph with a surface signature per vertex.
struct DecoratedGraph {
    std::vector<DecoratedVertex> vertices;
    std::vector<DecoratedEdge> edges;

    int degree(int v) const
    {
        int d = 0;
        for (const auto& e : edges) d += (e.a == v) + (e.b == v);
        return d;
    }

    int vertex_index(const std::string& id) const
    {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i].id == id) return static_cast<int>(i);
        return -1;
    }

    Multigraph skeleton() const
    {
        Multigraph m;
        m.n = static_cast<int>(vertices.size());
        for (const auto& e : edges) m.edges.emplace_back(e.a, e.b);
        return m;
    }
};

/// Checks the DecoratedGraph invariants: loop-freeness, valid signatures and
/// condition (cob).
inline ValidationReport validate_decoration(const DecoratedGraph& dg)
{
    ValidationReport report;
    for (const auto& e : dg.edges) {
        if (e.a < 0 || e.b < 0 || e.a >= static_cast<int>(dg.vertices.size()) ||
            e.b >= static_cast<int>(dg.vertices.size()))
            report.add(ErrorCode::InvalidVertexId, "edge " + e.id + " references a missing vertex");
        else if (e.a == e.b)
            report.add(ErrorCode::LoopEdge, "edge " + e.id + " is a loop");
    }
    if (!report.ok) return report;

    for (std::size_t v = 0; v < dg.vertices.size(); ++v) {
        const auto& dv = dg.vertices[v];
        if (!dv.gamma.consistent()) {
            report.add(ErrorCode::InvalidSignature, "vertex " + dv.id + " has an inconsistent signature");
            continue;
        }
        int deg = dg.degree(static_cast<int>(v));
        if (dv.gamma.boundary_count != deg) {
            if (deg == 0)
                report.add(ErrorCode::IsolatedVertexWithBoundary,
                           "isolated vertex " + dv.id + " needs a closed surface piece");
            else
                report.add(ErrorCode::CobMismatch,
                           "vertex " + dv.id + " has " + std::to_string(dv.gamma.boundary_count) +
                               " boundary circles for degree " + std::to_string(deg));
        }
    }
    return report;
}

/// Injective integer heights: user heights are honored (and must be
/// injective); unset vertices receive, in order, the smallest unused
/// non-negative integers.
inline std::vector<long long> assign_heights(const DecoratedGraph& dg)
{
    std::set<long long> used;
    for (const auto& v : dg.vertices)
        if (v.height && !used.insert(*v.height).second)
            throw Error(ErrorCode::NonInjectiveHeights, "height " + std::to_string(*v.height) + " used twice");

    std::vector<long long> heights(dg.vertices.size());
    long long next = 0;
    for (std::size_t v = 0; v < dg.vertices.size(); ++v) {
        if (dg.vertices[v].height) {
            heights[v] = *dg.vertices[v].height;
        } else {
            while (used.count(next)) ++next;
            heights[v] = next;
            used.insert(next);
        }
    }
    return heights;
}

inline DecoratedGraph decorated_graph_from_json(const nlohmann::json& j)
{
    DecoratedGraph dg;
    auto integer_field = [](const nlohmann::json& obj, const char* key) {
        const auto& val = obj.at(key);
        if (!val.is_number_integer())
            throw Error(ErrorCode::ParseError, std::string(key) + " must be an integer");
        return val.get<long long>();
    };
    try {
        for (const auto& jv : j.at("vertices")) {
            DecoratedVertex v;
            v.id = jv.at("id").get<std::string>();
            v.gamma.orientable = jv.value("orientable", true);
            v.gamma.genus = jv.contains("genus") ? static_cast<int>(integer_field(jv, "genus")) : 0;
            if (jv.contains("boundary")) v.gamma.boundary_count = static_cast<int>(integer_field(jv, "boundary"));
            else v.gamma.boundary_count = -1; // fill from degree below
            if (jv.contains("height")) v.height = integer_field(jv, "height");
            dg.vertices.push_back(std::move(v));
        }
        for (const auto& je : j.at("edges")) {
            DecoratedEdge e;
            e.id = je.at("id").get<std::string>();
            auto ends = je.at("ends");
            if (ends.size() != 2) throw Error(ErrorCode::ParseError, "edge " + e.id + " needs two ends");
            e.a = dg.vertex_index(ends.at(0).get<std::string>());
            e.b = dg.vertex_index(ends.at(1).get<std::string>());
            if (e.a < 0 || e.b < 0)
                throw Error(ErrorCode::ParseError, "edge " + e.id + " references an unknown vertex");
            dg.edges.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::ParseError, std::string("bad decorated graph JSON: ") + ex.what());
    }
    std::set<std::string> ids;
    for (const auto& v : dg.vertices)
        if (!ids.insert(v.id).second)
            throw Error(ErrorCode::ParseError, "duplicate vertex id " + v.id);
    for (std::size_t v = 0; v < dg.vertices.size(); ++v) {
        auto& g = dg.vertices[v].gamma;
        if (g.boundary_count < 0) g.boundary_count = dg.degree(static_cast<int>(v));
        g.euler_char = g.expected_euler();
    }
    return dg;
}

inline nlohmann::ordered_json decorated_graph_to_json(const DecoratedGraph& dg)
{
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : dg.vertices) {
        nlohmann::ordered_json jv{{"id", v.id},
                                  {"orientable", v.gamma.orientable},
                                  {"genus", v.gamma.genus},
                                  {"boundary", v.gamma.boundary_count}};
        if (v.height) jv["height"] = *v.height;
        j["vertices"].push_back(std::move(jv));
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : dg.edges)
        j["edges"].push_back({{"id", e.id}, {"ends", {dg.vertices[e.a].id, dg.vertices[e.b].id}}});
    return j;
}

} // namespace plreeb
