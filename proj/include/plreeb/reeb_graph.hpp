#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "plreeb/level_set.hpp"
#include "plreeb/rational.hpp"

namespace plreeb {

struct ReebNode {
    int id = 0;
    Rational level;
    bool critical = true;
    /// Mesh cells of the level component this node came from (provenance;
    /// empty for graphs not produced by a sweep).
    std::vector<Cell> cells;
};

struct ReebEdge {
    int id = 0;
    int a = 0, b = 0; // endpoint node ids, distinct (no loops)
    Rational lo, hi;  // equal to the endpoint levels, lo < hi
    std::vector<Cell> cells;
};

/// Loop-free multigraph with a level per node and a level interval per edge.
struct ReebGraph {
    std::vector<ReebNode> nodes;
    std::vector<ReebEdge> edges;

    const ReebNode& node(int id) const { return nodes[static_cast<std::size_t>(id)]; }
};

/// First Betti number E - V + C of an arbitrary multigraph given as
/// (vertex count, edge endpoint pairs).
inline int betti1(int vertex_count, const std::vector<std::pair<int, int>>& edges)
{
    UnionFind uf(static_cast<std::size_t>(vertex_count));
    for (auto [a, b] : edges) uf.unite(a, b);
    std::vector<char> seen(vertex_count, 0);
    int comps = 0;
    for (int v = 0; v < vertex_count; ++v) {
        int r = uf.find(v);
        if (!seen[r]) {
            seen[r] = 1;
            ++comps;
        }
    }
    return static_cast<int>(edges.size()) - vertex_count + comps;
}

inline int betti1(const ReebGraph& g)
{
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (const auto& e : g.edges) edges.emplace_back(e.a, e.b);
    return betti1(static_cast<int>(g.nodes.size()), edges);
}

/// Canonical machine-readable form.
inline nlohmann::ordered_json reeb_graph_to_json(const ReebGraph& g)
{
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& n : g.nodes)
        j["nodes"].push_back({{"id", n.id}, {"level", to_string(n.level)}, {"critical", n.critical}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"id", e.id},
                              {"ends", {e.a, e.b}},
                              {"interval", {to_string(e.lo), to_string(e.hi)}}});
    return j;
}

inline ReebGraph reeb_graph_from_json(const nlohmann::json& j)
{
    ReebGraph g;
    try {
        for (const auto& jn : j.at("nodes")) {
            ReebNode n;
            n.id = jn.at("id").get<int>();
            n.level = parse_rational(jn.at("level").get<std::string>());
            n.critical = jn.value("critical", true);
            g.nodes.push_back(std::move(n));
        }
        for (const auto& je : j.at("edges")) {
            ReebEdge e;
            e.id = je.at("id").get<int>();
            e.a = je.at("ends").at(0).get<int>();
            e.b = je.at("ends").at(1).get<int>();
            e.lo = parse_rational(je.at("interval").at(0).get<std::string>());
            e.hi = parse_rational(je.at("interval").at(1).get<std::string>());
            g.edges.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::ParseError, std::string("bad Reeb graph JSON: ") + ex.what());
    }
    return g;
}

/// Human-oriented DOT output: nodes labeled "id@level", parallel edges
/// repeated.
inline std::string reeb_graph_to_dot(const ReebGraph& g)
{
    std::string out = "graph reeb {\n";
    for (const auto& n : g.nodes)
        out += "  n" + std::to_string(n.id) + " [label=\"" + std::to_string(n.id) + "@" +
               to_string(n.level) + "\"];\n";
    for (const auto& e : g.edges)
        out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) + ";\n";
    out += "}\n";
    return out;
}

} // namespace plreeb
