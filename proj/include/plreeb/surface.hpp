#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plreeb/error.hpp"

namespace plreeb {

using VertexId = std::int32_t;

/// Triangulated surface. Vertex ids are dense 0-based integers; the vertex
/// order of each triangle is the orientation witness. Coordinates are carried
/// verbatim for file round trips and never interpreted.
///
/// Edge/triangle adjacency is derived eagerly so that validation and the
/// level-set machinery can run on arbitrary triangle soups.
class SimplicialSurface {
public:
    SimplicialSurface() = default;

    SimplicialSurface(std::size_t vertex_count,
                      std::vector<std::array<VertexId, 3>> triangles,
                      std::vector<std::array<std::string, 3>> coordinates = {})
        : vertex_count_(vertex_count),
          triangles_(std::move(triangles)),
          coordinates_(std::move(coordinates))
    {
        if (coordinates_.empty())
            coordinates_.assign(vertex_count_, {"0", "0", "0"});
        if (coordinates_.size() != vertex_count_)
            throw Error(ErrorCode::InvalidArgument, "coordinate count does not match vertex count");
        build_adjacency();
    }

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t triangle_count() const { return triangles_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<std::array<VertexId, 3>>& triangles() const { return triangles_; }
    const std::array<VertexId, 3>& triangle(int t) const { return triangles_[t]; }
    const std::vector<std::array<std::string, 3>>& coordinates() const { return coordinates_; }

    /// Edges as sorted vertex pairs in lexicographic order.
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    const std::pair<VertexId, VertexId>& edge(int e) const { return edges_[e]; }

    int edge_index(VertexId a, VertexId b) const
    {
        if (a > b) std::swap(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(a, b));
        if (it == edges_.end() || *it != std::make_pair(a, b)) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    /// Triangles incident to an edge (1 or 2 on a valid mesh).
    const std::vector<int>& edge_triangles(int e) const { return edge_triangles_[e]; }
    const std::vector<int>& vertex_triangles(VertexId v) const { return vertex_triangles_[v]; }
    const std::array<int, 3>& triangle_edges(int t) const { return triangle_edges_[t]; }

    bool is_boundary_edge(int e) const { return edge_triangles_[e].size() == 1; }

    bool has_boundary() const
    {
        for (std::size_t e = 0; e < edges_.size(); ++e)
            if (edge_triangles_[e].size() == 1) return true;
        return false;
    }

    std::vector<VertexId> vertex_neighbors(VertexId v) const
    {
        std::set<VertexId> nb;
        for (int t : vertex_triangles_[v])
            for (VertexId u : triangles_[t])
                if (u != v) nb.insert(u);
        return {nb.begin(), nb.end()};
    }

private:
    void build_adjacency()
    {
        edges_.clear();
        edges_.reserve(triangles_.size() * 3);
        for (const auto& t : triangles_) {
            for (int k = 0; k < 3; ++k) {
                VertexId a = t[k], b = t[(k + 1) % 3];
                if (a == b) continue; // degenerate; validation reports it
                if (a > b) std::swap(a, b);
                if (a >= 0 && static_cast<std::size_t>(b) < vertex_count_)
                    edges_.emplace_back(a, b);
            }
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

        edge_triangles_.assign(edges_.size(), {});
        vertex_triangles_.assign(vertex_count_, {});
        triangle_edges_.assign(triangles_.size(), {-1, -1, -1});
        for (std::size_t i = 0; i < triangles_.size(); ++i) {
            const auto& t = triangles_[i];
            for (int k = 0; k < 3; ++k) {
                VertexId a = t[k], b = t[(k + 1) % 3];
                if (a == b || a < 0 || b < 0 ||
                    static_cast<std::size_t>(a) >= vertex_count_ ||
                    static_cast<std::size_t>(b) >= vertex_count_)
                    continue;
                int e = edge_index(a, b);
                triangle_edges_[i][k] = e;
                if (edge_triangles_[e].empty() || edge_triangles_[e].back() != static_cast<int>(i))
                    edge_triangles_[e].push_back(static_cast<int>(i));
            }
            for (VertexId v : t)
                if (v >= 0 && static_cast<std::size_t>(v) < vertex_count_)
                    if (vertex_triangles_[v].empty() || vertex_triangles_[v].back() != static_cast<int>(i))
                        vertex_triangles_[v].push_back(static_cast<int>(i));
        }
    }

    std::size_t vertex_count_ = 0;
    std::vector<std::array<VertexId, 3>> triangles_;
    std::vector<std::array<std::string, 3>> coordinates_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<int>> edge_triangles_;
    std::vector<std::vector<int>> vertex_triangles_;
    std::vector<std::array<int, 3>> triangle_edges_;
};

struct Violation {
    ErrorCode kind;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(ErrorCode kind, std::string message)
    {
        ok = false;
        violations.push_back({kind, std::move(message)});
    }
};

namespace detail {

/// The link of a vertex must be a single simple path (boundary vertex) or a
/// single simple cycle (interior vertex). Link edges are the opposite edges
/// of the incident triangles.
inline bool vertex_link_ok(const SimplicialSurface& m, VertexId v)
{
    const auto& tris = m.vertex_triangles(v);
    if (tris.empty()) return false;

    std::map<VertexId, std::vector<VertexId>> link;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (int t : tris) {
        std::array<VertexId, 2> opp{};
        int n = 0;
        for (VertexId u : m.triangle(t))
            if (u != v) {
                if (n < 2) opp[n] = u;
                ++n;
            }
        if (n != 2) return false; // degenerate triangle, reported separately
        VertexId a = std::min(opp[0], opp[1]);
        VertexId b = std::max(opp[0], opp[1]);
        if (!seen.insert({a, b}).second) return false; // repeated link edge
        link[a].push_back(b);
        link[b].push_back(a);
    }

    int odd = 0;
    for (const auto& [u, nbs] : link) {
        if (nbs.size() > 2) return false;
        if (nbs.size() == 1) ++odd;
    }
    if (odd != 0 && odd != 2) return false;

    // connectivity: walk from an arbitrary link vertex
    std::set<VertexId> visited;
    std::vector<VertexId> stack{link.begin()->first};
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        if (!visited.insert(u).second) continue;
        for (VertexId w : link[u]) stack.push_back(w);
    }
    return visited.size() == link.size();
}

} // namespace detail

/// Checks all SimplicialSurface invariants on an arbitrary triangle soup.
inline ValidationReport validate_surface(const SimplicialSurface& mesh)
{
    ValidationReport report;

    std::set<std::array<VertexId, 3>> tri_sets;
    for (std::size_t i = 0; i < mesh.triangle_count(); ++i) {
        auto t = mesh.triangle(static_cast<int>(i));
        bool in_range = true;
        for (VertexId v : t)
            if (v < 0 || static_cast<std::size_t>(v) >= mesh.vertex_count()) {
                report.add(ErrorCode::InvalidVertexId,
                           "triangle " + std::to_string(i) + " references vertex " + std::to_string(v));
                in_range = false;
            }
        if (!in_range) continue;
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            report.add(ErrorCode::DegenerateTriangle,
                       "triangle " + std::to_string(i) + " has repeated vertices");
            continue;
        }
        std::array<VertexId, 3> key = t;
        std::sort(key.begin(), key.end());
        if (!tri_sets.insert(key).second)
            report.add(ErrorCode::DuplicateTriangle,
                       "triangle " + std::to_string(i) + " duplicates an earlier triangle");
    }
    if (!report.ok) return report; // adjacency below assumes well-formed triangles

    for (std::size_t e = 0; e < mesh.edge_count(); ++e)
        if (mesh.edge_triangles(static_cast<int>(e)).size() > 2)
            report.add(ErrorCode::NonManifoldEdge,
                       "edge (" + std::to_string(mesh.edge(static_cast<int>(e)).first) + "," +
                           std::to_string(mesh.edge(static_cast<int>(e)).second) + ") lies in " +
                           std::to_string(mesh.edge_triangles(static_cast<int>(e)).size()) + " triangles");

    for (std::size_t v = 0; v < mesh.vertex_count(); ++v)
        if (!detail::vertex_link_ok(mesh, static_cast<VertexId>(v)))
            report.add(ErrorCode::NonManifoldVertex,
                       "link of vertex " + std::to_string(v) + " is not a single path or cycle");

    return report;
}

} // namespace plreeb
