#pragma once

#include <algorithm>
#include <vector>

#include "json.hpp"
#include "plreeb/blocks.hpp"
#include "plreeb/decorated.hpp"
#include "plreeb/reeb_compute.hpp"

namespace plreeb {

struct RealizeOptions {
    int p = 6;     // boundary polygon size
    int rings = 2; // strictly monotone interior rings per tube
};

struct RealizationOutput {
    SimplicialSurface mesh;
    ScalarField field;
    /// Correspondence: triangle indices of each vertex block / edge tube.
    std::vector<std::vector<int>> vertex_triangles;
    std::vector<std::vector<int>> edge_triangles;
    std::vector<long long> heights;
    int p = 6, rings = 2;
};

/// Realizes a validated decoration: one constant-value block per vertex, one
/// strictly monotone tube per edge, tubes glued to free block rims by the
/// fixed cyclic identification. Condition (cob) consumes every block rim, so
/// the result is closed.
inline RealizationOutput realize(const DecoratedGraph& dg, RealizeOptions opt = {})
{
    if (opt.p < 3 || opt.rings < 2)
        throw Error(ErrorCode::InvalidArgument, "realize needs p >= 3 and rings >= 2");
    {
        auto report = validate_decoration(dg);
        if (!report.ok)
            throw Error(report.violations.front().kind, report.violations.front().message);
    }

    RealizationOutput out;
    out.p = opt.p;
    out.rings = opt.rings;
    out.heights = assign_heights(dg);

    std::vector<std::array<VertexId, 3>> tris;
    std::vector<Rational> values;
    std::vector<std::vector<std::vector<VertexId>>> free_rings(dg.vertices.size());
    std::vector<std::size_t> next_ring(dg.vertices.size(), 0);
    out.vertex_triangles.resize(dg.vertices.size());
    out.edge_triangles.resize(dg.edges.size());

    for (std::size_t v = 0; v < dg.vertices.size(); ++v) {
        VertexBlock block = build_vertex_block(dg.vertices[v].gamma, opt.p);
        const VertexId offset = static_cast<VertexId>(values.size());
        for (std::size_t t = 0; t < block.mesh.triangle_count(); ++t) {
            auto tri = block.mesh.triangle(static_cast<int>(t));
            out.vertex_triangles[v].push_back(static_cast<int>(tris.size()));
            tris.push_back({tri[0] + offset, tri[1] + offset, tri[2] + offset});
        }
        for (auto& ring : block.rings) {
            for (auto& rv : ring) rv += offset;
            free_rings[v].push_back(std::move(ring));
        }
        values.insert(values.end(), block.mesh.vertex_count(), Rational(out.heights[v]));
    }

    for (std::size_t e = 0; e < dg.edges.size(); ++e) {
        int u = dg.edges[e].a, v = dg.edges[e].b;
        if (out.heights[u] > out.heights[v]) std::swap(u, v); // orient low -> high
        const Rational lo(out.heights[u]), hi(out.heights[v]);

        std::vector<VertexId> rim_lo = free_rings[u][next_ring[u]++];
        std::vector<VertexId> rim_hi = free_rings[v][next_ring[v]++];
        std::reverse(rim_hi.begin(), rim_hi.end()); // opposite winding at the top

        std::vector<std::vector<VertexId>> rings;
        for (int j = 0; j < opt.rings; ++j) {
            std::vector<VertexId> ring(static_cast<std::size_t>(opt.p));
            Rational val = lo + (hi - lo) * (j + 1) / (opt.rings + 1);
            for (int i = 0; i < opt.p; ++i) {
                ring[static_cast<std::size_t>(i)] = static_cast<VertexId>(values.size());
                values.push_back(val);
            }
            rings.push_back(std::move(ring));
        }

        std::size_t first = tris.size();
        detail::stitch_cycles(tris, rim_lo, rings.front());
        for (int j = 0; j + 1 < opt.rings; ++j) detail::stitch_cycles(tris, rings[j], rings[j + 1]);
        detail::stitch_cycles(tris, rings.back(), rim_hi);
        for (std::size_t t = first; t < tris.size(); ++t)
            out.edge_triangles[e].push_back(static_cast<int>(t));
    }

    out.mesh = SimplicialSurface(values.size(), std::move(tris));
    out.field = ScalarField(std::move(values));

    auto report = validate_surface(out.mesh);
    if (!report.ok || out.mesh.has_boundary())
        throw Error(ErrorCode::InternalError, "realization did not produce a closed surface");
    return out;
}

struct VerifyOptions {
    /// Scales the clause-3 neighborhood radius; 1 keeps the half-gap rule.
    Rational delta_scale = 1;
};

struct VerifyReport {
    bool clause1 = false; ///< Reeb graph of the realization matches the skeleton
    bool clause2 = false; ///< every tube fiber is a single circle
    bool clause3 = false; ///< every vertex neighborhood has the assigned signature
    std::string failure;

    bool ok() const { return clause1 && clause2 && clause3; }
};

/// Checks the three realizability clauses on a realization of `dg`.
inline VerifyReport verify_realization(const DecoratedGraph& dg, const RealizationOutput& out,
                                       VerifyOptions vopt = {})
{
    VerifyReport report;

    // (1) Reeb graph isomorphic to the skeleton, heights respected
    ReebGraph rg = compute_reeb_graph(out.mesh, out.field);
    Multigraph got = Multigraph::of(rg);
    Multigraph want = dg.skeleton();
    for (long long h : out.heights) want.keys.emplace_back(h);
    auto witness = graph_isomorphism(got, want, IsoMode::LevelOrder);
    if (!witness) {
        report.failure = "clause 1: Reeb graph not isomorphic to the decorated skeleton";
    } else {
        report.clause1 = true;
        for (std::size_t n = 0; n < rg.nodes.size(); ++n)
            if (rg.nodes[n].level != Rational(out.heights[(*witness)[n]])) {
                report.clause1 = false;
                report.failure = "clause 1: node level differs from the assigned height";
                break;
            }
    }

    // (2) the level set at each tube's middle ring value, restricted to the
    // tube, is one simple circle
    report.clause2 = true;
    for (std::size_t e = 0; e < dg.edges.size() && report.clause2; ++e) {
        int u = dg.edges[e].a, v = dg.edges[e].b;
        long long lo = std::min(out.heights[u], out.heights[v]);
        long long hi = std::max(out.heights[u], out.heights[v]);
        int mid = (out.rings - 1) / 2;
        Rational val = Rational(lo) + Rational(hi - lo) * (mid + 1) / (out.rings + 1);

        std::vector<char> in_tube(out.mesh.triangle_count(), 0);
        for (int t : out.edge_triangles[e]) in_tube[t] = 1;

        int hits = 0;
        for (const auto& comp : level_components(out.mesh, out.field, val)) {
            bool meets = false, inside = true;
            for (const Cell& c : comp.cells)
                if (c.kind == CellKind::Triangle) {
                    if (in_tube[c.index]) meets = true;
                    else inside = false;
                }
            if (!meets) continue;
            ++hits;
            if (!inside || comp.kind != LevelRegionKind::Circle) {
                report.clause2 = false;
                report.failure = "clause 2: tube " + dg.edges[e].id + " fiber is not a single circle";
            }
        }
        if (hits != 1 && report.clause2) {
            report.clause2 = false;
            report.failure = "clause 2: tube " + dg.edges[e].id + " meets " + std::to_string(hits) +
                             " level components";
        }
    }

    // (3) the interval neighborhood of each block realizes gamma(v)
    report.clause3 = true;
    for (std::size_t v = 0; v < dg.vertices.size() && report.clause3; ++v) {
        Rational delta(1, 2);
        bool bounded = false;
        for (std::size_t w = 0; w < dg.vertices.size(); ++w) {
            if (w == v) continue;
            Rational gap = Rational(out.heights[w] > out.heights[v] ? out.heights[w] - out.heights[v]
                                                                    : out.heights[v] - out.heights[w]);
            if (!bounded || gap / 2 < delta) delta = gap / 2;
            bounded = true;
        }
        for (const auto& e : dg.edges) {
            if (e.a != static_cast<int>(v) && e.b != static_cast<int>(v)) continue;
            long long lo = std::min(out.heights[e.a], out.heights[e.b]);
            long long hi = std::max(out.heights[e.a], out.heights[e.b]);
            Rational first_ring = Rational(hi - lo) / (out.rings + 1);
            if (!bounded || first_ring / 2 < delta) delta = first_ring / 2;
            bounded = true;
        }
        delta *= vopt.delta_scale;

        Rational h(out.heights[v]);
        auto ic = interval_components(out.mesh, out.field, h - delta, h + delta);
        Cell probe{CellKind::Triangle, out.vertex_triangles[v].front()};
        const IntervalComponent* home = nullptr;
        for (const auto& comp : ic.components)
            if (std::binary_search(comp.cells.begin(), comp.cells.end(), probe)) {
                home = &comp;
                break;
            }
        if (!home || !home->signature || *home->signature != dg.vertices[v].gamma) {
            report.clause3 = false;
            report.failure = "clause 3: neighborhood of vertex " + dg.vertices[v].id +
                             " does not realize its signature";
        }
    }
    return report;
}

/// All-planar decoration with the genus surplus attached to the first
/// vertex: gamma(v) = (orientable, g_v, deg v) with g_v = 0 except
/// g_{v0} = genus - beta1(G).
inline DecoratedGraph planar_decoration(const DecoratedGraph& g, int genus)
{
    for (const auto& e : g.edges)
        if (e.a == e.b) throw Error(ErrorCode::LoopEdge, "edge " + e.id + " is a loop");
    if (g.vertices.empty()) throw Error(ErrorCode::InvalidArgument, "empty graph");
    {
        UnionFind uf(g.vertices.size());
        for (const auto& e : g.edges) uf.unite(e.a, e.b);
        int root = uf.find(0);
        for (std::size_t v = 1; v < g.vertices.size(); ++v)
            if (uf.find(static_cast<int>(v)) != root)
                throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
    }
    const int b1 = static_cast<int>(g.edges.size()) - static_cast<int>(g.vertices.size()) + 1;
    if (genus < b1)
        throw Error(ErrorCode::GenusTooSmall, "genus " + std::to_string(genus) +
                                                  " < first Betti number " + std::to_string(b1));

    DecoratedGraph dg = g;
    for (std::size_t v = 0; v < dg.vertices.size(); ++v) {
        int extra = (v == 0) ? genus - b1 : 0;
        dg.vertices[v].gamma = SurfaceSignature::make(true, extra, dg.degree(static_cast<int>(v)));
    }
    return dg;
}

/// Realizes a loop-free connected multigraph on the closed orientable
/// surface of exactly the given genus (possible iff genus >= beta1).
inline RealizationOutput realize_on_surface(const DecoratedGraph& g, int genus, RealizeOptions opt = {})
{
    RealizationOutput out = realize(planar_decoration(g, genus), opt);
    if (signature(out.mesh) != SurfaceSignature::make(true, genus, 0))
        throw Error(ErrorCode::InternalError, "realized surface has the wrong signature");
    return out;
}

inline nlohmann::ordered_json correspondence_to_json(const DecoratedGraph& dg, const RealizationOutput& out)
{
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < dg.vertices.size(); ++v)
        j["vertices"][dg.vertices[v].id] = out.vertex_triangles[v];
    j["edges"] = nlohmann::ordered_json::object();
    for (std::size_t e = 0; e < dg.edges.size(); ++e)
        j["edges"][dg.edges[e].id] = out.edge_triangles[e];
    j["heights"] = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < dg.vertices.size(); ++v)
        j["heights"][dg.vertices[v].id] = out.heights[v];
    return j;
}

} // namespace plreeb
