#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "plreeb/surface.hpp"
#include "plreeb/union_find.hpp"

namespace plreeb {

/// Complete invariant of a compact connected surface: orientability, genus
/// (handles if orientable, crosscaps otherwise), number of boundary circles,
/// and the Euler characteristic they must reproduce.
struct SurfaceSignature {
    bool orientable = true;
    int genus = 0;
    int boundary_count = 0;
    int euler_char = 2;

    int expected_euler() const
    {
        return orientable ? 2 - 2 * genus - boundary_count : 2 - genus - boundary_count;
    }

    bool consistent() const
    {
        if (genus < 0 || boundary_count < 0) return false;
        if (!orientable && genus < 1) return false;
        return euler_char == expected_euler();
    }

    bool operator==(const SurfaceSignature&) const = default;

    static SurfaceSignature make(bool orientable, int genus, int boundary)
    {
        SurfaceSignature s;
        s.orientable = orientable;
        s.genus = genus;
        s.boundary_count = boundary;
        s.euler_char = s.expected_euler();
        return s;
    }
};

inline SurfaceSignature annulus_signature() { return SurfaceSignature::make(true, 0, 2); }
inline SurfaceSignature disk_signature() { return SurfaceSignature::make(true, 0, 1); }

inline int euler_characteristic(const SimplicialSurface& mesh)
{
    return static_cast<int>(mesh.vertex_count()) - static_cast<int>(mesh.edge_count()) +
           static_cast<int>(mesh.triangle_count());
}

/// Triangle -> component id, via shared-edge adjacency. Isolated vertices do
/// not appear; valid meshes have none.
inline std::vector<int> triangle_components(const SimplicialSurface& mesh, int* count_out = nullptr)
{
    UnionFind uf(mesh.triangle_count());
    for (std::size_t e = 0; e < mesh.edge_count(); ++e) {
        const auto& ts = mesh.edge_triangles(static_cast<int>(e));
        for (std::size_t i = 1; i < ts.size(); ++i) uf.unite(ts[0], ts[i]);
    }
    std::vector<int> comp(mesh.triangle_count(), -1);
    int next = 0;
    for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
        int r = uf.find(static_cast<int>(t));
        if (comp[r] == -1) comp[r] = next++;
        comp[t] = comp[r];
    }
    if (count_out) *count_out = next;
    return comp;
}

inline bool is_connected(const SimplicialSurface& mesh)
{
    if (mesh.triangle_count() == 0) return mesh.vertex_count() <= 1;
    int count = 0;
    triangle_components(mesh, &count);
    if (count != 1) return false;
    // a stray vertex not used by any triangle also disconnects the mesh
    for (std::size_t v = 0; v < mesh.vertex_count(); ++v)
        if (mesh.vertex_triangles(static_cast<VertexId>(v)).empty()) return false;
    return true;
}

struct OrientationResult {
    bool orientable = false;
    /// For each triangle, whether its stored vertex order must be reversed to
    /// participate in the consistent orientation. Meaningful iff orientable.
    std::vector<std::uint8_t> flipped;
};

namespace detail {

/// True when triangle t traverses edge (a,b) in that direction.
inline bool traverses_forward(const std::array<VertexId, 3>& t, VertexId a, VertexId b)
{
    for (int k = 0; k < 3; ++k)
        if (t[k] == a && t[(k + 1) % 3] == b) return true;
    return false;
}

} // namespace detail

/// BFS over triangle adjacency, propagating orientation; every interior edge
/// must be traversed once in each direction by its two triangles.
inline OrientationResult orientability(const SimplicialSurface& mesh)
{
    if (!is_connected(mesh))
        throw Error(ErrorCode::DisconnectedMesh, "orientability requires a connected mesh");

    OrientationResult result;
    result.flipped.assign(mesh.triangle_count(), 0);
    std::vector<int> state(mesh.triangle_count(), -1); // -1 unseen, 0 as stored, 1 flipped
    std::deque<int> queue;
    if (mesh.triangle_count() > 0) {
        state[0] = 0;
        queue.push_back(0);
    }
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop_front();
        for (int e : mesh.triangle_edges(t)) {
            if (e < 0) continue;
            for (int u : mesh.edge_triangles(e)) {
                if (u == t) continue;
                auto [a, b] = mesh.edge(e);
                bool tf = detail::traverses_forward(mesh.triangle(t), a, b) != (state[t] == 1);
                bool uf = detail::traverses_forward(mesh.triangle(u), a, b);
                // consistent iff u traverses (a,b) opposite to t
                int need = (uf != tf) ? 0 : 1;
                if (state[u] == -1) {
                    state[u] = need;
                    queue.push_back(u);
                } else if (state[u] != need) {
                    return result; // inconsistent closure
                }
            }
        }
    }
    result.orientable = true;
    for (std::size_t t = 0; t < mesh.triangle_count(); ++t)
        result.flipped[t] = static_cast<std::uint8_t>(state[t] == 1);
    return result;
}

/// Boundary edges partition into disjoint simple cycles on a valid mesh.
/// Cycles are canonical: each starts at its minimal vertex and proceeds
/// toward the smaller of that vertex's two boundary neighbors; the cycle
/// list is sorted by starting vertex.
inline std::vector<std::vector<VertexId>> boundary_components(const SimplicialSurface& mesh)
{
    std::vector<std::vector<VertexId>> nb(mesh.vertex_count());
    for (std::size_t e = 0; e < mesh.edge_count(); ++e) {
        if (!mesh.is_boundary_edge(static_cast<int>(e))) continue;
        auto [a, b] = mesh.edge(static_cast<int>(e));
        nb[a].push_back(b);
        nb[b].push_back(a);
    }
    for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
        if (nb[v].empty()) continue;
        if (nb[v].size() != 2)
            throw Error(ErrorCode::InternalError,
                        "boundary edges do not form simple cycles at vertex " + std::to_string(v));
        std::sort(nb[v].begin(), nb[v].end());
    }

    std::vector<std::vector<VertexId>> cycles;
    std::vector<char> used(mesh.vertex_count(), 0);
    for (std::size_t start = 0; start < mesh.vertex_count(); ++start) {
        if (nb[start].empty() || used[start]) continue;
        std::vector<VertexId> cycle;
        VertexId prev = -1;
        VertexId cur = static_cast<VertexId>(start);
        do {
            cycle.push_back(cur);
            used[cur] = 1;
            VertexId next = (nb[cur][0] != prev) ? nb[cur][0] : nb[cur][1];
            prev = cur;
            cur = next;
        } while (cur != static_cast<VertexId>(start));
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

/// Combines Euler characteristic, orientability and boundary count; genus is
/// solved from the signature equations. Requires a validated connected mesh.
inline SurfaceSignature signature(const SimplicialSurface& mesh)
{
    auto orient = orientability(mesh); // throws DisconnectedMesh when needed
    int chi = euler_characteristic(mesh);
    int boundary = static_cast<int>(boundary_components(mesh).size());

    SurfaceSignature sig;
    sig.orientable = orient.orientable;
    sig.boundary_count = boundary;
    sig.euler_char = chi;
    if (orient.orientable) {
        int twice_genus = 2 - boundary - chi;
        if (twice_genus < 0 || twice_genus % 2 != 0)
            throw Error(ErrorCode::InternalError, "inconsistent Euler characteristic for orientable mesh");
        sig.genus = twice_genus / 2;
    } else {
        sig.genus = 2 - boundary - chi;
        if (sig.genus < 1)
            throw Error(ErrorCode::InternalError, "inconsistent Euler characteristic for non-orientable mesh");
    }
    return sig;
}

/// Uniform 1->4 subdivision: one new vertex per edge, four triangles per
/// triangle. Signature-preserving; coordinates of new vertices are zeroed.
inline SimplicialSurface subdivide(const SimplicialSurface& mesh)
{
    const std::size_t v0 = mesh.vertex_count();
    std::vector<std::array<VertexId, 3>> tris;
    tris.reserve(mesh.triangle_count() * 4);
    auto mid = [&](int e) { return static_cast<VertexId>(v0 + e); };
    for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
        auto [a, b, c] = mesh.triangle(static_cast<int>(t));
        VertexId mab = mid(mesh.edge_index(a, b));
        VertexId mbc = mid(mesh.edge_index(b, c));
        VertexId mca = mid(mesh.edge_index(c, a));
        tris.push_back({a, mab, mca});
        tris.push_back({b, mbc, mab});
        tris.push_back({c, mca, mbc});
        tris.push_back({mab, mbc, mca});
    }
    std::vector<std::array<std::string, 3>> coords = mesh.coordinates();
    coords.resize(v0 + mesh.edge_count(), {"0", "0", "0"});
    return SimplicialSurface(v0 + mesh.edge_count(), std::move(tris), std::move(coords));
}

/// Sub-mesh spanned by a triangle subset; vertices are re-indexed densely in
/// increasing order of their original ids.
inline SimplicialSurface extract_triangles(const SimplicialSurface& mesh, const std::vector<int>& tri_indices)
{
    std::vector<VertexId> remap(mesh.vertex_count(), -1);
    std::vector<VertexId> order;
    for (int t : tri_indices)
        for (VertexId v : mesh.triangle(t))
            if (remap[v] == -1) {
                remap[v] = 0;
                order.push_back(v);
            }
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<VertexId>(i);

    std::vector<std::array<VertexId, 3>> tris;
    tris.reserve(tri_indices.size());
    for (int t : tri_indices) {
        auto [a, b, c] = mesh.triangle(t);
        tris.push_back({remap[a], remap[b], remap[c]});
    }
    std::vector<std::array<std::string, 3>> coords;
    coords.reserve(order.size());
    for (VertexId v : order) coords.push_back(mesh.coordinates()[v]);
    return SimplicialSurface(order.size(), std::move(tris), std::move(coords));
}

} // namespace plreeb
