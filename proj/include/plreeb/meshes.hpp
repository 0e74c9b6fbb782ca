#pragma once

#include <string>
#include <vector>

#include "plreeb/topology.hpp"

namespace plreeb {

/// Octahedron with vertices 0..3 on the equator (z = 0), 4 at the north pole
/// (z = 1) and 5 at the south pole (z = -1).
inline SimplicialSurface octahedron()
{
    std::vector<std::array<VertexId, 3>> tris = {
        {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4},
        {1, 0, 5}, {2, 1, 5}, {3, 2, 5}, {0, 3, 5},
    };
    std::vector<std::array<std::string, 3>> coords = {
        {"1", "0", "0"}, {"0", "1", "0"}, {"-1", "0", "0"},
        {"0", "-1", "0"}, {"0", "0", "1"}, {"0", "0", "-1"},
    };
    return SimplicialSurface(6, std::move(tris), std::move(coords));
}

/// K x K grid torus (K >= 3), vertex (i,j) -> i*K + j, each grid cell split
/// along the (i,j)-(i+1,j+1) diagonal.
inline SimplicialSurface grid_torus(int k = 4)
{
    if (k < 3) throw Error(ErrorCode::InvalidArgument, "grid torus needs K >= 3");
    auto id = [k](int i, int j) { return static_cast<VertexId>(((i % k + k) % k) * k + ((j % k + k) % k)); };
    std::vector<std::array<VertexId, 3>> tris;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            tris.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    return SimplicialSurface(static_cast<std::size_t>(k) * k, std::move(tris));
}

/// Minimal 6-vertex triangulation of the projective plane.
inline SimplicialSurface projective_plane()
{
    std::vector<std::array<VertexId, 3>> tris = {
        {0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
        {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5},
    };
    return SimplicialSurface(6, std::move(tris));
}

/// Connected sum: removes the last triangle of each operand and identifies
/// the two rims with reversed cyclic order (so orientable inputs stay
/// orientable). Deterministic.
inline SimplicialSurface connected_sum(const SimplicialSurface& a, const SimplicialSurface& b)
{
    if (a.triangle_count() == 0 || b.triangle_count() == 0)
        throw Error(ErrorCode::InvalidArgument, "connected sum needs non-empty meshes");

    const auto ra = a.triangle(static_cast<int>(a.triangle_count()) - 1);
    const auto rb = b.triangle(static_cast<int>(b.triangle_count()) - 1);

    // b's vertices are appended after a's; rim vertices of b map onto a's rim.
    // Reversal: a=(x,y,z) glued to b=(x',y',z') as x<->x', y<->z', z<->y'.
    std::vector<VertexId> map_b(b.vertex_count(), -1);
    map_b[rb[0]] = ra[0];
    map_b[rb[1]] = ra[2];
    map_b[rb[2]] = ra[1];
    VertexId next = static_cast<VertexId>(a.vertex_count());
    for (std::size_t v = 0; v < b.vertex_count(); ++v)
        if (map_b[v] == -1) map_b[v] = next++;

    std::vector<std::array<VertexId, 3>> tris;
    for (std::size_t t = 0; t + 1 < a.triangle_count(); ++t) tris.push_back(a.triangle(static_cast<int>(t)));
    for (std::size_t t = 0; t + 1 < b.triangle_count(); ++t) {
        auto tri = b.triangle(static_cast<int>(t));
        tris.push_back({map_b[tri[0]], map_b[tri[1]], map_b[tri[2]]});
    }
    return SimplicialSurface(static_cast<std::size_t>(next), std::move(tris));
}

/// Closed connected surface of the given class: sphere for (orientable, 0),
/// connected sum of tori for positive genus, connected sum of projective
/// planes for crosscap count >= 1.
inline SimplicialSurface closed_surface(bool orientable, int genus)
{
    if (orientable) {
        if (genus < 0) throw Error(ErrorCode::InvalidSignature, "negative genus");
        if (genus == 0) return octahedron();
        SimplicialSurface m = grid_torus(3);
        for (int i = 1; i < genus; ++i) m = connected_sum(m, grid_torus(3));
        return m;
    }
    if (genus < 1) throw Error(ErrorCode::InvalidSignature, "non-orientable surface needs >= 1 crosscap");
    SimplicialSurface m = projective_plane();
    for (int i = 1; i < genus; ++i) m = connected_sum(m, projective_plane());
    return m;
}

} // namespace plreeb
