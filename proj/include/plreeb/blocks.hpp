#pragma once

#include <set>
#include <vector>

#include "plreeb/field.hpp"
#include "plreeb/meshes.hpp"
#include "plreeb/topology.hpp"

namespace plreeb {

namespace detail {

/// 2p triangles between two equal-length vertex cycles with aligned
/// indexing (A[0] glued over B[0]); traverses A forward and B backward.
inline void stitch_cycles(std::vector<std::array<VertexId, 3>>& out, const std::vector<VertexId>& a,
                          const std::vector<VertexId>& b)
{
    const std::size_t p = a.size();
    for (std::size_t i = 0; i < p; ++i) {
        std::size_t j = (i + 1) % p;
        out.push_back({a[i], a[j], b[i]});
        out.push_back({a[j], b[j], b[i]});
    }
}

/// Annulus strip between a directed rim cycle (length L) and a fresh cycle
/// (length P): L + P triangles, walking both cycles proportionally.
inline void stitch_unequal_cycles(std::vector<std::array<VertexId, 3>>& out, const std::vector<VertexId>& rim,
                                  const std::vector<VertexId>& ring)
{
    const std::size_t l = rim.size(), p = ring.size();
    std::size_t i = 0, j = 0;
    while (i < l || j < p) {
        bool advance_rim;
        if (i == l) advance_rim = false;
        else if (j == p) advance_rim = true;
        else advance_rim = (i + 1) * p <= (j + 1) * l;
        if (advance_rim) {
            out.push_back({rim[i % l], rim[(i + 1) % l], ring[j % p]});
            ++i;
        } else {
            out.push_back({rim[i % l], ring[(j + 1) % p], ring[j % p]});
            ++j;
        }
    }
}

/// Link cycle of an interior vertex, directed coherently with the triangle
/// orientations when they chain (canonically oriented meshes); otherwise an
/// undirected walk from the minimal link vertex.
inline std::vector<VertexId> link_cycle(const SimplicialSurface& mesh, VertexId v)
{
    std::map<VertexId, VertexId> succ;
    bool coherent = true;
    for (int t : mesh.vertex_triangles(v)) {
        auto tri = mesh.triangle(t);
        int k = 0;
        while (tri[k] != v) ++k;
        VertexId a = tri[(k + 1) % 3], b = tri[(k + 2) % 3];
        if (!succ.emplace(a, b).second) coherent = false;
    }
    std::vector<VertexId> cycle;
    if (coherent && !succ.empty()) {
        VertexId start = succ.begin()->first;
        for (const auto& [a, b] : succ) start = std::min(start, a);
        VertexId cur = start;
        do {
            cycle.push_back(cur);
            auto it = succ.find(cur);
            if (it == succ.end()) {
                coherent = false;
                break;
            }
            cur = it->second;
        } while (cur != start && cycle.size() <= succ.size());
        if (cycle.size() != succ.size()) coherent = false;
    }
    if (coherent && !cycle.empty()) return cycle;

    // undirected fallback (non-orientable blocks)
    std::map<VertexId, std::vector<VertexId>> nb;
    for (int t : mesh.vertex_triangles(v)) {
        auto tri = mesh.triangle(t);
        std::vector<VertexId> others;
        for (VertexId u : tri)
            if (u != v) others.push_back(u);
        nb[others[0]].push_back(others[1]);
        nb[others[1]].push_back(others[0]);
    }
    cycle.clear();
    VertexId start = nb.begin()->first;
    for (const auto& [u, _] : nb) start = std::min(start, u);
    VertexId prev = -1, cur = start;
    do {
        cycle.push_back(cur);
        auto& ns = nb[cur];
        VertexId next = (ns[0] != prev) ? ns[0] : ns[1];
        prev = cur;
        cur = next;
    } while (cur != start);
    return cycle;
}

} // namespace detail

struct VertexBlock {
    SimplicialSurface mesh;
    /// One fresh p-gon per boundary circle, in construction order, wound
    /// coherently with the block orientation when orientable.
    std::vector<std::vector<VertexId>> rings;
};

/// Compact connected surface of the given signature whose boundary circles
/// are all p-gons: a canonical closed surface of the right class, with
/// boundary_count pairwise distant vertex stars removed and each hole rim
/// re-cut to a fresh p-gon by an annular adapter strip.
inline VertexBlock build_vertex_block(const SurfaceSignature& sig, int p = 6)
{
    if (p < 3) throw Error(ErrorCode::InvalidArgument, "boundary polygons need p >= 3");
    if (!sig.consistent()) throw Error(ErrorCode::InvalidSignature, "inconsistent surface signature");

    SimplicialSurface closed = closed_surface(sig.orientable, sig.genus);
    if (sig.orientable) {
        auto orient = orientability(closed);
        std::vector<std::array<VertexId, 3>> tris;
        tris.reserve(closed.triangle_count());
        for (std::size_t t = 0; t < closed.triangle_count(); ++t) {
            auto tri = closed.triangle(static_cast<int>(t));
            if (orient.flipped[t]) std::swap(tri[1], tri[2]);
            tris.push_back(tri);
        }
        closed = SimplicialSurface(closed.vertex_count(), std::move(tris));
    }

    if (sig.boundary_count == 0) return {std::move(closed), {}};

    // pick boundary_count vertices pairwise at graph distance >= 3 so their
    // stars and links are disjoint; subdivide until enough fit
    std::vector<VertexId> picked;
    for (int round = 0; round < 10; ++round) {
        picked.clear();
        std::vector<std::set<VertexId>> hoods;
        for (std::size_t v = 0; v < closed.vertex_count() && picked.size() < static_cast<std::size_t>(sig.boundary_count); ++v) {
            auto nbs = closed.vertex_neighbors(static_cast<VertexId>(v));
            std::set<VertexId> hood(nbs.begin(), nbs.end());
            hood.insert(static_cast<VertexId>(v));
            bool ok = true;
            for (const auto& other : hoods) {
                for (VertexId u : hood)
                    if (other.count(u)) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (ok) {
                picked.push_back(static_cast<VertexId>(v));
                hoods.push_back(std::move(hood));
            }
        }
        if (picked.size() == static_cast<std::size_t>(sig.boundary_count)) break;
        closed = subdivide(closed);
    }
    if (picked.size() != static_cast<std::size_t>(sig.boundary_count))
        throw Error(ErrorCode::InternalError, "could not place boundary holes");

    std::vector<std::vector<VertexId>> rims;
    std::set<int> removed_tris;
    for (VertexId v : picked) {
        rims.push_back(detail::link_cycle(closed, v));
        for (int t : closed.vertex_triangles(v)) removed_tris.insert(t);
    }

    // drop the star vertices and their triangles, keeping ids dense
    std::vector<VertexId> remap(closed.vertex_count());
    {
        std::set<VertexId> gone(picked.begin(), picked.end());
        VertexId next = 0;
        for (std::size_t v = 0; v < closed.vertex_count(); ++v)
            remap[v] = gone.count(static_cast<VertexId>(v)) ? -1 : next++;
    }
    std::vector<std::array<VertexId, 3>> tris;
    for (std::size_t t = 0; t < closed.triangle_count(); ++t) {
        if (removed_tris.count(static_cast<int>(t))) continue;
        auto tri = closed.triangle(static_cast<int>(t));
        tris.push_back({remap[tri[0]], remap[tri[1]], remap[tri[2]]});
    }
    VertexId next_id = 0;
    for (std::size_t v = 0; v < closed.vertex_count(); ++v)
        if (remap[v] >= 0) next_id = std::max(next_id, static_cast<VertexId>(remap[v] + 1));

    // adapter strip per hole: rim L-gon down to a fresh p-gon
    std::vector<std::vector<VertexId>> rings;
    for (auto& rim : rims) {
        for (auto& v : rim) v = remap[v];
        std::vector<VertexId> ring(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) ring[static_cast<std::size_t>(i)] = next_id++;
        detail::stitch_unequal_cycles(tris, rim, ring);
        rings.push_back(std::move(ring));
    }

    SimplicialSurface mesh(static_cast<std::size_t>(next_id), std::move(tris));
    if (!validate_surface(mesh).ok)
        throw Error(ErrorCode::InternalError, "vertex block construction produced an invalid mesh");
    if (signature(mesh) != sig)
        throw Error(ErrorCode::InternalError, "vertex block signature mismatch");
    return {std::move(mesh), std::move(rings)};
}

struct EdgeTube {
    SimplicialSurface mesh;
    ScalarField field;
};

/// Annulus of `rings` p-gon circles, consecutive circles joined by 2p
/// triangles; ring j carries the exact value lo + (hi-lo)(j+1)/(rings+1),
/// strictly increasing and strictly inside (lo, hi).
inline EdgeTube build_edge_tube(int p, int rings, const Rational& lo, const Rational& hi)
{
    if (p < 3) throw Error(ErrorCode::InvalidArgument, "tube needs p >= 3");
    if (rings < 2) throw Error(ErrorCode::InvalidArgument, "tube needs rings >= 2");
    if (!(lo < hi)) throw Error(ErrorCode::InvalidInterval, "tube needs lo < hi");

    std::vector<std::array<VertexId, 3>> tris;
    auto ring_of = [p](int j) {
        std::vector<VertexId> r(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) r[static_cast<std::size_t>(i)] = static_cast<VertexId>(j * p + i);
        return r;
    };
    for (int j = 0; j + 1 < rings; ++j) detail::stitch_cycles(tris, ring_of(j), ring_of(j + 1));

    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(rings) * p);
    for (int j = 0; j < rings; ++j) {
        Rational v = lo + (hi - lo) * (j + 1) / (rings + 1);
        for (int i = 0; i < p; ++i) values.push_back(v);
    }
    return {SimplicialSurface(static_cast<std::size_t>(rings) * p, std::move(tris)), ScalarField(std::move(values))};
}

} // namespace plreeb
