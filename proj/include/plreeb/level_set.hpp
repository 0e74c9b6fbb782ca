#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "plreeb/field.hpp"
#include "plreeb/topology.hpp"

namespace plreeb {

enum class CellKind : std::uint8_t { Vertex = 0, Edge = 1, Triangle = 2 };

struct Cell {
    CellKind kind;
    std::int32_t index;
    auto operator<=>(const Cell&) const = default;
};

/// Shape of a level-set component as a subset of the surface: an isolated
/// point, a simple arc, a simple closed curve, a branched 1-complex (wedge),
/// or a fat region containing whole triangles (a plateau).
enum class LevelRegionKind { Point, Arc, Circle, Branched, Fat };

inline const char* to_string(LevelRegionKind k)
{
    switch (k) {
    case LevelRegionKind::Point: return "point";
    case LevelRegionKind::Arc: return "arc";
    case LevelRegionKind::Circle: return "circle";
    case LevelRegionKind::Branched: return "branched";
    case LevelRegionKind::Fat: return "fat";
    }
    return "?";
}

struct LevelComponent {
    Rational level;
    /// Vertices at the level, edges crossed by or contained in it, and
    /// triangles meeting it; sorted, connected under shared-simplex adjacency.
    std::vector<Cell> cells;
    LevelRegionKind kind = LevelRegionKind::Point;
    /// Euler characteristic of the component as a point set.
    int region_euler = 1;
};

struct IntervalComponent {
    /// All cells meeting the slab preimage, sorted.
    std::vector<Cell> cells;
    /// Present iff the component is (the closure of) a purely 2-dimensional
    /// region forming a valid compact surface; absent for degenerate slabs,
    /// pinched regions and dangling lower-dimensional pieces.
    std::optional<SurfaceSignature> signature;
    /// Euler characteristic of the region point set (always defined).
    int region_euler = 0;
    /// Indices into IntervalComponents::lower / upper of the end-level
    /// components this component contains.
    std::vector<int> lower_components;
    std::vector<int> upper_components;
};

struct IntervalComponents {
    Rational lo, hi;
    std::vector<LevelComponent> lower;
    std::vector<LevelComponent> upper;
    std::vector<IntervalComponent> components;
};

namespace detail {

/// Combinatorial slab analysis over integer positions (see FieldIndex).
/// Every query reduces to comparisons of vertex positions against [pa, pb],
/// so level and interval structure is exact and independent of which
/// rational inside a gap was asked about.
class Slab {
public:
    Slab(const SimplicialSurface& mesh, const std::vector<int>& vpos, int pa, int pb)
        : mesh_(mesh), vpos_(vpos), pa_(pa), pb_(pb)
    {
        analyze();
    }

    int component_count() const { return comp_count_; }

    int component_of(Cell c) const
    {
        int f = flat_id(c);
        return comp_flat_[f] >= 0 ? comp_flat_[f] : -1;
    }

    bool vertex_included(VertexId v) const { return vdim_[v] >= 0; }
    bool edge_included(int e) const { return edim_[e] >= 0; }
    bool triangle_included(int t) const { return tdim_[t] >= 0; }
    bool triangle_fat(int t) const { return tdim_[t] == 2; }

    bool edge_crossed(int pos, int e) const
    {
        auto [lo, hi] = edge_span(e);
        return lo < pos && pos < hi;
    }

    /// All included cells of each component, sorted; component order is by
    /// minimal cell.
    std::vector<std::vector<Cell>> component_cells() const
    {
        std::vector<std::vector<Cell>> out(comp_count_);
        for_each_included([&](Cell c) { out[comp_flat_[flat_id(c)]].push_back(c); });
        return out;
    }

    std::vector<int> component_euler() const
    {
        std::vector<int> chi(comp_count_, 0);
        const int V = static_cast<int>(mesh_.vertex_count());
        const int E = static_cast<int>(mesh_.edge_count());
        for (int v = 0; v < V; ++v)
            if (vdim_[v] >= 0) chi[comp_flat_[v]] += 1;
        for (int e = 0; e < E; ++e) {
            if (edim_[e] < 0) continue;
            int c = comp_flat_[V + e];
            auto [lo, hi] = edge_span(e);
            if (lo < pa_ && pa_ < hi) chi[c] += 1; // crossing vertex at the lower end
            if (pb_ > pa_ && lo < pb_ && pb_ < hi) chi[c] += 1;
            if (edim_[e] == 1) chi[c] -= 1;
        }
        for (int t = 0; t < static_cast<int>(mesh_.triangle_count()); ++t) {
            if (tdim_[t] < 0) continue;
            int c = comp_flat_[V + E + t];
            auto [lo, hi] = tri_span(t);
            if (lo < pa_ && pa_ < hi) chi[c] -= 1; // cut segment at the lower end
            if (pb_ > pa_ && lo < pb_ && pb_ < hi) chi[c] -= 1;
            if (tdim_[t] == 2) chi[c] += 1;
        }
        return chi;
    }

    /// Signature of each component's region, when it is a valid surface.
    std::vector<std::optional<SurfaceSignature>> component_signatures() const
    {
        const int V = static_cast<int>(mesh_.vertex_count());
        const int E = static_cast<int>(mesh_.edge_count());

        // a cell is covered when it lies in the closure of a 2-dim piece
        std::vector<char> covered_v(V, 0), covered_e(E, 0);
        std::vector<char> has2(comp_count_, 0), pure(comp_count_, 1);
        for (int t = 0; t < static_cast<int>(mesh_.triangle_count()); ++t) {
            if (tdim_[t] != 2) continue;
            has2[comp_flat_[V + E + t]] = 1;
            for (VertexId v : mesh_.triangle(t))
                if (vdim_[v] >= 0) covered_v[v] = 1;
            for (int e : mesh_.triangle_edges(t))
                if (e >= 0 && edim_[e] >= 0) covered_e[e] = 1;
        }
        for (int v = 0; v < V; ++v)
            if (vdim_[v] >= 0 && !covered_v[v]) pure[comp_flat_[v]] = 0;
        for (int e = 0; e < E; ++e) {
            if (edim_[e] < 0 || covered_e[e]) continue;
            // an edge piece that is just an endpoint vertex is handled by the
            // vertex check; segments and interior crossings need a 2-dim side
            if (edim_[e] == 0) {
                auto [lo, hi] = edge_span(e);
                int c = std::max(lo, pa_);
                if (c == lo || c == hi) continue;
            }
            pure[comp_flat_[V + e]] = 0;
        }

        // group 2-dim triangles per component, then triangulate each region
        std::vector<std::vector<int>> tris(comp_count_);
        for (int t = 0; t < static_cast<int>(mesh_.triangle_count()); ++t)
            if (tdim_[t] == 2) tris[comp_flat_[V + E + t]].push_back(t);

        std::vector<std::optional<SurfaceSignature>> out(comp_count_);
        for (int c = 0; c < comp_count_; ++c) {
            if (!has2[c] || !pure[c]) continue;
            SimplicialSurface sub = region_mesh(tris[c]);
            if (!validate_surface(sub).ok) continue; // pinched region
            if (!is_connected(sub))
                throw Error(ErrorCode::InternalError, "region mesh of a connected slab component is disconnected");
            out[c] = signature(sub);
        }
        return out;
    }

private:
    // region-vertex keys: (0, mesh vertex) | (1, crossing at pa on edge) | (2, crossing at pb)
    using Key = std::pair<int, int>;

    int flat_id(Cell c) const
    {
        switch (c.kind) {
        case CellKind::Vertex: return c.index;
        case CellKind::Edge: return static_cast<int>(mesh_.vertex_count()) + c.index;
        case CellKind::Triangle:
            return static_cast<int>(mesh_.vertex_count() + mesh_.edge_count()) + c.index;
        }
        return -1;
    }

    std::pair<int, int> edge_span(int e) const
    {
        auto [a, b] = mesh_.edge(e);
        return std::minmax(vpos_[a], vpos_[b]);
    }

    std::pair<int, int> tri_span(int t) const
    {
        const auto& tri = mesh_.triangle(t);
        int lo = std::min({vpos_[tri[0]], vpos_[tri[1]], vpos_[tri[2]]});
        int hi = std::max({vpos_[tri[0]], vpos_[tri[1]], vpos_[tri[2]]});
        return {lo, hi};
    }

    template <typename F>
    void for_each_included(F&& f) const
    {
        for (int v = 0; v < static_cast<int>(mesh_.vertex_count()); ++v)
            if (vdim_[v] >= 0) f(Cell{CellKind::Vertex, v});
        for (int e = 0; e < static_cast<int>(mesh_.edge_count()); ++e)
            if (edim_[e] >= 0) f(Cell{CellKind::Edge, e});
        for (int t = 0; t < static_cast<int>(mesh_.triangle_count()); ++t)
            if (tdim_[t] >= 0) f(Cell{CellKind::Triangle, t});
    }

    void analyze()
    {
        const int V = static_cast<int>(mesh_.vertex_count());
        const int E = static_cast<int>(mesh_.edge_count());
        const int F = static_cast<int>(mesh_.triangle_count());

        vdim_.assign(V, -1);
        for (int v = 0; v < V; ++v)
            if (pa_ <= vpos_[v] && vpos_[v] <= pb_) vdim_[v] = 0;

        edim_.assign(E, -1);
        for (int e = 0; e < E; ++e) {
            auto [lo, hi] = edge_span(e);
            if (lo > pb_ || hi < pa_) continue;
            if (lo == hi)
                edim_[e] = 1; // flat edge, whole segment
            else
                edim_[e] = (std::max(lo, pa_) < std::min(hi, pb_)) ? 1 : 0;
        }

        tdim_.assign(F, -1);
        for (int t = 0; t < F; ++t) {
            auto [lo, hi] = tri_span(t);
            if (lo > pb_ || hi < pa_) continue;
            if (lo == hi)
                tdim_[t] = 2; // flat triangle
            else
                tdim_[t] = (std::max(lo, pa_) < std::min(hi, pb_)) ? 2 : 0;
        }

        UnionFind uf(static_cast<std::size_t>(V + E + F));
        for (int e = 0; e < E; ++e) {
            if (edim_[e] < 0) continue;
            auto [a, b] = mesh_.edge(e);
            if (vdim_[a] >= 0) uf.unite(V + e, a);
            if (vdim_[b] >= 0) uf.unite(V + e, b);
        }
        for (int t = 0; t < F; ++t) {
            if (tdim_[t] < 0) continue;
            for (int e : mesh_.triangle_edges(t))
                if (e >= 0 && edim_[e] >= 0) uf.unite(V + E + t, V + e);
            for (VertexId v : mesh_.triangle(t))
                if (vdim_[v] >= 0) uf.unite(V + E + t, v);
        }

        comp_flat_.assign(V + E + F, -1);
        std::vector<int> root_comp(V + E + F, -1);
        comp_count_ = 0;
        for_each_included([&](Cell c) {
            int f = flat_id(c);
            int r = uf.find(f);
            if (root_comp[r] == -1) root_comp[r] = comp_count_++;
            comp_flat_[f] = root_comp[r];
        });
    }

    /// Triangulates the region covered by the given 2-dim triangle pieces:
    /// each piece is a convex polygon whose corners are in-slab mesh vertices
    /// and end-level crossings, fanned from its first corner. Shared polygon
    /// sides reproduce the gluing of the region.
    SimplicialSurface region_mesh(const std::vector<int>& fat_tris) const
    {
        std::map<Key, VertexId> ids;
        auto id_of = [&](Key k) {
            auto [it, fresh] = ids.try_emplace(k, static_cast<VertexId>(ids.size()));
            (void)fresh;
            return it->second;
        };

        std::vector<std::array<VertexId, 3>> out;
        std::vector<VertexId> poly;
        for (int t : fat_tris) {
            poly.clear();
            const auto& tri = mesh_.triangle(t);
            for (int k = 0; k < 3; ++k) {
                VertexId x = tri[k], y = tri[(k + 1) % 3];
                if (pa_ <= vpos_[x] && vpos_[x] <= pb_) poly.push_back(id_of({0, x}));
                int px = vpos_[x], py = vpos_[y];
                if (px == py) continue;
                int e = mesh_.edge_index(x, y);
                int lo = std::min(px, py), hi = std::max(px, py);
                bool xa = lo < pa_ && pa_ < hi;
                bool xb = pb_ > pa_ && lo < pb_ && pb_ < hi;
                if (px < py) {
                    if (xa) poly.push_back(id_of({1, e}));
                    if (xb) poly.push_back(id_of({2, e}));
                } else {
                    if (xb) poly.push_back(id_of({2, e}));
                    if (xa) poly.push_back(id_of({1, e}));
                }
            }
            if (poly.size() < 3)
                throw Error(ErrorCode::InternalError, "2-dimensional slab piece with fewer than 3 corners");
            for (std::size_t i = 1; i + 1 < poly.size(); ++i)
                out.push_back({poly[0], poly[i], poly[i + 1]});
        }
        return SimplicialSurface(ids.size(), std::move(out));
    }

    const SimplicialSurface& mesh_;
    const std::vector<int>& vpos_;
    int pa_, pb_;
    std::vector<signed char> vdim_, edim_, tdim_;
    std::vector<int> comp_flat_;
    int comp_count_ = 0;
};

inline std::vector<int> vertex_positions(const SimplicialSurface& mesh, const FieldIndex& index)
{
    std::vector<int> vpos(mesh.vertex_count());
    for (std::size_t v = 0; v < mesh.vertex_count(); ++v)
        vpos[v] = index.position_of_rank(index.rank(static_cast<VertexId>(v)));
    return vpos;
}

/// Builds the public level components at position `pos` from a degenerate
/// slab. Cell lists hold the vertices at the level, the crossed and flat
/// edges, and all meeting triangles; endpoint-touching edges are dropped.
inline std::vector<LevelComponent> level_components_at(const SimplicialSurface& mesh,
                                                       const std::vector<int>& vpos, int pos,
                                                       const Rational& level)
{
    std::vector<LevelComponent> out;
    Slab slab(mesh, vpos, pos, pos);
    if (slab.component_count() == 0) return out;

    const int V = static_cast<int>(mesh.vertex_count());
    const int E = static_cast<int>(mesh.edge_count());

    out.resize(slab.component_count());
    for (auto& c : out) {
        c.level = level;
        c.kind = LevelRegionKind::Point;
    }
    auto euler = slab.component_euler();
    for (int c = 0; c < slab.component_count(); ++c) out[c].region_euler = euler[c];

    // nodes and links of the 1-complex structure, per component
    std::vector<int> node_count(slab.component_count(), 0);
    std::vector<int> link_count(slab.component_count(), 0);
    std::vector<char> fat(slab.component_count(), 0);
    std::vector<int> degree(V + E, 0); // vertex v -> v, crossed edge e -> V+e

    for (int v = 0; v < V; ++v)
        if (slab.vertex_included(v)) {
            int c = slab.component_of({CellKind::Vertex, v});
            out[c].cells.push_back({CellKind::Vertex, v});
            node_count[c] += 1;
        }
    for (int e = 0; e < E; ++e) {
        if (!slab.edge_included(e)) continue;
        int c = slab.component_of({CellKind::Edge, e});
        auto [a, b] = mesh.edge(e);
        bool flat = vpos[a] == vpos[b];
        bool crossed = slab.edge_crossed(pos, e);
        if (flat) {
            out[c].cells.push_back({CellKind::Edge, e});
            link_count[c] += 1;
            degree[a] += 1;
            degree[b] += 1;
        } else if (crossed) {
            out[c].cells.push_back({CellKind::Edge, e});
            node_count[c] += 1;
        }
        // endpoint-touching edges are not part of the level set
    }
    for (int t = 0; t < static_cast<int>(mesh.triangle_count()); ++t) {
        if (!slab.triangle_included(t)) continue;
        int c = slab.component_of({CellKind::Triangle, t});
        out[c].cells.push_back({CellKind::Triangle, t});
        if (slab.triangle_fat(t)) {
            fat[c] = 1;
            continue;
        }
        // cut segment: connects the two level cells of this triangle
        const auto& tri = mesh.triangle(t);
        int lo = std::min({vpos[tri[0]], vpos[tri[1]], vpos[tri[2]]});
        int hi = std::max({vpos[tri[0]], vpos[tri[1]], vpos[tri[2]]});
        if (!(lo < pos && pos < hi)) continue;
        link_count[c] += 1;
        for (VertexId v : tri)
            if (vpos[v] == pos) degree[v] += 1;
        for (int e : mesh.triangle_edges(t))
            if (e >= 0 && slab.edge_crossed(pos, e)) degree[V + e] += 1;
    }

    std::vector<int> deg1(slab.component_count(), 0);
    std::vector<char> branched(slab.component_count(), 0);
    for (int v = 0; v < V; ++v)
        if (slab.vertex_included(v)) {
            int c = slab.component_of({CellKind::Vertex, v});
            if (degree[v] == 1) deg1[c] += 1;
            if (degree[v] > 2) branched[c] = 1;
        }
    for (int e = 0; e < E; ++e)
        if (slab.edge_included(e) && slab.edge_crossed(pos, e)) {
            int c = slab.component_of({CellKind::Edge, e});
            if (degree[V + e] == 1) deg1[c] += 1;
            if (degree[V + e] > 2) branched[c] = 1;
        }

    for (int c = 0; c < slab.component_count(); ++c) {
        if (fat[c])
            out[c].kind = LevelRegionKind::Fat;
        else if (node_count[c] == 1 && link_count[c] == 0)
            out[c].kind = LevelRegionKind::Point;
        else if (!branched[c] && deg1[c] == 0 && link_count[c] == node_count[c])
            out[c].kind = LevelRegionKind::Circle;
        else if (!branched[c] && deg1[c] == 2 && link_count[c] + 1 == node_count[c])
            out[c].kind = LevelRegionKind::Arc;
        else
            out[c].kind = LevelRegionKind::Branched;
    }
    return out;
}

} // namespace detail

/// Connected components of the PL level set f^-1(t). PL level sets are
/// finite polyhedra, so their connected components and path components
/// coincide; the cell-adjacency partition computed here equals an explicit
/// path search on the level subcomplex (the test suite checks both).
inline std::vector<LevelComponent> level_components(const SimplicialSurface& mesh, const ScalarField& field,
                                                    const Rational& t)
{
    FieldIndex index(mesh, field);
    auto vpos = detail::vertex_positions(mesh, index);
    return detail::level_components_at(mesh, vpos, index.position(t), t);
}

/// Connected components of f^-1([a,b]) with their region signatures and the
/// end-level components each one contains.
inline IntervalComponents interval_components(const SimplicialSurface& mesh, const ScalarField& field,
                                              const Rational& a, const Rational& b)
{
    if (a > b) throw Error(ErrorCode::InvalidInterval, "interval lower bound exceeds upper bound");
    FieldIndex index(mesh, field);
    auto vpos = detail::vertex_positions(mesh, index);
    int pa = index.position(a), pb = index.position(b);

    IntervalComponents result;
    result.lo = a;
    result.hi = b;
    result.lower = detail::level_components_at(mesh, vpos, pa, a);
    result.upper = detail::level_components_at(mesh, vpos, pb, b);

    detail::Slab slab(mesh, vpos, pa, pb);
    result.components.resize(slab.component_count());
    auto cells = slab.component_cells();
    auto euler = slab.component_euler();
    auto sigs = slab.component_signatures();
    for (int c = 0; c < slab.component_count(); ++c) {
        result.components[c].cells = std::move(cells[c]);
        result.components[c].region_euler = euler[c];
        result.components[c].signature = sigs[c];
    }
    for (std::size_t i = 0; i < result.lower.size(); ++i) {
        int c = slab.component_of(result.lower[i].cells.front());
        result.components[c].lower_components.push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < result.upper.size(); ++i) {
        int c = slab.component_of(result.upper[i].cells.front());
        result.components[c].upper_components.push_back(static_cast<int>(i));
    }
    return result;
}

/// Number of connected components of closure(f^-1((c, c+e])) minus
/// f^-1((c, c+e]) for small e, i.e. of the frontier at level c of the part
/// of the surface strictly above c (mirrored when ascending is false).
/// This is the exact PL carrier of the interval-closure bound.
inline int frontier_component_count(const SimplicialSurface& mesh, const ScalarField& field, const Rational& c,
                                    bool ascending = true)
{
    FieldIndex index(mesh, field);
    auto vpos = detail::vertex_positions(mesh, index);
    const int pos = index.position(c);
    const int V = static_cast<int>(mesh.vertex_count());
    const int E = static_cast<int>(mesh.edge_count());
    auto beyond = [&](int p) { return ascending ? p > pos : p < pos; };

    // frontier cells: crossed edges always; level vertices and flat edges
    // only where the surface continues to the relevant side
    std::vector<char> vin(V, 0), ein(E, 0);
    for (int e = 0; e < E; ++e) {
        auto [x, y] = mesh.edge(e);
        int lo = std::min(vpos[x], vpos[y]), hi = std::max(vpos[x], vpos[y]);
        if (lo < pos && pos < hi) ein[e] = 1;
    }
    for (int v = 0; v < V; ++v) {
        if (vpos[v] != pos) continue;
        for (VertexId u : mesh.vertex_neighbors(static_cast<VertexId>(v)))
            if (beyond(vpos[u])) {
                vin[v] = 1;
                break;
            }
    }
    std::vector<char> flat_in(E, 0);
    for (int e = 0; e < E; ++e) {
        auto [x, y] = mesh.edge(e);
        if (vpos[x] != pos || vpos[y] != pos) continue;
        for (int t : mesh.edge_triangles(e))
            for (VertexId w : mesh.triangle(t))
                if (beyond(vpos[w])) flat_in[e] = 1;
    }

    UnionFind uf(static_cast<std::size_t>(V + E));
    std::vector<char> active(V + E, 0);
    for (int v = 0; v < V; ++v) active[v] = vin[v];
    for (int e = 0; e < E; ++e) active[V + e] = static_cast<char>(ein[e] || flat_in[e]);

    for (int e = 0; e < E; ++e) {
        if (!flat_in[e]) continue;
        auto [x, y] = mesh.edge(e);
        uf.unite(V + e, x);
        uf.unite(V + e, y);
    }
    for (int t = 0; t < static_cast<int>(mesh.triangle_count()); ++t) {
        const auto& tri = mesh.triangle(t);
        int lo = std::min({vpos[tri[0]], vpos[tri[1]], vpos[tri[2]]});
        int hi = std::max({vpos[tri[0]], vpos[tri[1]], vpos[tri[2]]});
        if (!(lo < pos && pos < hi)) continue;
        // level segment inside the triangle: connect its two carrier cells
        std::vector<int> carriers;
        for (VertexId v : tri)
            if (vpos[v] == pos) carriers.push_back(v);
        for (int e : mesh.triangle_edges(t))
            if (e >= 0 && ein[e]) carriers.push_back(V + e);
        if (carriers.size() == 2) uf.unite(carriers[0], carriers[1]);
    }

    std::vector<char> seen(V + E, 0);
    int count = 0;
    for (int i = 0; i < V + E; ++i) {
        if (!active[i]) continue;
        int r = uf.find(i);
        if (!seen[r]) {
            seen[r] = 1;
            ++count;
        }
    }
    return count;
}

} // namespace plreeb
