#pragma once

#include <random>
#include <vector>

#include "plreeb/field.hpp"
#include "plreeb/level_set.hpp"
#include "plreeb/meshes.hpp"

namespace fixtures {

using namespace plreeb;

inline ScalarField octahedron_z_field()
{
    return ScalarField({Rational(0), Rational(0), Rational(0), Rational(0), Rational(1), Rational(-1)});
}

/// Height function on the 4x4 grid torus with exactly four critical level
/// components: minimum at value 0, saddles at 2 and 6, maximum at 8.
inline SimplicialSurface vertical_torus() { return grid_torus(4); }

inline ScalarField vertical_torus_field()
{
    const int k = 4;
    const int row[4] = {0, 1, 2, 1};
    const int col[4] = {0, 3, 6, 3};
    std::vector<Rational> values(k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) values[static_cast<std::size_t>(i * k + j)] = Rational(row[i] + col[j]);
    return ScalarField(std::move(values));
}

inline SimplicialSurface genus2_mesh() { return connected_sum(grid_torus(4), grid_torus(4)); }

inline SimplicialSurface subdivided_sphere() { return subdivide(subdivide(octahedron())); }

/// Standard 5-triangle Moebius strip.
inline SimplicialSurface mobius_strip()
{
    std::vector<std::array<VertexId, 3>> tris = {
        {0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1},
    };
    return SimplicialSurface(5, std::move(tris));
}

/// Annulus between two concentric square rings (outer 0..3, inner 4..7).
inline SimplicialSurface square_annulus()
{
    std::vector<std::array<VertexId, 3>> tris = {
        {0, 1, 5}, {0, 5, 4}, {1, 2, 6}, {1, 6, 5},
        {2, 3, 7}, {2, 7, 6}, {3, 0, 4}, {3, 4, 7},
    };
    return SimplicialSurface(8, std::move(tris));
}

inline SimplicialSurface single_triangle()
{
    return SimplicialSurface(3, {{0, 1, 2}});
}

/// Pair of pants: sphere minus three disks, used as a signature fixture.
inline SimplicialSurface pants_fixture()
{
    // twice-subdivided octahedron minus three pairwise distant vertex stars
    // is built by build_vertex_block in the library; tests use that path.
    return subdivide(octahedron());
}

/// Random exact rational field; with plateaus, a few random connected
/// patches are forced to constant values.
inline ScalarField random_field(const SimplicialSurface& mesh, std::mt19937& rng, bool plateaus)
{
    std::uniform_int_distribution<int> num(-60, 60);
    std::uniform_int_distribution<int> den(1, 8);
    std::vector<Rational> values(mesh.vertex_count());
    for (auto& v : values) v = Rational(num(rng), den(rng));

    if (plateaus && mesh.vertex_count() > 0) {
        std::uniform_int_distribution<int> patch_count(1, 3);
        std::uniform_int_distribution<int> radius_dist(1, 2);
        std::uniform_int_distribution<std::size_t> pick(0, mesh.vertex_count() - 1);
        int patches = patch_count(rng);
        for (int i = 0; i < patches; ++i) {
            Rational level(num(rng), den(rng));
            VertexId seed = static_cast<VertexId>(pick(rng));
            int radius = radius_dist(rng);
            std::vector<VertexId> frontier{seed};
            std::vector<char> seen(mesh.vertex_count(), 0);
            seen[seed] = 1;
            values[seed] = level;
            for (int r = 0; r < radius; ++r) {
                std::vector<VertexId> next;
                for (VertexId v : frontier)
                    for (VertexId u : mesh.vertex_neighbors(v))
                        if (!seen[u]) {
                            seen[u] = 1;
                            values[u] = level;
                            next.push_back(u);
                        }
                frontier = std::move(next);
            }
        }
    }
    return ScalarField(std::move(values));
}

/// Independent level-component oracle: enumerates the level cells by direct
/// case analysis and joins them by an explicit pairwise shared-point test,
/// with no union-find and no slab machinery.
inline std::vector<std::vector<Cell>> naive_level_components(const SimplicialSurface& mesh,
                                                             const ScalarField& field, const Rational& t)
{
    std::vector<Cell> cells;
    for (std::size_t v = 0; v < mesh.vertex_count(); ++v)
        if (field.at(static_cast<VertexId>(v)) == t) cells.push_back({CellKind::Vertex, static_cast<int>(v)});
    for (std::size_t e = 0; e < mesh.edge_count(); ++e) {
        auto [a, b] = mesh.edge(static_cast<int>(e));
        const Rational& fa = field.at(a);
        const Rational& fb = field.at(b);
        bool flat = fa == t && fb == t;
        bool crossed = (fa < t && t < fb) || (fb < t && t < fa);
        if (flat || crossed) cells.push_back({CellKind::Edge, static_cast<int>(e)});
    }
    for (std::size_t i = 0; i < mesh.triangle_count(); ++i) {
        auto tri = mesh.triangle(static_cast<int>(i));
        Rational lo = field.at(tri[0]), hi = field.at(tri[0]);
        for (VertexId v : tri) {
            lo = std::min(lo, field.at(v));
            hi = std::max(hi, field.at(v));
        }
        if (lo <= t && t <= hi) cells.push_back({CellKind::Triangle, static_cast<int>(i)});
    }

    auto vertex_on_level = [&](VertexId v) { return field.at(v) == t; };
    auto edge_level_part = [&](int e) -> int {
        // 0 none, 1 point (crossing), 2 whole edge, 3 endpoint only
        auto [a, b] = mesh.edge(e);
        const Rational& fa = field.at(a);
        const Rational& fb = field.at(b);
        if (fa == t && fb == t) return 2;
        if ((fa < t && t < fb) || (fb < t && t < fa)) return 1;
        if (fa == t || fb == t) return 3;
        return 0;
    };

    // two level cells touch iff their level portions share a point; a
    // triangle's level portion touches everything of the level inside it
    auto touch = [&](const Cell& x, const Cell& y) -> bool {
        auto tri_contains = [&](int tr, const Cell& c) {
            auto tri = mesh.triangle(tr);
            if (c.kind == CellKind::Vertex)
                return tri[0] == c.index || tri[1] == c.index || tri[2] == c.index;
            if (c.kind == CellKind::Edge) {
                for (int k = 0; k < 3; ++k)
                    if (mesh.triangle_edges(tr)[k] == c.index) return true;
                return false;
            }
            return tr == c.index;
        };
        if (x.kind == CellKind::Triangle && y.kind != CellKind::Triangle) return tri_contains(x.index, y);
        if (y.kind == CellKind::Triangle && x.kind != CellKind::Triangle) return tri_contains(y.index, x);
        if (x.kind == CellKind::Triangle && y.kind == CellKind::Triangle) {
            // adjacent triangles share a level point iff the shared edge or a
            // shared vertex carries level content
            for (int k = 0; k < 3; ++k) {
                int e = mesh.triangle_edges(x.index)[k];
                for (int k2 = 0; k2 < 3; ++k2)
                    if (mesh.triangle_edges(y.index)[k2] == e) {
                        int part = edge_level_part(e);
                        if (part == 1 || part == 2) return true;
                        auto [a, b] = mesh.edge(e);
                        if (vertex_on_level(a) || vertex_on_level(b)) return true;
                    }
            }
            for (VertexId vx : mesh.triangle(x.index))
                for (VertexId vy : mesh.triangle(y.index))
                    if (vx == vy && vertex_on_level(vx)) return true;
            return false;
        }
        if (x.kind == CellKind::Vertex && y.kind == CellKind::Vertex) return false; // distinct points
        if (x.kind == CellKind::Edge && y.kind == CellKind::Edge) {
            if (edge_level_part(x.index) == 2 && edge_level_part(y.index) == 2) {
                auto [a, b] = mesh.edge(x.index);
                auto [c, d] = mesh.edge(y.index);
                return a == c || a == d || b == c || b == d;
            }
            return false; // crossings are interior points of distinct edges
        }
        // vertex vs edge: the vertex is the endpoint of a flat edge
        const Cell& vc = x.kind == CellKind::Vertex ? x : y;
        const Cell& ec = x.kind == CellKind::Vertex ? y : x;
        if (edge_level_part(ec.index) != 2) return false;
        auto [a, b] = mesh.edge(ec.index);
        return a == vc.index || b == vc.index;
    };

    // explicit path search over the touch relation
    std::vector<int> comp(cells.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (comp[i] != -1) continue;
        comp[i] = next;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y = 0; y < cells.size(); ++y)
                if (comp[y] == -1 && touch(cells[x], cells[y])) {
                    comp[y] = next;
                    stack.push_back(y);
                }
        }
        ++next;
    }
    std::vector<std::vector<Cell>> out(next);
    for (std::size_t i = 0; i < cells.size(); ++i) out[comp[i]].push_back(cells[i]);
    return out;
}

} // namespace fixtures
