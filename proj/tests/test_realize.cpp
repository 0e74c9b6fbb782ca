#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "plreeb/realize.hpp"
#include "support/fixtures.hpp"

using namespace plreeb;

namespace {

DecoratedGraph theta_graph()
{
    DecoratedGraph g;
    g.vertices = {{"v0", SurfaceSignature::make(true, 0, 3), {}},
                  {"v1", SurfaceSignature::make(true, 0, 3), {}}};
    g.edges = {{"e0", 0, 1}, {"e1", 0, 1}, {"e2", 0, 1}};
    return g;
}

DecoratedGraph two_disk_edge()
{
    DecoratedGraph g;
    g.vertices = {{"lo", SurfaceSignature::make(true, 0, 1), {}},
                  {"hi", SurfaceSignature::make(true, 0, 1), {}}};
    g.edges = {{"e", 0, 1}};
    return g;
}

} // namespace

TEST_CASE("theta graph realizes as a genus-2 surface")
{
    auto out = realize(theta_graph());
    REQUIRE(validate_surface(out.mesh).ok);
    CHECK_FALSE(out.mesh.has_boundary());
    CHECK(euler_characteristic(out.mesh) == -2);
    CHECK(signature(out.mesh) == SurfaceSignature::make(true, 2, 0));

    // blocks and tubes partition the triangles
    std::vector<int> owners(out.mesh.triangle_count(), 0);
    for (const auto& tris : out.vertex_triangles)
        for (int t : tris) owners[t] += 1;
    for (const auto& tris : out.edge_triangles)
        for (int t : tris) owners[t] += 1;
    for (int o : owners) CHECK(o == 1);

    // block fields are constant at the assigned heights
    for (std::size_t v = 0; v < 2; ++v)
        for (int t : out.vertex_triangles[v])
            for (VertexId mv : out.mesh.triangle(t)) CHECK(out.field.at(mv) == Rational(out.heights[v]));
}

TEST_CASE("realized theta flat clusters: one per block, singletons along tubes")
{
    auto out = realize(theta_graph());
    auto clusters = flat_clusters(out.mesh, out.field);

    std::vector<char> in_block(out.mesh.vertex_count(), 0);
    for (std::size_t v = 0; v < out.vertex_triangles.size(); ++v)
        for (int t : out.vertex_triangles[v])
            for (VertexId mv : out.mesh.triangle(t)) in_block[mv] = 1;

    std::size_t block_clusters = 0;
    for (const auto& cluster : clusters) {
        if (in_block[cluster.front()]) {
            ++block_clusters;
        } else {
            // tube interior ring vertices: each ring is one flat circle, but
            // vertices of one ring across different tubes stay separate
            CHECK(cluster.size() == 6);
        }
    }
    CHECK(block_clusters == 2);
    // 2 blocks + 3 tubes x 2 rings
    CHECK(clusters.size() == 2 + 6);
}

TEST_CASE("two disks over one edge realize as a sphere with two plateau values")
{
    auto out = realize(two_disk_edge());
    CHECK(signature(out.mesh) == SurfaceSignature::make(true, 0, 0));

    auto g = compute_reeb_graph(out.mesh, out.field);
    REQUIRE(g.nodes.size() == 2);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.nodes[0].level == Rational(0));
    CHECK(g.nodes[1].level == Rational(1));

    auto report = verify_realization(two_disk_edge(), out);
    CHECK(report.clause1);
    CHECK(report.clause2);
    CHECK(report.clause3);
}

TEST_CASE("isolated torus vertex realizes as a constant-field torus")
{
    DecoratedGraph g;
    g.vertices = {{"t", SurfaceSignature::make(true, 1, 0), {}}};
    auto out = realize(g);
    CHECK(signature(out.mesh) == SurfaceSignature::make(true, 1, 0));
    auto rg = compute_reeb_graph(out.mesh, out.field);
    CHECK(rg.nodes.size() == 1);
    CHECK(rg.edges.empty());
    CHECK(verify_realization(g, out).ok());
}

TEST_CASE("theta realization passes all three clauses, oracle cross-check included")
{
    auto dg = theta_graph();
    auto out = realize(dg);
    auto report = verify_realization(dg, out);
    CHECK(report.clause1);
    CHECK(report.clause2);
    CHECK(report.clause3);

    auto g = compute_reeb_graph(out.mesh, out.field);
    auto oracle = sampled_reeb_oracle(out.mesh, out.field, 3);
    CHECK(graph_isomorphic(Multigraph::of(g), Multigraph::of(oracle), IsoMode::LevelOrder));
    CHECK(betti1(g) == 2);
}

TEST_CASE("widening the clause-3 neighborhood past a critical value fails")
{
    auto dg = theta_graph();
    auto out = realize(dg);
    VerifyOptions wide;
    wide.delta_scale = 12; // reaches past the adjacent block
    auto report = verify_realization(dg, out, wide);
    CHECK_FALSE(report.clause3);
}

TEST_CASE("corrupting one tube ring to a block height breaks verification")
{
    auto dg = two_disk_edge();
    auto out = realize(dg);
    // pin the first tube ring to the opposite block height: the tube is no
    // longer monotone and spurious critical circles appear
    for (int t : out.edge_triangles[0])
        for (VertexId v : out.mesh.triangle(t))
            if (out.field.values[v] == Rational(1, 3)) out.field.values[v] = Rational(1);
    auto report = verify_realization(dg, out);
    CHECK_FALSE((report.clause1 && report.clause2));
}

TEST_CASE("path graphs with interior vertices round-trip")
{
    DecoratedGraph path;
    path.vertices = {{"a", SurfaceSignature::make(true, 0, 1), {}},
                     {"b", SurfaceSignature::make(true, 0, 2), {}},
                     {"c", SurfaceSignature::make(true, 0, 1), {}}};
    path.edges = {{"e0", 0, 1}, {"e1", 1, 2}};
    auto out = realize(path);
    CHECK(signature(out.mesh) == SurfaceSignature::make(true, 0, 0));
    auto report = verify_realization(path, out);
    CHECK(report.ok());

    // triangle cycle: every height assignment has a monotone middle vertex,
    // whose fat annulus plateau must still be a graph vertex
    DecoratedGraph cycle;
    cycle.vertices = {{"a", SurfaceSignature::make(true, 0, 2), {}},
                      {"b", SurfaceSignature::make(true, 0, 2), {}},
                      {"c", SurfaceSignature::make(true, 0, 2), {}}};
    cycle.edges = {{"e0", 0, 1}, {"e1", 1, 2}, {"e2", 2, 0}};
    auto cout_ = realize(cycle);
    CHECK(signature(cout_.mesh) == SurfaceSignature::make(true, 1, 0));
    CHECK(verify_realization(cycle, cout_).ok());
}

TEST_CASE("non-orientable decorations realize non-orientable surfaces")
{
    DecoratedGraph g;
    g.vertices = {{"m", SurfaceSignature::make(false, 1, 1), {}},
                  {"d", SurfaceSignature::make(true, 0, 1), {}}};
    g.edges = {{"e", 0, 1}};
    auto out = realize(g);
    // chi = 0 + 1 = 1: projective plane
    CHECK(signature(out.mesh) == SurfaceSignature::make(false, 1, 0));
    CHECK(verify_realization(g, out).ok());
}

TEST_CASE("chi additivity and orientability across assorted decorations")
{
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> genus_dist(0, 2);
    std::uniform_int_distribution<int> flip(0, 1);

    for (int trial = 0; trial < 10; ++trial) {
        DecoratedGraph g;
        int n = 2 + trial % 3;
        for (int v = 0; v < n; ++v)
            g.vertices.push_back({"v" + std::to_string(v), SurfaceSignature{}, {}});
        // connected backbone plus a few extras
        for (int v = 1; v < n; ++v)
            g.edges.push_back({"b" + std::to_string(v), v - 1, v});
        int extras = trial % 4;
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int x = 0; x < extras; ++x) {
            int a = pick(rng), b = pick(rng);
            if (a == b) continue;
            g.edges.push_back({"x" + std::to_string(x), a, b});
        }
        bool all_orientable = true;
        for (int v = 0; v < n; ++v) {
            bool orientable = flip(rng) == 0;
            int genus = genus_dist(rng);
            if (!orientable) genus = std::max(1, genus);
            all_orientable = all_orientable && orientable;
            g.vertices[v].gamma = SurfaceSignature::make(orientable, genus, g.degree(v));
        }

        auto out = realize(g);
        int expected_chi = 0;
        for (const auto& v : g.vertices) expected_chi += v.gamma.euler_char;
        CHECK(euler_characteristic(out.mesh) == expected_chi);
        CHECK(orientability(out.mesh).orientable == all_orientable);
        CHECK(verify_realization(g, out).ok());
    }
}

TEST_CASE("realize_on_surface honors the genus budget")
{
    DecoratedGraph theta = theta_graph();

    SECTION("beta1 gives the all-planar genus")
    {
        auto out = realize_on_surface(theta, 2);
        CHECK(signature(out.mesh) == SurfaceSignature::make(true, 2, 0));
    }

    SECTION("surplus handles go to the first vertex")
    {
        auto out = realize_on_surface(theta, 4);
        CHECK(signature(out.mesh) == SurfaceSignature::make(true, 4, 0));
        CHECK(signature(out.mesh).euler_char == -6);
        auto dg = planar_decoration(theta, 4);
        CHECK(dg.vertices[0].gamma.genus == 2);
        CHECK(dg.vertices[1].gamma.genus == 0);
    }

    SECTION("too small a genus is rejected")
    {
        REQUIRE_THROWS_AS(realize_on_surface(theta, 1), Error);
        try {
            realize_on_surface(theta, 1);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::GenusTooSmall);
        }
    }

    SECTION("loops and disconnected graphs are rejected")
    {
        DecoratedGraph loop;
        loop.vertices = {{"v", SurfaceSignature{}, {}}};
        loop.edges = {{"e", 0, 0}};
        REQUIRE_THROWS_AS(realize_on_surface(loop, 3), Error);

        DecoratedGraph split;
        split.vertices = {{"a", SurfaceSignature{}, {}}, {"b", SurfaceSignature{}, {}}};
        REQUIRE_THROWS_AS(realize_on_surface(split, 3), Error);
    }
}

TEST_CASE("realization options: small polygons and extra rings")
{
    RealizeOptions opt;
    opt.p = 3;
    opt.rings = 5;
    auto dg = theta_graph();
    auto out = realize(dg, opt);
    CHECK(signature(out.mesh) == SurfaceSignature::make(true, 2, 0));
    CHECK(verify_realization(dg, out).ok());

    opt.p = 9;
    opt.rings = 2;
    CHECK(verify_realization(dg, realize(dg, opt)).ok());
}

TEST_CASE("a disconnected decoration realizes as a disjoint union")
{
    DecoratedGraph g;
    g.vertices = {{"v0", SurfaceSignature::make(true, 0, 3), {}},
                  {"v1", SurfaceSignature::make(true, 0, 3), {}},
                  {"iso", SurfaceSignature::make(true, 1, 0), {}}};
    g.edges = {{"e0", 0, 1}, {"e1", 0, 1}, {"e2", 0, 1}};
    auto out = realize(g);
    int comps = 0;
    triangle_components(out.mesh, &comps);
    CHECK(comps == 2);
    CHECK(euler_characteristic(out.mesh) == -2 + 0);
    CHECK(verify_realization(g, out).ok());
}

TEST_CASE("height fidelity: critical node levels equal assigned heights")
{
    DecoratedGraph path;
    path.vertices = {{"a", SurfaceSignature::make(true, 0, 1), 0},
                     {"b", SurfaceSignature::make(true, 0, 2), 2},
                     {"c", SurfaceSignature::make(true, 0, 1), 1}};
    path.edges = {{"e0", 0, 1}, {"e1", 1, 2}};
    auto out = realize(path);
    auto g = compute_reeb_graph(out.mesh, out.field);
    REQUIRE(g.nodes.size() == 3);
    std::multiset<std::string> levels;
    for (const auto& n : g.nodes) levels.insert(to_string(n.level));
    CHECK(levels == std::multiset<std::string>{"0", "1", "2"});
    CHECK(verify_realization(path, out).ok());
}
