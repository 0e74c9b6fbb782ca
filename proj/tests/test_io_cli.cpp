#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"
#include "plreeb/decorated.hpp"
#include "plreeb/meshes.hpp"
#include "plreeb/off_io.hpp"
#include "plreeb/reeb_compute.hpp"
#include "support/fixtures.hpp"

using namespace plreeb;
namespace fs = std::filesystem;

namespace {

std::string cli_path()
{
    const char* p = std::getenv("PLREEB_CLI");
    REQUIRE(p != nullptr);
    return p;
}

std::string data_path(const std::string& name)
{
    const char* p = std::getenv("PLREEB_DATA");
    REQUIRE(p != nullptr);
    return (fs::path(p) / name).string();
}

fs::path temp_dir()
{
    auto dir = fs::temp_directory_path() / ("plreeb_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    auto dir = temp_dir();
    auto out_file = dir / "stdout.txt";
    std::string cmd = cli_path() + " " + args + " > " + out_file.string() + " 2> " + (dir / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return {WEXITSTATUS(status), slurp(out_file)};
}

} // namespace

TEST_CASE("OFF writing is deterministic and re-readable")
{
    std::ostringstream first;
    write_off(first, octahedron());
    std::istringstream back(first.str());
    auto mesh = read_off(back);
    CHECK(mesh.vertex_count() == 6);
    CHECK(mesh.triangle_count() == 8);

    std::ostringstream second;
    write_off(second, mesh);
    CHECK(first.str() == second.str());
}

TEST_CASE("OFF reader tolerates comments and blank lines")
{
    std::istringstream in("# a comment\nOFF\n\n3 1 0 # counts\n0 0 0\n1 0 0\n0 1 0\n\n3 0 1 2\n");
    auto mesh = read_off(in);
    CHECK(mesh.vertex_count() == 3);
    CHECK(mesh.triangle_count() == 1);
}

TEST_CASE("OFF reader rejects malformed input")
{
    auto expect_parse_error = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_off(in);
            FAIL("expected ParseError");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    };
    expect_parse_error("OFX\n1 0 0\n0 0 0\n");
    expect_parse_error("OFF\n1 1 0\n0 0 0\n4 0 0 0 0\n");     // non-triangle face
    expect_parse_error("OFF\n2 1 0\n0 0 0\n1 1 1\n3 0 1 5\n"); // index out of range
    expect_parse_error("OFF\n2 0 0\n0 0 0\n");                  // missing vertex line
}

TEST_CASE("field files round-trip and enforce the line count")
{
    auto mesh = octahedron();
    std::istringstream in("1\n-2/3\n0\n5/10\n7\n-3\n");
    auto field = read_field(in, mesh);
    CHECK(field.at(1) == Rational(-2, 3));
    CHECK(field.at(3) == Rational(1, 2));

    std::ostringstream out;
    write_field(out, field);
    CHECK(out.str() == "1\n-2/3\n0\n1/2\n7\n-3\n");

    std::istringstream wrong("1\n2\n3\n");
    try {
        read_field(wrong, mesh);
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}

TEST_CASE("decorated graph JSON requires integer numeric fields")
{
    auto expect_parse_error = [](const std::string& text) {
        try {
            decorated_graph_from_json(nlohmann::json::parse(text));
            FAIL("expected ParseError");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    };
    expect_parse_error(R"({"vertices":[{"id":"a","height":1.5}],"edges":[]})");
    expect_parse_error(R"({"vertices":[{"id":"a","genus":0.5}],"edges":[]})");
    expect_parse_error(R"({"vertices":[{"id":"a"},{"id":"a"}],"edges":[]})");
    expect_parse_error(R"({"vertices":[{"id":"a"}],"edges":[{"id":"e","ends":["a","zz"]}]})");

    auto ok = decorated_graph_from_json(nlohmann::json::parse(
        R"({"vertices":[{"id":"a","height":-3},{"id":"b"}],"edges":[{"id":"e","ends":["a","b"]}]})"));
    CHECK(ok.vertices[0].height == -3);
    CHECK(ok.vertices[0].gamma.boundary_count == 1); // defaults to the degree
    CHECK(ok.vertices[1].gamma.boundary_count == 1);
}

TEST_CASE("Reeb graph JSON round-trips through the canonical form")
{
    auto g = compute_reeb_graph(fixtures::vertical_torus(), fixtures::vertical_torus_field());
    auto j = reeb_graph_to_json(g);
    auto back = reeb_graph_from_json(nlohmann::json::parse(j.dump()));
    REQUIRE(back.nodes.size() == g.nodes.size());
    REQUIRE(back.edges.size() == g.edges.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        CHECK(back.nodes[i].level == g.nodes[i].level);
        CHECK(back.nodes[i].critical == g.nodes[i].critical);
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        CHECK(back.edges[i].a == g.edges[i].a);
        CHECK(back.edges[i].b == g.edges[i].b);
        CHECK(back.edges[i].lo == g.edges[i].lo);
        CHECK(back.edges[i].hi == g.edges[i].hi);
    }
}

TEST_CASE("cli info reports the octahedron signature")
{
    auto r = run_cli("info --mesh " + data_path("octahedron.off"));
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["valid"] == true);
    CHECK(j["orientable"] == true);
    CHECK(j["genus"] == 0);
    CHECK(j["boundary"] == 0);
    CHECK(j["chi"] == 2);
}

TEST_CASE("cli info reports Moebius crosscaps")
{
    auto r = run_cli("info --mesh " + data_path("mobius.off"));
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["orientable"] == false);
    CHECK(j["crosscaps"] == 1);
    CHECK(j["boundary"] == 1);
    CHECK(j["chi"] == 0);
}

TEST_CASE("cli info exit codes: invalid mesh 1, malformed file 2")
{
    auto dir = temp_dir();
    spit(dir / "pinch.off", "OFF\n5 2 0\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n3 0 1 2\n3 0 3 4\n");
    auto invalid = run_cli("info --mesh " + (dir / "pinch.off").string());
    CHECK(invalid.exit_code == 1);
    auto j = nlohmann::json::parse(invalid.out);
    CHECK(j["valid"] == false);

    spit(dir / "bad.off", "NOT_AN_OFF\n");
    CHECK(run_cli("info --mesh " + (dir / "bad.off").string()).exit_code == 2);

    CHECK(run_cli("info --mesh " + (dir / "missing.off").string()).exit_code == 2);
}

TEST_CASE("cli compute on the canonical fixtures")
{
    auto dir = temp_dir();
    auto out = dir / "reeb.json";

    auto r = run_cli("compute --mesh " + data_path("octahedron.off") + " --field " +
                     data_path("octahedron_z.field") + " --out " + out.string());
    REQUIRE(r.exit_code == 0);
    auto graph = nlohmann::json::parse(slurp(out));
    CHECK(graph["nodes"].size() == 2);
    CHECK(graph["edges"].size() == 1);

    auto torus = run_cli("compute --mesh " + data_path("torus.off") + " --field " +
                         data_path("torus_height.field") + " --out " + out.string() + " --oracle 3");
    REQUIRE(torus.exit_code == 0);
    auto summary = nlohmann::json::parse(torus.out);
    CHECK(summary["nodes"] == 4);
    CHECK(summary["edges"] == 4);
    CHECK(summary["beta1"] == 1);
    CHECK(summary["oracle_agrees"] == true);
}

TEST_CASE("cli compute writes DOT on request")
{
    auto dir = temp_dir();
    auto out = dir / "reeb.json";
    auto dot = dir / "reeb.dot";
    auto r = run_cli("compute --mesh " + data_path("octahedron.off") + " --field " +
                     data_path("octahedron_z.field") + " --out " + out.string() + " --dot " + dot.string());
    REQUIRE(r.exit_code == 0);
    auto text = slurp(dot);
    CHECK(text.find("graph reeb {") == 0);
    CHECK(text.find("n0 -- n1;") != std::string::npos);
    CHECK(text.find("@-1") != std::string::npos);
}

TEST_CASE("cli compute rejects a field with the wrong line count")
{
    auto dir = temp_dir();
    spit(dir / "short.field", "1\n2\n3\n");
    auto r = run_cli("compute --mesh " + data_path("octahedron.off") + " --field " +
                     (dir / "short.field").string() + " --out " + (dir / "o.json").string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli realize produces the genus-2 theta surface")
{
    auto dir = temp_dir();
    auto mesh_path = dir / "theta.off";
    auto field_path = dir / "theta.field";
    auto corr_path = dir / "theta_corr.json";

    auto r = run_cli("realize --graph " + data_path("theta.json") + " --out-mesh " + mesh_path.string() +
                     " --out-field " + field_path.string() + " --out-corr " + corr_path.string());
    REQUIRE(r.exit_code == 0);

    auto mesh = read_off_file(mesh_path.string());
    CHECK(euler_characteristic(mesh) == -2);
    CHECK(signature(mesh) == SurfaceSignature::make(true, 2, 0));

    auto corr = nlohmann::json::parse(slurp(corr_path));
    CHECK(corr["vertices"].size() == 2);
    CHECK(corr["edges"].size() == 3);
    CHECK(corr["heights"]["v0"] == 0);

    // exact two plateau values for the two-disk graph
    auto sphere = run_cli("realize --graph " + data_path("twodisk.json") + " --out-mesh " +
                          mesh_path.string() + " --out-field " + field_path.string());
    REQUIRE(sphere.exit_code == 0);
    auto m2 = read_off_file(mesh_path.string());
    auto f2 = read_field_file(field_path.string(), m2);
    std::set<std::string> plateau_values;
    for (const auto& cluster : flat_clusters(m2, f2))
        if (cluster.size() > 6) plateau_values.insert(to_string(f2.at(cluster.front())));
    CHECK(plateau_values == std::set<std::string>{"0", "1"});
}

TEST_CASE("cli realize with --genus switches to the surface target")
{
    auto dir = temp_dir();
    auto ok = run_cli("realize --graph " + data_path("theta.json") + " --genus 3 --orientable --out-mesh " +
                      (dir / "g3.off").string() + " --out-field " + (dir / "g3.field").string());
    REQUIRE(ok.exit_code == 0);
    CHECK(signature(read_off_file((dir / "g3.off").string())) == SurfaceSignature::make(true, 3, 0));

    auto small = run_cli("realize --graph " + data_path("theta.json") + " --genus 1 --out-mesh " +
                         (dir / "g1.off").string() + " --out-field " + (dir / "g1.field").string());
    CHECK(small.exit_code == 1);
}

TEST_CASE("cli verify passes the theta graph and rejects a cob mismatch")
{
    auto good = run_cli("verify --graph " + data_path("theta.json"));
    REQUIRE(good.exit_code == 0);
    auto j = nlohmann::json::parse(good.out);
    CHECK(j["clause1"] == true);
    CHECK(j["clause2"] == true);
    CHECK(j["clause3"] == true);
    CHECK(j["ok"] == true);

    auto dir = temp_dir();
    spit(dir / "bad.json",
         R"({"vertices":[{"id":"a","orientable":true,"genus":0,"boundary":3},)"
         R"({"id":"b","orientable":true,"genus":0,"boundary":1}],)"
         R"("edges":[{"id":"e","ends":["a","b"]}]})");
    auto bad = run_cli("verify --graph " + (dir / "bad.json").string());
    CHECK(bad.exit_code == 1);

    spit(dir / "garbage.json", "{not json");
    CHECK(run_cli("verify --graph " + (dir / "garbage.json").string()).exit_code == 2);
}

TEST_CASE("cli pipelines are byte-identical across runs")
{
    auto dir = temp_dir();
    auto run_pipeline = [&](const std::string& tag) {
        auto mesh_path = dir / ("m_" + tag + ".off");
        auto field_path = dir / ("f_" + tag + ".field");
        auto corr_path = dir / ("c_" + tag + ".json");
        auto reeb_path = dir / ("r_" + tag + ".json");
        auto dot_path = dir / ("d_" + tag + ".dot");
        REQUIRE(run_cli("realize --graph " + data_path("theta.json") + " --out-mesh " + mesh_path.string() +
                        " --out-field " + field_path.string() + " --out-corr " + corr_path.string())
                    .exit_code == 0);
        REQUIRE(run_cli("compute --mesh " + mesh_path.string() + " --field " + field_path.string() +
                        " --out " + reeb_path.string() + " --dot " + dot_path.string())
                    .exit_code == 0);
        return slurp(mesh_path) + slurp(field_path) + slurp(corr_path) + slurp(reeb_path) + slurp(dot_path);
    };
    CHECK(run_pipeline("a") == run_pipeline("b"));
}
