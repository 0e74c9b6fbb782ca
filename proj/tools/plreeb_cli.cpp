// plreeb: Reeb graphs of exact PL scalar fields on triangulated surfaces,
// and realization of decorated multigraphs as Reeb graphs.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "plreeb/decorated.hpp"
#include "plreeb/off_io.hpp"
#include "plreeb/realize.hpp"
#include "plreeb/reeb_compute.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1; // validation / verification failure
constexpr int kExitInput = 2;   // unreadable or malformed input

int exit_code_for(const plreeb::Error& err)
{
    return err.code() == plreeb::ErrorCode::ParseError ? kExitInput : kExitFailure;
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw plreeb::Error(plreeb::ErrorCode::ParseError, "cannot open output file " + path);
    out << text;
}

nlohmann::ordered_json signature_json(const plreeb::SurfaceSignature& sig)
{
    nlohmann::ordered_json j;
    j["orientable"] = sig.orientable;
    if (sig.orientable) j["genus"] = sig.genus;
    else j["crosscaps"] = sig.genus;
    j["boundary"] = sig.boundary_count;
    j["chi"] = sig.euler_char;
    return j;
}

nlohmann::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw plreeb::Error(plreeb::ErrorCode::ParseError, "cannot open graph file " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw plreeb::Error(plreeb::ErrorCode::ParseError, std::string("bad JSON in ") + path + ": " + ex.what());
    }
}

int cmd_info(const std::string& mesh_path)
{
    plreeb::SimplicialSurface mesh = plreeb::read_off_file(mesh_path);
    auto report = plreeb::validate_surface(mesh);
    nlohmann::ordered_json j;
    j["valid"] = report.ok;
    if (!report.ok) {
        j["violations"] = nlohmann::ordered_json::array();
        for (const auto& v : report.violations)
            j["violations"].push_back({{"kind", plreeb::error_code_name(v.kind)}, {"detail", v.message}});
        std::cout << j.dump(2) << "\n";
        return kExitFailure;
    }
    if (plreeb::is_connected(mesh)) {
        auto sigj = signature_json(plreeb::signature(mesh));
        for (auto& [key, value] : sigj.items()) j[key] = value;
    } else {
        int count = 0;
        auto comp = plreeb::triangle_components(mesh, &count);
        j["connected"] = false;
        j["components"] = nlohmann::ordered_json::array();
        for (int c = 0; c < count; ++c) {
            std::vector<int> tris;
            for (std::size_t t = 0; t < mesh.triangle_count(); ++t)
                if (comp[t] == c) tris.push_back(static_cast<int>(t));
            j["components"].push_back(signature_json(plreeb::signature(plreeb::extract_triangles(mesh, tris))));
        }
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_compute(const std::string& mesh_path, const std::string& field_path, const std::string& out_path,
                const std::string& dot_path, int oracle_samples)
{
    plreeb::SimplicialSurface mesh = plreeb::read_off_file(mesh_path);
    {
        auto report = plreeb::validate_surface(mesh);
        if (!report.ok) {
            std::cerr << "error: invalid mesh: " << report.violations.front().message << "\n";
            return kExitFailure;
        }
    }
    plreeb::ScalarField field = plreeb::read_field_file(field_path, mesh);

    plreeb::ReebGraph graph = plreeb::compute_reeb_graph(mesh, field);
    write_text_file(out_path, plreeb::reeb_graph_to_json(graph).dump(2) + "\n");
    if (!dot_path.empty()) write_text_file(dot_path, plreeb::reeb_graph_to_dot(graph));

    nlohmann::ordered_json summary;
    summary["nodes"] = graph.nodes.size();
    summary["edges"] = graph.edges.size();
    summary["beta1"] = plreeb::betti1(graph);

    if (oracle_samples > 0) {
        plreeb::ReebGraph oracle = plreeb::sampled_reeb_oracle(mesh, field, oracle_samples);
        bool agree = plreeb::graph_isomorphic(plreeb::Multigraph::of(graph), plreeb::Multigraph::of(oracle),
                                              plreeb::IsoMode::LevelOrder);
        summary["oracle_samples"] = oracle_samples;
        summary["oracle_agrees"] = agree;
        std::cout << summary.dump(2) << "\n";
        if (!agree) {
            std::cerr << "error: sampled oracle disagrees with the computed Reeb graph\n";
            return kExitFailure;
        }
        return kExitOk;
    }
    std::cout << summary.dump(2) << "\n";
    return kExitOk;
}

int cmd_realize(const std::string& graph_path, const std::string& out_mesh, const std::string& out_field,
                const std::string& out_corr, int p, int rings, int genus, bool has_genus)
{
    plreeb::DecoratedGraph dg = plreeb::decorated_graph_from_json(read_json_file(graph_path));
    plreeb::RealizeOptions opt;
    opt.p = p;
    opt.rings = rings;

    plreeb::RealizationOutput out =
        has_genus ? plreeb::realize_on_surface(dg, genus, opt) : plreeb::realize(dg, opt);

    {
        std::ofstream f(out_mesh, std::ios::binary);
        if (!f) throw plreeb::Error(plreeb::ErrorCode::ParseError, "cannot open output file " + out_mesh);
        plreeb::write_off(f, out.mesh);
    }
    {
        std::ofstream f(out_field, std::ios::binary);
        if (!f) throw plreeb::Error(plreeb::ErrorCode::ParseError, "cannot open output file " + out_field);
        plreeb::write_field(f, out.field);
    }
    std::string corr = plreeb::correspondence_to_json(dg, out).dump(2) + "\n";
    if (out_corr.empty()) std::cout << corr;
    else write_text_file(out_corr, corr);
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, int p, int rings)
{
    plreeb::DecoratedGraph dg = plreeb::decorated_graph_from_json(read_json_file(graph_path));
    plreeb::RealizeOptions opt;
    opt.p = p;
    opt.rings = rings;
    plreeb::RealizationOutput out = plreeb::realize(dg, opt);
    plreeb::VerifyReport report = plreeb::verify_realization(dg, out);

    nlohmann::ordered_json j;
    j["clause1"] = report.clause1;
    j["clause2"] = report.clause2;
    j["clause3"] = report.clause3;
    j["ok"] = report.ok();
    if (!report.ok()) j["failure"] = report.failure;
    std::cout << j.dump(2) << "\n";
    return report.ok() ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Reeb graphs of PL scalar fields on triangulated surfaces"};
    app.require_subcommand(1);

    std::string mesh_path, field_path, out_path, dot_path, graph_path;
    std::string out_mesh, out_field, out_corr;
    int oracle_samples = 0, p = 6, rings = 2, genus = 0;
    bool orientable_flag = false;

    auto* info = app.add_subcommand("info", "validate a mesh and print its signature");
    info->add_option("--mesh", mesh_path, "OFF mesh file")->required();

    auto* compute = app.add_subcommand("compute", "compute the Reeb graph of a field on a mesh");
    compute->add_option("--mesh", mesh_path, "OFF mesh file")->required();
    compute->add_option("--field", field_path, "field file, one rational per vertex")->required();
    compute->add_option("--out", out_path, "output Reeb graph JSON")->required();
    compute->add_option("--dot", dot_path, "also write DOT");
    compute->add_option("--oracle", oracle_samples, "cross-check against the sampled oracle with K samples per gap")
        ->check(CLI::PositiveNumber);

    auto* realize = app.add_subcommand("realize", "realize a decorated graph as a Reeb graph");
    realize->add_option("--graph", graph_path, "decorated graph JSON")->required();
    realize->add_option("--out-mesh", out_mesh, "output OFF mesh")->required();
    realize->add_option("--out-field", out_field, "output field file")->required();
    realize->add_option("--out-corr", out_corr, "output correspondence JSON (default: stdout)");
    realize->add_option("--p", p, "boundary polygon size")->check(CLI::Range(3, 1000));
    realize->add_option("--rings", rings, "interior rings per tube")->check(CLI::Range(2, 1000));
    auto* genus_opt = realize->add_option("--genus", genus, "target orientable genus (ignores decorations)");
    realize->add_flag("--orientable", orientable_flag, "the surface target is orientable (with --genus)")
        ->needs(genus_opt);

    auto* verify = app.add_subcommand("verify", "realize, recompute and check the three clauses");
    verify->add_option("--graph", graph_path, "decorated graph JSON")->required();
    verify->add_option("--p", p, "boundary polygon size")->check(CLI::Range(3, 1000));
    verify->add_option("--rings", rings, "interior rings per tube")->check(CLI::Range(2, 1000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitInput;
    }

    try {
        if (info->parsed()) return cmd_info(mesh_path);
        if (compute->parsed()) return cmd_compute(mesh_path, field_path, out_path, dot_path, oracle_samples);
        if (realize->parsed())
            return cmd_realize(graph_path, out_mesh, out_field, out_corr, p, rings, genus,
                               genus_opt->count() > 0);
        if (verify->parsed()) return cmd_verify(graph_path, p, rings);
    } catch (const plreeb::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_code_for(err);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitFailure;
    }
    return kExitInput;
}
