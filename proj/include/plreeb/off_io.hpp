#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "plreeb/field.hpp"
#include "plreeb/surface.hpp"

namespace plreeb {

namespace detail {

/// Next content line: comments (# to end of line) stripped, blank lines
/// skipped. Returns false at end of input.
inline bool next_content_line(std::istream& in, std::string& line)
{
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) {
                blank = false;
                break;
            }
        if (!blank) return true;
    }
    return false;
}

inline std::vector<std::string> tokens_of(const std::string& line)
{
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

inline long parse_count(const std::string& tok, const char* what)
{
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size() || v < 0)
            throw Error(ErrorCode::ParseError, std::string("bad ") + what + " '" + tok + "'");
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, std::string("bad ") + what + " '" + tok + "'");
    }
}

} // namespace detail

/// OFF reader. Comments and blank lines are tolerated; only triangle faces
/// are accepted. Coordinates are kept verbatim.
inline SimplicialSurface read_off(std::istream& in)
{
    std::string line;
    if (!detail::next_content_line(in, line) || detail::tokens_of(line) != std::vector<std::string>{"OFF"})
        throw Error(ErrorCode::ParseError, "missing OFF header");
    if (!detail::next_content_line(in, line))
        throw Error(ErrorCode::ParseError, "missing OFF counts line");
    auto counts = detail::tokens_of(line);
    if (counts.size() != 3)
        throw Error(ErrorCode::ParseError, "OFF counts line must have three numbers");
    long nv = detail::parse_count(counts[0], "vertex count");
    long nf = detail::parse_count(counts[1], "face count");
    detail::parse_count(counts[2], "edge count"); // carried by the format, ignored

    std::vector<std::array<std::string, 3>> coords;
    coords.reserve(static_cast<std::size_t>(nv));
    for (long i = 0; i < nv; ++i) {
        if (!detail::next_content_line(in, line))
            throw Error(ErrorCode::ParseError, "unexpected end of file in vertex list");
        auto toks = detail::tokens_of(line);
        if (toks.size() != 3)
            throw Error(ErrorCode::ParseError, "vertex line " + std::to_string(i) + " must have three coordinates");
        coords.push_back({toks[0], toks[1], toks[2]});
    }

    std::vector<std::array<VertexId, 3>> tris;
    tris.reserve(static_cast<std::size_t>(nf));
    for (long i = 0; i < nf; ++i) {
        if (!detail::next_content_line(in, line))
            throw Error(ErrorCode::ParseError, "unexpected end of file in face list");
        auto toks = detail::tokens_of(line);
        if (toks.size() != 4 || toks[0] != "3")
            throw Error(ErrorCode::ParseError, "face line " + std::to_string(i) + " must be '3 i j k'");
        std::array<VertexId, 3> t{};
        for (int k = 0; k < 3; ++k) {
            long v = detail::parse_count(toks[k + 1], "vertex index");
            if (v >= nv)
                throw Error(ErrorCode::ParseError,
                            "face line " + std::to_string(i) + " references vertex " + std::to_string(v));
            t[k] = static_cast<VertexId>(v);
        }
        tris.push_back(t);
    }
    if (detail::next_content_line(in, line))
        throw Error(ErrorCode::ParseError, "trailing content after face list");
    return SimplicialSurface(static_cast<std::size_t>(nv), std::move(tris), std::move(coords));
}

/// Bit-exact OFF writer: "OFF", "V F 0", vertex lines, "3 i j k" lines.
inline void write_off(std::ostream& out, const SimplicialSurface& mesh)
{
    out << "OFF\n" << mesh.vertex_count() << " " << mesh.triangle_count() << " 0\n";
    for (const auto& c : mesh.coordinates()) out << c[0] << " " << c[1] << " " << c[2] << "\n";
    for (const auto& t : mesh.triangles()) out << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
}

/// Field file: line i holds the value of vertex i, either an integer or
/// "p/q" with q > 0. The line count must match the mesh exactly.
inline ScalarField read_field(std::istream& in, const SimplicialSurface& mesh)
{
    std::vector<Rational> values;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
        std::string tok = line.substr(start);
        if (tok.empty()) {
            if (values.size() == mesh.vertex_count()) continue; // trailing blank lines only
            throw Error(ErrorCode::ParseError, "blank field line " + std::to_string(values.size()));
        }
        values.push_back(parse_rational(tok));
    }
    if (values.size() != mesh.vertex_count())
        throw Error(ErrorCode::ParseError,
                    "field has " + std::to_string(values.size()) + " lines for " +
                        std::to_string(mesh.vertex_count()) + " vertices");
    return ScalarField(std::move(values));
}

inline void write_field(std::ostream& out, const ScalarField& field)
{
    for (const auto& v : field.values) out << to_string(v) << "\n";
}

inline SimplicialSurface read_off_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open mesh file " + path);
    return read_off(in);
}

inline ScalarField read_field_file(const std::string& path, const SimplicialSurface& mesh)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open field file " + path);
    return read_field(in, mesh);
}

} // namespace plreeb
