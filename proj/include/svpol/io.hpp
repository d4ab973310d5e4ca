#pragma once
// File formats.
//
// Wavefield interchange (JSON):
//   {"nodes":[{"k":[kx,ky,kz],"weight":w,"f":[[re,im],...]}, ...],
//    "representation":"vector"|"jones",
//    "sv":[Ix,Iy,Iz]}
// "f" holds three [re,im] pairs for the vector representation, two for the
// Jones representation. "sv" is required for Jones (it defines the
// representation) and ignored for vector. Unknown representation strings are
// rejected.
//
// Stokes output (CSV): header "kx,ky,kz,s1,s2,s3,defined", one row per node;
// undefined nodes carry zeros and flag 0.
//
// Space-time points (CSV): columns x,y,z,t, optional header.
// Field output (CSV): header "x,y,z,t,Ex,Ey,Ez".

#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "svpol/errors.hpp"
#include "svpol/frames.hpp"
#include "svpol/grid.hpp"
#include "svpol/stokes.hpp"
#include "svpol/synthesis.hpp"
#include "svpol/wavefield.hpp"

namespace svpol::io {

enum class Representation { Vector, Jones };

// A parsed wavefield document; exactly one of the sample vectors is filled.
struct WavefieldFile {
    std::vector<GridNode> nodes;
    Representation representation = Representation::Vector;
    std::optional<Vec3> sv;
    std::vector<Vec3c> vector_samples;
    std::vector<Vec2c> jones_samples;

    MomentumGrid grid() const { return MomentumGrid{nodes}; }

    VectorWavefunction vector_wavefunction() const {
        if (representation != Representation::Vector)
            throw ParseError("wavefield is not in the vector representation");
        return VectorWavefunction{vector_samples};
    }

    JonesWavefunction jones_wavefunction() const {
        if (representation != Representation::Jones)
            throw ParseError("wavefield is not in the Jones representation");
        return JonesWavefunction{jones_samples, StrattonVector{*sv}};
    }
};

namespace detail {

using nlohmann::json;

inline double number_at(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string("expected a number for ") + what);
    return j.get<double>();
}

inline Vec3 vec3_at(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3)
        throw ParseError(std::string(what) + " must be an array of three numbers");
    return {number_at(j[0], what), number_at(j[1], what), number_at(j[2], what)};
}

inline cplx cplx_at(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(std::string(what) + " must be a [re, im] pair");
    return {number_at(j[0], what), number_at(j[1], what)};
}

inline json pair(const cplx& z) { return json::array({z.real(), z.imag()}); }

}  // namespace detail

inline WavefieldFile read_wavefield(std::istream& in) {
    using detail::json;
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("wavefield document must be a JSON object");
    if (!doc.contains("representation") || !doc["representation"].is_string())
        throw ParseError("missing \"representation\"");
    const std::string rep = doc["representation"].get<std::string>();

    WavefieldFile wf;
    if (rep == "vector")
        wf.representation = Representation::Vector;
    else if (rep == "jones")
        wf.representation = Representation::Jones;
    else
        throw ParseError("unknown representation \"" + rep + "\"");

    if (doc.contains("sv")) wf.sv = detail::vec3_at(doc["sv"], "sv");
    if (wf.representation == Representation::Jones && !wf.sv)
        throw ParseError("Jones representation requires \"sv\"");

    if (!doc.contains("nodes") || !doc["nodes"].is_array() || doc["nodes"].empty())
        throw ParseError("missing or empty \"nodes\"");
    const std::size_t n_components = wf.representation == Representation::Vector ? 3 : 2;
    for (const auto& nd : doc["nodes"]) {
        if (!nd.is_object() || !nd.contains("k") || !nd.contains("weight") || !nd.contains("f"))
            throw ParseError("each node needs \"k\", \"weight\" and \"f\"");
        GridNode gn;
        gn.k = detail::vec3_at(nd["k"], "k");
        gn.weight = detail::number_at(nd["weight"], "weight");
        wf.nodes.push_back(gn);
        const auto& f = nd["f"];
        if (!f.is_array() || f.size() != n_components)
            throw ParseError("\"f\" must hold " + std::to_string(n_components) +
                             " [re, im] pairs for the " + rep + " representation");
        if (n_components == 3)
            wf.vector_samples.push_back(
                {detail::cplx_at(f[0], "f"), detail::cplx_at(f[1], "f"), detail::cplx_at(f[2], "f")});
        else
            wf.jones_samples.push_back({detail::cplx_at(f[0], "f"), detail::cplx_at(f[1], "f")});
    }
    return wf;
}

inline WavefieldFile read_wavefield(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_wavefield(in);
}

inline void write_wavefield(std::ostream& out, const MomentumGrid& grid,
                            const VectorWavefunction& f) {
    using detail::json;
    json nodes = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        nodes.push_back({{"k", {grid[i].k.x, grid[i].k.y, grid[i].k.z}},
                         {"weight", grid[i].weight},
                         {"f", {detail::pair(f[i].x), detail::pair(f[i].y), detail::pair(f[i].z)}}});
    }
    out << json{{"representation", "vector"}, {"nodes", std::move(nodes)}}.dump(2) << "\n";
}

inline void write_wavefield(std::ostream& out, const MomentumGrid& grid,
                            const JonesWavefunction& ft) {
    using detail::json;
    json nodes = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        nodes.push_back({{"k", {grid[i].k.x, grid[i].k.y, grid[i].k.z}},
                         {"weight", grid[i].weight},
                         {"f", {detail::pair(ft[i].plus), detail::pair(ft[i].minus)}}});
    }
    const Vec3 sv = ft.sv().vec();
    out << json{{"representation", "jones"},
                {"sv", {sv.x, sv.y, sv.z}},
                {"nodes", std::move(nodes)}}
               .dump(2)
        << "\n";
}

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_stokes_csv(std::ostream& out, const MomentumGrid& grid, const StokesField& sf) {
    out << "kx,ky,kz,s1,s2,s3,defined\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const StokesParams sp = sf.defined(i) ? *sf[i].sp : StokesParams{};
        out << format_double(grid[i].k.x) << ',' << format_double(grid[i].k.y) << ','
            << format_double(grid[i].k.z) << ',' << format_double(sp.s1) << ','
            << format_double(sp.s2) << ',' << format_double(sp.s3) << ','
            << (sf.defined(i) ? 1 : 0) << "\n";
    }
}

inline std::vector<SpaceTimePoint> read_points_csv(std::istream& in) {
    std::vector<SpaceTimePoint> points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        std::istringstream row(line);
        std::string cell;
        double vals[4];
        bool numeric = true;
        int n = 0;
        while (std::getline(row, cell, ',') && n < 4) {
            try {
                std::size_t used = 0;
                vals[n] = std::stod(cell, &used);
                while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
                if (used != cell.size()) numeric = false;
            } catch (...) {
                numeric = false;
            }
            ++n;
        }
        if (!numeric) {
            // a single non-numeric leading row is accepted as a header
            if (line_no == 1) continue;
            throw ParseError("points CSV: non-numeric data at line " + std::to_string(line_no));
        }
        if (n != 4) throw ParseError("points CSV: expected 4 columns at line " + std::to_string(line_no));
        points.push_back({{vals[0], vals[1], vals[2]}, vals[3]});
    }
    if (points.empty()) throw ParseError("points CSV: no data rows");
    return points;
}

inline void write_field_csv(std::ostream& out, const std::vector<FieldSample>& samples) {
    out << "x,y,z,t,Ex,Ey,Ez\n";
    for (const auto& s : samples) {
        out << format_double(s.x.x) << ',' << format_double(s.x.y) << ',' << format_double(s.x.z)
            << ',' << format_double(s.t) << ',' << format_double(s.E.x) << ','
            << format_double(s.E.y) << ',' << format_double(s.E.z) << "\n";
    }
}

}  // namespace svpol::io
