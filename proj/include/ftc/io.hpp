#pragma once

// Curve file I/O (JSON and CSV) and JSON serializers for reports.  JSON
// numbers round-trip bit-exactly (shortest-representation printing).

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ftc/curvature.hpp"
#include "ftc/projection.hpp"
#include "ftc/smoothing.hpp"
#include "ftc/variation.hpp"

namespace ftc {

using nlohmann::json;

inline json curve_to_json(const PolyCurve& c) {
    json j;
    j["dim"] = c.dim;
    j["closed"] = c.closed();
    j["vertices"] = c.vertices;
    return j;
}

inline PolyCurve curve_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("closed") ||
        !j.contains("vertices"))
        throw ParseError("curve JSON needs fields dim, closed, vertices");
    if (!j["dim"].is_number_integer())
        throw ParseError("field 'dim' must be an integer");
    if (!j["closed"].is_boolean())
        throw ParseError("field 'closed' must be a boolean");
    if (!j["vertices"].is_array())
        throw ParseError("field 'vertices' must be an array");
    PolyCurve c;
    c.dim = j["dim"].get<int>();
    if (c.dim < 1) throw ParseError("dim must be >= 1");
    c.topology = j["closed"].get<bool>() ? Topology::Loop : Topology::Arc;
    for (const auto& row : j["vertices"]) {
        if (!row.is_array() || int(row.size()) != c.dim)
            throw ParseError("vertex " + std::to_string(c.vertices.size()) +
                             " has wrong dimension");
        Vec v;
        for (const auto& x : row) {
            if (!x.is_number()) throw ParseError("non-numeric coordinate");
            v.push_back(x.get<double>());
        }
        c.vertices.push_back(std::move(v));
    }
    if (c.vertices.size() < 2) throw ParseError("curve needs >= 2 vertices");
    return c;
}

inline void write_curve_json(const PolyCurve& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << curve_to_json(c).dump(2) << "\n";
}

inline PolyCurve read_curve_json(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return curve_from_json(j);
}

inline PolyCurve read_curve_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open: " + path);
    return read_curve_json(in);
}

// ---- CSV: header "x0,x1,...", one vertex per row; closedness via flag ----

inline void write_curve_csv(const PolyCurve& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open for writing: " + path);
    for (int j = 0; j < c.dim; ++j) out << (j ? "," : "") << "x" << j;
    out << "\n";
    json num;  // reuse the shortest-round-trip double printer
    for (const auto& v : c.vertices) {
        for (int j = 0; j < c.dim; ++j) {
            num = v[j];
            out << (j ? "," : "") << num.dump();
        }
        out << "\n";
    }
}

inline PolyCurve read_curve_csv(std::istream& in, bool closed) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty CSV file");
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) header.push_back(cell);
    }
    int dim = int(header.size());
    if (dim < 1) throw ParseError("CSV header is empty");
    for (int j = 0; j < dim; ++j)
        if (header[j] != "x" + std::to_string(j))
            throw ParseError("CSV header must be x0,x1,...; got '" + header[j] +
                             "' in column " + std::to_string(j));
    PolyCurve c;
    c.dim = dim;
    c.topology = closed ? Topology::Loop : Topology::Arc;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        Vec v;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                double x = std::stod(cell, &used);
                if (used != cell.size()) throw std::invalid_argument(cell);
                v.push_back(x);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) +
                                 ": bad number '" + cell + "'");
            }
        }
        if (int(v.size()) != dim)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected " + std::to_string(dim) + " fields");
        c.vertices.push_back(std::move(v));
    }
    if (c.vertices.size() < 2) throw ParseError("curve needs >= 2 vertices");
    return c;
}

inline PolyCurve read_curve_csv(const std::string& path, bool closed) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open: " + path);
    return read_curve_csv(in, closed);
}

// Dispatch on extension (.json / .csv).
inline PolyCurve read_curve_file(const std::string& path, bool closed_flag) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        return read_curve_csv(path, closed_flag);
    return read_curve_json(path);
}

// ---- report serializers ----

inline json to_json(const CurvatureReport& r) {
    json j;
    j["length"] = r.length;
    j["tc"] = r.tc;
    j["tc_star"] = r.tc_star;
    json verts = json::array();
    for (std::size_t k = 0; k < r.theta.size(); ++k) {
        json v;
        v["theta"] = r.theta[k];
        v["k_mass"] = r.k_mass[k];
        v["density_angle"] = r.density_angle[k];
        v["density_chord"] = r.density_chord[k];
        if (std::isinf(r.density_arc[k]))
            v["density_arc"] = "inf";
        else
            v["density_arc"] = r.density_arc[k];
        verts.push_back(std::move(v));
    }
    j["vertices"] = std::move(verts);
    if (r.turning_number) j["turning_number"] = *r.turning_number;
    return j;
}

inline json to_json(const MonteCarloEstimate& e) {
    return json{{"mean", e.mean},
                {"stderr", e.stderr_},
                {"n", e.n},
                {"seed", e.seed}};
}

inline json to_json(const SmoothedCurve& sc) {
    json j;
    j["closed"] = sc.closed;
    j["total_length"] = sc.total_length;
    j["total_turning"] = sc.total_turning;
    json pieces = json::array();
    for (const auto& p : sc.pieces) {
        json pj;
        pj["a"] = p.a;
        pj["b"] = p.b;
        if (p.kind == SmoothPiece::Kind::Segment) {
            pj["kind"] = "segment";
        } else {
            pj["kind"] = "arc";
            pj["center"] = p.center;
            pj["radius"] = p.radius;
            pj["turn"] = p.turn;
            pj["u"] = p.u;
            pj["w"] = p.w;
        }
        pieces.push_back(std::move(pj));
    }
    j["pieces"] = std::move(pieces);
    return j;
}

inline void write_flow_trace_csv(const FlowTrace& t, std::ostream& out) {
    out << "step,energy,gradnorm,stepsize\n";
    json num;
    for (std::size_t i = 0; i < t.iterates.size(); ++i) {
        const auto& it = t.iterates[i];
        out << i;
        num = it.energy;    out << "," << num.dump();
        num = it.grad_norm; out << "," << num.dump();
        num = it.step_size; out << "," << num.dump();
        out << "\n";
    }
}

} // namespace ftc
