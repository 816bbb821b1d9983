#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "motivic/cusp.hpp"
#include "motivic/picard.hpp"
#include "motivic/projector.hpp"

namespace motivic {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline const char* kFormatVersion = "1";

// Versioned input document; the payload schema depends on the kind.
struct InputDocument {
    std::string format_version;
    std::string kind; // surface | config | bundle | kce | cusp
    json payload;
};

namespace io_detail {

inline const json& require(const json& j, const char* field,
                           const std::string& ctx) {
    if (!j.is_object())
        throw ValidationError(ctx + ": expected an object");
    const auto it = j.find(field);
    if (it == j.end())
        throw ValidationError(ctx + "." + field + ": missing");
    return *it;
}

inline std::string require_string(const json& j, const char* field,
                                  const std::string& ctx) {
    const json& v = require(j, field, ctx);
    if (!v.is_string())
        throw ValidationError(ctx + "." + field + ": expected a string");
    return v.get<std::string>();
}

inline long require_long(const json& j, const char* field,
                         const std::string& ctx) {
    const json& v = require(j, field, ctx);
    if (!v.is_number_integer())
        throw ValidationError(ctx + "." + field + ": expected an integer");
    return v.get<long>();
}

} // namespace io_detail

// Rationals travel as strings "p/q" (plain "p" accepted and emitted for
// integers); never as floats.
inline Rational rational_from_json(const json& j, const std::string& ctx) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>(), ctx);
    throw ValidationError(ctx + ": expected a rational string \"p/q\"");
}

inline json rational_to_json(const Rational& r) {
    return rational_to_string(r);
}

// Quadratic field elements: {"a": "p/q", "b": "p/q", "d": n}, or a bare
// rational string.
inline QuadElem quad_from_json(const json& j, const std::string& ctx) {
    if (j.is_string() || j.is_number_integer())
        return QuadElem(rational_from_json(j, ctx));
    if (j.is_object()) {
        const Rational a =
            rational_from_json(io_detail::require(j, "a", ctx), ctx + ".a");
        const Rational b =
            rational_from_json(io_detail::require(j, "b", ctx), ctx + ".b");
        if (b == 0)
            return QuadElem(a);
        return QuadElem(a, b, io_detail::require_long(j, "d", ctx));
    }
    throw ValidationError(ctx + ": expected a rational or {a, b, d}");
}

inline json quad_to_json(const QuadElem& x) {
    if (x.is_rational())
        return rational_to_json(x.a());
    return json{{"a", rational_to_json(x.a())},
                {"b", rational_to_json(x.b())},
                {"d", x.d()}};
}

// Projective coordinate: "inf" or a field element.
inline ProjPoint point_from_json(const json& j, const std::string& ctx) {
    if (j.is_string() && j.get<std::string>() == "inf")
        return ProjPoint::inf();
    return ProjPoint::at(quad_from_json(j, ctx));
}

inline json point_to_json(const ProjPoint& p) {
    if (p.infinite)
        return "inf";
    return quad_to_json(p.value);
}

inline RatVec vector_from_json(const json& j, const std::string& ctx) {
    if (!j.is_array())
        throw ValidationError(ctx + ": expected an array");
    RatVec v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(
            rational_from_json(j[i], ctx + "[" + std::to_string(i) + "]"));
    return v;
}

inline json vector_to_json(const RatVec& v) {
    json out = json::array();
    for (const Rational& r : v)
        out.push_back(rational_to_json(r));
    return out;
}

inline RatMatrix matrix_from_json(const json& j, const std::string& ctx) {
    if (!j.is_array() || j.empty())
        throw ValidationError(ctx + ": expected a nonempty array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    RatMatrix m;
    for (std::size_t i = 0; i < rows; ++i) {
        const RatVec row =
            vector_from_json(j[i], ctx + "[" + std::to_string(i) + "]");
        if (i == 0) {
            cols = row.size();
            m = RatMatrix(rows, cols);
        } else if (row.size() != cols) {
            throw ValidationError(ctx + ": ragged rows");
        }
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = row[c];
    }
    return m;
}

inline json matrix_to_json(const RatMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j2 = 0; j2 < m.cols(); ++j2)
            row.push_back(rational_to_json(m.at(i, j2)));
        out.push_back(row);
    }
    return out;
}

inline json kstar_to_json(const KStarClass& c) {
    json out = json::array();
    for (const auto& f : c.factors())
        out.push_back(json{{"base", quad_to_json(f.base)},
                           {"exponent", rational_to_json(f.exponent)}});
    return out;
}

inline KStarClass kstar_from_json(const json& j, const std::string& ctx) {
    if (!j.is_array())
        throw ValidationError(ctx + ": expected a factor list");
    KStarClass c;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string fctx = ctx + "[" + std::to_string(i) + "]";
        c *= KStarClass(
            quad_from_json(io_detail::require(j[i], "base", fctx),
                           fctx + ".base"),
            rational_from_json(io_detail::require(j[i], "exponent", fctx),
                               fctx + ".exponent"));
    }
    return c;
}

// --- surface ---------------------------------------------------------------

inline SurfaceDatum surface_from_payload(const json& p) {
    const std::string ctx = "surface";
    SurfaceDatum s;
    s.h1_dim = io_detail::require_long(p, "h1_dim", ctx);
    s.form = matrix_from_json(io_detail::require(p, "Q", ctx), ctx + ".Q");
    const json& exc = io_detail::require(p, "exceptional", ctx);
    if (!exc.is_array())
        throw ValidationError(ctx + ".exceptional: expected an array");
    for (std::size_t i = 0; i < exc.size(); ++i)
        s.exceptional.push_back(vector_from_json(
            exc[i], ctx + ".exceptional[" + std::to_string(i) + "]"));
    if (p.contains("ample") && !p["ample"].is_null())
        s.ample = vector_from_json(p["ample"], ctx + ".ample");
    if (p.contains("cup1") && !p["cup1"].is_null()) {
        const json& cup = p["cup1"];
        if (!cup.is_array())
            throw ValidationError(ctx + ".cup1: expected an array");
        std::vector<RatMatrix> t;
        for (std::size_t i = 0; i < cup.size(); ++i)
            t.push_back(matrix_from_json(
                cup[i], ctx + ".cup1[" + std::to_string(i) + "]"));
        s.cup1 = std::move(t);
    }
    validate(s);
    return s;
}

inline json surface_to_payload(const SurfaceDatum& s) {
    json p;
    p["h1_dim"] = s.h1_dim;
    p["Q"] = matrix_to_json(s.form);
    json exc = json::array();
    for (const RatVec& v : s.exceptional)
        exc.push_back(vector_to_json(v));
    p["exceptional"] = exc;
    if (s.ample)
        p["ample"] = vector_to_json(*s.ample);
    if (s.cup1) {
        json cup = json::array();
        for (const RatMatrix& t : *s.cup1)
            cup.push_back(matrix_to_json(t));
        p["cup1"] = cup;
    }
    return p;
}

// --- config ----------------------------------------------------------------

inline CurveConfiguration config_from_payload(const json& p) {
    const std::string ctx = "config";
    CurveConfiguration c;
    const json& comps = io_detail::require(p, "components", ctx);
    if (!comps.is_array())
        throw ValidationError(ctx + ".components: expected an array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string cctx =
            ctx + ".components[" + std::to_string(i) + "]";
        CurveComponent comp;
        comp.id = io_detail::require_string(comps[i], "id", cctx);
        comp.genus = comps[i].contains("genus")
                         ? io_detail::require_long(comps[i], "genus", cctx)
                         : 0;
        comp.coord_enabled = comps[i].value("coords", true);
        c.components.push_back(std::move(comp));
    }
    const json& nodes = io_detail::require(p, "nodes", ctx);
    if (!nodes.is_array())
        throw ValidationError(ctx + ".nodes: expected an array");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::string nctx = ctx + ".nodes[" + std::to_string(i) + "]";
        CurveNode node;
        node.comp_a = io_detail::require_string(nodes[i], "a", nctx);
        node.point_a = point_from_json(io_detail::require(nodes[i], "at_a", nctx),
                                       nctx + ".at_a");
        node.comp_b = io_detail::require_string(nodes[i], "b", nctx);
        node.point_b = point_from_json(io_detail::require(nodes[i], "at_b", nctx),
                                       nctx + ".at_b");
        c.nodes.push_back(std::move(node));
    }
    validate(c);
    return c;
}

inline json config_to_payload(const CurveConfiguration& c) {
    json p;
    json comps = json::array();
    for (const auto& comp : c.components)
        comps.push_back(json{{"id", comp.id},
                             {"genus", comp.genus},
                             {"coords", comp.coord_enabled}});
    p["components"] = comps;
    json nodes = json::array();
    for (const auto& node : c.nodes)
        nodes.push_back(json{{"a", node.comp_a},
                             {"at_a", point_to_json(node.point_a)},
                             {"b", node.comp_b},
                             {"at_b", point_to_json(node.point_b)}});
    p["nodes"] = nodes;
    return p;
}

// --- bundle ----------------------------------------------------------------

inline ConfigLineBundle bundle_from_payload(const json& p) {
    const std::string ctx = "bundle";
    const std::string kind = io_detail::require_string(p, "presentation", ctx);
    if (kind == "divisor") {
        const json& div = io_detail::require(p, "divisors", ctx);
        if (!div.is_object())
            throw ValidationError(ctx + ".divisors: expected an object");
        std::map<std::string, std::vector<DivisorEntry>> divisors;
        for (const auto& [id, entries] : div.items()) {
            const std::string dctx = ctx + ".divisors['" + id + "']";
            if (!entries.is_array())
                throw ValidationError(dctx + ": expected an array");
            std::vector<DivisorEntry> list;
            for (std::size_t i = 0; i < entries.size(); ++i) {
                const std::string ectx = dctx + "[" + std::to_string(i) + "]";
                list.push_back(
                    {point_from_json(
                         io_detail::require(entries[i], "point", ectx),
                         ectx + ".point"),
                     rational_from_json(
                         io_detail::require(entries[i], "mult", ectx),
                         ectx + ".mult")});
            }
            divisors[id] = std::move(list);
        }
        return ConfigLineBundle::from_divisors(std::move(divisors));
    }
    if (kind == "scalar") {
        const json& sc = io_detail::require(p, "scalars", ctx);
        if (!sc.is_array())
            throw ValidationError(ctx + ".scalars: expected an array");
        std::map<std::size_t, QuadElem> scalars;
        for (std::size_t i = 0; i < sc.size(); ++i) {
            const std::string sctx = ctx + ".scalars[" + std::to_string(i) + "]";
            const long e = io_detail::require_long(sc[i], "edge", sctx);
            if (e < 0)
                throw ValidationError(sctx + ".edge: negative");
            const QuadElem v = quad_from_json(
                io_detail::require(sc[i], "value", sctx), sctx + ".value");
            if (v.is_zero())
                throw ZeroBase(sctx + ".value");
            scalars[static_cast<std::size_t>(e)] = v;
        }
        return ConfigLineBundle::from_scalars(std::move(scalars));
    }
    throw ValidationError(ctx + ".presentation: expected 'divisor' or "
                          "'scalar', got '" +
                          kind + "'");
}

inline json bundle_to_payload(const ConfigLineBundle& b) {
    json p;
    if (b.kind == ConfigLineBundle::Presentation::divisor) {
        p["presentation"] = "divisor";
        json div = json::object();
        for (const auto& [id, entries] : b.divisors) {
            json list = json::array();
            for (const auto& e : entries)
                list.push_back(json{{"point", point_to_json(e.point)},
                                    {"mult", rational_to_json(e.mult)}});
            div[id] = list;
        }
        p["divisors"] = div;
    } else {
        p["presentation"] = "scalar";
        json sc = json::array();
        for (const auto& [edge, value] : b.edge_scalars)
            sc.push_back(json{{"edge", edge}, {"value", quad_to_json(value)}});
        p["scalars"] = sc;
    }
    return p;
}

// --- walks -----------------------------------------------------------------

inline Walk walk_from_json(const json& j, const std::string& ctx) {
    if (!j.is_array())
        throw ValidationError(ctx + ": expected an array of steps");
    Walk walk;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string sctx = ctx + "[" + std::to_string(i) + "]";
        if (j[i].is_number_integer()) {
            const long e = j[i].get<long>();
            if (e < 0)
                throw ValidationError(sctx + ": negative edge index");
            walk.push_back({static_cast<std::size_t>(e), true});
        } else if (j[i].is_object()) {
            const long e = io_detail::require_long(j[i], "edge", sctx);
            if (e < 0)
                throw ValidationError(sctx + ".edge: negative");
            walk.push_back({static_cast<std::size_t>(e),
                            j[i].value("forward", true)});
        } else {
            throw ValidationError(sctx + ": expected an edge index or "
                                  "{edge, forward}");
        }
    }
    return walk;
}

inline json walk_to_json(const Walk& w) {
    bool all_forward = true;
    for (const auto& s : w)
        all_forward = all_forward && s.forward;
    json out = json::array();
    for (const auto& s : w) {
        if (all_forward)
            out.push_back(s.edge);
        else
            out.push_back(json{{"edge", s.edge}, {"forward", s.forward}});
    }
    return out;
}

// --- documents -------------------------------------------------------------

inline InputDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    InputDocument doc;
    doc.format_version = io_detail::require_string(j, "format_version", "document");
    if (doc.format_version != kFormatVersion)
        throw ValidationError("document.format_version: unsupported version '" +
                              doc.format_version + "'");
    doc.kind = io_detail::require_string(j, "kind", "document");
    static const char* kinds[] = {"surface", "config", "bundle", "kce", "cusp"};
    bool known = false;
    for (const char* k : kinds)
        known = known || doc.kind == k;
    if (!known)
        throw ValidationError("document.kind: unknown kind '" + doc.kind + "'");
    doc.payload = io_detail::require(j, "payload", "document");
    return doc;
}

inline InputDocument load_document(const std::string& path,
                                   const std::string& expected_kind = "") {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    InputDocument doc = parse_document(buffer.str());
    if (!expected_kind.empty() && doc.kind != expected_kind)
        throw ValidationError("document.kind: expected '" + expected_kind +
                              "', got '" + doc.kind + "'");
    return doc;
}

inline json document_to_json(const std::string& kind, const json& payload) {
    return json{{"format_version", kFormatVersion},
                {"kind", kind},
                {"payload", payload}};
}

inline std::string dump_document(const std::string& kind, const json& payload) {
    return document_to_json(kind, payload).dump(2) + "\n";
}

// KCE inputs can arrive as one combined document or as three separate ones.
inline KCEInput kce_from_parts(const SurfaceDatum& surface,
                               const CurveConfiguration& config,
                               const ConfigLineBundle& bundle,
                               const json& bundle_payload, const Walk& cycle) {
    KCEInput in;
    in.surface = surface;
    in.config = config;
    if (bundle.kind == ConfigLineBundle::Presentation::scalar) {
        in.scalar_bundle = bundle;
        in.intersection_vector.assign(config.components.size(), Rational(0));
        in.distinguished_cycle = cycle;
        return in;
    }
    in.restriction_points = bundle.divisors;
    if (bundle_payload.contains("intersection_vector")) {
        in.intersection_vector = vector_from_json(
            bundle_payload["intersection_vector"],
            "bundle.intersection_vector");
    } else {
        for (const auto& comp : config.components) {
            const auto it = in.restriction_points.find(comp.id);
            in.intersection_vector.push_back(
                it == in.restriction_points.end()
                    ? Rational(0)
                    : divisor_degree(it->second));
        }
    }
    in.distinguished_cycle = cycle;
    return in;
}

// --- reports ---------------------------------------------------------------

// Deterministic: sections keep insertion order, values are exact strings.
struct Report {
    std::string command;
    std::string status = "pass"; // pass | fail | partial
    ordered_json sections = ordered_json::object();
};

namespace io_detail {

inline void render_value(std::ostream& os, const ordered_json& v,
                         const std::string& indent) {
    if (v.is_object()) {
        os << "\n";
        for (const auto& [k, sub] : v.items()) {
            os << indent << "  " << k << ":";
            render_value(os, sub, indent + "  ");
        }
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
        os << "\n";
        for (const auto& sub : v) {
            os << indent << "  -";
            render_value(os, sub, indent + "  ");
        }
    } else {
        os << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

} // namespace io_detail

inline std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    os << "status: " << r.status << "\n";
    for (const auto& [k, v] : r.sections.items()) {
        os << k << ":";
        io_detail::render_value(os, v, "");
    }
    return os.str();
}

inline std::string render_structured(const Report& r) {
    ordered_json out;
    out["command"] = r.command;
    out["status"] = r.status;
    out["sections"] = r.sections;
    return out.dump(2) + "\n";
}

} // namespace motivic
