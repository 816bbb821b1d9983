#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motivic/divisor.hpp"
#include "motivic/kstar.hpp"
#include "motivic/surface.hpp"

namespace motivic {

struct DivisorEntry {
    ProjPoint point;
    Rational mult;
};

// Merge equal points, drop zero multiplicities. Input order of first
// occurrence is kept, so results are deterministic.
inline std::vector<DivisorEntry>
canonical_divisor(const std::vector<DivisorEntry>& entries) {
    std::vector<DivisorEntry> out;
    for (const auto& e : entries) {
        bool merged = false;
        for (auto& o : out)
            if (o.point == e.point) {
                o.mult += e.mult;
                merged = true;
                break;
            }
        if (!merged)
            out.push_back(e);
    }
    std::erase_if(out, [](const DivisorEntry& e) { return e.mult == 0; });
    return out;
}

inline Rational divisor_degree(const std::vector<DivisorEntry>& entries) {
    Rational deg(0);
    for (const auto& e : entries)
        deg += e.mult;
    return deg;
}

// A line bundle on the configuration whose restriction to each component is
// presented either by a rational divisor on that component, or by explicit
// transition scalars on the edges (the directed a -> b value; the reverse
// direction is its inverse).
struct ConfigLineBundle {
    enum class Presentation { divisor, scalar };

    Presentation kind = Presentation::divisor;
    std::map<std::string, std::vector<DivisorEntry>> divisors;
    std::map<std::size_t, QuadElem> edge_scalars;

    static ConfigLineBundle from_divisors(
        std::map<std::string, std::vector<DivisorEntry>> d) {
        ConfigLineBundle b;
        b.kind = Presentation::divisor;
        b.divisors = std::move(d);
        return b;
    }

    static ConfigLineBundle from_scalars(std::map<std::size_t, QuadElem> s) {
        ConfigLineBundle b;
        b.kind = Presentation::scalar;
        b.edge_scalars = std::move(s);
        return b;
    }
};

// How an evaluation point sitting in the divisor support is handled:
// reject (the public edge_transitions contract), or strip the local factor
// and take the chart-normalized leading coefficient (the convention that
// also sends every factor involving infinity to 1; cl_kce needs it because
// the boundary correction places mass at the very nodes the section is
// evaluated at).
enum class NodePolicy { reject, strip };

namespace detail {

inline KStarClass value_at(const std::vector<DivisorEntry>& divisor,
                           const ProjPoint& x, NodePolicy policy) {
    KStarClass v;
    for (const auto& entry : divisor) {
        if (entry.point == x) {
            if (policy == NodePolicy::reject)
                throw SupportAtNode("divisor point " + entry.point.to_string() +
                                    " is an evaluation node");
            continue;
        }
        if (entry.point.infinite || x.infinite)
            continue; // leading-coefficient convention: factor 1
        v *= KStarClass(x.value - entry.point.value, entry.mult);
    }
    return v;
}

} // namespace detail

// Multiplier picked up by the canonical section of O(divisor) when extended
// across a component from in_node to out_node:
// prod over finite points p of ((out - p)/(in - p))^mult.
inline KStarClass edge_transitions(const std::vector<DivisorEntry>& divisor,
                                   const ProjPoint& in_node,
                                   const ProjPoint& out_node,
                                   NodePolicy policy = NodePolicy::reject) {
    const std::vector<DivisorEntry> d = canonical_divisor(divisor);
    if (divisor_degree(d) != 0)
        throw ValidationError("edge_transitions: divisor has nonzero degree " +
                              rational_to_string(divisor_degree(d)));
    return detail::value_at(d, out_node, policy) *
           detail::value_at(d, in_node, policy).inverse();
}

// One step of an oriented closed walk in the dual graph: an edge, traversed
// a -> b (forward) or b -> a.
struct WalkStep {
    std::size_t edge = 0;
    bool forward = true;
};

using Walk = std::vector<WalkStep>;

inline Walk reverse_walk(const Walk& w) {
    Walk r(w.rbegin(), w.rend());
    for (auto& s : r)
        s.forward = !s.forward;
    return r;
}

inline Walk rotate_walk(const Walk& w, std::size_t k) {
    if (w.empty())
        return w;
    Walk r;
    r.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        r.push_back(w[(i + k) % w.size()]);
    return r;
}

namespace detail {

inline std::size_t walk_tail(const DualGraph& g, const WalkStep& s) {
    return s.forward ? g.edges[s.edge].first : g.edges[s.edge].second;
}
inline std::size_t walk_head(const DualGraph& g, const WalkStep& s) {
    return s.forward ? g.edges[s.edge].second : g.edges[s.edge].first;
}

inline const ProjPoint& point_at_tail(const CurveConfiguration& c,
                                      const WalkStep& s) {
    const CurveNode& n = c.nodes[s.edge];
    return s.forward ? n.point_a : n.point_b;
}
inline const ProjPoint& point_at_head(const CurveConfiguration& c,
                                      const WalkStep& s) {
    const CurveNode& n = c.nodes[s.edge];
    return s.forward ? n.point_b : n.point_a;
}

inline void check_walk(const CurveConfiguration& c, const DualGraph& g,
                       const Walk& walk) {
    if (walk.empty())
        throw BrokenWalk("empty walk");
    for (const WalkStep& s : walk)
        if (s.edge >= c.nodes.size())
            throw BrokenWalk("edge index " + std::to_string(s.edge) +
                             " out of range");
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const WalkStep& cur = walk[i];
        const WalkStep& nxt = walk[(i + 1) % walk.size()];
        if (walk_head(g, cur) != walk_tail(g, nxt))
            throw BrokenWalk("steps " + std::to_string(i) + " and " +
                             std::to_string((i + 1) % walk.size()) +
                             " do not share a component");
    }
}

} // namespace detail

inline void validate_bundle(const CurveConfiguration& config,
                            const ConfigLineBundle& bundle,
                            bool require_degree_zero) {
    if (bundle.kind == ConfigLineBundle::Presentation::divisor) {
        for (const auto& [id, entries] : bundle.divisors) {
            config.index_of(id); // UnknownComponentId
            if (require_degree_zero && divisor_degree(entries) != 0)
                throw ValidationError("bundle: divisor on '" + id +
                                      "' has degree " +
                                      rational_to_string(
                                          divisor_degree(entries)) +
                                      ", expected 0");
        }
    } else {
        for (const auto& [edge, value] : bundle.edge_scalars) {
            if (edge >= config.nodes.size())
                throw ValidationError("bundle: edge index " +
                                      std::to_string(edge) + " out of range");
            if (value.is_zero())
                throw ZeroBase("bundle: transition scalar on edge " +
                               std::to_string(edge));
        }
    }
}

// Class in k* tensor Q obtained by carrying a trivializing section around
// the oriented closed walk: for divisor-presented bundles the product of
// the per-component extension factors, for scalar-presented ones the
// product of the directed edge scalars. Independent of the starting vertex;
// inverted by orientation reversal.
inline KStarClass holonomy(const CurveConfiguration& config,
                           const ConfigLineBundle& bundle, const Walk& walk,
                           NodePolicy policy = NodePolicy::reject) {
    const DualGraph g = dual_graph(config);
    detail::check_walk(config, g, walk);
    validate_bundle(config, bundle, /*require_degree_zero=*/true);

    KStarClass h;
    if (bundle.kind == ConfigLineBundle::Presentation::scalar) {
        for (const WalkStep& s : walk) {
            const auto it = bundle.edge_scalars.find(s.edge);
            if (it == bundle.edge_scalars.end())
                continue; // absent scalar means the trivial transition
            h *= KStarClass(it->second, Rational(s.forward ? 1 : -1));
        }
        return h;
    }

    static const std::vector<DivisorEntry> kEmpty;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const WalkStep& cur = walk[i];
        const WalkStep& nxt = walk[(i + 1) % walk.size()];
        const std::size_t comp = detail::walk_head(g, cur);
        const auto it = bundle.divisors.find(config.components[comp].id);
        const std::vector<DivisorEntry>& divisor =
            it == bundle.divisors.end() ? kEmpty : it->second;
        h *= edge_transitions(divisor, detail::point_at_head(config, cur),
                              detail::point_at_tail(config, nxt), policy);
    }
    return h;
}

// The unique fundamental cycle of a configuration with first Betti number
// one; anything else needs an explicitly named cycle.
inline Walk default_cycle(const CurveConfiguration& config) {
    const DualGraph g = dual_graph(config);
    const detail::Forest forest = detail::spanning_forest(g);
    std::vector<std::size_t> nonforest;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (!forest.in_forest[e])
            nonforest.push_back(e);
    if (nonforest.size() != 1)
        throw ValidationError("config has b1 = " +
                              std::to_string(nonforest.size()) +
                              "; a distinguished cycle must be named");
    const std::size_t e = nonforest[0];
    const auto [a, b] = g.edges[e];
    Walk walk{{e, true}};
    if (a == b)
        return walk;

    // Forest path b -> a: climb both endpoints to their common ancestor.
    std::vector<std::size_t> up_a{a};
    for (std::size_t u = a; forest.parent[u] != u; u = forest.parent[u])
        up_a.push_back(forest.parent[u]);
    std::vector<WalkStep> down_part;
    std::size_t u = b;
    const auto ancestor_pos = [&](std::size_t v) {
        for (std::size_t i = 0; i < up_a.size(); ++i)
            if (up_a[i] == v)
                return i;
        return up_a.size();
    };
    std::size_t meet = ancestor_pos(u);
    while (meet == up_a.size()) {
        const std::size_t pe = forest.parent_edge[u];
        walk.push_back({pe, g.edges[pe].first == u});
        u = forest.parent[u];
        meet = ancestor_pos(u);
    }
    for (std::size_t i = meet; i-- > 0;) {
        const std::size_t child = up_a[i];
        const std::size_t pe = forest.parent_edge[child];
        walk.push_back({pe, g.edges[pe].first != child});
    }
    return walk;
}

// Per-edge cocycle of a divisor-presented bundle: the section over comp_a
// evaluated at its node point divided by the section over comp_b at its
// point. Needs integer multiplicities, since a single edge value must be a
// field element rather than a formal product.
inline ConfigLineBundle
to_scalar_presentation(const CurveConfiguration& config,
                       const ConfigLineBundle& bundle) {
    if (bundle.kind == ConfigLineBundle::Presentation::scalar)
        return bundle;
    validate_bundle(config, bundle, /*require_degree_zero=*/true);
    const auto eval_field = [&](const std::string& id,
                                const ProjPoint& x) -> QuadElem {
        QuadElem v(Rational(1));
        const auto it = bundle.divisors.find(id);
        if (it == bundle.divisors.end())
            return v;
        for (const auto& entry : canonical_divisor(it->second)) {
            if (!is_integer(entry.mult))
                throw ValidationError(
                    "to_scalar_presentation: non-integer multiplicity " +
                    rational_to_string(entry.mult) + " on '" + id + "'");
            if (entry.point == x)
                throw SupportAtNode("divisor point " +
                                    entry.point.to_string() + " on '" + id +
                                    "' is a node");
            if (entry.point.infinite || x.infinite)
                continue;
            v = v * (x.value - entry.point.value).pow(entry.mult.get_num());
        }
        return v;
    };
    std::map<std::size_t, QuadElem> scalars;
    for (std::size_t e = 0; e < config.nodes.size(); ++e) {
        const CurveNode& n = config.nodes[e];
        scalars[e] = eval_field(n.comp_a, n.point_a) /
                     eval_field(n.comp_b, n.point_b);
    }
    return ConfigLineBundle::from_scalars(std::move(scalars));
}

// Rescales the trivialization over one component by lambda: every directed
// scalar out of it is multiplied, every one into it divided. Holonomy
// around closed walks is unchanged.
inline ConfigLineBundle coboundary_rescale(const CurveConfiguration& config,
                                           const ConfigLineBundle& bundle,
                                           const std::string& component,
                                           const QuadElem& lambda) {
    if (bundle.kind != ConfigLineBundle::Presentation::scalar)
        throw ValidationError("coboundary_rescale needs a scalar-presented "
                              "bundle");
    if (lambda.is_zero())
        throw ZeroBase("coboundary scalar");
    config.index_of(component);
    ConfigLineBundle out = bundle;
    for (std::size_t e = 0; e < config.nodes.size(); ++e) {
        const CurveNode& n = config.nodes[e];
        QuadElem v = out.edge_scalars.count(e) ? out.edge_scalars[e]
                                               : QuadElem(Rational(1));
        if (n.comp_a == component)
            v = v * lambda;
        if (n.comp_b == component)
            v = v / lambda;
        out.edge_scalars[e] = v;
    }
    return out;
}

// Spanning-forest normal form of a degree-zero transition assignment:
// forest edges are normalized to 1, and each non-forest edge carries the
// holonomy of its fundamental cycle.
struct PicPrimeClass {
    std::map<std::size_t, KStarClass> nonforest_classes;
};

inline PicPrimeClass coboundary_reduce(const CurveConfiguration& config,
                                       const ConfigLineBundle& bundle) {
    validate_bundle(config, bundle, /*require_degree_zero=*/true);
    const DualGraph g = dual_graph(config);
    const detail::Forest forest = detail::spanning_forest(g);

    const auto edge_class = [&](std::size_t e) -> KStarClass {
        if (bundle.kind == ConfigLineBundle::Presentation::scalar) {
            const auto it = bundle.edge_scalars.find(e);
            return it == bundle.edge_scalars.end()
                       ? KStarClass::one()
                       : KStarClass(it->second, Rational(1));
        }
        const CurveNode& n = config.nodes[e];
        const auto value = [&](const std::string& id, const ProjPoint& x) {
            const auto it = bundle.divisors.find(id);
            return it == bundle.divisors.end()
                       ? KStarClass::one()
                       : detail::value_at(canonical_divisor(it->second), x,
                                          NodePolicy::reject);
        };
        return value(n.comp_a, n.point_a) *
               value(n.comp_b, n.point_b).inverse();
    };

    // Potential per vertex: product of tree-edge classes along the path
    // from the root, oriented so every tree edge reduces to 1.
    std::vector<KStarClass> potential(g.vertex_count);
    std::vector<bool> have(g.vertex_count, false);
    const std::function<KStarClass(std::size_t)> lambda =
        [&](std::size_t v) -> KStarClass {
        if (have[v])
            return potential[v];
        have[v] = true;
        if (forest.parent[v] != v) {
            const std::size_t pe = forest.parent_edge[v];
            const KStarClass t = edge_class(pe);
            potential[v] = g.edges[pe].second == v
                               ? lambda(forest.parent[v]) * t
                               : lambda(forest.parent[v]) * t.inverse();
        }
        return potential[v];
    };

    PicPrimeClass out;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (forest.in_forest[e])
            continue;
        const auto [a, b] = g.edges[e];
        out.nonforest_classes[e] =
            lambda(a) * edge_class(e) * lambda(b).inverse();
    }
    return out;
}

// Boundary intersection correction: the unique rational coefficients with
// (C - sum a_m D_m) . D_n = 0 for every n, i.e. a = G^{-1} iv.
inline RatVec intersection_correction(const RatMatrix& gram, const RatVec& iv) {
    if (!gram.is_square() || gram.rows() != iv.size())
        throw ShapeMismatch("intersection_correction: Gram is " + gram.shape_str() +
                            ", intersection vector has length " +
                            std::to_string(iv.size()));
    if (iv.empty())
        return {};
    if (gram.det() == 0)
        throw DegenerateGram("intersection matrix is singular");
    return gram.solve(iv);
}

// Input for the Kummer-Chern-Eisenstein class of a line bundle: the surface
// realization (for the Gram matrix), the cusp-fiber configuration, the
// intersection numbers C . D_m, where C meets each component, and the
// oriented cycle the class is read along. Alternatively the bundle can be
// given by explicit degree-zero transition scalars (then the
// correction is vacuous and the class is the plain holonomy).
struct KCEInput {
    SurfaceDatum surface;
    CurveConfiguration config;
    RatVec intersection_vector;
    std::map<std::string, std::vector<DivisorEntry>> restriction_points;
    std::optional<ConfigLineBundle> scalar_bundle;
    Walk distinguished_cycle; // empty = the unique fundamental cycle
};

inline void validate(const KCEInput& in) {
    validate(in.surface);
    validate(in.config);
    if (in.scalar_bundle) {
        if (in.scalar_bundle->kind != ConfigLineBundle::Presentation::scalar)
            throw ValidationError("kce.scalar_bundle: must be scalar-"
                                  "presented");
        if (!in.restriction_points.empty())
            throw ValidationError("kce: scalar transition data and "
                                  "restriction divisors are exclusive");
        for (const Rational& iv : in.intersection_vector)
            if (iv != 0)
                throw ValidationError("kce: scalar transition data needs a "
                                      "zero intersection vector");
        validate_bundle(in.config, *in.scalar_bundle, true);
    }
    const std::size_t r = in.config.components.size();
    if (in.surface.exceptional.size() != r)
        throw ValidationError(
            "kce: surface has " +
            std::to_string(in.surface.exceptional.size()) +
            " exceptional classes for " + std::to_string(r) + " components");
    if (in.intersection_vector.size() != r)
        throw ValidationError("kce.intersection_vector: length != number of "
                              "components");
    for (const auto& [id, entries] : in.restriction_points) {
        const std::size_t m = in.config.index_of(id);
        if (divisor_degree(entries) != in.intersection_vector[m])
            throw ValidationError(
                "kce.restriction_points['" + id + "']: degree " +
                rational_to_string(divisor_degree(entries)) +
                " != intersection number " +
                rational_to_string(in.intersection_vector[m]));
        for (const auto& entry : entries)
            for (const auto& node : in.config.nodes)
                if ((node.comp_a == id && node.point_a == entry.point) ||
                    (node.comp_b == id && node.point_b == entry.point))
                    throw SupportAtNode("kce.restriction_points['" + id +
                                        "']: point " +
                                        entry.point.to_string() +
                                        " is a node");
    }
    for (const auto& comp : in.config.components) {
        if (comp.genus != 0)
            throw ValidationError("kce: component '" + comp.id +
                                  "' has genus " +
                                  std::to_string(comp.genus) +
                                  "; all components must be rational");
    }
    // Off-diagonal Gram entries must match the node counts, so the surface
    // classes really realize this configuration.
    const RatMatrix g = gram_matrix(in.surface);
    RatMatrix counts(r, r);
    for (const auto& n : in.config.nodes) {
        const std::size_t a = in.config.index_of(n.comp_a);
        const std::size_t b = in.config.index_of(n.comp_b);
        if (a != b) {
            counts.at(a, b) += 1;
            counts.at(b, a) += 1;
        }
    }
    for (std::size_t m = 0; m < r; ++m)
        for (std::size_t n = 0; n < r; ++n)
            if (m != n && g.at(m, n) != counts.at(m, n))
                throw ValidationError(
                    "kce: Gram entry (" + std::to_string(m) + "," +
                    std::to_string(n) + ") = " +
                    rational_to_string(g.at(m, n)) + " but the config has " +
                    rational_to_string(counts.at(m, n)) + " nodes there");
}

struct KCEResult {
    RatVec correction; // the orthogonalizing coefficients a
    std::map<std::string, std::vector<DivisorEntry>> corrected_divisors;
    Walk cycle;
    KStarClass holonomy_class;
};

// The corrected degree-zero bundle is the input restriction divisor minus
// a_n at each node point contributed by the adjacent component, with the
// purely numerical self-intersection remainder balanced at the coordinate
// point infinity (which contributes factor 1 to every evaluation).
inline KCEResult cl_kce(const KCEInput& in) {
    // Definiteness is decided before the load-style validation so that an
    // invalid exceptional configuration reports as DegenerateGram.
    if (in.surface.exceptional.size() != in.config.components.size())
        throw ValidationError(
            "kce: surface has " +
            std::to_string(in.surface.exceptional.size()) +
            " exceptional classes for " +
            std::to_string(in.config.components.size()) + " components");
    const RatMatrix gram = gram_matrix(in.surface);
    if (!gram.is_symmetric() || !gram.is_negative_definite())
        throw DegenerateGram("configuration Gram matrix is not negative "
                             "definite");
    validate(in);
    KCEResult result;
    if (in.scalar_bundle) {
        result.correction.assign(in.config.components.size(), Rational(0));
        result.cycle = in.distinguished_cycle.empty()
                           ? default_cycle(in.config)
                           : in.distinguished_cycle;
        result.holonomy_class =
            holonomy(in.config, *in.scalar_bundle, result.cycle);
        return result;
    }
    result.correction = intersection_correction(gram, in.intersection_vector);

    const std::size_t r = in.config.components.size();
    std::vector<std::vector<DivisorEntry>> corrected(r);
    for (const auto& [id, entries] : in.restriction_points)
        corrected[in.config.index_of(id)] = entries;
    for (const auto& node : in.config.nodes) {
        const std::size_t a = in.config.index_of(node.comp_a);
        const std::size_t b = in.config.index_of(node.comp_b);
        corrected[a].push_back({node.point_a, -result.correction[b]});
        corrected[b].push_back({node.point_b, -result.correction[a]});
    }
    for (std::size_t m = 0; m < r; ++m) {
        corrected[m] = canonical_divisor(corrected[m]);
        const Rational deficit = divisor_degree(corrected[m]);
        if (deficit != 0) {
            for (const auto& node : in.config.nodes)
                if ((node.comp_a == in.config.components[m].id &&
                     node.point_a.infinite) ||
                    (node.comp_b == in.config.components[m].id &&
                     node.point_b.infinite))
                    throw ValidationError(
                        "kce: component '" + in.config.components[m].id +
                        "' has a node at infinity, so the degree balance "
                        "has no free point");
            corrected[m].push_back({ProjPoint::inf(), -deficit});
            corrected[m] = canonical_divisor(corrected[m]);
        }
        if (!corrected[m].empty())
            result.corrected_divisors[in.config.components[m].id] =
                corrected[m];
    }

    result.cycle = in.distinguished_cycle.empty()
                       ? default_cycle(in.config)
                       : in.distinguished_cycle;
    result.holonomy_class =
        holonomy(in.config,
                 ConfigLineBundle::from_divisors(result.corrected_divisors),
                 result.cycle, NodePolicy::strip);
    return result;
}

inline ConfigLineBundle tensor(const ConfigLineBundle& x,
                               const ConfigLineBundle& y) {
    if (x.kind != y.kind)
        throw ValidationError("tensor: bundles use different presentations");
    ConfigLineBundle out = x;
    if (x.kind == ConfigLineBundle::Presentation::divisor) {
        for (const auto& [id, entries] : y.divisors) {
            auto& d = out.divisors[id];
            d.insert(d.end(), entries.begin(), entries.end());
            d = canonical_divisor(d);
        }
    } else {
        for (const auto& [e, v] : y.edge_scalars) {
            const auto it = out.edge_scalars.find(e);
            out.edge_scalars[e] =
                it == out.edge_scalars.end() ? v : it->second * v;
        }
    }
    return out;
}

inline ConfigLineBundle bundle_inverse(const ConfigLineBundle& x) {
    ConfigLineBundle out = x;
    if (x.kind == ConfigLineBundle::Presentation::divisor) {
        for (auto& [id, entries] : out.divisors)
            for (auto& e : entries)
                e.mult = -e.mult;
    } else {
        for (auto& [e, v] : out.edge_scalars)
            v = v.inverse();
    }
    return out;
}

// Additivity of the holonomy class: hol(b1 (x) b2) = hol(b1) hol(b2).
inline bool pic_group_law_check(const CurveConfiguration& config,
                                const ConfigLineBundle& b1,
                                const ConfigLineBundle& b2,
                                const Walk& cycle) {
    return kstar_equal(holonomy(config, tensor(b1, b2), cycle),
                       holonomy(config, b1, cycle) *
                           holonomy(config, b2, cycle));
}

// Exact Moebius change of coordinate z -> (az+b)/(cz+d) on one component:
// node points on it and its divisor support transform together. Holonomy
// classes do not change.
inline ProjPoint moebius_point(const ProjPoint& z, const QuadElem& a,
                               const QuadElem& b, const QuadElem& c,
                               const QuadElem& d) {
    if (z.infinite) {
        if (c.is_zero())
            return ProjPoint::inf();
        return ProjPoint::at(a / c);
    }
    const QuadElem den = c * z.value + d;
    if (den.is_zero())
        return ProjPoint::inf();
    return ProjPoint::at((a * z.value + b) / den);
}

inline void moebius_transform_component(CurveConfiguration& config,
                                        ConfigLineBundle& bundle,
                                        const std::string& component,
                                        const QuadElem& a, const QuadElem& b,
                                        const QuadElem& c, const QuadElem& d) {
    if ((a * d - b * c).is_zero())
        throw ValidationError("moebius transform: ad - bc = 0");
    config.index_of(component);
    for (auto& node : config.nodes) {
        if (node.comp_a == component)
            node.point_a = moebius_point(node.point_a, a, b, c, d);
        if (node.comp_b == component)
            node.point_b = moebius_point(node.point_b, a, b, c, d);
    }
    if (bundle.kind == ConfigLineBundle::Presentation::divisor) {
        const auto it = bundle.divisors.find(component);
        if (it != bundle.divisors.end())
            for (auto& entry : it->second)
                entry.point = moebius_point(entry.point, a, b, c, d);
    }
}

} // namespace motivic
