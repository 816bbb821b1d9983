#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "motivic/matrix.hpp"
#include "motivic/quadratic.hpp"

namespace motivic {

// Point of P^1 in a fixed coordinate: a field element or infinity.
struct ProjPoint {
    bool infinite = false;
    QuadElem value;

    static ProjPoint inf() { return {true, QuadElem()}; }
    static ProjPoint at(QuadElem v) { return {false, std::move(v)}; }

    friend bool operator==(const ProjPoint& x, const ProjPoint& y) {
        if (x.infinite != y.infinite)
            return false;
        return x.infinite || x.value == y.value;
    }
    friend bool operator!=(const ProjPoint& x, const ProjPoint& y) {
        return !(x == y);
    }

    std::string to_string() const {
        return infinite ? "inf" : value.to_string();
    }
};

// Normal-crossing configuration of curves: components with genus, and nodes
// identifying one point of a component with one point of another (or of the
// same component; loops and parallel edges are allowed).
struct CurveComponent {
    std::string id;
    long genus = 0;
    bool coord_enabled = true;
};

struct CurveNode {
    std::string comp_a;
    ProjPoint point_a;
    std::string comp_b;
    ProjPoint point_b;
};

struct CurveConfiguration {
    std::vector<CurveComponent> components;
    std::vector<CurveNode> nodes;

    std::size_t index_of(const std::string& id) const {
        for (std::size_t i = 0; i < components.size(); ++i)
            if (components[i].id == id)
                return i;
        throw UnknownComponentId("'" + id + "'");
    }
};

inline void validate(const CurveConfiguration& c) {
    std::set<std::string> seen;
    for (const auto& comp : c.components) {
        if (comp.id.empty())
            throw ValidationError("config.components: empty id");
        if (!seen.insert(comp.id).second)
            throw ValidationError("config.components: duplicate id '" +
                                  comp.id + "'");
        if (comp.genus < 0)
            throw ValidationError("config.components['" + comp.id +
                                  "']: genus must be >= 0");
    }
    // Node endpoints must name known components, and on any coordinatized
    // component all node points must be pairwise distinct.
    std::map<std::string, std::vector<ProjPoint>> points_on;
    for (const auto& node : c.nodes) {
        c.index_of(node.comp_a);
        c.index_of(node.comp_b);
        points_on[node.comp_a].push_back(node.point_a);
        points_on[node.comp_b].push_back(node.point_b);
    }
    for (const auto& [id, pts] : points_on) {
        if (!c.components[c.index_of(id)].coord_enabled)
            continue;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (pts[i] == pts[j])
                    throw ValidationError("config: node points on component '" +
                                          id + "' are not pairwise distinct");
    }
}

// Multigraph with one vertex per component, one edge per node, both in
// input order.
struct DualGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline DualGraph dual_graph(const CurveConfiguration& c) {
    DualGraph g;
    g.vertex_count = c.components.size();
    g.edges.reserve(c.nodes.size());
    for (const auto& node : c.nodes)
        g.edges.emplace_back(c.index_of(node.comp_a), c.index_of(node.comp_b));
    return g;
}

// Edge-vertex boundary of the dual graph, with edges oriented a -> b.
// Loops map to zero.
inline RatMatrix boundary_matrix(const DualGraph& g) {
    RatMatrix d(g.vertex_count, g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [a, b] = g.edges[e];
        if (a == b)
            continue;
        d.at(a, e) = -1;
        d.at(b, e) = 1;
    }
    return d;
}

namespace detail {

struct Forest {
    std::vector<bool> in_forest;       // per edge
    std::vector<std::size_t> parent;   // per vertex; root = itself
    std::vector<std::size_t> parent_edge;
    std::vector<std::size_t> root_of;
    std::size_t component_count = 0;
};

// Deterministic BFS spanning forest (vertices ascending, edges by index).
inline Forest spanning_forest(const DualGraph& g) {
    const std::size_t v = g.vertex_count;
    Forest f;
    f.in_forest.assign(g.edges.size(), false);
    f.parent.assign(v, 0);
    f.parent_edge.assign(v, g.edges.size());
    f.root_of.assign(v, v);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(v);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [a, b] = g.edges[e];
        adj[a].emplace_back(e, b);
        if (a != b)
            adj[b].emplace_back(e, a);
    }
    for (std::size_t start = 0; start < v; ++start) {
        if (f.root_of[start] != v)
            continue;
        ++f.component_count;
        std::vector<std::size_t> queue{start};
        f.root_of[start] = start;
        f.parent[start] = start;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t u = queue[head];
            for (const auto& [e, w] : adj[u]) {
                if (f.root_of[w] != v)
                    continue;
                f.root_of[w] = start;
                f.parent[w] = u;
                f.parent_edge[w] = e;
                f.in_forest[e] = true;
                queue.push_back(w);
            }
        }
    }
    return f;
}

} // namespace detail

// Graded realization data of the configuration: m0 = connected components
// of the dual graph, m2 = number of irreducible components, and
// m1 = 2 * sum of genera + b1(graph), with a fundamental-cycle basis of the
// graph part.
struct MotiveOfD {
    long m0_dim = 0;
    long m1_dim = 0;
    long m2_dim = 0;
    long graph_b1 = 0;
    std::vector<RatVec> cycle_basis; // signed edge vectors
};

inline MotiveOfD motive_dims(const CurveConfiguration& c) {
    const DualGraph g = dual_graph(c);
    const detail::Forest forest = detail::spanning_forest(g);
    MotiveOfD m;
    m.m0_dim = static_cast<long>(forest.component_count);
    m.m2_dim = static_cast<long>(c.components.size());
    m.graph_b1 = static_cast<long>(g.edges.size()) -
                 static_cast<long>(g.vertex_count) + m.m0_dim;
    long genus_sum = 0;
    for (const auto& comp : c.components)
        genus_sum += comp.genus;
    m.m1_dim = 2 * genus_sum + m.graph_b1;

    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (forest.in_forest[e])
            continue;
        RatVec cycle(g.edges.size(), Rational(0));
        cycle[e] = 1;
        const auto [a, b] = g.edges[e];
        // Walk b -> root and a -> root, cancelling the common part.
        auto add_path = [&](std::size_t from, const Rational& sgn) {
            std::size_t u = from;
            while (forest.parent[u] != u) {
                const std::size_t pe = forest.parent_edge[u];
                // Stepping u -> parent(u): +1 along the stored orientation
                // of pe, -1 against it.
                const Rational orient =
                    g.edges[pe].first == u ? Rational(1) : Rational(-1);
                cycle[pe] += sgn * orient;
                u = forest.parent[u];
            }
        };
        if (a != b) {
            add_path(b, Rational(1));
            add_path(a, Rational(-1));
        }
        m.cycle_basis.push_back(std::move(cycle));
    }
    return m;
}

// Dimension-level exactness of the covering complex
// 0 -> cycles -> Q^E -> Q^V -> H0 -> 0, plus the Euler identity.
struct CechReport {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t boundary_rank = 0;
    std::size_t kernel_dim = 0;
    long m0 = 0;
    long b1 = 0;
    bool rank_nullity_ok = false;
    bool kernel_matches_b1 = false;
    bool euler_identity_ok = false;
    bool cycle_basis_in_kernel = false;

    bool passed() const {
        return rank_nullity_ok && kernel_matches_b1 && euler_identity_ok &&
               cycle_basis_in_kernel;
    }
};

inline CechReport cech_check(const CurveConfiguration& c) {
    const DualGraph g = dual_graph(c);
    const MotiveOfD m = motive_dims(c);
    const RatMatrix d = boundary_matrix(g);
    CechReport r;
    r.vertices = g.vertex_count;
    r.edges = g.edges.size();
    r.boundary_rank = d.rank();
    r.kernel_dim = d.kernel().size();
    r.m0 = m.m0_dim;
    r.b1 = m.graph_b1;
    r.rank_nullity_ok = r.boundary_rank + r.kernel_dim == r.edges;
    r.kernel_matches_b1 = static_cast<long>(r.kernel_dim) == r.b1;
    r.euler_identity_ok = static_cast<long>(r.vertices) -
                              static_cast<long>(r.edges) ==
                          r.m0 - r.b1;
    r.cycle_basis_in_kernel = true;
    const RatVec zero(g.vertex_count, Rational(0));
    for (const RatVec& cycle : m.cycle_basis)
        if (!(d * cycle == zero))
            r.cycle_basis_in_kernel = false;
    return r;
}

// Replaces one node by a chain through a fresh rational component: the
// edge becomes two edges and one vertex, so b1 is unchanged.
inline CurveConfiguration subdivide_node(const CurveConfiguration& c,
                                         std::size_t node_index,
                                         const std::string& new_id) {
    if (node_index >= c.nodes.size())
        throw ValidationError("subdivide_node: node index out of range");
    CurveConfiguration out = c;
    const CurveNode old = out.nodes[node_index];
    out.components.push_back({new_id, 0, true});
    out.nodes[node_index] = {old.comp_a, old.point_a, new_id,
                             ProjPoint::at(QuadElem(Rational(0)))};
    out.nodes.push_back({new_id, ProjPoint::at(QuadElem(Rational(1))),
                         old.comp_b, old.point_b});
    validate(out);
    return out;
}

// chi(D) by inclusion-exclusion over the nodes.
inline long euler_char_divisor(const CurveConfiguration& c) {
    long chi = 0;
    for (const auto& comp : c.components)
        chi += 2 - 2 * comp.genus;
    return chi - static_cast<long>(c.nodes.size());
}

// chi_c of the smooth part, given chi of the compactification.
inline long euler_char_compact(const CurveConfiguration& c,
                               long chi_smooth_compactification) {
    return chi_smooth_compactification - euler_char_divisor(c);
}

} // namespace motivic
