#pragma once

#include <array>
#include <utility>

#include "dlchs/digraph.hpp"

namespace dlchs {

// Contract X to a single fresh vertex x. Arcs with exactly one endpoint in X
// are redirected to x, arcs inside X disappear, and loops at x are dropped.
inline std::pair<Digraph, OriginMap> contract(const Digraph& g, const VertexSet& x_set) {
    if (x_set.empty()) throw std::invalid_argument("contract: X must be nonempty");
    for (VertexId v : x_set)
        if (!g.alive(v)) throw std::invalid_argument("contract: X contains a dead vertex");

    Digraph out = g;
    VertexId x = out.add_vertex();
    for (VertexId v : x_set) out.delete_vertex(v);

    auto map_end = [&](VertexId v) { return set_contains(x_set, v) ? x : v; };
    for (const Arc& a : g.arcs()) {
        VertexId t = map_end(a.tail), h = map_end(a.head);
        bool touches = (t == x) || (h == x);
        if (!touches) continue;       // survives unchanged in `out`
        if (t == x && h == x) continue;  // internal arc or loop at x
        out.add_arc(t, h);
    }

    OriginMap om;
    om.set_origins(x, x_set);
    return {out, om};
}

// Arcs (u,v) lying on no cycle of length <= ell, i.e. dist(v,u) >= ell.
inline std::vector<ArcId> long_arcs(const Digraph& g, int ell) {
    std::vector<ArcId> out;
    auto dist = all_pairs_dist(g);
    for (const Arc& a : g.arcs())
        if (dist[a.head][a.tail] >= ell) out.push_back(a.id);
    std::sort(out.begin(), out.end());
    return out;
}

struct TorsoResult {
    Digraph graph;
    std::vector<ArcId> u_long;  // torso arc ids marked as long-derived
};

// Torso on V(G) \ Z: an arc (u,v) exists iff some u->v path has all internal
// vertices in Z. Direct arcs are copied one-to-one (multiplicity kept); paths
// of length >= 2 through Z induce one arc per ordered pair. An arc lands in
// u_long iff some inducing path uses an arc of a_long.
inline TorsoResult torso(const Digraph& g, const VertexSet& z, const std::vector<ArcId>& a_long) {
    for (VertexId v : z)
        if (!g.alive(v)) throw std::invalid_argument("torso: Z contains a dead vertex");

    std::vector<char> is_long_arc(g.all_arcs().size(), 0);
    for (ArcId a : a_long) is_long_arc[a] = 1;
    std::vector<char> in_z(g.vertex_count(), 0);
    for (VertexId v : z) in_z[v] = 1;

    Digraph out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!g.alive(v) || in_z[v]) {
            if (v < out.vertex_count() && out.alive(v)) out.delete_vertex(v);
        }

    std::vector<ArcId> u_long;
    std::vector<Arc> live = g.arcs();

    // Direct arcs between non-Z vertices keep their multiplicity.
    for (const Arc& a : live) {
        if (in_z[a.tail] || in_z[a.head]) continue;
        ArcId id = out.add_arc(a.tail, a.head);
        if (is_long_arc[a.id]) u_long.push_back(id);
    }

    // Arcs induced through Z: BFS over (vertex in Z, touched-long flag) states.
    std::vector<std::vector<const Arc*>> adj(g.vertex_count());
    for (const Arc& a : live) adj[a.tail].push_back(&a);

    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (!g.alive(u) || in_z[u]) continue;
        // reach[v][f]: v in Z reachable from u with internals in Z, flag f.
        std::vector<std::array<char, 2>> reach(g.vertex_count(), {0, 0});
        std::vector<std::pair<VertexId, int>> queue;
        // found[v][f]: induced torso arc (u,v) with long flag f.
        std::vector<std::array<char, 2>> found(g.vertex_count(), {0, 0});
        for (const Arc* a : adj[u]) {
            int f = is_long_arc[a->id];
            if (in_z[a->head]) {
                if (!reach[a->head][f]) {
                    reach[a->head][f] = 1;
                    queue.push_back({a->head, f});
                }
            }
        }
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            auto [w, f] = queue[qi];
            for (const Arc* a : adj[w]) {
                int nf = f | is_long_arc[a->id];
                if (in_z[a->head]) {
                    if (!reach[a->head][nf]) {
                        reach[a->head][nf] = 1;
                        queue.push_back({a->head, nf});
                    }
                } else if (a->head != u) {
                    found[a->head][nf] = 1;
                }
            }
        }
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (!found[v][0] && !found[v][1]) continue;
            ArcId id = out.add_arc(u, v);
            if (found[v][1]) u_long.push_back(id);
        }
    }
    std::sort(u_long.begin(), u_long.end());
    return {out, u_long};
}

struct LineDigraph {
    Digraph graph;
    std::vector<ArcId> vertex_to_arc;  // line-graph vertex id -> original arc id
};

// Directed line graph: one vertex per live arc, arc a1 -> a2 iff head(a1) = tail(a2).
// Cycle lengths are preserved bijectively.
inline LineDigraph line_digraph(const Digraph& g) {
    std::vector<Arc> live = g.arcs();
    LineDigraph out;
    out.graph = Digraph(static_cast<int>(live.size()));
    for (const Arc& a : live) out.vertex_to_arc.push_back(a.id);
    for (size_t i = 0; i < live.size(); ++i)
        for (size_t j = 0; j < live.size(); ++j)
            if (i != j && live[i].head == live[j].tail)
                out.graph.add_arc(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return out;
}

struct VertexToArcReduction {
    Digraph graph;
    std::vector<ArcId> split_arc_of;      // original vertex -> its (v-,v+) arc id
    std::vector<VertexId> v_minus, v_plus;
};

// Split every vertex v into v- -> v+ (one deletable arc); every original arc
// (u,v) becomes k+1 parallel (u+, v-) arcs. A cycle of length L maps to 2L.
inline VertexToArcReduction vertex_to_arc_reduction(const Digraph& g, int k) {
    VertexToArcReduction out;
    int n = g.vertex_count();
    out.graph = Digraph(2 * n);
    out.split_arc_of.assign(n, -1);
    out.v_minus.assign(n, -1);
    out.v_plus.assign(n, -1);
    for (VertexId v = 0; v < n; ++v) {
        out.v_minus[v] = 2 * v;
        out.v_plus[v] = 2 * v + 1;
        if (!g.alive(v)) {
            out.graph.delete_vertex(2 * v);
            out.graph.delete_vertex(2 * v + 1);
            continue;
        }
        out.split_arc_of[v] = out.graph.add_arc(2 * v, 2 * v + 1);
    }
    for (const Arc& a : g.arcs())
        for (int c = 0; c <= k; ++c) out.graph.add_arc(out.v_plus[a.tail], out.v_minus[a.head]);
    return out;
}

// Loop-free mixed graph: directed arcs plus undirected edges.
struct MixedGraph {
    int n = 0;
    std::vector<std::pair<VertexId, VertexId>> arcs;
    std::vector<std::pair<VertexId, VertexId>> edges;
};

struct MixedFvsReduction {
    Digraph graph;
    OriginMap origin;  // created path-middle vertices map to an endpoint
};

// Mixed FVS -> DLCHS at ell = 2: subdivide every arc once; an edge becomes a
// digon iff it is the unique connection between its endpoints, otherwise two
// directed length-2 paths.
inline MixedFvsReduction mixed_fvs_reduction(const MixedGraph& m) {
    for (auto& [u, v] : m.arcs)
        if (u == v) throw std::invalid_argument("mixed_fvs_reduction: loop arc");
    for (auto& [u, v] : m.edges)
        if (u == v) throw std::invalid_argument("mixed_fvs_reduction: loop edge");

    auto connections = [&](VertexId a, VertexId b) {
        int c = 0;
        for (auto& [u, v] : m.arcs)
            if ((u == a && v == b) || (u == b && v == a)) ++c;
        for (auto& [u, v] : m.edges)
            if ((u == a && v == b) || (u == b && v == a)) ++c;
        return c;
    };

    MixedFvsReduction out;
    out.graph = Digraph(m.n);
    auto middle = [&](VertexId endpoint) {
        VertexId w = out.graph.add_vertex();
        // Deleting a path middle is equivalent to deleting this endpoint.
        out.origin.set_origins(w, {endpoint});
        return w;
    };
    for (auto& [u, v] : m.arcs) {
        VertexId w = middle(std::min(u, v));
        out.graph.add_arc(u, w);
        out.graph.add_arc(w, v);
    }
    for (auto& [u, v] : m.edges) {
        if (connections(u, v) == 1) {
            out.graph.add_arc(u, v);
            out.graph.add_arc(v, u);
        } else {
            VertexId w1 = middle(std::min(u, v));
            out.graph.add_arc(u, w1);
            out.graph.add_arc(w1, v);
            VertexId w2 = middle(std::min(u, v));
            out.graph.add_arc(v, w2);
            out.graph.add_arc(w2, u);
        }
    }
    return out;
}

}  // namespace dlchs
