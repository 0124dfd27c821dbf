#pragma once

#include "dlchs/rep_paths.hpp"

namespace dlchs {

// Portal/cluster view of the strong components of G - t, with a fixed short
// cycle O_v through every portal v and t.
struct ClusterDecomposition {
    struct Component {
        VertexSet vertices;
        VertexSet portals;
        std::vector<VertexSet> clusters;  // partition of portals
    };
    VertexId t = -1;
    int ell = 0;
    std::vector<Component> components;
    std::map<VertexId, CycleWitness> o_cycle;  // per portal

    VertexSet o_vertices(VertexId portal) const {
        const CycleWitness& w = o_cycle.at(portal);
        return make_set(VertexSet(w.vertices.begin(), w.vertices.end() - 1));
    }
};

// Decompose G - t into strong components, portals (vertices with incident
// arcs leaving their component) and clusters (portals within distance 2*ell^2
// inside the component). Requires every arc of G to lie on a cycle of length
// at most ell, which guarantees the O_v cycles exist.
inline ClusterDecomposition decompose(const Digraph& g, VertexId t, int ell) {
    if (!g.alive(t)) throw std::invalid_argument("decompose: t not alive");
    if (!long_arcs(g, ell).empty())
        throw std::invalid_argument("decompose: some arc lies on no short cycle");

    ClusterDecomposition dec;
    dec.t = t;
    dec.ell = ell;
    Digraph rest = g;
    rest.delete_vertex(t);
    long long lmax = 2LL * ell * ell;

    for (const VertexSet& comp : strong_components(rest)) {
        ClusterDecomposition::Component c;
        c.vertices = comp;
        Digraph induced = g.induced(comp);
        for (VertexId v : comp)
            if (g.degree_total(v) > induced.degree_total(v)) c.portals.push_back(v);
        for (VertexId v : c.portals) {
            auto o = short_cycle_through(g, CycleAnchor::at_vertex(v), ell, t);
            if (!o) throw std::logic_error("decompose: missing O_v cycle for a portal");
            dec.o_cycle[v] = *o;
        }
        // cluster classes X_v; assigned in ascending portal order (when the
        // disjoint-or-equal property holds this is exactly the X_v partition)
        auto dist = all_pairs_dist(induced);
        VertexSet assigned;
        for (VertexId v : c.portals) {
            if (set_contains(assigned, v)) continue;
            VertexSet cls;
            for (VertexId u : c.portals)
                if (dist[v][u] <= lmax) cls.push_back(u);
            cls = set_minus(cls, assigned);
            assigned = set_union(assigned, cls);
            c.clusters.push_back(cls);
        }
        dec.components.push_back(std::move(c));
    }
    return dec;
}

// Check of the disjoint-or-equal property of the raw X_v classes (corpus
// audits call this on qualifying instances).
inline bool clusters_well_defined(const Digraph& g, const ClusterDecomposition& dec) {
    long long lmax = 2LL * dec.ell * dec.ell;
    for (const auto& c : dec.components) {
        Digraph induced = g.induced(c.vertices);
        auto dist = all_pairs_dist(induced);
        std::vector<VertexSet> classes;
        for (VertexId v : c.portals) {
            VertexSet cls;
            for (VertexId u : c.portals)
                if (dist[v][u] <= lmax) cls.push_back(u);
            classes.push_back(cls);
        }
        for (size_t i = 0; i < classes.size(); ++i)
            for (size_t j = 0; j < classes.size(); ++j)
                if (classes[i] != classes[j] && !sets_disjoint(classes[i], classes[j]))
                    return false;
    }
    return true;
}

namespace clusterdetail {

// Vertex-capacitated flow from the clusters of one component to a sink v:
// each cluster is a unit-capacity super source, vertices in Z u {v} have
// infinite capacity, all other component vertices capacity one. Returns the
// flow value and, if >= need, representatives of `need` distinct clusters on
// vertex-disjoint flow paths.
inline std::pair<int, std::vector<VertexId>> cluster_flow(const Digraph& g,
                                                          const ClusterDecomposition::Component& c,
                                                          const VertexSet& z, VertexId sink,
                                                          int need) {
    int n = g.vertex_count();
    int m = static_cast<int>(c.clusters.size());
    int nodes = 2 * n + m + 2;
    int src = 2 * n + m, dst = 2 * n + m + 1;
    const int INF = 1 << 28;
    struct Edge {
        int to, cap, flow;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj(nodes);
    auto add_edge = [&](int a, int b, int cap) {
        adj[a].push_back(static_cast<int>(edges.size()));
        edges.push_back({b, cap, 0});
        adj[b].push_back(static_cast<int>(edges.size()));
        edges.push_back({a, 0, 0});
    };
    for (VertexId v : c.vertices) {
        bool heavy = set_contains(z, v) || v == sink;
        add_edge(2 * v, 2 * v + 1, heavy ? INF : 1);
    }
    Digraph induced = g.induced(c.vertices);
    for (const Arc& a : induced.arcs()) add_edge(2 * a.tail + 1, 2 * a.head, INF);
    for (int j = 0; j < m; ++j) {
        add_edge(src, 2 * n + j, 1);
        for (VertexId p : c.clusters[j]) add_edge(2 * n + j, 2 * p, INF);
    }
    add_edge(2 * sink + 1, dst, INF);

    int flow = 0;
    auto augment = [&]() -> bool {
        std::vector<int> prev(nodes, -1);
        std::vector<char> seen(nodes, 0);
        std::vector<int> queue{src};
        seen[src] = 1;
        for (size_t qi = 0; qi < queue.size() && !seen[dst]; ++qi)
            for (int ei : adj[queue[qi]]) {
                const Edge& e = edges[ei];
                if (seen[e.to] || e.cap - e.flow <= 0) continue;
                seen[e.to] = 1;
                prev[e.to] = ei;
                queue.push_back(e.to);
            }
        if (!seen[dst]) return false;
        for (int u = dst; u != src;) {
            edges[prev[u]].flow += 1;
            edges[prev[u] ^ 1].flow -= 1;
            u = edges[prev[u] ^ 1].to;
        }
        return true;
    };
    while (flow < need && augment()) ++flow;

    std::vector<VertexId> reps;
    if (flow >= need) {
        // cluster j used iff its src edge carries flow; representative = the
        // first portal whose in-split edge carries flow out of cluster node j
        for (int j = 0; j < m && static_cast<int>(reps.size()) < need; ++j) {
            bool used = false;
            for (int ei : adj[src])
                if (edges[ei].to == 2 * n + j && edges[ei].flow > 0) used = true;
            if (!used) continue;
            for (int ei : adj[2 * n + j]) {
                const Edge& e = edges[ei];
                if (e.flow > 0 && e.to % 2 == 0) {
                    reps.push_back(e.to / 2);
                    break;
                }
            }
        }
    }
    return {flow, reps};
}

}  // namespace clusterdetail

inline int clusters_per_component_limit(int k) { return k * (k + 1) + 1; }

// Unbalanced-cluster guard: when one component has too many clusters or too
// many components have several, assemble a small set meeting every shadowless
// hitting separator (flow witness + O-cycles, or plain O-cycle unions).
inline std::optional<VertexSet> unbalanced_cluster_guard(const Digraph& g, VertexId t,
                                                         const ClusterDecomposition& dec,
                                                         const VertexSet& z, int k) {
    int limit = clusters_per_component_limit(k);
    const ClusterDecomposition::Component* crowded = nullptr;
    for (const auto& c : dec.components)
        if (static_cast<int>(c.clusters.size()) > limit) {
            crowded = &c;
            break;
        }
    int multi = 0;
    for (const auto& c : dec.components)
        if (c.clusters.size() >= 2) ++multi;

    if (!crowded && multi <= k) return std::nullopt;

    auto add_o = [&](VertexSet& acc, VertexId portal) {
        acc = set_union(acc, set_minus(dec.o_vertices(portal), {t}));
    };

    if (crowded) {
        // flow branch: a vertex reached from k+2 clusters on mostly disjoint paths
        for (VertexId v : set_minus(crowded->vertices, z)) {
            auto [flow, reps] = clusterdetail::cluster_flow(g, *crowded, z, v, k + 2);
            if (flow >= k + 2) {
                VertexSet out{v};
                for (VertexId r : reps) add_o(out, r);
                return out;
            }
        }
        // otherwise k(k+1)+1 whole O-cycles (skipping the first cluster, which
        // plays the path-target role)
        VertexSet out;
        for (int j = 1; j <= limit && j < static_cast<int>(crowded->clusters.size()); ++j)
            add_o(out, crowded->clusters[j].front());
        return out;
    }
    // more than k components with >= 2 clusters
    VertexSet out;
    int taken = 0;
    for (const auto& c : dec.components) {
        if (c.clusters.size() < 2 || taken > k) continue;
        add_o(out, c.clusters[0].front());
        add_o(out, c.clusters[1].front());
        ++taken;
    }
    return out;
}

// Guard sets of the balanced case: S_paths blocks surviving inter-cluster
// paths (witness-multi over clusters, expanded by O-cycles), S_vout blocks
// surviving portal -> V_out routes (witness pair, expanded by O-cycles).
inline std::pair<VertexSet, VertexSet> cluster_guard_sets(const Digraph& g, VertexId t,
                                                          const ClusterDecomposition& dec,
                                                          const VertexSet& v_out, int k) {
    VertexSet s_paths, s_vout;
    for (const auto& c : dec.components) {
        if (c.clusters.size() < 2) continue;
        Digraph induced = g.induced(c.vertices);
        auto witnesses = path_witness_multi(induced, c.clusters, k);
        for (const VertexSet& w : witnesses)
            for (VertexId x : w)
                s_paths = set_union(s_paths, set_minus(dec.o_vertices(x), {t}));
    }
    VertexSet portals;
    for (const auto& c : dec.components) portals = set_union(portals, c.portals);
    if (!portals.empty() && !v_out.empty()) {
        auto [x_w, y_w] = repdetail::witness_pair_overlap_ok(g, portals, v_out, k);
        for (VertexId x : x_w) s_vout = set_union(s_vout, set_minus(dec.o_vertices(x), {t}));
    }
    return {s_paths, s_vout};
}

// ---- Outlets and landing strips ---------------------------------------------

struct Outlet {
    VertexId vertex = -1;
    int position = -1;  // index on the path
    Path escape;        // witness v -> V_out path, beta-far from the far part of P
};

namespace clusterdetail {

// Witness escape path for position i of P: a p[i] -> V_out path at distance
// >= beta from every path vertex outside the alpha-neighborhood, avoiding
// `blocked`. Nearest target by BFS with ascending successor order.
inline std::optional<Path> escape_path(const Digraph& g, const std::vector<std::vector<int>>& dist,
                                       const Path& p, const VertexSet& v_out, long long alpha,
                                       long long beta, int i, const VertexSet& blocked) {
    VertexId v = p[i];
    std::vector<char> forbidden(g.vertex_count(), 0);
    for (int j = 0; j < static_cast<int>(p.size()); ++j) {
        if (std::abs(j - i) <= alpha) continue;  // inside the alpha-neighborhood
        for (VertexId zv : g.vertices())
            if (dist[p[j]][zv] <= beta - 1) forbidden[zv] = 1;
    }
    for (VertexId b : blocked) forbidden[b] = 1;
    if (forbidden[v]) return std::nullopt;
    if (set_contains(v_out, v)) return Path{v};
    std::vector<int> parent(g.vertex_count(), -2);
    std::vector<VertexId> queue{v};
    parent[v] = -1;
    auto adj = g.out_adj();
    VertexId target = -1;
    for (size_t qi = 0; qi < queue.size() && target == -1; ++qi)
        for (VertexId w : adj[queue[qi]]) {
            if (forbidden[w] || parent[w] != -2) continue;
            parent[w] = queue[qi];
            if (set_contains(v_out, w)) {
                target = w;
                break;
            }
            queue.push_back(w);
        }
    if (target == -1) return std::nullopt;
    Path escape;
    for (VertexId u = target; u != -1; u = parent[u]) escape.push_back(u);
    std::reverse(escape.begin(), escape.end());
    return escape;
}

}  // namespace clusterdetail

// Definitional evaluator: v on P is an (alpha,beta)-outlet iff some v->V_out
// path stays at distance >= beta from every vertex of P outside the
// alpha-neighborhood of v on P. Outlets are listed in path order.
inline std::vector<Outlet> compute_outlets(const Digraph& g, const Path& p, const VertexSet& v_out,
                                           long long alpha, long long beta) {
    std::vector<Outlet> out;
    if (v_out.empty()) return out;
    auto dist = all_pairs_dist(g);
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        auto escape = clusterdetail::escape_path(g, dist, p, v_out, alpha, beta, i, {});
        if (escape) out.push_back({p[i], i, *escape});
    }
    return out;
}

// An outlet is open w.r.t. S when some qualifying escape path avoids S - v.
inline bool outlet_open(const Digraph& g, const Path& p, const VertexSet& v_out, long long alpha,
                        long long beta, int position, const VertexSet& s) {
    auto dist = all_pairs_dist(g);
    VertexSet blocked = set_minus(s, {p[position]});
    return clusterdetail::escape_path(g, dist, p, v_out, alpha, beta, position, blocked)
        .has_value();
}

// Landing strip: v plus its `len` predecessors on P, in path order.
inline Path landing_strip(const Path& p, VertexId v, long long len) {
    auto it = std::find(p.begin(), p.end(), v);
    if (it == p.end()) throw std::invalid_argument("landing_strip: vertex not on path");
    long long pos = it - p.begin();
    long long from = std::max<long long>(0, pos - len);
    return Path(p.begin() + from, it + 1);
}

// Guess set for a closed outlet: witness targets of omega -> V_out survival,
// representative paths to each, collecting the vertices inside the beta-ball
// around omega.
inline VertexSet outlet_guess_set(const Digraph& g, VertexId omega, const VertexSet& v_out, int k,
                                  long long beta) {
    if (!is_strong(g)) throw std::invalid_argument("outlet_guess_set: host must be strong");
    VertexSet near = reach_forward_bounded(g, {omega}, static_cast<int>(std::min<long long>(
                                                           beta, g.vertex_count())));
    VertexSet out;
    for (VertexId v : path_witness_single(g, omega, v_out, k)) {
        if (v == omega) {
            out = set_union(out, {omega});
            continue;
        }
        PathFamily fam = rep_paths_bounded_cf(g, omega, v, k);
        for (const Path& r : fam.paths)
            out = set_union(out, set_intersect(make_set(r), near));
    }
    return out;
}

// ---- Important cluster separator solver --------------------------------------

struct ClusterSeparatorProblem {
    Digraph graph;                  // strong, cf <= ell
    std::vector<VertexSet> parts;   // X_1..X_p (clusters)
    VertexSet v_out;
    int k = 0;
    int ell = 0;
    // Overridable analysis constants; zero means the formula value.
    long long alpha = 0, beta = 0, gamma = 0, strip = 0;
};

// Set intersecting every important cluster separator of size <= k: fixed
// inter-cluster paths, their first gamma outlets (guess sets + landing
// strips), then every important X -> V_out u V_Omega separator over all
// choices of at most one landing strip per path.
inline VertexSet solve_cluster_separator(const ClusterSeparatorProblem& prob) {
    const Digraph& g = prob.graph;
    if (prob.parts.size() < 2) throw std::invalid_argument("cluster separator: need p >= 2");
    for (const auto& x : prob.parts)
        if (x.empty()) throw std::invalid_argument("cluster separator: empty part");
    if (prob.v_out.empty()) throw std::invalid_argument("cluster separator: empty V_out");
    if (!is_strong(g)) throw std::invalid_argument("cluster separator: host must be strong");
    if (circumference(g) > prob.ell)
        throw std::invalid_argument("cluster separator: circumference exceeds ell");

    // formula constants saturate at graph size: distances, outlet counts and
    // strip lengths never exceed it, so larger values act identically
    long long cap = static_cast<long long>(g.vertex_count()) + 2;
    long long ell = std::min<long long>(prob.ell, cap);
    long long beta = prob.beta > 0 ? prob.beta : capped_power(3, ell, 3, cap);
    long long alpha = prob.alpha > 0 ? prob.alpha : capped_power(beta, ell, 3, cap);
    long long gamma =
        prob.gamma > 0 ? prob.gamma : std::min<long long>(prob.k * (2 * alpha + 2) + 1, cap);
    long long strip_len =
        prob.strip > 0 ? prob.strip : capped_power(3LL * std::max(prob.k, 1), ell, 7, cap);

    VertexSet all_x;
    for (const auto& x : prob.parts) all_x = set_union(all_x, x);

    VertexSet result;
    std::vector<Path> fixed_paths;
    for (size_t i = 0; i < prob.parts.size(); ++i)
        for (size_t j = 0; j < prob.parts.size(); ++j) {
            if (i == j) continue;
            auto p = lex_shortest_path_sets(g, prob.parts[i], prob.parts[j]);
            if (p) fixed_paths.push_back(*p);
        }

    std::vector<std::vector<Path>> strips_per_path;
    for (const Path& p : fixed_paths) {
        auto outlets = compute_outlets(g, p, prob.v_out, alpha, beta);
        if (static_cast<long long>(outlets.size()) > gamma)
            outlets.resize(static_cast<size_t>(gamma));
        std::vector<Path> strips;
        for (const Outlet& omega : outlets) {
            result = set_union(result, outlet_guess_set(g, omega.vertex, prob.v_out, prob.k, beta));
            Path strip = landing_strip(p, omega.vertex, strip_len);
            result = set_union(result, make_set(strip));
            strips.push_back(strip);
        }
        strips_per_path.push_back(std::move(strips));
    }

    // every choice of at most one landing strip per path
    std::vector<int> choice(strips_per_path.size(), -1);
    while (true) {
        VertexSet v_omega;
        for (size_t i = 0; i < choice.size(); ++i)
            if (choice[i] >= 0) v_omega = set_union(v_omega, make_set(strips_per_path[i][choice[i]]));
        VertexSet target = set_union(prob.v_out, v_omega);
        if (sets_disjoint(all_x, target)) {
            for (const Separator& f : enumerate_important_separators(g, all_x, target, prob.k))
                result = set_union(result, f.vertices);
        }
        // odometer over (-1 .. |strips_i|-1) per path
        size_t pos = 0;
        while (pos < choice.size() &&
               choice[pos] + 1 >= static_cast<int>(strips_per_path[pos].size()))
            choice[pos++] = -1;
        if (pos == choice.size()) break;
        ++choice[pos];
    }
    return result;
}

}  // namespace dlchs
