#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include "dlchs/digraph.hpp"
#include "dlchs/oracle.hpp"

namespace dlchs {

struct Separator {
    VertexSet vertices;
    VertexSet source_side;  // X
    VertexSet target_side;  // Y
};

namespace flowdetail {

// Unit-capacity vertex flow between X and Y (vertices of X and Y themselves
// are uncuttable). Returns the flow value, capped as soon as it exceeds
// `limit`, plus enough residual structure to extract nearest/farthest min cuts.
//
// Node encoding: vertex v -> v_in = 2v, v_out = 2v+1; arc (u,v) of G becomes
// u_out -> v_in with infinite capacity; v_in -> v_out has capacity 1 for
// cuttable v, infinite for X/Y vertices.
struct VertexFlow {
    int value = 0;               // min(limit+1, true max flow)
    std::vector<char> res_to_y;  // nodes residual-reaching Y supers
    std::vector<char> cuttable;
    int n = 0;

    // Minimum cut closest to Y, i.e. the one maximizing forward reachability.
    VertexSet farthest_cut() const {
        VertexSet out;
        for (VertexId v = 0; v < n; ++v)
            if (cuttable[v] && !res_to_y[2 * v] && res_to_y[2 * v + 1]) out.push_back(v);
        return out;
    }
};

inline VertexFlow vertex_max_flow(const Digraph& g, const VertexSet& x, const VertexSet& y,
                                  int limit) {
    int n = g.vertex_count();
    int nodes = 2 * n + 2;
    int src = 2 * n, dst = 2 * n + 1;
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

    VertexFlow result;
    result.n = n;
    result.cuttable.assign(n, 0);
    std::vector<char> in_x(n, 0), in_y(n, 0);
    for (VertexId v : x) in_x[v] = 1;
    for (VertexId v : y) in_y[v] = 1;
    for (VertexId v = 0; v < n; ++v) {
        if (!g.alive(v)) continue;
        bool cut = !in_x[v] && !in_y[v];
        result.cuttable[v] = cut;
        add_edge(2 * v, 2 * v + 1, cut ? 1 : INF);
        if (in_x[v]) add_edge(src, 2 * v, INF);
        if (in_y[v]) add_edge(2 * v + 1, dst, INF);
    }
    for (const Arc& a : g.arcs()) add_edge(2 * a.tail + 1, 2 * a.head, INF);

    // BFS augmenting paths (Edmonds-Karp); unit cut capacities keep this tiny.
    auto augment = [&]() -> bool {
        std::vector<int> prev_edge(nodes, -1);
        std::vector<char> seen(nodes, 0);
        std::vector<int> queue{src};
        seen[src] = 1;
        for (size_t qi = 0; qi < queue.size() && !seen[dst]; ++qi) {
            int u = queue[qi];
            for (int ei : adj[u]) {
                const Edge& e = edges[ei];
                if (seen[e.to] || e.cap - e.flow <= 0) continue;
                seen[e.to] = 1;
                prev_edge[e.to] = ei;
                queue.push_back(e.to);
            }
        }
        if (!seen[dst]) return false;
        for (int u = dst; u != src;) {
            int ei = prev_edge[u];
            edges[ei].flow += 1;
            edges[ei ^ 1].flow -= 1;
            u = edges[ei ^ 1].to;
        }
        return true;
    };
    while (result.value <= limit && augment()) ++result.value;
    if (result.value > limit) return result;  // caller only needs "too big"

    // Nodes that can residual-reach Y side.
    result.res_to_y.assign(nodes, 0);
    {
        std::vector<int> queue{dst};
        result.res_to_y[dst] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (int ei : adj[queue[qi]]) {
                // reverse residual: edge e' = (to -> from of partner); partner ei^1
                const Edge& back = edges[ei];      // queue-node -> back.to
                const Edge& fwd = edges[ei ^ 1];   // back.to -> queue-node
                if (!result.res_to_y[back.to] && fwd.cap - fwd.flow > 0) {
                    result.res_to_y[back.to] = 1;
                    queue.push_back(back.to);
                }
            }
    }
    return result;
}

}  // namespace flowdetail

// Size of a minimum X->Y vertex separator, or nullopt if none exists with
// size <= limit (in particular when X touches Y directly).
inline std::optional<int> min_separator_size(const Digraph& g, const VertexSet& x,
                                             const VertexSet& y, int limit) {
    if (!sets_disjoint(x, y)) return std::nullopt;
    auto flow = flowdetail::vertex_max_flow(g, x, y, limit);
    if (flow.value > limit) return std::nullopt;
    return flow.value;
}

// The unique minimum X->Y separator maximizing forward reachability of X
// (the min cut closest to Y). nullopt when no separator of size <= limit exists.
inline std::optional<VertexSet> farthest_min_cut(const Digraph& g, const VertexSet& x,
                                                 const VertexSet& y, int limit) {
    if (!sets_disjoint(x, y)) return std::nullopt;
    auto flow = flowdetail::vertex_max_flow(g, x, y, limit);
    if (flow.value > limit) return std::nullopt;
    return flow.farthest_cut();
}

namespace sepdetail {

// Boundary of range R: out-neighbors of R outside R. A minimal separator with
// forward range exactly R equals this set.
inline VertexSet range_boundary(const Digraph& g, const VertexSet& range) {
    VertexSet out;
    for (const Arc& a : g.arcs())
        if (set_contains(range, a.tail) && !set_contains(range, a.head)) out.push_back(a.head);
    return make_set(out);
}

}  // namespace sepdetail

// Polynomial importance test: S must be a minimal separator whose range's
// boundary it equals, the min cut between X u R and Y must have size |S|, and
// S must be that flow's farthest min cut.
inline bool is_important_separator(const Digraph& g, const VertexSet& x, const VertexSet& y,
                                   const VertexSet& s) {
    if (!oracle::is_separator(g, x, y, s)) return false;
    VertexSet range = reach_forward(g.minus(s), x);
    if (sepdetail::range_boundary(g, range) != s) return false;  // not minimal w.r.t. its range
    VertexSet sources = set_union(x, range);
    auto lambda = min_separator_size(g, sources, y, static_cast<int>(s.size()));
    if (!lambda || *lambda != static_cast<int>(s.size())) return false;
    auto far = farthest_min_cut(g, sources, y, static_cast<int>(s.size()));
    return far && *far == s;
}

// All important X->Y separators of size <= p via the branch-on-farthest-min-cut
// recursion, then a definitional filter. Deduplicated, sorted by vertex list.
inline std::vector<Separator> enumerate_important_separators(const Digraph& g, const VertexSet& x,
                                                             const VertexSet& y, int p) {
    if (x.empty() || y.empty()) throw std::invalid_argument("important separators: empty side");
    if (!sets_disjoint(x, y))
        throw std::invalid_argument("important separators: X and Y intersect");

    std::set<VertexSet> candidates;
    // Branch: v in farthest min cut either joins the separator or moves to X's side.
    std::function<void(const Digraph&, VertexSet, VertexSet, int)> go =
        [&](const Digraph& h, VertexSet xs, VertexSet fixed, int budget) {
            if (budget < static_cast<int>(0)) return;
            auto cut = farthest_min_cut(h, xs, y, budget);
            if (!cut) return;
            candidates.insert(set_union(fixed, *cut));
            if (cut->empty()) return;
            VertexId v = (*cut)[0];
            // v in the separator:
            if (budget >= 1) {
                Digraph h2 = h;
                h2.delete_vertex(v);
                VertexSet fixed2 = set_union(fixed, {v});
                if (is_reachable(h2, xs, y))
                    go(h2, xs, fixed2, budget - 1);
                else
                    candidates.insert(fixed2);
            }
            // v on the source side:
            go(h, set_union(xs, {v}), fixed, budget);
        };
    go(g, x, {}, p);

    std::vector<Separator> out;
    for (const VertexSet& s : candidates)
        if (static_cast<int>(s.size()) <= p && is_important_separator(g, x, y, s))
            out.push_back({s, x, y});
    return out;
}

// ---- Witness sets (small path witnesses) -----------------------------------

inline size_t witness_size_bound(int k) {
    return static_cast<size_t>(k + 1) * (static_cast<size_t>(1) << (2 * (k + 1)));  // (k+1)4^{k+1}
}

namespace sepdetail {

// Does some set S, |S| <= k, keep v reachable from x while cutting x off from
// all of rest? Probed over important x->y* separators of the auxiliary graph;
// pushing a violating S toward importance keeps v reachable.
inline bool exclusively_separable(const Digraph& g, VertexId x, VertexId v, const VertexSet& rest,
                                  int k) {
    if (rest.empty()) return is_reachable(g, {x}, {v});  // S = empty set works
    Digraph aug = g;
    VertexId ystar = aug.add_vertex();
    for (VertexId u : rest) aug.add_arc(u, ystar);
    if (!is_reachable(aug, {x}, {ystar})) return is_reachable(aug, {x}, {v});
    for (const Separator& s : enumerate_important_separators(aug, {x}, {ystar}, k))
        if (is_reachable(aug.minus(s.vertices), {x}, {v})) return true;
    return false;
}

}  // namespace sepdetail

// Shrink Y to a witness Y' of size <= (k+1)4^{k+1} with the survival property:
// any deletion of <= k vertices that leaves an x->Y path also leaves an x->Y'
// path. Removal candidates are probed in ascending vertex id order.
inline VertexSet path_witness_single(const Digraph& g, VertexId x, const VertexSet& y, int k) {
    VertexSet witness = y;
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v : witness) {
            VertexSet rest = set_minus(witness, {v});
            if (!sepdetail::exclusively_separable(g, x, v, rest, k)) {
                witness = rest;
                changed = true;
                break;
            }
        }
    }
    if (witness.size() > witness_size_bound(k))
        throw std::logic_error("path_witness_single: size bound violated");
    return witness;
}

namespace sepdetail {

inline Digraph reversed(const Digraph& g) {
    Digraph out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!g.alive(v)) out.delete_vertex(v);
    for (const Arc& a : g.arcs()) out.add_arc(a.head, a.tail);
    return out;
}

}  // namespace sepdetail

// Witness pair (X', Y') for X->Y survival under <= k deletions.
inline std::pair<VertexSet, VertexSet> path_witness_pair(const Digraph& g, const VertexSet& x,
                                                         const VertexSet& y, int k) {
    if (!sets_disjoint(x, y)) throw std::invalid_argument("path_witness_pair: X and Y intersect");
    if (x.empty() || y.empty()) return {x, y};

    Digraph fwd = g;
    VertexId super_x = fwd.add_vertex();
    for (VertexId v : x) fwd.add_arc(super_x, v);
    VertexSet y_w = path_witness_single(fwd, super_x, y, k);

    Digraph bwd = sepdetail::reversed(g);
    VertexId super_y = bwd.add_vertex();
    for (VertexId v : y_w) bwd.add_arc(super_y, v);
    VertexSet x_w = path_witness_single(bwd, super_y, x, k);

    if (x_w.size() > witness_size_bound(k) || y_w.size() > witness_size_bound(k))
        throw std::logic_error("path_witness_pair: size bound violated");
    return {x_w, y_w};
}

// Witness sets X'_i for multi-set survival: built from ordered pairwise calls.
inline std::vector<VertexSet> path_witness_multi(const Digraph& g,
                                                 const std::vector<VertexSet>& xs, int k) {
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            if (!sets_disjoint(xs[i], xs[j]))
                throw std::invalid_argument("path_witness_multi: sets overlap");
    std::vector<VertexSet> out(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            auto [xi, xj] = path_witness_pair(g, xs[i], xs[j], k);
            out[i] = set_union(out[i], xi);
            out[j] = set_union(out[j], xj);
        }
    }
    size_t bound = 2 * (xs.size() > 0 ? xs.size() - 1 : 0) * witness_size_bound(k);
    for (const VertexSet& s : out)
        if (xs.size() >= 2 && s.size() > bound)
            throw std::logic_error("path_witness_multi: size bound violated");
    return out;
}

// ---- Directed multiway cut -------------------------------------------------

namespace sepdetail {

// Important-separator branching (upper-bound search) for instances above the
// brute-force cap. Sound but only the brute path certifies minimality.
inline std::optional<VertexSet> multiway_branching(const Digraph& g,
                                                   const std::vector<VertexSet>& terminals, int p) {
    // Find a violated ordered pair.
    for (size_t i = 0; i < terminals.size(); ++i) {
        VertexSet others;
        for (size_t j = 0; j < terminals.size(); ++j)
            if (i != j) others = set_union(others, terminals[j]);
        if (others.empty() || !is_reachable(g, terminals[i], others)) continue;
        if (!sets_disjoint(terminals[i], others)) return std::nullopt;
        std::optional<VertexSet> best;
        for (const Separator& s : enumerate_important_separators(g, terminals[i], others, p)) {
            Digraph h = g.minus(s.vertices);
            auto rest = multiway_branching(h, terminals, p - static_cast<int>(s.vertices.size()));
            if (rest) {
                VertexSet whole = set_union(s.vertices, *rest);
                if (!best || whole.size() < best->size()) best = whole;
            }
        }
        return best;
    }
    return VertexSet{};
}

}  // namespace sepdetail

// Minimum multiway cut of size <= p (exact below the brute cap, where all
// callers that assert minimality live; branching search above it).
inline std::optional<VertexSet> multiway_cut(const Digraph& g,
                                             const std::vector<VertexSet>& terminals, int p,
                                             int exact_cap = 12) {
    for (size_t i = 0; i < terminals.size(); ++i)
        for (size_t j = i + 1; j < terminals.size(); ++j)
            if (!sets_disjoint(terminals[i], terminals[j]))
                throw std::invalid_argument("multiway_cut: terminal sets overlap");
    if (g.alive_count() <= exact_cap)
        return oracle::brute_multiway_cut(g, terminals, p, std::max(exact_cap, g.alive_count()));
    return sepdetail::multiway_branching(g, terminals, p);
}

// ---- Shadow covering (randomized substitute) -------------------------------

struct ShadowCover {
    std::vector<VertexSet> candidates;  // each disjoint from T
    uint64_t seed = 0;
    int trials_requested = 0;
    int trials_used = 0;
    bool exhaustive = false;
};

inline int default_shadow_trials(int k, int n) {
    double lg = n >= 2 ? std::log2(static_cast<double>(n)) : 1.0;
    long long t = (1LL << std::min(k * k, 12)) *
                  static_cast<long long>(std::ceil(lg * lg));
    return static_cast<int>(std::min<long long>(t, 4096));
}

// Candidate shadow covers: fences of reachability around sampled candidate
// deletion sets W (Z(W) = shadow of W w.r.t. T). When the whole <=k subset
// space fits in the trial budget it is swept outright, which dominates any
// sampling plan; otherwise seeded random draws are used.
inline ShadowCover cover_shadow(const Digraph& g, const VertexSet& t_set, int k, int trials,
                                uint64_t seed = 1) {
    if (t_set.empty()) throw std::invalid_argument("cover_shadow: T must be nonempty");
    ShadowCover out;
    out.seed = seed;
    out.trials_requested = trials;

    VertexSet pool = set_minus(g.vertices(), t_set);
    std::set<VertexSet> zs;
    auto add_for = [&](const VertexSet& w) {
        VertexSet z = oracle::shadow(g, t_set, w);
        zs.insert(set_minus(z, t_set));
    };
    add_for({});

    long long subset_count = 1;
    for (int size = 1; size <= k && subset_count <= trials; ++size) {
        long long c = 1;
        for (int i = 0; i < size; ++i) c = c * (static_cast<long long>(pool.size()) - i) / (i + 1);
        subset_count += c;
    }
    if (subset_count <= trials) {
        out.exhaustive = true;
        for (const VertexSet& w : oracle::all_subsets_up_to(pool, k)) add_for(w);
        out.trials_used = static_cast<int>(subset_count);
    } else {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < trials; ++t) {
            int size = k == 0 ? 0 : static_cast<int>(rng() % static_cast<unsigned>(k + 1));
            VertexSet w;
            while (static_cast<int>(w.size()) < size && w.size() < pool.size()) {
                VertexId v = pool[rng() % pool.size()];
                if (!set_contains(w, v)) w = set_union(w, {v});
            }
            add_for(w);
        }
        out.trials_used = trials;
    }
    out.candidates.assign(zs.begin(), zs.end());
    return out;
}

// ---- Critical vertices -----------------------------------------------------

namespace sepdetail {

// Definition check: S witnesses w being k-critical w.r.t. (U, t) if some arc
// (v,w) of U has a t->v path in G-S while no arc of U is traversable (tail
// reachable from t in G-S and head outside S). w itself may lie in S.
inline bool criticality_witnessed(const Digraph& g, const std::vector<Arc>& u_arcs, VertexId t,
                                  VertexId w, const VertexSet& s) {
    if (set_contains(s, t)) return false;
    Digraph h = g.minus(s);
    VertexSet reach = reach_forward(h, {t});
    for (const Arc& a : u_arcs)
        if (set_contains(reach, a.tail) && !set_contains(s, a.head)) return false;
    for (const Arc& a : u_arcs)
        if (a.head == w && set_contains(reach, a.tail)) return true;
    return false;
}

}  // namespace sepdetail

// Superset of all k-critical vertices w.r.t. (U, t). Below the cap this is the
// exact critical set by exhaustive S enumeration; above it we fall back to all
// U-arc heads, which is a superset by definition.
inline VertexSet critical_superset(const Digraph& g, const std::vector<ArcId>& u_ids, VertexId t,
                                   int k, int exact_cap = 12) {
    if (!g.alive(t)) throw std::invalid_argument("critical_superset: t not alive");
    std::vector<Arc> u_arcs;
    for (ArcId id : u_ids) {
        const Arc& a = g.all_arcs().at(id);
        if (g.arc_alive(a)) u_arcs.push_back(a);
    }
    if (u_arcs.empty()) return {};

    VertexSet heads;
    for (const Arc& a : u_arcs) heads.push_back(a.head);
    heads = make_set(heads);

    if (g.alive_count() > exact_cap) return heads;

    VertexSet pool = set_minus(g.vertices(), {t});
    VertexSet out;
    for (VertexId w : heads) {
        bool critical = false;
        for (const VertexSet& s : oracle::all_subsets_up_to(pool, k)) {
            if (sepdetail::criticality_witnessed(g, u_arcs, t, w, s)) {
                critical = true;
                break;
            }
        }
        if (critical) out.push_back(w);
    }
    return out;
}

}  // namespace dlchs
