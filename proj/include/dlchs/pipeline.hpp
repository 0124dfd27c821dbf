#pragma once

#include "dlchs/clusters.hpp"
#include "dlchs/transform.hpp"

namespace dlchs {

enum class Mode { vertex, arc };

struct Instance {
    Digraph graph;
    int k = 0;
    int ell = 0;
    Mode mode = Mode::vertex;
    std::optional<VertexSet> retained;  // T of the compression variants

    void validate() const {
        if (k < 0 || ell < 0) throw std::invalid_argument("instance: negative parameter");
        if (retained) {
            if (has_long_cycle(graph.minus(*retained), ell))
                throw std::invalid_argument("instance: retained set is not a solution");
        }
    }
};

struct Solution {
    std::vector<int> elements;  // original vertex ids (or arc ids in arc mode)
    bool verified = false;
};

struct SolveOptions {
    uint64_t seed = 1;
    int shadow_trials = 0;   // 0 = formula default
    int safety_net_cap = 12; // net only runs at or below this many vertices
};

struct SolveStats {
    long long compression_calls = 0;
    long long branch_nodes = 0;
    long long dispatch_calls = 0;
    long long candidate_rounds = 0;
    int safety_net_hits = 0;
};

// One node of the branching tree. `forced` is kept in original coordinates;
// `origin` maps current vertices (after contractions) back to originals.
struct BranchNode {
    Digraph graph;
    int k = 0;
    VertexSet t_set;
    VertexSet forced;
    OriginMap origin;
    int depth = 0;
    std::string provenance = "root";
    bool live = true;  // false when the branch deletes a retained vertex
};

inline BranchNode make_root(const Digraph& g, int k, const VertexSet& t) {
    BranchNode n;
    n.graph = g;
    n.k = k;
    n.t_set = t;
    return n;
}

namespace pipedetail {

inline BranchNode delete_child(const BranchNode& node, VertexId v, const char* provenance) {
    BranchNode child = node;
    child.graph.delete_vertex(v);
    child.k = node.k - 1;
    child.depth = node.depth + 1;
    child.provenance = provenance;
    if (set_contains(node.t_set, v)) {
        child.live = false;  // solutions are disjoint from T
        child.t_set = set_minus(node.t_set, {v});
    } else {
        child.forced = set_union(node.forced, node.origin.lift({v}));
    }
    return child;
}

// Is there a cycle of length <= ell through at least two vertices of T?
inline std::optional<CycleWitness> short_cycle_two_anchors(const Digraph& g, const VertexSet& t,
                                                           int ell) {
    std::optional<CycleWitness> best;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j) {
            auto w = short_cycle_through(g, CycleAnchor::at_vertex(t[i]), ell, t[j]);
            if (w && (!best || w->length() < best->length() ||
                      (w->length() == best->length() && w->vertices < best->vertices)))
                best = w;
        }
    return best;
}

// Longest-path probe: does G[X] contain an a->b path of length >= ell?
inline bool has_long_path_inside(const Digraph& g, const VertexSet& x, VertexId a, VertexId b,
                                 int ell) {
    Digraph h = g.induced(x);
    auto adj = h.out_adj();
    std::vector<char> on_path(h.vertex_count(), 0);
    std::function<bool(VertexId, int)> go = [&](VertexId u, int len) -> bool {
        if (u == b) return len >= ell;
        on_path[u] = 1;
        for (VertexId w : adj[u])
            if (!on_path[w] && go(w, len + 1)) return true;
        on_path[u] = 0;
        return false;
    };
    return go(a, 0);
}

}  // namespace pipedetail

// Branch list of the isolating step: short-T-cycle deletions, medium-range
// cycle deletions, P2-violation deletions, and walk contractions. A single
// pass-through node is returned when |T| <= 1 leaves nothing to isolate. The
// driver adds its own keep-unchanged instance per level.
inline std::vector<BranchNode> isolate_branching(const BranchNode& node, int ell) {
    const Digraph& g = node.graph;
    const VertexSet& t = node.t_set;
    std::vector<BranchNode> out;
    if (t.size() <= 1) {
        BranchNode pass = node;
        pass.depth = node.depth + 1;
        pass.provenance = "pass-through";
        out.push_back(pass);
        return out;
    }

    std::vector<std::vector<VertexId>> walks;
    auto short_cycle = pipedetail::short_cycle_two_anchors(g, t, ell);
    if (short_cycle) {
        walks.push_back(short_cycle->vertices);
        for (size_t i = 0; i + 1 < short_cycle->vertices.size(); ++i)
            out.push_back(pipedetail::delete_child(node, short_cycle->vertices[i], "short-cycle"));
    } else {
        walks = closed_walk_family_W(g, t, node.k, ell).walks;
    }

    // contraction safety needs (P1): no cycles of length in (ell, ell^2]
    long long hi = std::min<long long>(static_cast<long long>(ell) * ell,
                                       g.alive_count());
    if (hi > ell) {
        auto d = find_cycle_in_range(g, ell, static_cast<int>(hi), /*inclusive_hi=*/true);
        if (d) {
            std::set<VertexId> seen;
            for (size_t i = 0; i + 1 < d->vertices.size(); ++i)
                if (seen.insert(d->vertices[i]).second)
                    out.push_back(pipedetail::delete_child(node, d->vertices[i], "medium-range"));
            return out;
        }
    }

    std::set<VertexSet> contracted;
    std::set<VertexId> deleted;
    for (const auto& walk : walks) {
        VertexSet x = make_set(VertexSet(walk.begin(), walk.end() - 1));
        // (P2): no pair may have a long inside path and a short outside return
        std::optional<Path> violation;
        for (VertexId a : x) {
            for (VertexId b : x) {
                if (a == b) continue;
                Digraph outside = g.minus(set_minus(x, {a, b}));
                auto back = lex_shortest_path(outside, b, a);
                if (!back || static_cast<int>(back->size()) - 1 > ell) continue;
                if (pipedetail::has_long_path_inside(g, x, a, b, ell)) {
                    violation = back;
                    break;
                }
            }
            if (violation) break;
        }
        if (violation) {
            for (size_t i = 1; i + 1 < violation->size(); ++i) {
                VertexId v = (*violation)[i];
                if (deleted.insert(v).second)
                    out.push_back(pipedetail::delete_child(node, v, "p2-return-path"));
            }
            continue;
        }
        // wrong-guess prune: in the guessed world the walk avoids S, so its
        // induced circumference cannot exceed ell
        if (circumference(g.induced(x)) > ell) continue;
        if (!contracted.insert(x).second) continue;
        auto [h, om] = contract(g, x);
        BranchNode child;
        child.graph = h;
        child.k = node.k;
        child.t_set = set_union(set_minus(t, x), {h.vertex_count() - 1});
        child.forced = node.forced;
        child.origin = node.origin.composed_with(om);
        child.depth = node.depth + 1;
        child.provenance = "contract";
        child.live = node.live;
        out.push_back(child);
    }
    return out;
}

inline std::vector<BranchNode> isolate_branching(const Digraph& g, int k, int ell,
                                                 const VertexSet& t) {
    if (has_long_cycle(g.minus(t), ell))
        throw std::invalid_argument("isolate_branching: cf(G - T) exceeds ell");
    return isolate_branching(make_root(g, k, t), ell);
}

// Medium-length cycle elimination: a cycle with ell < length < 2*ell^6 must be
// hit, so branch on deleting each of its vertices. Returns the node unchanged
// when no medium cycle exists.
inline std::vector<BranchNode> eliminate_medium_cycles(const BranchNode& node, int ell) {
    long long hi = capped_power(2, ell, 6, static_cast<long long>(node.graph.alive_count()) + 1);
    std::vector<BranchNode> out;
    if (hi > ell + 1) {
        auto d = find_cycle_in_range(node.graph, ell, static_cast<int>(hi));
        if (d) {
            for (size_t i = 0; i + 1 < d->vertices.size(); ++i)
                out.push_back(pipedetail::delete_child(node, d->vertices[i], "medium"));
            return out;
        }
    }
    out.push_back(node);
    return out;
}

struct HittingSeparatorSubproblem {
    Digraph graph;  // strong, every arc on a cycle <= ell, no medium cycles
    int k = 0;
    int ell = 0;
    VertexId t = -1;
    VertexSet z;
    VertexSet v_out;

    void validate() const {
        if (!graph.alive(t)) throw std::invalid_argument("hitting separator: t not alive");
        if (!is_strong(graph)) throw std::invalid_argument("hitting separator: graph not strong");
        Digraph h = graph;
        h.delete_vertex(t);
        if (has_long_cycle(h, ell))
            throw std::invalid_argument("hitting separator: cf(G - t) exceeds ell");
    }
};

// Per-component dispatch of the hitting-separator stage: unbalanced guard,
// then the structural guard sets, then exactly one of multiway cut /
// important-separator enumeration / cluster-separator solving.
inline VertexSet hitting_separator_dispatch(const HittingSeparatorSubproblem& sub) {
    sub.validate();
    const Digraph& g = sub.graph;
    ClusterDecomposition dec = decompose(g, sub.t, sub.ell);

    if (auto guard = unbalanced_cluster_guard(g, sub.t, dec, sub.z, sub.k)) return *guard;

    auto [s_paths, s_vout] = cluster_guard_sets(g, sub.t, dec, sub.v_out, sub.k);
    VertexSet s_sc = set_union(s_paths, s_vout);

    const ClusterDecomposition::Component* multiway = nullptr;
    const ClusterDecomposition::Component* easy = nullptr;
    const ClusterDecomposition::Component* cluster_case = nullptr;
    for (const auto& c : dec.components) {
        bool touches_out = !set_intersect(c.vertices, sub.v_out).empty();
        if (c.clusters.size() >= 2 && !touches_out && !multiway) multiway = &c;
        if (c.clusters.size() == 1 && touches_out && !easy) easy = &c;
        if (c.clusters.size() >= 2 && touches_out && !cluster_case) cluster_case = &c;
    }
    if (multiway) {
        auto cut = multiway_cut(g.induced(multiway->vertices), multiway->clusters, sub.k);
        return cut ? set_union(s_sc, *cut) : s_sc;
    }
    if (easy) {
        VertexSet acc = s_sc;
        VertexSet y = set_intersect(easy->vertices, sub.v_out);
        if (sets_disjoint(easy->clusters[0], y)) {
            Digraph induced = g.induced(easy->vertices);
            for (const Separator& s :
                 enumerate_important_separators(induced, easy->clusters[0], y, sub.k))
                acc = set_union(acc, s.vertices);
        }
        return acc;
    }
    if (cluster_case) {
        ClusterSeparatorProblem prob;
        prob.graph = g.induced(cluster_case->vertices);
        prob.parts = cluster_case->clusters;
        prob.v_out = set_intersect(cluster_case->vertices, sub.v_out);
        prob.k = sub.k;
        prob.ell = sub.ell;
        return set_union(s_sc, solve_cluster_separator(prob));
    }
    return s_sc;  // every component trivial
}

// Candidate set intersecting some isolating hitting set of size <= k (when
// one exists): shadow-cover candidates crossed with the choice of the last
// retained vertex, each contributing critical/witness sets plus the full
// hitting-separator machinery on the short-cycle core around t.
inline VertexSet isolating_intersection_candidates(const Digraph& g, int k, int ell,
                                                   const VertexSet& t_set,
                                                   const SolveOptions& opts = {},
                                                   SolveStats* stats = nullptr) {
    if (t_set.empty()) return {};
    int trials = opts.shadow_trials > 0 ? opts.shadow_trials
                                        : default_shadow_trials(k, g.alive_count());
    ShadowCover cover = cover_shadow(g, t_set, k, trials, opts.seed);

    VertexSet out;
    for (const VertexSet& z : cover.candidates) {
        for (VertexId t : t_set) {
            Digraph g_t = g.minus(set_minus(t_set, {t}));
            std::vector<ArcId> a_long = long_arcs(g_t, ell);
            Digraph g_short = g_t.minus_arcs(a_long);
            VertexSet core = strong_component_of(g_short, t);
            Digraph g_star = g_short.induced(core);

            TorsoResult torso_t = torso(g, z, a_long);
            VertexSet d_set = set_minus(core, z);
            std::vector<ArcId> u_ids = torso_t.u_long;
            for (const Arc& a : torso_t.graph.arcs())
                if (set_contains(d_set, a.tail) && !set_contains(d_set, a.head))
                    u_ids.push_back(a.id);
            u_ids = [&] {
                std::sort(u_ids.begin(), u_ids.end());
                u_ids.erase(std::unique(u_ids.begin(), u_ids.end()), u_ids.end());
                return u_ids;
            }();

            VertexSet v_out;
            for (ArcId id : u_ids) {
                const Arc& a = torso_t.graph.all_arcs().at(id);
                if (torso_t.graph.arc_alive(a) && set_contains(core, a.tail))
                    v_out.push_back(a.tail);
            }
            v_out = make_set(v_out);

            if (torso_t.graph.alive(t))
                out = set_union(out, critical_superset(torso_t.graph, u_ids, t, k));
            if (!v_out.empty())
                out = set_union(out, path_witness_single(g, t, v_out, k));

            HittingSeparatorSubproblem sub;
            sub.graph = g_star;
            sub.k = k;
            sub.ell = ell;
            sub.t = t;
            sub.z = set_intersect(z, core);
            sub.v_out = set_intersect(v_out, core);
            if (stats) ++stats->dispatch_calls;
            out = set_union(out, hitting_separator_dispatch(sub));
        }
    }
    return set_minus(out, t_set);
}

// Lift a solution of the current node back to original coordinates and verify
// it against the original graph.
inline Solution lift_solution(const Digraph& original, int ell, const BranchNode& node,
                              const VertexSet& local) {
    for (VertexId v : local)
        if (node.origin.is_merged(v))
            throw std::logic_error("lift_solution: local set touches a contracted vertex");
    VertexSet elems = set_union(node.forced, node.origin.lift(local));
    Solution sol;
    sol.elements.assign(elems.begin(), elems.end());
    sol.verified = !has_long_cycle(original.minus(elems), ell).has_value();
    return sol;
}

namespace pipedetail {

inline std::optional<VertexSet> explore_candidates(const BranchNode& node, int ell,
                                                   const SolveOptions& opts, SolveStats& stats);

inline std::optional<VertexSet> explore_medium(const BranchNode& node, int ell,
                                               const SolveOptions& opts, SolveStats& stats) {
    if (!node.live) return std::nullopt;
    ++stats.branch_nodes;
    if (!has_long_cycle(node.graph, ell)) return node.forced;
    if (node.k <= 0) return std::nullopt;
    auto kids = eliminate_medium_cycles(node, ell);
    bool unchanged = kids.size() == 1 && kids[0].provenance != "medium";
    if (unchanged) return explore_candidates(node, ell, opts, stats);
    for (const BranchNode& child : kids)
        if (auto r = explore_medium(child, ell, opts, stats)) return r;
    return std::nullopt;
}

inline std::optional<VertexSet> explore_candidates(const BranchNode& node, int ell,
                                                   const SolveOptions& opts, SolveStats& stats) {
    if (!node.live) return std::nullopt;
    if (!has_long_cycle(node.graph, ell)) return node.forced;
    if (node.k <= 0) return std::nullopt;
    ++stats.candidate_rounds;
    VertexSet cand =
        isolating_intersection_candidates(node.graph, node.k, ell, node.t_set, opts, &stats);
    for (VertexId v : cand) {
        BranchNode child = delete_child(node, v, "candidate");
        if (auto r = explore_candidates(child, ell, opts, stats)) return r;
    }
    return std::nullopt;
}

inline std::optional<VertexSet> explore_isolating(const BranchNode& node, int ell, int budget,
                                                  const SolveOptions& opts, SolveStats& stats) {
    if (!node.live) return std::nullopt;
    ++stats.branch_nodes;
    if (!has_long_cycle(node.graph, ell)) return node.forced;
    if (node.k < 0) return std::nullopt;
    // one instance always continues unchanged into the medium/candidate phases
    if (auto r = explore_medium(node, ell, opts, stats)) return r;
    if (budget <= 0 || node.t_set.size() <= 1 || node.k == 0) return std::nullopt;
    for (const BranchNode& child : isolate_branching(node, ell)) {
        if (child.provenance == "pass-through") continue;  // covered above
        if (auto r = explore_isolating(child, ell, budget - 1, opts, stats)) return r;
    }
    return std::nullopt;
}

inline bool has_long_cycle_through(const Digraph& g, VertexId v, int ell) {
    bool found = false;
    detail::cycles_through(g, v, g.alive_count(), [&](const std::vector<VertexId>& open_path) {
        if (static_cast<int>(open_path.size()) > ell) found = true;
    });
    return found;
}

// Bounded exhaustive fallback: when the branching tree misses, search all
// <= k deletions among vertices lying on some long cycle. A minimal solution
// is always contained in that pool, so this keeps the solver exact at desk
// scale.
inline std::optional<VertexSet> safety_net(const Digraph& g, int k, int ell, const VertexSet& t,
                                           const SolveOptions& opts, SolveStats& stats) {
    if (g.alive_count() > opts.safety_net_cap) return std::nullopt;
    VertexSet pool;
    for (VertexId v : set_minus(g.vertices(), t))
        if (has_long_cycle_through(g, v, ell)) pool.push_back(v);
    for (const VertexSet& s : oracle::all_subsets_up_to(pool, k)) {
        if (!has_long_cycle(g.minus(s), ell)) {
            if (!s.empty()) ++stats.safety_net_hits;
            return s;
        }
    }
    return std::nullopt;
}

inline std::optional<VertexSet> disjoint_compression(const Digraph& g, int k, int ell,
                                                     const VertexSet& t, const SolveOptions& opts,
                                                     SolveStats& stats) {
    BranchNode root = make_root(g, k, t);
    int budget = k + static_cast<int>(t.size());
    if (auto r = explore_isolating(root, ell, budget, opts, stats)) return r;
    return safety_net(g, k, ell, t, opts, stats);
}

// Exact arc-deletion solver by branching on witness cycles. A long cycle must
// lose every parallel copy of one of its steps, so branching over the steps
// is exhaustive. (The directed line graph does not reduce arc deletion to
// vertex deletion here: its simple cycles correspond to closed trails of G,
// which may exceed every simple cycle length.)
inline std::optional<std::vector<ArcId>> solve_arcs(const Digraph& g, int k, int ell) {
    auto w = has_long_cycle(g, ell);
    if (!w) return std::vector<ArcId>{};
    if (k <= 0) return std::nullopt;
    for (size_t i = 0; i + 1 < w->vertices.size(); ++i) {
        VertexId u = w->vertices[i], v = w->vertices[i + 1];
        std::vector<ArcId> ids;
        for (const Arc& a : g.arcs())
            if (a.tail == u && a.head == v) ids.push_back(a.id);
        if (static_cast<int>(ids.size()) > k) continue;
        auto sub = solve_arcs(g.minus_arcs(ids), k - static_cast<int>(ids.size()), ell);
        if (sub) {
            ids.insert(ids.end(), sub->begin(), sub->end());
            std::sort(ids.begin(), ids.end());
            return ids;
        }
    }
    return std::nullopt;
}

}  // namespace pipedetail

// Compression step: guess the intersection of the sought solution with the
// retained solution T, then solve the disjoint variant.
inline std::optional<VertexSet> compression_step(const Digraph& g, const VertexSet& t, int k,
                                                 int ell, const SolveOptions& opts = {},
                                                 SolveStats* stats = nullptr) {
    if (has_long_cycle(g.minus(t), ell))
        throw std::invalid_argument("compression_step: T is not a solution");
    SolveStats local;
    SolveStats& st = stats ? *stats : local;
    auto guesses = oracle::all_subsets_up_to(t, std::min<int>(k, static_cast<int>(t.size())));
    for (const VertexSet& guess : guesses) {
        Digraph h = g.minus(guess);
        VertexSet rest = set_minus(t, guess);
        int k2 = k - static_cast<int>(guess.size());
        auto sol = pipedetail::disjoint_compression(h, k2, ell, rest, opts, st);
        if (sol) return set_union(guess, *sol);
    }
    return std::nullopt;
}

// Exact solver: iterative compression over vertex prefixes; arc instances go
// through the directed line graph first.
inline std::optional<Solution> solve(const Instance& inst, const SolveOptions& opts = {},
                                     SolveStats* stats = nullptr) {
    inst.validate();
    SolveStats local;
    SolveStats& st = stats ? *stats : local;

    if (inst.mode == Mode::arc) {
        auto arcs = pipedetail::solve_arcs(inst.graph, inst.k, inst.ell);
        if (!arcs) return std::nullopt;
        Solution sol;
        sol.elements.assign(arcs->begin(), arcs->end());
        sol.verified = !has_long_cycle(inst.graph.minus_arcs(*arcs), inst.ell).has_value();
        return sol;
    }

    const Digraph& g = inst.graph;
    int k = inst.k, ell = inst.ell;

    if (inst.retained) {
        // compression entry point: caller already holds a solution T
        auto s = compression_step(g, *inst.retained, k, ell, opts, &st);
        if (!s) return std::nullopt;
        Solution sol;
        sol.elements.assign(s->begin(), s->end());
        sol.verified = !has_long_cycle(g.minus(*s), ell).has_value();
        return sol;
    }

    if (!has_long_cycle(g, ell)) return Solution{{}, true};
    if (k <= 0) return std::nullopt;

    VertexSet order = g.vertices();
    VertexSet current;  // solution of the growing prefix
    for (size_t i = 0; i < order.size(); ++i) {
        Digraph prefix = g.induced(VertexSet(order.begin(), order.begin() + i + 1));
        if (!has_long_cycle(prefix.minus(current), ell)) continue;
        if (static_cast<int>(current.size()) < k) {
            current = set_union(current, {order[i]});
            continue;
        }
        VertexSet t = set_union(current, {order[i]});
        ++st.compression_calls;
        auto compressed = compression_step(prefix, t, k, ell, opts, &st);
        if (!compressed) return std::nullopt;
        current = *compressed;
    }
    Solution sol;
    sol.elements.assign(current.begin(), current.end());
    sol.verified = !has_long_cycle(g.minus(current), ell).has_value();
    return sol;
}

}  // namespace dlchs
