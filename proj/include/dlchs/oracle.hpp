#pragma once

#include <chrono>
#include <functional>
#include <optional>

#include "dlchs/digraph.hpp"
#include "dlchs/transform.hpp"

namespace dlchs {
namespace oracle {

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kDefaultCap = 12;

inline void check_cap(const Digraph& g, int cap) {
    if (g.alive_count() > cap)
        throw cap_exceeded("oracle: instance has " + std::to_string(g.alive_count()) +
                           " vertices, cap is " + std::to_string(cap));
}

// Enumerate every simple cycle (as the open vertex sequence starting at its
// minimum vertex) by plain DFS. Intentionally naive: this is the audit
// baseline for the solver-side cycle search.
inline void for_each_simple_cycle(const Digraph& g,
                                  const std::function<void(const std::vector<VertexId>&)>& emit) {
    auto adj = g.out_adj();
    int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<VertexId> path;
    std::function<void(VertexId, VertexId)> go = [&](VertexId start, VertexId u) {
        on_path[u] = 1;
        path.push_back(u);
        for (VertexId w : adj[u]) {
            if (w == start && path.size() >= 2)
                emit(path);
            else if (w > start && !on_path[w])
                go(start, w);
        }
        on_path[u] = 0;
        path.pop_back();
    };
    for (VertexId s = 0; s < n; ++s)
        if (g.alive(s)) go(s, s);
}

inline int brute_circumference(const Digraph& g, int cap = kDefaultCap) {
    check_cap(g, cap);
    int best = 0;
    for_each_simple_cycle(g, [&](const std::vector<VertexId>& cyc) {
        best = std::max(best, static_cast<int>(cyc.size()));
    });
    return best;
}

inline bool brute_cf_at_most(const Digraph& g, int ell, int cap = kDefaultCap) {
    return brute_circumference(g, cap) <= ell;
}

enum class DeletionMode { vertex, arc };

struct OracleReport {
    bool feasible = false;
    int optimum = -1;                       // -1 when infeasible
    std::vector<std::vector<int>> optima;   // all minimum solutions (vertex or arc ids)
    long long subsets_checked = 0;
    double wall_seconds = 0.0;
};

namespace detail {

template <typename Check>
void for_each_subset_of_size(const std::vector<int>& pool, int size,
                             const Check& check) {
    std::vector<int> cur;
    std::function<void(size_t)> go = [&](size_t from) {
        if (static_cast<int>(cur.size()) == size) {
            check(cur);
            return;
        }
        for (size_t i = from; i < pool.size(); ++i) {
            if (pool.size() - i < size - cur.size()) break;
            cur.push_back(pool[i]);
            go(i + 1);
            cur.pop_back();
        }
    };
    go(0);
}

}  // namespace detail

// Exact optimum by subset enumeration in increasing size. All minimum
// solutions are collected. Refuses (never approximates) above the cap.
inline OracleReport brute_dlchs(const Digraph& g, int k, int ell,
                                DeletionMode mode = DeletionMode::vertex,
                                int cap = kDefaultCap) {
    check_cap(g, cap);
    auto t0 = std::chrono::steady_clock::now();
    OracleReport rep;
    std::vector<int> pool;
    if (mode == DeletionMode::vertex) {
        for (VertexId v : g.vertices()) pool.push_back(v);
    } else {
        for (const Arc& a : g.arcs()) pool.push_back(a.id);
    }
    for (int size = 0; size <= k && !rep.feasible; ++size) {
        detail::for_each_subset_of_size(pool, size, [&](const std::vector<int>& s) {
            ++rep.subsets_checked;
            Digraph h = (mode == DeletionMode::vertex)
                            ? g.minus(VertexSet(s.begin(), s.end()))
                            : g.minus_arcs(std::vector<ArcId>(s.begin(), s.end()));
            if (brute_circumference(h, cap) <= ell) {
                rep.feasible = true;
                rep.optimum = size;
                rep.optima.push_back(s);
            }
        });
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---- Definition-literal enumerations used as audit baselines -------------

// Forward shadow: vertices v outside S and T with no T -> v path in G - S.
inline VertexSet shadow_forward(const Digraph& g, const VertexSet& t_set, const VertexSet& s) {
    Digraph h = g.minus(s);
    VertexSet reached = reach_forward(h, t_set);
    VertexSet out;
    for (VertexId v : g.vertices())
        if (!set_contains(s, v) && !set_contains(t_set, v) && !set_contains(reached, v))
            out.push_back(v);
    return out;
}

inline VertexSet shadow_reverse(const Digraph& g, const VertexSet& t_set, const VertexSet& s) {
    Digraph h = g.minus(s);
    VertexSet reaching = reach_backward(h, t_set);
    VertexSet out;
    for (VertexId v : g.vertices())
        if (!set_contains(s, v) && !set_contains(t_set, v) && !set_contains(reaching, v))
            out.push_back(v);
    return out;
}

inline VertexSet shadow(const Digraph& g, const VertexSet& t_set, const VertexSet& s) {
    return set_union(shadow_forward(g, t_set, s), shadow_reverse(g, t_set, s));
}

inline bool is_separator(const Digraph& g, const VertexSet& x, const VertexSet& y,
                         const VertexSet& s) {
    if (!sets_disjoint(s, x) || !sets_disjoint(s, y)) return false;
    return !is_reachable(g.minus(s), x, y);
}

// All subsets of `pool` of size <= k, in increasing size then lexicographic order.
inline std::vector<VertexSet> all_subsets_up_to(const VertexSet& pool, int k) {
    std::vector<VertexSet> out;
    for (int size = 0; size <= k; ++size)
        detail::for_each_subset_of_size(pool, size,
                                        [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

// Important X-Y separators by definition: inclusion-wise minimal separators of
// size <= p not dominated by any separator of <= their size with a strictly
// larger forward range. (Minimality keeps padded separators with identical
// range out, which is what the 4^p bound of the literature counts.)
inline std::vector<VertexSet> enumerate_important_separators_by_definition(
    const Digraph& g, const VertexSet& x, const VertexSet& y, int p, int cap = kDefaultCap) {
    check_cap(g, cap);
    if (x.empty() || y.empty() || !sets_disjoint(x, y))
        throw std::invalid_argument("important separators: X, Y must be nonempty and disjoint");
    VertexSet pool = set_minus(set_minus(g.vertices(), x), y);
    struct Sep {
        VertexSet s;
        VertexSet range;
    };
    std::vector<Sep> seps;
    for (const VertexSet& s : all_subsets_up_to(pool, p))
        if (is_separator(g, x, y, s)) seps.push_back({s, reach_forward(g.minus(s), x)});

    std::vector<VertexSet> out;
    for (const Sep& cand : seps) {
        bool minimal = true;
        for (VertexId v : cand.s) {
            if (is_separator(g, x, y, set_minus(cand.s, {v}))) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        bool dominated = false;
        for (const Sep& other : seps) {
            if (other.s.size() > cand.s.size()) continue;
            if (other.range.size() <= cand.range.size()) continue;
            if (std::includes(other.range.begin(), other.range.end(), cand.range.begin(),
                              cand.range.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(cand.s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_multiway_cut(const Digraph& g, const std::vector<VertexSet>& terminals,
                            const VertexSet& s) {
    for (const VertexSet& t : terminals)
        if (!sets_disjoint(s, t)) return false;
    Digraph h = g.minus(s);
    for (size_t i = 0; i < terminals.size(); ++i)
        for (size_t j = 0; j < terminals.size(); ++j)
            if (i != j && is_reachable(h, terminals[i], terminals[j])) return false;
    return true;
}

inline std::optional<VertexSet> brute_multiway_cut(const Digraph& g,
                                                   const std::vector<VertexSet>& terminals, int p,
                                                   int cap = kDefaultCap) {
    check_cap(g, cap);
    VertexSet pool = g.vertices();
    for (const VertexSet& t : terminals) pool = set_minus(pool, t);
    for (int size = 0; size <= p; ++size) {
        std::optional<VertexSet> found;
        detail::for_each_subset_of_size(pool, size, [&](const std::vector<int>& s) {
            if (!found && is_multiway_cut(g, terminals, s)) found = s;
        });
        if (found) return found;
    }
    return std::nullopt;
}

// Hitting X->Y separator: separator whose removal also brings cf below ell.
inline bool is_hitting_separator(const Digraph& g, const VertexSet& x, const VertexSet& y, int ell,
                                 const VertexSet& s, int cap = kDefaultCap) {
    return is_separator(g, x, y, s) && brute_cf_at_most(g.minus(s), ell, cap);
}

inline bool is_shadowless(const Digraph& g, const VertexSet& x, const VertexSet& y,
                          const VertexSet& z, const VertexSet& s) {
    if (!sets_disjoint(s, z)) return false;
    Digraph h = g.minus(s);
    VertexSet xy = set_union(x, y);
    VertexSet fwd = reach_forward(h, xy);
    VertexSet bwd = reach_backward(h, xy);
    for (VertexId v : g.vertices()) {
        if (set_contains(s, v) || set_contains(z, v)) continue;
        if (!set_contains(fwd, v) || !set_contains(bwd, v)) return false;
    }
    return true;
}

struct HittingSeparator {
    VertexSet s;
    VertexSet back_range;  // R^-_{G-S}(Y)
};

// All hitting X->Y separators of size <= k that are important (no hitting
// separator of <= size with strictly smaller backward range). shadowless_z,
// when set, restricts both candidates and competitors to shadowless ones.
inline std::vector<HittingSeparator> enumerate_important_hitting_separators(
    const Digraph& g, const VertexSet& x, const VertexSet& y, int k, int ell,
    std::optional<VertexSet> shadowless_z = std::nullopt, int cap = kDefaultCap) {
    check_cap(g, cap);
    VertexSet pool = set_minus(set_minus(g.vertices(), x), y);
    std::vector<HittingSeparator> all;
    for (const VertexSet& s : all_subsets_up_to(pool, k)) {
        if (!is_hitting_separator(g, x, y, ell, s, cap)) continue;
        if (shadowless_z && !is_shadowless(g, x, y, *shadowless_z, s)) continue;
        all.push_back({s, reach_backward(g.minus(s), y)});
    }
    std::vector<HittingSeparator> out;
    for (const HittingSeparator& cand : all) {
        bool dominated = false;
        for (const HittingSeparator& other : all) {
            if (other.s.size() > cand.s.size()) continue;
            if (other.back_range.size() >= cand.back_range.size()) continue;
            if (std::includes(cand.back_range.begin(), cand.back_range.end(),
                              other.back_range.begin(), other.back_range.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(cand);
    }
    return out;
}

inline bool is_cluster_separator(const Digraph& g, const std::vector<VertexSet>& xs,
                                 const VertexSet& y, const VertexSet& s) {
    for (const VertexSet& x : xs)
        if (!sets_disjoint(s, x)) return false;
    if (!sets_disjoint(s, y)) return false;
    Digraph h = g.minus(s);
    for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t j = 0; j < xs.size(); ++j)
            if (i != j && is_reachable(h, xs[i], xs[j])) return false;
        if (!y.empty() && is_reachable(h, xs[i], y)) return false;
    }
    return true;
}

// Important cluster separators by definition. No minimality filter here: the
// backward-range domination is literal, and non-minimal important cluster
// separators genuinely exist.
inline std::vector<VertexSet> enumerate_important_cluster_separators(
    const Digraph& g, const std::vector<VertexSet>& xs, const VertexSet& y, int k,
    int cap = kDefaultCap) {
    check_cap(g, cap);
    VertexSet pool = g.vertices();
    for (const VertexSet& x : xs) pool = set_minus(pool, x);
    pool = set_minus(pool, y);
    struct Sep {
        VertexSet s;
        VertexSet back_range;
    };
    std::vector<Sep> all;
    for (const VertexSet& s : all_subsets_up_to(pool, k))
        if (is_cluster_separator(g, xs, y, s)) all.push_back({s, reach_backward(g.minus(s), y)});
    std::vector<VertexSet> out;
    for (const Sep& cand : all) {
        bool dominated = false;
        for (const Sep& other : all) {
            if (other.s.size() > cand.s.size()) continue;
            if (other.back_range.size() >= cand.back_range.size()) continue;
            if (std::includes(cand.back_range.begin(), cand.back_range.end(),
                              other.back_range.begin(), other.back_range.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(cand.s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- Mixed-graph feedback vertex set ground truth ------------------------

// A mixed cycle is a closed walk with distinct vertices, length >= 2, using
// arcs forward and edges in either direction, where no single edge is used
// twice (the back-and-forth walk over one edge is not a cycle).
inline bool mixed_has_cycle(const MixedGraph& m, const VertexSet& deleted) {
    struct Half {
        VertexId to;
        int edge_id;  // -1 for arcs
    };
    std::vector<std::vector<Half>> adj(m.n);
    for (auto& [u, v] : m.arcs) adj[u].push_back({v, -1});
    for (size_t e = 0; e < m.edges.size(); ++e) {
        auto [u, v] = m.edges[e];
        adj[u].push_back({v, static_cast<int>(e)});
        adj[v].push_back({u, static_cast<int>(e)});
    }
    std::vector<char> dead(m.n, 0);
    for (VertexId v : deleted) dead[v] = 1;
    std::vector<char> on_path(m.n, 0);
    bool found = false;
    std::function<void(VertexId, VertexId, int, int)> go = [&](VertexId start, VertexId u,
                                                               int last_edge, int len) {
        if (found) return;
        on_path[u] = 1;
        for (const Half& h : adj[u]) {
            if (found) break;
            if (dead[h.to]) continue;
            if (h.edge_id != -1 && h.edge_id == last_edge) continue;  // no immediate edge reuse
            if (h.to == start && len >= 1) {
                found = true;
                break;
            }
            if (h.to > start && !on_path[h.to]) go(start, h.to, h.edge_id, len + 1);
        }
        on_path[u] = 0;
    };
    for (VertexId s = 0; s < m.n && !found; ++s)
        if (!dead[s]) go(s, s, -1, 0);
    return found;
}

inline std::optional<int> brute_mixed_fvs_optimum(const MixedGraph& m, int k,
                                                  int cap = kDefaultCap) {
    if (m.n > cap) throw cap_exceeded("oracle: mixed graph above cap");
    std::vector<int> pool(m.n);
    for (int i = 0; i < m.n; ++i) pool[i] = i;
    for (int size = 0; size <= k; ++size) {
        bool ok = false;
        detail::for_each_subset_of_size(pool, size, [&](const std::vector<int>& s) {
            if (!ok && !mixed_has_cycle(m, VertexSet(s.begin(), s.end()))) ok = true;
        });
        if (ok) return size;
    }
    return std::nullopt;
}

}  // namespace oracle
}  // namespace dlchs
