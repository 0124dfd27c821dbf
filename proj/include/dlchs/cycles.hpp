#pragma once

#include <optional>

#include "dlchs/digraph.hpp"

namespace dlchs {

// Closed vertex sequence (first == last), canonicalized to start at its
// smallest vertex. length == number of arcs.
struct CycleWitness {
    std::vector<VertexId> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

inline CycleWitness canonical_cycle(std::vector<VertexId> cyc) {
    // Input: v0..v_{m-1} distinct, closing arc v_{m-1} -> v0 implied.
    size_t best = 0;
    for (size_t i = 1; i < cyc.size(); ++i)
        if (cyc[i] < cyc[best]) best = i;
    std::rotate(cyc.begin(), cyc.begin() + best, cyc.end());
    cyc.push_back(cyc.front());
    return {cyc};
}

inline bool cycle_valid(const Digraph& g, const CycleWitness& w) {
    const auto& vs = w.vertices;
    if (vs.size() < 3 || vs.front() != vs.back()) return false;
    VertexSet interior(vs.begin(), vs.end() - 1);
    if (make_set(interior).size() != interior.size()) return false;
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        if (!g.alive(vs[i])) return false;
        if (!g.has_arc(vs[i], vs[i + 1])) return false;
    }
    return true;
}

namespace detail {

// DFS over simple paths inside one strong component, starting and ending at
// `start`, visiting only vertices >= start (canonical rotation). Calls `emit`
// with the open vertex sequence whenever the closing arc exists and the
// length predicate holds; pruning via `max_extra` (vertices still allowed to
// be appended) and `stop_extend` (path length limit).
template <typename Emit>
bool dfs_cycles(const std::vector<std::vector<VertexId>>& adj, const std::vector<char>& in_comp,
                VertexId start, int avail, int max_len, int min_len, bool first_only, Emit&& emit) {
    std::vector<VertexId> path{start};
    std::vector<char> on_path(in_comp.size(), 0);
    on_path[start] = 1;

    struct Frame {
        VertexId v;
        size_t next;
    };
    std::vector<Frame> frames{{start, 0}};

    while (!frames.empty()) {
        Frame& f = frames.back();
        bool descended = false;
        while (f.next < adj[f.v].size()) {
            VertexId w = adj[f.v][f.next++];
            if (!in_comp[w] || w < start) continue;
            if (w == start) {
                int len = static_cast<int>(path.size());
                if (len >= min_len && len <= max_len) {
                    if (emit(path) && first_only) return true;
                }
                continue;
            }
            if (on_path[w]) continue;
            if (static_cast<int>(path.size()) + 1 > max_len) continue;  // closing would exceed
            if (avail < min_len) continue;  // not enough usable vertices for a long cycle
            path.push_back(w);
            on_path[w] = 1;
            frames.push_back({w, 0});
            descended = true;
            break;
        }
        if (!descended) {
            on_path[f.v] = 0;
            path.pop_back();
            frames.pop_back();
        }
    }
    return false;
}

}  // namespace detail

// Search for a simple cycle whose length L satisfies min_len <= L <= max_len.
// Returns the first hit in canonical scan order, or nullopt.
inline std::optional<CycleWitness> find_cycle_with_length(const Digraph& g, int min_len, int max_len) {
    if (min_len < 2) min_len = 2;  // loop-free digraphs have no shorter cycles
    if (max_len < min_len) return std::nullopt;
    auto adj = g.out_adj();
    for (const VertexSet& comp : strong_components(g)) {
        if (static_cast<int>(comp.size()) < min_len) continue;
        std::vector<char> in_comp(g.vertex_count(), 0);
        for (VertexId v : comp) in_comp[v] = 1;
        std::optional<CycleWitness> hit;
        for (size_t si = 0; si < comp.size(); ++si) {
            VertexId start = comp[si];
            int avail = static_cast<int>(comp.size() - si);  // vertices >= start
            if (avail < min_len) break;
            detail::dfs_cycles(adj, in_comp, start, avail, max_len, min_len, true,
                               [&](const std::vector<VertexId>& path) {
                                   hit = canonical_cycle(path);
                                   return true;
                               });
            if (hit) return hit;
        }
    }
    return std::nullopt;
}

// Witness of a cycle longer than ell, or nullopt certifying cf(G) <= ell.
inline std::optional<CycleWitness> has_long_cycle(const Digraph& g, int ell) {
    return find_cycle_with_length(g, ell + 1, g.vertex_count());
}

// Witness with lo < length < hi (strict); inclusive_hi makes the upper bound <=.
inline std::optional<CycleWitness> find_cycle_in_range(const Digraph& g, int lo, int hi,
                                                       bool inclusive_hi = false) {
    if (lo >= hi) throw std::invalid_argument("find_cycle_in_range: need lo < hi");
    return find_cycle_with_length(g, lo + 1, inclusive_hi ? hi : hi - 1);
}

// Exact circumference via the long-cycle search (0 if acyclic). This is the
// solver-side route; the oracle recomputes it independently by full cycle
// enumeration.
inline int circumference(const Digraph& g) {
    int lo = 0, hi = g.alive_count();
    // Invariant: a cycle longer than lo exists iff lo < cf; probe by bisection.
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (has_long_cycle(g, mid))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

struct CycleAnchor {
    // Exactly one of vertex/arc is set.
    std::optional<VertexId> vertex;
    std::optional<ArcId> arc;
    static CycleAnchor at_vertex(VertexId v) { return {v, std::nullopt}; }
    static CycleAnchor at_arc(ArcId a) { return {std::nullopt, a}; }
};

namespace detail {

// All simple cycles through `v` of length <= max_len (emitted as open
// sequences starting at v).
template <typename Emit>
void cycles_through(const Digraph& g, VertexId v, int max_len, Emit&& emit) {
    auto adj = g.out_adj();
    std::vector<VertexId> path{v};
    std::vector<char> on_path(g.vertex_count(), 0);
    on_path[v] = 1;
    struct Frame {
        VertexId u;
        size_t next;
    };
    std::vector<Frame> frames{{v, 0}};
    while (!frames.empty()) {
        Frame& f = frames.back();
        bool descended = false;
        while (f.next < adj[f.u].size()) {
            VertexId w = adj[f.u][f.next++];
            if (w == v) {
                if (static_cast<int>(path.size()) >= 2) emit(path);
                continue;
            }
            if (on_path[w] || static_cast<int>(path.size()) + 1 > max_len) continue;
            path.push_back(w);
            on_path[w] = 1;
            frames.push_back({w, 0});
            descended = true;
            break;
        }
        if (!descended) {
            on_path[f.u] = 0;
            path.pop_back();
            frames.pop_back();
        }
    }
}

}  // namespace detail

// Shortest simple cycle of length <= ell through the anchor (and through
// `via` when given); ties broken by lexicographic vertex sequence after
// canonical rotation. Deterministic, used to fix the O_v cycles.
inline std::optional<CycleWitness> short_cycle_through(const Digraph& g, const CycleAnchor& anchor,
                                                       int ell,
                                                       std::optional<VertexId> via = std::nullopt) {
    std::optional<CycleWitness> best;
    auto consider = [&](const std::vector<VertexId>& open_path) {
        if (via && std::find(open_path.begin(), open_path.end(), *via) == open_path.end()) return;
        CycleWitness w = canonical_cycle(open_path);
        if (!best || w.length() < best->length() ||
            (w.length() == best->length() && w.vertices < best->vertices))
            best = w;
    };
    if (anchor.vertex) {
        if (!g.alive(*anchor.vertex)) throw std::invalid_argument("short_cycle_through: dead anchor");
        detail::cycles_through(g, *anchor.vertex, ell, consider);
    } else {
        const Arc& a = g.all_arcs().at(*anchor.arc);
        if (!g.arc_alive(a)) throw std::invalid_argument("short_cycle_through: dead anchor arc");
        // Cycle through the arc = arc + simple head->tail path avoiding... walk
        // the cycles through `tail` and keep those whose first step is `head`.
        detail::cycles_through(g, a.tail, ell, [&](const std::vector<VertexId>& open_path) {
            if (open_path.size() >= 2 && open_path[1] == a.head) consider(open_path);
        });
    }
    return best;
}

}  // namespace dlchs
