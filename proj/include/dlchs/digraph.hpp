#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlchs {

using VertexId = int;
using ArcId = int;
using VertexSet = std::vector<VertexId>;  // always sorted, unique

struct Arc {
    VertexId tail = -1;
    VertexId head = -1;
    ArcId id = -1;
};

inline VertexSet make_set(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool set_contains(const VertexSet& s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
    return set_intersect(a, b).empty();
}

constexpr int INF_DIST = 1 << 29;

// factor * base^exp, saturated at cap. The analysis constants (2*ell^6 and
// friends) only matter up to the vertex count, so callers clamp there.
inline long long capped_power(long long factor, long long base, int exp, long long cap) {
    long long out = factor;
    for (int i = 0; i < exp; ++i) {
        if (base > 0 && out > cap / base) return cap;
        out *= base;
    }
    return std::min(out, cap);
}

// Directed multigraph with stable vertex and arc identifiers. Deleting a
// vertex only flips its alive mask; arc ids of survivors never change, so
// solutions can always be reported in the coordinates of the graph they
// were computed against.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : alive_(n, true) {}

    int vertex_count() const { return static_cast<int>(alive_.size()); }

    VertexId add_vertex() {
        alive_.push_back(true);
        return vertex_count() - 1;
    }

    ArcId add_arc(VertexId tail, VertexId head) {
        if (tail < 0 || head < 0 || tail >= vertex_count() || head >= vertex_count())
            throw std::invalid_argument("add_arc: endpoint out of range");
        if (tail == head) throw std::invalid_argument("add_arc: self-loops are not allowed");
        ArcId id = static_cast<ArcId>(arcs_.size());
        arcs_.push_back({tail, head, id});
        arc_removed_.push_back(false);
        return id;
    }

    bool alive(VertexId v) const { return v >= 0 && v < vertex_count() && alive_[v]; }

    void delete_vertex(VertexId v) {
        if (!alive(v)) throw std::invalid_argument("delete_vertex: vertex not alive");
        alive_[v] = false;
    }

    void delete_vertices(const VertexSet& s) {
        for (VertexId v : s) delete_vertex(v);
    }

    // Arc is live iff both endpoints are alive and it was not removed.
    bool arc_alive(const Arc& a) const {
        return alive_[a.tail] && alive_[a.head] && !arc_removed_[a.id];
    }

    // Indexed by stable arc id (removed arcs keep their slot).
    const std::vector<Arc>& all_arcs() const { return arcs_; }

    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        for (const Arc& a : arcs_)
            if (arc_alive(a)) out.push_back(a);
        return out;
    }

    VertexSet vertices() const {
        VertexSet out;
        for (VertexId v = 0; v < vertex_count(); ++v)
            if (alive_[v]) out.push_back(v);
        return out;
    }

    int alive_count() const { return static_cast<int>(vertices().size()); }

    Digraph minus(const VertexSet& s) const {
        Digraph g = *this;
        for (VertexId v : s)
            if (g.alive(v)) g.delete_vertex(v);
        return g;
    }

    Digraph minus_arcs(const std::vector<ArcId>& ids) const {
        Digraph g = *this;
        for (ArcId a : ids) {
            if (a < 0 || a >= static_cast<ArcId>(arcs_.size()))
                throw std::invalid_argument("minus_arcs: bad arc id");
            g.arc_removed_[a] = true;
        }
        return g;
    }

    // Restrict to an induced subgraph (everything outside `keep` dies).
    Digraph induced(const VertexSet& keep) const {
        Digraph g = *this;
        for (VertexId v = 0; v < vertex_count(); ++v)
            if (g.alive_[v] && !set_contains(keep, v)) g.alive_[v] = false;
        return g;
    }

    // Out-adjacency over alive vertices; parallel arcs appear once per copy.
    std::vector<std::vector<VertexId>> out_adj() const {
        std::vector<std::vector<VertexId>> adj(vertex_count());
        for (const Arc& a : arcs_)
            if (arc_alive(a)) adj[a.tail].push_back(a.head);
        for (auto& l : adj) std::sort(l.begin(), l.end());
        return adj;
    }

    std::vector<std::vector<VertexId>> in_adj() const {
        std::vector<std::vector<VertexId>> adj(vertex_count());
        for (const Arc& a : arcs_)
            if (arc_alive(a)) adj[a.head].push_back(a.tail);
        for (auto& l : adj) std::sort(l.begin(), l.end());
        return adj;
    }

    bool has_arc(VertexId u, VertexId v) const {
        for (const Arc& a : arcs_)
            if (arc_alive(a) && a.tail == u && a.head == v) return true;
        return false;
    }

    int degree_total(VertexId v) const {
        int d = 0;
        for (const Arc& a : arcs_)
            if (arc_alive(a) && (a.tail == v || a.head == v)) ++d;
        return d;
    }

private:
    std::vector<Arc> arcs_;
    std::vector<char> arc_removed_;
    std::vector<char> alive_;
};

// BFS distances from x over alive vertices. dist[x] = 0, INF_DIST if unreachable.
inline std::vector<int> bfs_dist(const Digraph& g, VertexId x,
                                 const std::vector<std::vector<VertexId>>& adj) {
    std::vector<int> dist(g.vertex_count(), INF_DIST);
    if (!g.alive(x)) return dist;
    std::vector<VertexId> queue{x};
    dist[x] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        VertexId u = queue[qi];
        for (VertexId w : adj[u]) {
            if (dist[w] == INF_DIST) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

inline std::vector<int> bfs_dist(const Digraph& g, VertexId x) {
    return bfs_dist(g, x, g.out_adj());
}

inline int distance(const Digraph& g, VertexId x, VertexId y) {
    if (!g.alive(x) || !g.alive(y)) throw std::invalid_argument("distance: dead endpoint");
    return bfs_dist(g, x)[y];
}

// All-pairs shortest path lengths (BFS from every alive vertex).
inline std::vector<std::vector<int>> all_pairs_dist(const Digraph& g) {
    auto adj = g.out_adj();
    std::vector<std::vector<int>> d(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        d[v] = g.alive(v) ? bfs_dist(g, v, adj) : std::vector<int>(g.vertex_count(), INF_DIST);
    return d;
}

// Vertices reachable from any vertex of X (X itself included when alive).
inline VertexSet reach_forward(const Digraph& g, const VertexSet& from) {
    auto adj = g.out_adj();
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> queue;
    for (VertexId x : from)
        if (g.alive(x) && !seen[x]) {
            seen[x] = 1;
            queue.push_back(x);
        }
    for (size_t qi = 0; qi < queue.size(); ++qi)
        for (VertexId w : adj[queue[qi]])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    VertexSet out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

// Vertices that can reach some vertex of Y.
inline VertexSet reach_backward(const Digraph& g, const VertexSet& to) {
    auto adj = g.in_adj();
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> queue;
    for (VertexId y : to)
        if (g.alive(y) && !seen[y]) {
            seen[y] = 1;
            queue.push_back(y);
        }
    for (size_t qi = 0; qi < queue.size(); ++qi)
        for (VertexId w : adj[queue[qi]])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    VertexSet out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

// Vertices reachable from X by a path of length at most d.
inline VertexSet reach_forward_bounded(const Digraph& g, const VertexSet& from, int d) {
    auto adj = g.out_adj();
    VertexSet out;
    std::vector<int> dist(g.vertex_count(), INF_DIST);
    std::vector<VertexId> queue;
    for (VertexId x : from)
        if (g.alive(x)) {
            dist[x] = 0;
            queue.push_back(x);
        }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        VertexId u = queue[qi];
        if (dist[u] >= d) continue;
        for (VertexId w : adj[u])
            if (dist[w] == INF_DIST) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (dist[v] <= d) out.push_back(v);
    return out;
}

inline bool is_reachable(const Digraph& g, const VertexSet& from, const VertexSet& to) {
    VertexSet r = reach_forward(g, from);
    return !set_intersect(r, to).empty();
}

// Strong components of the alive subgraph, listed in a topological order of
// the condensation (sources first). Iterative Tarjan; ties broken by vertex id
// so the output is deterministic.
inline std::vector<VertexSet> strong_components(const Digraph& g) {
    int n = g.vertex_count();
    auto adj = g.out_adj();
    std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0);
    std::vector<VertexId> stack;
    std::vector<VertexSet> comps;
    int counter = 0;

    struct Frame {
        VertexId v;
        size_t next_child;
    };
    for (VertexId root = 0; root < n; ++root) {
        if (!g.alive(root) || index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next_child < adj[f.v].size()) {
                VertexId w = adj[f.v][f.next_child++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    VertexSet comp;
                    while (true) {
                        VertexId w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                        if (w == f.v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(std::move(comp));
                }
                VertexId child = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[child]);
            }
        }
    }
    // Tarjan emits components in reverse topological order of the condensation.
    std::reverse(comps.begin(), comps.end());
    return comps;
}

inline bool is_strong(const Digraph& g) {
    return strong_components(g).size() == 1;
}

// Component containing v, or empty set if v is dead.
inline VertexSet strong_component_of(const Digraph& g, VertexId v) {
    for (const VertexSet& c : strong_components(g))
        if (set_contains(c, v)) return c;
    return {};
}

// Tracks which original vertices each current vertex represents after a
// sequence of contractions/torso steps. Plain vertices map to themselves.
class OriginMap {
public:
    VertexSet origins(VertexId v) const {
        auto it = merged_.find(v);
        if (it != merged_.end()) return it->second;
        return {v};
    }

    bool is_merged(VertexId v) const { return merged_.count(v) > 0; }

    void set_origins(VertexId v, VertexSet origins) { merged_[v] = std::move(origins); }

    VertexSet lift(const VertexSet& current) const {
        VertexSet out;
        for (VertexId v : current) {
            VertexSet o = origins(v);
            out.insert(out.end(), o.begin(), o.end());
        }
        return make_set(out);
    }

    // Compose: `later` maps vertices of the newer graph into this map's domain.
    OriginMap composed_with(const OriginMap& later) const {
        OriginMap out = *this;
        for (const auto& [v, origs] : later.merged_) out.merged_[v] = lift(origs);
        return out;
    }

private:
    std::map<VertexId, VertexSet> merged_;
};

}  // namespace dlchs
