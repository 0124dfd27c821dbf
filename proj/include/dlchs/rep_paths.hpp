#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>

#include "dlchs/cycles.hpp"
#include "dlchs/separators.hpp"

namespace dlchs {

using Path = std::vector<VertexId>;  // vertex sequence; zero-length path = {v}

inline bool path_valid(const Digraph& g, const Path& p) {
    if (p.empty()) return false;
    if (make_set(p).size() != p.size()) return false;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_arc(p[i], p[i + 1])) return false;
    return g.alive(p.front()) && g.alive(p.back());
}

inline bool path_disjoint_from(const Path& p, const VertexSet& s) {
    for (VertexId v : p)
        if (set_contains(s, v)) return false;
    return true;
}

// Lexicographically-least shortest x->y path, or nullopt.
inline std::optional<Path> lex_shortest_path(const Digraph& g, VertexId x, VertexId y) {
    if (!g.alive(x) || !g.alive(y)) return std::nullopt;
    std::vector<int> dist_to_y = bfs_dist(sepdetail::reversed(g), y);
    if (dist_to_y[x] == INF_DIST) return std::nullopt;
    auto adj = g.out_adj();
    Path p{x};
    VertexId u = x;
    while (u != y) {
        VertexId next = -1;
        for (VertexId w : adj[u])
            if (dist_to_y[w] == dist_to_y[u] - 1) {
                next = w;
                break;  // adjacency sorted ascending
            }
        p.push_back(next);
        u = next;
    }
    return p;
}

// Lexicographically-least shortest path from a source set to a target set.
inline std::optional<Path> lex_shortest_path_sets(const Digraph& g, const VertexSet& from,
                                                  const VertexSet& to) {
    std::vector<int> dist_to(g.vertex_count(), INF_DIST);
    {
        Digraph rev = sepdetail::reversed(g);
        auto adj = rev.out_adj();
        std::vector<VertexId> queue;
        for (VertexId v : to)
            if (g.alive(v)) {
                dist_to[v] = 0;
                queue.push_back(v);
            }
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (VertexId w : adj[queue[qi]])
                if (dist_to[w] == INF_DIST) {
                    dist_to[w] = dist_to[queue[qi]] + 1;
                    queue.push_back(w);
                }
    }
    int best = INF_DIST;
    VertexId start = -1;
    for (VertexId v : from)
        if (g.alive(v) && dist_to[v] < best) {
            best = dist_to[v];
            start = v;
        }
    if (start == -1) return std::nullopt;
    auto adj = g.out_adj();
    Path p{start};
    VertexId u = start;
    while (dist_to[u] > 0) {
        for (VertexId w : adj[u])
            if (dist_to[w] == dist_to[u] - 1) {
                p.push_back(w);
                u = w;
                break;
            }
    }
    return p;
}

// First simple x->y path inside a walk's own arc set (deterministic DFS with
// ascending successor order). The walk must connect x to y.
inline std::optional<Path> path_within_walk(const std::vector<VertexId>& walk, VertexId x,
                                            VertexId y) {
    std::map<VertexId, std::set<VertexId>> adj;
    for (size_t i = 0; i + 1 < walk.size(); ++i) adj[walk[i]].insert(walk[i + 1]);
    std::set<VertexId> on_path;
    Path p;
    std::function<bool(VertexId)> go = [&](VertexId u) -> bool {
        p.push_back(u);
        if (u == y) return true;
        on_path.insert(u);
        for (VertexId w : adj[u])
            if (!on_path.count(w) && go(w)) return true;
        on_path.erase(u);
        p.pop_back();
        return false;
    };
    if (!go(x)) return std::nullopt;
    return p;
}

// ---- Perfect hash families --------------------------------------------------

struct HashFamily {
    int universe = 0;
    int range = 0;                            // functions map {0..universe-1} -> {0..range-1}
    std::vector<std::vector<int>> functions;  // each of length `universe`

    bool injective_on(const std::vector<int>& subset, size_t fn) const {
        std::set<int> seen;
        for (int u : subset)
            if (!seen.insert(functions[fn][u]).second) return false;
        return true;
    }
};

// Seeded random search with built-in exhaustive verification: keep drawing
// functions until every <=k-subset of the universe has an injective member.
inline HashFamily perfect_hash_family(int universe, int k, uint64_t seed = 0x5eedf00dULL) {
    if (k < 1) throw std::invalid_argument("perfect_hash_family: need k >= 1");
    HashFamily fam;
    fam.universe = universe;
    fam.range = k;
    if (universe == 0) return fam;
    if (k == 1) {
        fam.functions.push_back(std::vector<int>(universe, 0));
        return fam;
    }
    if (universe <= k) {
        std::vector<int> ident(universe);
        for (int i = 0; i < universe; ++i) ident[i] = i;
        fam.functions.push_back(ident);
        return fam;
    }

    // all k-subsets that still lack an injective function
    std::vector<std::vector<int>> open;
    {
        std::vector<int> cur;
        std::function<void(int)> gen = [&](int from) {
            if (static_cast<int>(cur.size()) == k) {
                open.push_back(cur);
                return;
            }
            for (int i = from; i < universe; ++i) {
                cur.push_back(i);
                gen(i + 1);
                cur.pop_back();
            }
        };
        gen(0);
    }

    std::mt19937_64 rng(seed);
    while (!open.empty()) {
        std::vector<int> f(universe);
        for (int i = 0; i < universe; ++i) f[i] = static_cast<int>(rng() % k);
        fam.functions.push_back(f);
        size_t fn = fam.functions.size() - 1;
        std::vector<std::vector<int>> still;
        for (const auto& sub : open)
            if (!fam.injective_on(sub, fn)) still.push_back(sub);
        if (still.size() == open.size()) fam.functions.pop_back();  // useless draw
        open = std::move(still);
    }
    return fam;
}

// ---- Representative path families -------------------------------------------

struct PathFamily {
    VertexId x = -1, y = -1;
    int k = 0;
    std::vector<Path> paths;
};

namespace repdetail {

// cap < 0 disables the length cap. With a cap, the family is representative
// for the bounded-length connections: whenever a path of length <= cap
// survives a deletion of <= k vertices, some member survives.
inline void monien_rec(const Digraph& g, VertexId x, VertexId y, int k, long long cap,
                       std::set<Path>& out) {
    auto p = lex_shortest_path(g, x, y);
    if (!p) return;
    if (cap >= 0 && static_cast<long long>(p->size()) - 1 > cap) return;
    out.insert(*p);
    if (k == 0) return;
    for (size_t i = 1; i + 1 < p->size(); ++i) {
        Digraph h = g;
        h.delete_vertex((*p)[i]);
        monien_rec(h, x, y, k - 1, cap, out);
    }
}

}  // namespace repdetail

// Monien-style k-representative family of x->y paths when every x->y path has
// length <= len_bound: a shortest path plus recursive families avoiding each
// of its internal vertices. Size <= len_bound^k.
inline PathFamily rep_short_paths(const Digraph& g, VertexId x, VertexId y, int k, int len_bound) {
    PathFamily fam;
    fam.x = x;
    fam.y = y;
    fam.k = k;
    if (x == y) {
        if (g.alive(x)) fam.paths.push_back({x});
        return fam;
    }
    std::set<Path> out;
    repdetail::monien_rec(g, x, y, k, -1, out);
    fam.paths.assign(out.begin(), out.end());
    for (const Path& p : fam.paths) {
        if (static_cast<int>(p.size()) - 1 > len_bound)
            throw std::logic_error("rep_short_paths: path exceeds the promised length bound");
    }
    double bound = std::pow(std::max(1, len_bound), k);
    if (static_cast<double>(fam.paths.size()) > bound)
        throw std::logic_error("rep_short_paths: family exceeds len_bound^k");
    return fam;
}

// Options for the bounded-circumference construction. The anchor spacing
// defaults to the 2*cf^4 of the analysis; tests may shrink it to exercise the
// anchored assembly on small hosts (the k-representativeness guarantee is
// only claimed for the default). cf_override skips the exact circumference
// computation on large structured hosts whose circumference is known; desk
// callers leave it at zero.
struct RepPathOptions {
    int spacing_override = 0;  // 0 = 2*cf(G)^4
    int cf_override = 0;       // 0 = compute exactly
    uint64_t hash_seed = 0x5eedf00dULL;
};

struct RepPathStats {
    int cf = 0;
    long long spacing = 0;
    int anchors = 0;
    int pad_size = 0;            // B
    int assembled_offsets = 0;   // offsets with >= 2 families (anchored route)
};

// k-representative family of x->y paths in a strong digraph, following the
// guided-walk construction: a shortest guide path, anchor vertices every
// `spacing` arcs, offset classes, per-gap Monien families padded to a common
// size, a 2k-perfect hash family over the gap families and a full function
// table selecting members. On hosts whose guide path is shorter than the
// spacing the construction collapses to the single whole-jump Monien family.
inline PathFamily rep_paths_bounded_cf(const Digraph& g, VertexId x, VertexId y, int k,
                                       const RepPathOptions& opts = {},
                                       RepPathStats* stats = nullptr) {
    if (!is_strong(g)) throw std::invalid_argument("rep_paths_bounded_cf: host must be strong");
    PathFamily fam;
    fam.x = x;
    fam.y = y;
    fam.k = k;
    if (x == y) {
        fam.paths.push_back({x});
        return fam;
    }
    int cf = opts.cf_override > 0 ? opts.cf_override : circumference(g);
    auto dist = all_pairs_dist(g);
    auto monien_gap = [&](VertexId a, VertexId b) {
        // every a->b path is bounded via the circumference (strong host)
        int len_bound = (cf - 1) * (cf - 1) * std::max(1, dist[a][b]);
        return rep_short_paths(g, a, b, k, len_bound).paths;
    };

    if (k == 0) {
        fam.paths.push_back(*lex_shortest_path(g, x, y));
        return fam;
    }

    long long spacing = opts.spacing_override > 0
                            ? opts.spacing_override
                            : 2LL * cf * cf * cf * cf;
    Path guide = *lex_shortest_path(g, x, y);
    long long r = static_cast<long long>(guide.size()) - 1;
    std::vector<VertexId> anchors;
    for (long long i = 0; i * spacing <= r; ++i) anchors.push_back(guide[i * spacing]);

    if (stats) {
        stats->cf = cf;
        stats->spacing = spacing;
        stats->anchors = static_cast<int>(anchors.size());
    }

    // Per offset: the ordered list of jump families along the guide path.
    std::vector<std::vector<std::vector<Path>>> families_per_offset(k + 1);
    size_t pad = 0;
    for (int o = 0; o <= k; ++o) {
        std::vector<VertexId> klass;
        for (size_t j = o; j < anchors.size(); j += (k + 1)) klass.push_back(anchors[j]);
        auto& families = families_per_offset[o];
        if (klass.empty()) {
            families.push_back(monien_gap(x, y));
        } else {
            if (klass.front() != x) families.push_back(monien_gap(x, klass.front()));
            for (size_t j = 0; j + 1 < klass.size(); ++j)
                families.push_back(monien_gap(klass[j], klass[j + 1]));
            if (klass.back() != y) families.push_back(monien_gap(klass.back(), y));
        }
        for (const auto& f : families) pad = std::max(pad, f.size());
    }
    if (stats) stats->pad_size = static_cast<int>(pad);

    std::set<Path> out;
    for (int o = 0; o <= k; ++o) {
        auto families = families_per_offset[o];
        for (auto& f : families)
            while (f.size() < pad) f.push_back(f.front());  // duplicate first member

        int m = static_cast<int>(families.size());
        if (m == 1) {
            for (const Path& p : families[0]) out.insert(p);
            continue;
        }
        if (stats) ++stats->assembled_offsets;
        int range = 2 * k;
        HashFamily psi = perfect_hash_family(m, std::min(range, m), opts.hash_seed);
        int b = static_cast<int>(pad);

        // Enumerate all member-index functions pi : {0..range-1} -> {0..B-1}.
        std::set<std::vector<int>> index_tuples;
        std::vector<int> pi(psi.range, 0);
        while (true) {
            for (const auto& f : psi.functions) {
                std::vector<int> tuple(m);
                for (int j = 0; j < m; ++j) tuple[j] = pi[f[j]];
                index_tuples.insert(tuple);
            }
            int pos = 0;
            while (pos < psi.range && pi[pos] == b - 1) pi[pos++] = 0;
            if (pos == psi.range) break;
            ++pi[pos];
        }
        for (const auto& tuple : index_tuples) {
            std::vector<VertexId> walk;
            for (int j = 0; j < m; ++j) {
                const Path& piece = families[j][tuple[j]];
                if (walk.empty())
                    walk = piece;
                else
                    walk.insert(walk.end(), piece.begin() + 1, piece.end());
            }
            auto p = path_within_walk(walk, x, y);
            if (p) out.insert(*p);
        }
    }
    fam.paths.assign(out.begin(), out.end());
    return fam;
}

// ---- Prefix/suffix collections (recursive, memoized) -------------------------

struct PrefixSuffixFamilies {
    std::vector<Path> r_le;                      // paths of length <= 2d
    std::vector<std::pair<Path, Path>> r_gt;     // (length-d prefix from s, length-d suffix to t)
};

namespace repdetail {

// Witness pair that tolerates overlapping X and Y (needed here because a
// vertex can be both an out-neighbor of s and an in-neighbor of t).
inline std::pair<VertexSet, VertexSet> witness_pair_overlap_ok(const Digraph& g,
                                                               const VertexSet& x,
                                                               const VertexSet& y, int k) {
    if (x.empty() || y.empty()) return {x, y};
    Digraph fwd = g;
    VertexId super_x = fwd.add_vertex();
    for (VertexId v : x) fwd.add_arc(super_x, v);
    VertexSet y_w = path_witness_single(fwd, super_x, y, k);
    Digraph bwd = sepdetail::reversed(g);
    VertexId super_y = bwd.add_vertex();
    for (VertexId v : y_w) bwd.add_arc(super_y, v);
    VertexSet x_w = path_witness_single(bwd, super_y, x, k);
    return {x_w, y_w};
}

struct PrefixSuffixMemo {
    std::map<std::tuple<std::string, VertexId, VertexId, int>, PrefixSuffixFamilies> table;

    static std::string mask_of(const Digraph& g) {
        std::string s(g.vertex_count(), '0');
        for (VertexId v : g.vertices()) s[v] = '1';
        return s;
    }
};

inline std::vector<std::pair<Path, Path>> prefix_suffix_pairs_rec(const Digraph& g, VertexId s,
                                                                  VertexId t, int k, int d,
                                                                  PrefixSuffixMemo& memo) {
    auto key = std::make_tuple(PrefixSuffixMemo::mask_of(g), s, t, d);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) return it->second.r_gt;

    std::set<std::pair<Path, Path>> gt;
    if (d == 0) {
        gt.insert({{s}, {t}});
    } else {
        VertexSet outs, ins;
        for (const Arc& a : g.arcs()) {
            if (a.tail == s && a.head != t) outs.push_back(a.head);
            if (a.head == t && a.tail != s) ins.push_back(a.tail);
        }
        outs = set_minus(make_set(outs), {s, t});
        ins = set_minus(make_set(ins), {s, t});

        Digraph h = g;
        if (h.alive(s)) h.delete_vertex(s);
        if (s != t && h.alive(t)) h.delete_vertex(t);
        // the witness property must hold in G - {s,t}: the recursion never sees s,t
        auto [x_w, y_w] = witness_pair_overlap_ok(h, outs, ins, k);
        for (VertexId s2 : x_w)
            for (VertexId t2 : y_w)
                for (const auto& [ps, pt] : prefix_suffix_pairs_rec(h, s2, t2, k, d - 1, memo)) {
                    Path eps{s};
                    eps.insert(eps.end(), ps.begin(), ps.end());
                    Path ept = pt;
                    ept.push_back(t);
                    gt.insert({eps, ept});
                }
    }
    PrefixSuffixFamilies cached;
    cached.r_gt.assign(gt.begin(), gt.end());
    memo.table[key] = cached;
    return cached.r_gt;
}

}  // namespace repdetail

// Collections R_{<=2d} and R_{>2d}. For every deletion S of size <= k:
//   - if some s->t path of length <= 2d survives, a member of R_{<=2d}
//     survives (the short side is a length-capped Monien family, so this case
//     is exact);
//   - if any s->t path survives, either a member of R_{<=2d} survives or some
//     pair of R_{>2d} survives and extends to a surviving s->t path.
// The second guarantee is the disjunction the recursive construction actually
// provides (the witness step may swap a long survivor for a short one), and it
// is what the closed-walk families need.
inline PrefixSuffixFamilies prefix_suffix_families(const Digraph& g, VertexId s, VertexId t, int k,
                                                   int d) {
    if (!g.alive(s) || !g.alive(t))
        throw std::invalid_argument("prefix_suffix_families: dead endpoint");
    PrefixSuffixFamilies out;
    std::set<Path> le;
    repdetail::monien_rec(g, s, t, k, 2LL * d, le);
    out.r_le.assign(le.begin(), le.end());
    repdetail::PrefixSuffixMemo memo;
    out.r_gt = repdetail::prefix_suffix_pairs_rec(g, s, t, k, d, memo);
    return out;
}

// ---- Closed-walk families ----------------------------------------------------

struct WalkFamily {
    VertexSet anchors;                         // vertices every walk must contain
    std::vector<std::vector<VertexId>> walks;  // closed sequences, first == last
};

namespace repdetail {

// Collection of s->t paths: short routes verbatim, long routes via
// representative jumps between prefix and suffix inside strong components of
// G - {s,t}.
inline std::vector<Path> long_route_collection(const Digraph& g, VertexId s, VertexId t, int k,
                                               int ell) {
    auto ps = prefix_suffix_families(g, s, t, k, ell);
    std::set<Path> coll(ps.r_le.begin(), ps.r_le.end());

    Digraph h = g;
    h.delete_vertex(s);
    if (h.alive(t)) h.delete_vertex(t);
    auto comps = strong_components(h);
    auto comp_index = [&](VertexId v) -> int {
        for (size_t c = 0; c < comps.size(); ++c)
            if (set_contains(comps[c], v)) return static_cast<int>(c);
        return -1;
    };

    for (const auto& [pre, suf] : ps.r_gt) {
        for (VertexId xx : pre) {
            if (xx == s || xx == t) continue;
            int cx = comp_index(xx);
            if (cx < 0) continue;
            for (VertexId yy : suf) {
                if (yy == s || yy == t) continue;
                if (comp_index(yy) != cx) continue;
                Digraph host = h.induced(comps[cx]);
                PathFamily jumps = rep_paths_bounded_cf(host, xx, yy, k);
                // prefix of `pre` ending at xx, suffix of `suf` from yy
                Path lead(pre.begin(), std::find(pre.begin(), pre.end(), xx) + 1);
                Path tail(std::find(suf.begin(), suf.end(), yy), suf.end());
                for (const Path& z : jumps.paths) {
                    std::vector<VertexId> walk = lead;
                    walk.insert(walk.end(), z.begin() + 1, z.end());
                    walk.insert(walk.end(), tail.begin() + 1, tail.end());
                    auto p = path_within_walk(walk, s, t);
                    if (p) coll.insert(*p);
                }
            }
        }
    }
    return {coll.begin(), coll.end()};
}

}  // namespace repdetail

// Closed walks through both s and t covering every deletion S (|S| <= k with
// cf(G-S) <= ell) that leaves s,t in one strong component.
inline WalkFamily closed_walk_family_pair(const Digraph& g, VertexId s, VertexId t, int k,
                                          int ell) {
    if (s == t) throw std::invalid_argument("closed_walk_family_pair: need distinct anchors");
    {
        Digraph h = g;
        if (h.alive(s)) h.delete_vertex(s);
        if (h.alive(t)) h.delete_vertex(t);
        if (circumference(h) > ell)
            throw std::invalid_argument("closed_walk_family_pair: cf(G - {s,t}) exceeds ell");
    }
    WalkFamily out;
    out.anchors = make_set({s, t});
    auto fwd = repdetail::long_route_collection(g, s, t, k, ell);
    auto bwd = repdetail::long_route_collection(g, t, s, k, ell);
    std::set<std::vector<VertexId>> walks;
    for (const Path& p1 : fwd)
        for (const Path& p2 : bwd) {
            std::vector<VertexId> w = p1;
            w.insert(w.end(), p2.begin() + 1, p2.end());
            walks.insert(w);
        }
    out.walks.assign(walks.begin(), walks.end());
    return out;
}

// Union over anchor pairs {s,t} of pair families on G - (W \ {s,t}).
inline WalkFamily closed_walk_family_W(const Digraph& g, const VertexSet& w_set, int k, int ell) {
    {
        Digraph h = g.minus(w_set);
        if (circumference(h) > ell)
            throw std::invalid_argument("closed_walk_family_W: cf(G - W) exceeds ell");
    }
    WalkFamily out;
    out.anchors = w_set;
    std::set<std::vector<VertexId>> walks;
    for (size_t i = 0; i < w_set.size(); ++i)
        for (size_t j = i + 1; j < w_set.size(); ++j) {
            VertexId s = w_set[i], t = w_set[j];
            Digraph h = g.minus(set_minus(w_set, {s, t}));
            if (!is_reachable(h, {s}, {t}) || !is_reachable(h, {t}, {s})) continue;
            auto fam = closed_walk_family_pair(h, s, t, k, ell);
            for (auto& wk : fam.walks) walks.insert(wk);
        }
    out.walks.assign(walks.begin(), walks.end());
    return out;
}

inline bool walk_valid(const Digraph& g, const std::vector<VertexId>& walk) {
    if (walk.size() < 2 || walk.front() != walk.back()) return false;
    for (size_t i = 0; i + 1 < walk.size(); ++i)
        if (!g.has_arc(walk[i], walk[i + 1])) return false;
    return true;
}

}  // namespace dlchs
