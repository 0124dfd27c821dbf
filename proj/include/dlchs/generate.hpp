#pragma once

#include <array>
#include <random>

#include "dlchs/cycles.hpp"
#include "dlchs/oracle.hpp"

namespace dlchs {

struct generation_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Platform-independent uniform double in [0,1) from a seeded mt19937_64.
// (std::uniform_real_distribution is implementation-defined; byte-identical
// outputs across toolchains need explicit arithmetic.)
inline double rng_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int rng_below(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<unsigned long long>(n));
}

// G(n, p): each ordered pair (u, v), u != v, gets an arc with probability p.
inline Digraph generate_gnp(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Digraph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng_unit(rng) < p) g.add_arc(u, v);
        }
    return g;
}

// Rejection-sample a strong digraph with brute-force circumference <= cf_target.
// Deterministic under seed; throws generation_failure after max_retries.
inline Digraph generate_bounded_cf_strong(int n, int cf_target, double p, uint64_t seed,
                                          int max_retries = 10000) {
    if (n == 1 && cf_target >= 0) return Digraph(1);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Digraph g(n);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = 0; v < n; ++v) {
                if (u == v) continue;
                if (rng_unit(rng) < p) g.add_arc(u, v);
            }
        if (!is_strong(g)) continue;
        if (oracle::brute_circumference(g, std::max(n, oracle::kDefaultCap)) > cf_target) continue;
        return g;
    }
    throw generation_failure("bounded-cf-strong: no sample within retry budget");
}

struct FigCf3 {
    Digraph graph;
    VertexId x, y;
    std::vector<std::array<VertexId, 2>> choices;  // choices[i] = {v_i^0, v_i^1}
};

// Chain of n diamonds between x and y: u_{i-1} -> v_i^b -> u_i for b in {0,1},
// plus back arcs u_i -> u_{i-1}. Strong, cf = 3, exactly 2^n distinct x->y
// paths (one per 0-1 vector).
inline FigCf3 generate_fig_cf3(int n) {
    if (n < 1) throw std::invalid_argument("fig-cf3: need n >= 1");
    FigCf3 out;
    out.graph = Digraph(n + 1 + 2 * n);
    auto chain = [&](int i) { return static_cast<VertexId>(i); };        // u_0..u_n
    auto diamond = [&](int i, int b) { return static_cast<VertexId>(n + 1 + 2 * (i - 1) + b); };
    for (int i = 1; i <= n; ++i) {
        for (int b = 0; b < 2; ++b) {
            out.graph.add_arc(chain(i - 1), diamond(i, b));
            out.graph.add_arc(diamond(i, b), chain(i));
        }
        out.graph.add_arc(chain(i), chain(i - 1));
        out.choices.push_back({diamond(i, 0), diamond(i, 1)});
    }
    out.x = chain(0);
    out.y = chain(n);
    return out;
}

struct FigCf4 {
    Digraph graph;
    VertexId x, y;
    std::vector<VertexId> green;  // x -> y, length n
    std::vector<VertexId> blue;   // y -> x, length 3n
    std::vector<VertexId> red;    // x -> y, length 9n
};

// Strong digraph with cf = 4 exhibiting the tight path-length ratios: a green
// x->y path of length n, a blue y->x path of length 3n (each green arc closed
// by a blue 3-arc return) and a red x->y path of length 9n (each blue arc
// closed by a red 3-arc return).
inline FigCf4 generate_fig_cf4(int n) {
    if (n < 1) throw std::invalid_argument("fig-cf4: need n >= 1");
    FigCf4 out;
    Digraph& g = out.graph;
    g = Digraph(0);

    std::vector<VertexId> green(n + 1);
    for (int i = 0; i <= n; ++i) green[i] = g.add_vertex();
    for (int i = 0; i < n; ++i) g.add_arc(green[i], green[i + 1]);

    // Blue chain y -> x through the green vertices in reverse order, two fresh
    // vertices per green arc.
    std::vector<VertexId> blue;
    blue.push_back(green[n]);
    for (int i = n; i >= 1; --i) {
        VertexId a = g.add_vertex(), b = g.add_vertex();
        blue.push_back(a);
        blue.push_back(b);
        blue.push_back(green[i - 1]);
    }
    for (size_t j = 0; j + 1 < blue.size(); ++j) g.add_arc(blue[j], blue[j + 1]);

    // Red chain x -> y: for each blue arc (b_j, b_{j+1}) a 3-arc return path
    // b_{j+1} -> r1 -> r2 -> b_j, concatenated from the x end backwards.
    std::vector<VertexId> red;
    red.push_back(blue.back());
    for (int j = static_cast<int>(blue.size()) - 2; j >= 0; --j) {
        VertexId r1 = g.add_vertex(), r2 = g.add_vertex();
        g.add_arc(blue[j + 1], r1);
        g.add_arc(r1, r2);
        g.add_arc(r2, blue[j]);
        red.push_back(r1);
        red.push_back(r2);
        red.push_back(blue[j]);
    }

    out.x = green[0];
    out.y = green[n];
    out.green = green;
    out.blue = blue;
    out.red = red;
    return out;
}

}  // namespace dlchs
