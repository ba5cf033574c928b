#pragma once

#include <random>

#include "bes/solver.hpp"

namespace testing {

/// Constraints whose packings already satisfy the cleaning properties for k.
inline bes::PackConstraints cleaned_constraints(const bes::Params& p) {
    bes::PackConstraints c;
    for (int ell = 2; ell < p.k; ++ell)
        if ((p.k - 1) % ell == 0 || p.k % ell == 0) c.minus_free.push_back(ell);
    c.no_pair_in_three_minus = p.k % 3 == 2;
    c.disjoint_minus_pairs = true;
    return c;
}

struct PlantPlan {
    int windows = 4;          // random vertex windows filled with edges
    int window_size = 9;
    int tries_per_window = 40;
    /// Edge sets on local vertices [0, m), copied onto random vertices.
    std::vector<std::vector<bes::Edge>> shapes;
    int copies_per_shape = 2;
    int extra_tries = 50;     // random edges anywhere
};

/// Random edges packed so that low-span configurations are common. Every
/// edge goes in through can_add, so the result satisfies the constraints.
inline bes::Hypergraph planted_pack(const bes::Params& p, int n, std::uint64_t seed,
                                    const bes::PackConstraints& c, const PlantPlan& plan) {
    std::mt19937_64 rng(seed);
    auto G = bes::Hypergraph::build(p.r, n, {});
    std::vector<bes::Vertex> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    auto add = [&](bes::Edge e) {
        std::sort(e.begin(), e.end());
        if (!G.contains(e) && bes::can_add(G, e, p, c)) G = G.with_edge(e);
    };
    auto random_edge = [&](std::vector<bes::Vertex> pool) {
        std::shuffle(pool.begin(), pool.end(), rng);
        add(bes::Edge(pool.begin(), pool.begin() + p.r));
    };
    for (const auto& shape : plan.shapes)
        for (int copy = 0; copy < plan.copies_per_shape; ++copy) {
            std::shuffle(all.begin(), all.end(), rng);
            for (const auto& local : shape) {
                bes::Edge e;
                for (auto v : local) e.push_back(all.at(v));
                add(e);
            }
        }
    for (int w = 0; w < plan.windows; ++w) {
        std::shuffle(all.begin(), all.end(), rng);
        const std::vector<bes::Vertex> window(all.begin(), all.begin() + plan.window_size);
        for (int i = 0; i < plan.tries_per_window; ++i) random_edge(window);
    }
    for (int i = 0; i < plan.extra_tries; ++i) random_edge(all);
    return G;
}

/// Three r-sets X+Y, X+Z, Y+Z over blocks of r/2 vertices (r even).
inline std::vector<bes::Edge> triangle_shape(int r) {
    const bes::Vertex h = static_cast<bes::Vertex>(r / 2);
    std::vector<bes::Edge> out(3);
    for (bes::Vertex i = 0; i < h; ++i) {
        out[0].insert(out[0].end(), {i, h + i});
        out[1].insert(out[1].end(), {i, 2 * h + i});
        out[2].insert(out[2].end(), {h + i, 2 * h + i});
    }
    for (auto& e : out) std::sort(e.begin(), e.end());
    return out;
}

/// Two disjoint 2-configurations forming a 4^- configuration at (5, 3).
inline std::vector<bes::Edge> two_pairs_shape() {
    return {{0, 1, 2, 3, 4}, {0, 1, 2, 5, 6}, {3, 5, 7, 8, 9}, {4, 6, 7, 8, 9}};
}

}  // namespace testing
