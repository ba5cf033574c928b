#pragma once

#include <random>

#include "bes/hypergraph.hpp"
#include "oracles.hpp"

namespace testing {

inline bes::Hypergraph hg(int r, int n, std::vector<bes::Edge> edges) {
    return bes::Hypergraph::build(r, n, std::move(edges));
}

inline oracle::Edges plain(const bes::Hypergraph& F) {
    oracle::Edges out;
    for (const auto& e : F.edges()) out.emplace_back(e.begin(), e.end());
    return out;
}

/// m distinct random r-subsets of [0, n) (fewer if the space is exhausted).
inline bes::Hypergraph random_graph(int r, int n, std::size_t m, std::mt19937_64& rng) {
    std::set<bes::Edge> edges;
    std::vector<bes::Vertex> pool(n);
    for (int v = 0; v < n; ++v) pool[v] = v;
    for (std::size_t tries = 0; edges.size() < m && tries < 50 * m + 50; ++tries) {
        std::shuffle(pool.begin(), pool.end(), rng);
        bes::Edge e(pool.begin(), pool.begin() + r);
        std::sort(e.begin(), e.end());
        edges.insert(e);
    }
    return bes::Hypergraph::build(r, n, {edges.begin(), edges.end()});
}

}  // namespace testing
