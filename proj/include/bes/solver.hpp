#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "bes/hypergraph.hpp"

namespace bes {

struct SolverOptions {
    std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
    double time_limit_seconds = std::numeric_limits<double>::infinity();
    /// Fixes {0, ..., r-1} as an edge, which any nonempty optimum can be
    /// relabeled to contain.
    bool symmetry_pruning = false;
    std::optional<Hypergraph> incumbent_seed;
};

struct SolverResult {
    std::size_t optimum = 0;
    Hypergraph witness;
    std::uint64_t nodes_explored = 0;
    bool complete = false;
    bool limit_reached = false;
    double seconds = 0.0;
};

/// Maximum number of edges of a k-free r-graph on n vertices, by
/// branch-and-bound. For k = 2 the search branches on how the first
/// undecided t-set is covered; otherwise on including or excluding
/// candidate edges in lexicographic order. On a node or time limit the best
/// graph found is returned with complete = false.
SolverResult exact_f(const Params& params, int n, const SolverOptions& opts = {});

struct PackConstraints {
    bool k_free = true;
    /// l values for which the result must be l^- free.
    std::vector<int> minus_free;
    /// No 3^- configuration containing a 2-configuration.
    bool no_pair_in_three_minus = false;
    /// Every a^- configuration edge-disjoint from every b-configuration, a + b = k.
    bool disjoint_minus_pairs = false;
    std::size_t max_edges = std::numeric_limits<std::size_t>::max();
    /// Above this many candidate edges, candidates are sampled instead of
    /// shuffled in full and the result need not be maximal.
    std::uint64_t full_shuffle_limit = 200'000;
    std::uint64_t max_attempts = 200'000;
};

/// Whether G plus e still satisfies the constraints. The constraints are
/// hereditary, so only configurations through e are examined.
bool can_add(const Hypergraph& G, const Edge& e, const Params& params, const PackConstraints& c);

/// Random greedy packing: candidates in an order drawn from a seeded
/// mt19937_64, each added when the constraints allow. Deterministic in the seed.
Hypergraph greedy_pack(const Params& params, int n, std::uint64_t seed,
                       const PackConstraints& constraints = {});

/// Exhaustive k-freeness check of a solver witness.
bool verify_witness(const Hypergraph& F, const Params& params);

/// All r-subsets of [0, n) in lexicographic order.
std::vector<Edge> all_r_subsets(int n, int r);

}  // namespace bes
