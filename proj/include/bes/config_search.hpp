#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "bes/hypergraph.hpp"

namespace bes {

struct SearchBudget {
    std::uint64_t max_nodes = 200'000'000;
    std::size_t max_results = 1'000'000;

    static SearchBudget unlimited() {
        return {std::numeric_limits<std::uint64_t>::max(), std::numeric_limits<std::size_t>::max()};
    }
};

/// Selects configurations of exactly `ell` edges spanning at most `s_max`
/// vertices, optionally forced to contain given edges, to cover a vertex set
/// and to avoid given edges.
struct ConfigQuery {
    int ell = 1;
    int s_max = 0;
    std::vector<EdgeIndex> must_contain;
    std::optional<TSet> must_cover;
    std::vector<EdgeIndex> disjoint_from;

    /// ell-configurations (or ell^- when minus is set) for the given (r, t).
    static ConfigQuery of(const Params& params, int ell, bool minus = false);

    void validate(const Hypergraph& F) const;
};

using ConfigFilter = std::function<bool(const Hypergraph&, const Configuration&)>;

/// Visitor for the raw engine: sorted edge indices and their union. Return
/// false to stop the search.
using ConfigVisitor = std::function<bool(std::span<const EdgeIndex>, const VertexSet&)>;

struct EngineOptions {
    /// Edges flagged here are skipped when met as candidates; the flags may be
    /// set by the visitor while the search runs.
    const std::vector<char>* dynamic_excluded = nullptr;
    /// Restricts the first free choice to positions accepted by this predicate
    /// (used to split the search tree across workers).
    std::function<bool(std::size_t)> top_branch_owned;
};

/// Canonical DFS over edge combinations in increasing index order. Returns
/// the number of search nodes visited; throws BudgetExhausted past max_nodes.
std::uint64_t search_configurations(std::span<const VertexSet> masks, const ConfigQuery& q,
                                    const SearchBudget& budget, const ConfigVisitor& visit,
                                    const EngineOptions& opts = {});

/// First configuration in canonical order, or nullopt when the exhausted
/// search found none.
std::optional<Configuration> find_configuration(const Hypergraph& F, const ConfigQuery& q,
                                                const SearchBudget& budget = {});

/// Every matching configuration in canonical order. Throws BudgetExhausted
/// when the node limit is hit or more than max_results configurations exist.
std::vector<Configuration> enumerate_configurations(const Hypergraph& F, const ConfigQuery& q,
                                                    const SearchBudget& budget = {},
                                                    int workers = 1);

/// Exhaustive freeness check; runs without a budget.
bool is_free(const Hypergraph& F, const Params& params, int ell, bool minus);
std::optional<Configuration> freeness_witness(const Hypergraph& F, const Params& params, int ell,
                                              bool minus);

std::vector<Configuration> two_configs_through_edge(const Hypergraph& F, const Params& params,
                                                    EdgeIndex e, bool verify_k_free = false);
std::vector<Configuration> two_configs_through_tset(const Hypergraph& F, const Params& params,
                                                    const TSet& T);

/// Greedy inclusion-maximal family of pairwise edge-disjoint configurations,
/// consumed in canonical discovery order.
std::vector<Configuration> maximal_disjoint_collection(const Hypergraph& F, const ConfigQuery& q,
                                                       const ConfigFilter& extra_filter = {},
                                                       const SearchBudget& budget = {});

/// Flags (by edge index) the edges lying in at least one configuration matching q.
std::vector<char> edges_in_configurations(const Hypergraph& F, const ConfigQuery& q,
                                          const SearchBudget& budget = SearchBudget::unlimited());

/// Whether some pair of the configuration's edges is a 2-configuration.
bool contains_two_configuration(const Hypergraph& F, const Params& params, const Configuration& S);

/// Re-verifies span and constraints of a configuration against a query.
bool satisfies(const Hypergraph& F, const ConfigQuery& q, const Configuration& S);

}  // namespace bes
