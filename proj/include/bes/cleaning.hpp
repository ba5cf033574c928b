#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bes/config_search.hpp"
#include "bes/hypergraph.hpp"

namespace bes {

/// One removal stage of the cleaning procedure. Removed configurations are
/// stored by their edges' vertex lists, since edge indices shift as stages
/// remove edges.
struct CleaningStage {
    std::string name;               // "(k-1)-", "l=<ell>", "S'", "(a,b)=(<a>,<b>)"
    std::vector<std::vector<Edge>> removed;
    std::uint64_t edges_removed = 0;
    std::uint64_t bound = 0;        // multiple of C(n, t-1) the stage may not exceed
};

struct CleaningLedger {
    std::vector<CleaningStage> stages;
    std::uint64_t total_removed = 0;

    /// Sum of the per-stage bounds.
    std::uint64_t total_bound() const;
    bool all_zero() const { return total_removed == 0; }
};

struct CleaningResult {
    Hypergraph cleaned;
    CleaningLedger ledger;
};

/// Removes the edges of greedy maximal edge-disjoint collections so that the
/// result is l^- free for every l in [2, k] dividing k-1 or k, has no
/// 3^- configuration containing a 2-configuration, and has every a^- and
/// b-configuration (a + b = k) edge-disjoint. Throws NotKFree.
CleaningResult clean(const Hypergraph& F, const Params& params);

/// Per-stage edge caps for a hypergraph on n vertices; the stage list is the
/// one clean() runs for these parameters.
std::vector<std::pair<std::string, std::uint64_t>> cleaning_stage_bounds(int n, const Params& params);

struct CleaningViolation {
    std::string property;  // "P1", "P2" or "P3"
    std::string detail;
    Configuration witness;
    std::optional<Configuration> second_witness;  // the b-configuration for P3
};

struct CleaningReport {
    std::vector<CleaningViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Independent exhaustive re-check of the three structural properties.
CleaningReport verify_cleaned(const Hypergraph& F, const Params& params);

}  // namespace bes
