#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bes/bounds.hpp"
#include "bes/config_search.hpp"
#include "bes/hypergraph.hpp"

namespace bes {

/// The t-sets lying inside the vertex span of some l-configuration with
/// l <= floor(k/2). Always contains the t-shadow.
TGraph supporting_J(const Hypergraph& F, const Params& params);

/// Smallest g in [1, g_cap] such that some g-configuration of F spans a t-set
/// missing from J; nullopt when no such g exists up to the cap. The ambient t
/// is J's. Throws NotSupporting when J misses a member of the t-shadow.
std::optional<int> non_edge_girth(const Hypergraph& F, const TGraph& J, int g_cap);

/// Checks x1 <= alpha y1, x2 <= x1, y2 <= y1 and x1 - x2 >= alpha (y1 - y2),
/// throwing HypothesisViolated naming the first that fails. Then confirms
/// x1 y2 >= x2 y1 exactly (InvariantViolated if not) and returns true.
bool ratio_step_ok(std::uint64_t x1, std::uint64_t y1, std::uint64_t x2, std::uint64_t y2,
                   const Rational& alpha);

/// Draws hypothesis-satisfying quadruples with random rational alpha and
/// checks each through ratio_step_ok.
GridSummary sweep_ratio_steps(std::size_t samples, std::uint64_t seed);

struct ReductionStep {
    int phase = 1;
    std::string rule;               // which removal rule fired
    std::vector<Edge> configuration;  // the configuration S that triggered the step
    std::vector<Edge> removed;        // the edges actually removed
    std::uint64_t j_before = 0, j_after = 0;
    std::uint64_t f_before = 0, f_after = 0;
    std::uint64_t required = 0;     // lower bound demanded of j_before - j_after
    bool ok = false;

    std::uint64_t delta_j() const { return j_before - j_after; }
    std::uint64_t delta_f() const { return f_before - f_after; }
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    Hypergraph final_graph;
    std::uint64_t j_initial = 0, j_final = 0;
    std::uint64_t f_initial = 0, f_final = 0;

    bool all_steps_ok() const;
    /// |J(F1)| - |J(final)| >= C(r,t) (|F1| - |final|).
    bool summed_ok(std::uint64_t c_rt) const;
};

/// Repeatedly removes the first 3^- configuration. Input must be 2^-, 4^- and
/// 5-free with 2-configurations edge-disjoint from 3^- configurations
/// (PreconditionViolated otherwise). Requires k = 5.
ReductionTrace reduce_k5(const Hypergraph& F1, const Params& params);

enum class FourMinusCase { NoPair, OnePair, TwoPairs };
std::string to_string(FourMinusCase c);

struct FourMinusClassification {
    FourMinusCase kind = FourMinusCase::NoPair;
    /// The 2-configurations found inside S, as pairs of host edge indices.
    std::vector<std::pair<EdgeIndex, EdgeIndex>> pairs;
};

/// Sorts a 4-edge configuration into one of the three shapes the k = 7
/// reduction handles. Throws CaseAnalysisExhausted when S contains a
/// 3-configuration or its 2-configurations overlap.
FourMinusClassification classify_four_minus(const Hypergraph& G, const Params& params,
                                            const Configuration& S);

/// Three phases, each run to exhaustion: remove 3-configurations lying in a
/// 4-configuration, then resolve 4^- configurations by shape, then remove
/// 5^- configurations. Requires k = 7 and (t >= 3 or r >= 4); the input must
/// be 2^-, 3^-, 6^- and 7-free with 2-configurations edge-disjoint from 5^-
/// configurations and 3-configurations edge-disjoint from 4^- configurations.
ReductionTrace reduce_k7(const Hypergraph& F1, const Params& params);

struct OddPartition {
    std::vector<EdgeIndex> F1, F2, F3;
    std::vector<std::vector<EdgeIndex>> large_components;  // the components making up F3
    TGraph G1, G2, G3;
    Rational alpha;
};

/// Splits F by t-tight component size (1, 2, >= 3) and builds the three
/// disjoint t-set families. Throws NotKFree, ComponentTooLarge, and
/// PreconditionViolated when a two-edge component shares more than t vertices.
OddPartition odd_partition(const Hypergraph& F, const Params& params);

struct ComponentG3Report {
    std::vector<EdgeIndex> component;
    Configuration s_c;
    std::optional<Configuration> s_c_prime;
    std::uint64_t span_tsets = 0;          // C(|V(S_C)|, t)
    std::uint64_t outside_shadow = 0;      // t-subsets of V(S_C) in the shadow of F - C
    std::uint64_t outside_two_config = 0;  // t-subsets of V(S_C) in a 2-configuration not inside C
    BigInt outside_shadow_cap;
    BigInt outside_two_config_cap;
    std::uint64_t measured = 0;            // |G3 restricted to V(S_C)|
    BigInt analytic_bound;
    Rational alpha_target;                 // alpha |C|
    bool alpha_asserted = false;
    bool alpha_holds = false;
};

struct G3Report {
    std::vector<ComponentG3Report> components;
};

/// Per large component, measures the G3 t-sets inside its first
/// 2-configuration against the analytic lower bound. The cap and bound
/// comparisons are asserted (InvariantViolated); the comparison with
/// alpha |C| is asserted only when the analytic bound already reaches it.
G3Report odd_g3_bound_report(const Hypergraph& F, const OddPartition& p, const Params& params);

struct J0J2Check {
    std::uint64_t j0 = 0;
    std::uint64_t j_ge2 = 0;
    BigInt lhs;  // (k-2)^2 |J_0|
    BigInt rhs;  // coefficient |J_{>=2}|
    bool holds = false;
};

/// The double-count inequality between uncovered and multiply covered t-sets.
/// Requires k even and F k-free, 2^- free, with no 3^- configuration
/// containing a 2-configuration (PreconditionViolated otherwise).
J0J2Check check_j0_j2(const Hypergraph& F, const Params& params);

}  // namespace bes
