#include "bes/cleaning.hpp"

#include <algorithm>
#include <numeric>

namespace bes {

namespace {

enum class StageKind { KMinusOneMinus, Divisor, TwoInThreeMinus, Disjointness };

struct StagePlan {
    StageKind kind;
    std::string name;
    int ell = 0;  // configuration size removed by this stage
    int a = 0;    // (a,b) stages only
    std::uint64_t factor = 0;
};

std::vector<StagePlan> plan_stages(const Params& p) {
    const int k = p.k;
    std::vector<StagePlan> out;
    if (k - 1 >= 2)
        out.push_back({StageKind::KMinusOneMinus, "(k-1)-", k - 1, 0,
                       static_cast<std::uint64_t>(k - 1)});
    for (int ell = 2; ell < k - 1; ++ell) {
        int j = 0;
        if ((k - 1) % ell == 0)
            j = (k - 1) / ell;
        else if (k % ell == 0)
            j = k / ell;
        else
            continue;
        out.push_back({StageKind::Divisor, "l=" + std::to_string(ell), ell, 0,
                       static_cast<std::uint64_t>(ell) * static_cast<std::uint64_t>(j - 1)});
    }
    if (k % 3 == 2)
        out.push_back({StageKind::TwoInThreeMinus, "S'", 3, 0,
                       3 * static_cast<std::uint64_t>((k - 2) / 3)});
    for (int a = 1; a <= k - 1; ++a) {
        const int b = k - a;
        out.push_back({StageKind::Disjointness,
                       "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")", b, a,
                       static_cast<std::uint64_t>(b) * static_cast<std::uint64_t>(a)});
    }
    return out;
}

std::optional<ConfigQuery> minus_query(const Hypergraph& F, const Params& p, int ell) {
    auto q = ConfigQuery::of(p, ell, true);
    if (q.s_max < F.r()) return std::nullopt;  // no edge set can span fewer than r vertices
    return q;
}

std::vector<Configuration> stage_collection(const Hypergraph& G, const Params& p,
                                            const StagePlan& stage) {
    const auto budget = SearchBudget::unlimited();
    switch (stage.kind) {
        case StageKind::KMinusOneMinus:
        case StageKind::Divisor: {
            auto q = minus_query(G, p, stage.ell);
            if (!q) return {};
            return maximal_disjoint_collection(G, *q, {}, budget);
        }
        case StageKind::TwoInThreeMinus: {
            auto q = minus_query(G, p, 3);
            if (!q) return {};
            return maximal_disjoint_collection(
                G, *q,
                [&](const Hypergraph& H, const Configuration& S) {
                    return contains_two_configuration(H, p, S);
                },
                budget);
        }
        case StageKind::Disjointness: {
            auto qa = minus_query(G, p, stage.a);
            if (!qa) return {};
            const auto in_minus = edges_in_configurations(G, *qa, budget);
            if (std::none_of(in_minus.begin(), in_minus.end(), [](char c) { return c != 0; }))
                return {};
            return maximal_disjoint_collection(
                G, ConfigQuery::of(p, stage.ell),
                [&](const Hypergraph&, const Configuration& S) {
                    return std::any_of(S.edge_indices.begin(), S.edge_indices.end(),
                                       [&](EdgeIndex e) { return in_minus[e] != 0; });
                },
                budget);
        }
    }
    return {};
}

}  // namespace

std::uint64_t CleaningLedger::total_bound() const {
    std::uint64_t s = 0;
    for (const auto& st : stages) s += st.bound;
    return s;
}

std::vector<std::pair<std::string, std::uint64_t>> cleaning_stage_bounds(int n,
                                                                         const Params& params) {
    params.validate();
    const auto base = binom_checked(static_cast<std::uint64_t>(n),
                                    static_cast<std::uint64_t>(params.t - 1));
    std::vector<std::pair<std::string, std::uint64_t>> out;
    for (const auto& st : plan_stages(params)) out.emplace_back(st.name, st.factor * base);
    return out;
}

CleaningResult clean(const Hypergraph& F, const Params& params) {
    params.validate();
    if (auto w = freeness_witness(F, params, params.k, false))
        throw Error(ErrorCode::NotKFree, "input contains a k-configuration");

    const auto base = binom_checked(static_cast<std::uint64_t>(F.n()),
                                    static_cast<std::uint64_t>(params.t - 1));
    CleaningResult res{F, {}};
    for (const auto& plan : plan_stages(params)) {
        CleaningStage stage;
        stage.name = plan.name;
        stage.bound = plan.factor * base;
        auto collection = stage_collection(res.cleaned, params, plan);
        std::vector<EdgeIndex> drop;
        for (const auto& S : collection) {
            std::vector<Edge> edges;
            for (auto i : S.edge_indices) {
                edges.push_back(res.cleaned.edge(i));
                drop.push_back(i);
            }
            stage.removed.push_back(std::move(edges));
        }
        stage.edges_removed = drop.size();
        if (stage.edges_removed > stage.bound)
            throw Error(ErrorCode::InvariantViolated,
                        "stage " + stage.name + " removed " + std::to_string(stage.edges_removed) +
                            " edges, above its bound " + std::to_string(stage.bound));
        res.cleaned = res.cleaned.without(drop);
        res.ledger.total_removed += stage.edges_removed;
        res.ledger.stages.push_back(std::move(stage));
    }
    return res;
}

CleaningReport verify_cleaned(const Hypergraph& F, const Params& params) {
    params.validate();
    CleaningReport rep;
    const int k = params.k;
    const auto budget = SearchBudget::unlimited();

    for (int ell = 2; ell <= k; ++ell) {
        if ((k - 1) % ell != 0 && k % ell != 0) continue;
        if (auto w = freeness_witness(F, params, ell, true))
            rep.violations.push_back({"P1", std::to_string(ell) + "^- configuration", *w, {}});
    }

    if (auto q = minus_query(F, params, 3)) {
        std::optional<Configuration> hit;
        search_configurations(F.masks(), *q, budget,
                              [&](std::span<const EdgeIndex> idx, const VertexSet& u) {
                                  Configuration S{{idx.begin(), idx.end()},
                                                  static_cast<int>(u.count())};
                                  if (!contains_two_configuration(F, params, S)) return true;
                                  hit = std::move(S);
                                  return false;
                              });
        if (hit)
            rep.violations.push_back({"P2", "3^- configuration containing a 2-configuration", *hit,
                                      {}});
    }

    for (int a = 1; a <= k - 1; ++a) {
        const int b = k - a;
        auto qa = minus_query(F, params, a);
        if (!qa) continue;
        const auto in_minus = edges_in_configurations(F, *qa, budget);
        for (EdgeIndex e = 0; e < F.size(); ++e) {
            if (!in_minus[e]) continue;
            auto qb = ConfigQuery::of(params, b);
            qb.must_contain = {e};
            auto B = find_configuration(F, qb, budget);
            if (!B) continue;
            auto qa_e = *qa;
            qa_e.must_contain = {e};
            auto A = find_configuration(F, qa_e, budget);
            rep.violations.push_back({"P3",
                                      std::to_string(a) + "^- and " + std::to_string(b) +
                                          "-configuration share edge " + std::to_string(e),
                                      *A, *B});
            break;
        }
    }
    return rep;
}

}  // namespace bes
