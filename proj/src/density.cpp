#include "bes/density.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_set>

namespace bes {

namespace {

std::string describe(const Configuration& S) {
    std::string s = "edges {";
    for (std::size_t i = 0; i < S.edge_indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(S.edge_indices[i]);
    }
    return s + "}";
}

std::vector<Edge> edges_of(const Hypergraph& G, std::span<const EdgeIndex> idx) {
    std::vector<Edge> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(G.edge(i));
    return out;
}

std::optional<ConfigQuery> query_if_possible(const Hypergraph& F, const Params& p, int ell,
                                             bool minus) {
    auto q = ConfigQuery::of(p, ell, minus);
    if (q.s_max < F.r()) return std::nullopt;
    return q;
}

void require_free(const Hypergraph& F, const Params& p, int ell, bool minus) {
    if (auto w = freeness_witness(F, p, ell, minus))
        throw Error(ErrorCode::PreconditionViolated,
                    std::to_string(ell) + (minus ? "^-" : "") + " configuration at " + describe(*w));
}

/// Throws when some edge lies both in an a-configuration and a b-configuration.
void require_edge_disjoint(const Hypergraph& F, const Params& p, int a, bool a_minus, int b,
                           bool b_minus) {
    auto qa = query_if_possible(F, p, a, a_minus);
    auto qb = query_if_possible(F, p, b, b_minus);
    if (!qa || !qb) return;
    const auto in_a = edges_in_configurations(F, *qa);
    const auto in_b = edges_in_configurations(F, *qb);
    for (EdgeIndex e = 0; e < F.size(); ++e) {
        if (in_a[e] && in_b[e])
            throw Error(ErrorCode::PreconditionViolated,
                        std::to_string(a) + (a_minus ? "^-" : "") + " and " + std::to_string(b) +
                            (b_minus ? "^-" : "") + " configurations share edge " +
                            std::to_string(e));
    }
}

bool subset_of(const VertexSet& a, const VertexSet& b) { return (a & ~b).none(); }

VertexSet tset_mask(const TSet& T) { return to_mask(T); }

class Reducer {
public:
    Reducer(const Hypergraph& F1, const Params& p) : p_(p), G_(F1) {
        c_rt_ = binom_checked(static_cast<std::uint64_t>(p.r), static_cast<std::uint64_t>(p.t));
        j_ = supporting_J(G_, p_).size();
        trace_.j_initial = j_;
        trace_.f_initial = G_.size();
    }

    const Hypergraph& graph() const { return G_; }

    void apply(int phase, std::string rule, const Configuration& S, std::vector<EdgeIndex> drop,
               std::uint64_t multiple) {
        ReductionStep step;
        step.phase = phase;
        step.rule = std::move(rule);
        step.configuration = edges_of(G_, S.edge_indices);
        step.removed = edges_of(G_, drop);
        step.j_before = j_;
        step.f_before = G_.size();
        G_ = G_.without(drop);
        j_ = supporting_J(G_, p_).size();
        if (j_ > step.j_before)
            throw Error(ErrorCode::InvariantViolated, "J grew after removing edges");
        step.j_after = j_;
        step.f_after = G_.size();
        step.required = multiple * c_rt_;
        step.ok = step.delta_j() >= step.required && step.delta_j() >= c_rt_ * step.delta_f();
        trace_.steps.push_back(std::move(step));
    }

    ReductionTrace finish() {
        trace_.final_graph = G_;
        trace_.j_final = j_;
        trace_.f_final = G_.size();
        return std::move(trace_);
    }

private:
    const Params& p_;
    Hypergraph G_;
    std::uint64_t c_rt_ = 0;
    std::uint64_t j_ = 0;
    ReductionTrace trace_;
};

std::optional<Configuration> first_three_in_four(const Hypergraph& G, const Params& p) {
    const int s4 = p.s(4);
    std::optional<Configuration> hit;
    search_configurations(G.masks(), ConfigQuery::of(p, 3), SearchBudget::unlimited(),
                          [&](std::span<const EdgeIndex> idx, const VertexSet& u) {
                              for (EdgeIndex e = 0; e < G.size(); ++e) {
                                  if (std::find(idx.begin(), idx.end(), e) != idx.end()) continue;
                                  if (static_cast<int>((u | G.mask(e)).count()) <= s4) {
                                      hit = Configuration{{idx.begin(), idx.end()},
                                                          static_cast<int>(u.count())};
                                      return false;
                                  }
                              }
                              return true;
                          });
    return hit;
}

}  // namespace

TGraph supporting_J(const Hypergraph& F, const Params& params) {
    params.validate();
    std::unordered_set<VertexSet> spans;
    const int top = params.k / 2;
    for (int ell = 1; ell <= top && static_cast<std::size_t>(ell) <= F.size(); ++ell) {
        search_configurations(F.masks(), ConfigQuery::of(params, ell), SearchBudget::unlimited(),
                              [&](std::span<const EdgeIndex>, const VertexSet& u) {
                                  spans.insert(u);
                                  return true;
                              });
    }
    std::unordered_set<TSet, TSetHash> members;
    for (const auto& u : spans) {
        const auto vs = to_vertices(u);
        for_each_subset(vs, params.t, [&](const TSet& T) { members.insert(T); });
    }
    return TGraph(params.t, {members.begin(), members.end()});
}

std::optional<int> non_edge_girth(const Hypergraph& F, const TGraph& J, int g_cap) {
    const int t = J.t();
    if (t < 1 || t >= F.r()) throw Error(ErrorCode::BadT, "J's t must satisfy 1 <= t < r");
    if (g_cap < 1) throw Error(ErrorCode::BadArgs, "g_cap must be positive");
    for (const auto& e : F.edges())
        for_each_subset(e, t, [&](const TSet& T) {
            if (!J.contains(T))
                throw Error(ErrorCode::NotSupporting, "J misses a t-subset of an edge");
        });

    const Params p{F.r(), t, 2};
    for (int g = 1; g <= g_cap && static_cast<std::size_t>(g) <= F.size(); ++g) {
        bool found = false;
        search_configurations(F.masks(), ConfigQuery::of(p, g), SearchBudget::unlimited(),
                              [&](std::span<const EdgeIndex>, const VertexSet& u) {
                                  const auto vs = to_vertices(u);
                                  for_each_subset(vs, t, [&](const TSet& T) {
                                      if (!found && !J.contains(T)) found = true;
                                  });
                                  return !found;
                              });
        if (found) return g;
    }
    return std::nullopt;
}

bool ratio_step_ok(std::uint64_t x1, std::uint64_t y1, std::uint64_t x2, std::uint64_t y2,
                   const Rational& alpha) {
    const Rational X1(x1), Y1(y1), X2(x2), Y2(y2);
    if (X1 > alpha * Y1) throw Error(ErrorCode::HypothesisViolated, "x1 <= alpha*y1");
    if (x2 > x1) throw Error(ErrorCode::HypothesisViolated, "x2 <= x1");
    if (y2 > y1) throw Error(ErrorCode::HypothesisViolated, "y2 <= y1");
    if (X1 - X2 < alpha * (Y1 - Y2))
        throw Error(ErrorCode::HypothesisViolated, "x1 - x2 >= alpha*(y1 - y2)");
    if (BigInt(x1) * y2 < BigInt(x2) * y1)
        throw Error(ErrorCode::InvariantViolated, "x1*y2 >= x2*y1 failed");
    return true;
}

GridSummary sweep_ratio_steps(std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto draw = [&](std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
    };
    GridSummary g;
    while (g.checked < samples) {
        const Rational alpha = make_rational(draw(1, 60), draw(1, 6));
        const std::uint64_t y1 = draw(0, 2000);
        const std::uint64_t y2 = draw(0, y1);
        const Rational cap = alpha * y1;
        const auto x1 = static_cast<std::uint64_t>(
            boost::multiprecision::numerator(cap) / boost::multiprecision::denominator(cap) *
            draw(0, 1000) / 1000);
        const Rational slack = Rational(x1) - alpha * (y1 - y2);
        if (slack < 0) continue;
        const auto x2_max = static_cast<std::uint64_t>(boost::multiprecision::numerator(slack) /
                                                       boost::multiprecision::denominator(slack));
        const std::uint64_t x2 = draw(0, x2_max);
        ++g.checked;
        try {
            ratio_step_ok(x1, y1, x2, y2, alpha);
        } catch (const Error& e) {
            ++g.failures;
            g.counterexamples.push_back(std::string(e.what()) + " at " + std::to_string(x1) + "," +
                                        std::to_string(y1) + "," + std::to_string(x2) + "," +
                                        std::to_string(y2) + " alpha=" + to_string(alpha));
        }
    }
    return g;
}

bool ReductionTrace::all_steps_ok() const {
    return std::all_of(steps.begin(), steps.end(), [](const ReductionStep& s) { return s.ok; });
}

bool ReductionTrace::summed_ok(std::uint64_t c_rt) const {
    if (j_final > j_initial || f_final > f_initial) return false;
    return j_initial - j_final >= c_rt * (f_initial - f_final);
}

ReductionTrace reduce_k5(const Hypergraph& F1, const Params& params) {
    params.validate();
    if (params.k != 5) throw Error(ErrorCode::BadArgs, "reduce_k5 needs k = 5");
    require_free(F1, params, 2, true);
    require_free(F1, params, 4, true);
    require_free(F1, params, 5, false);
    require_edge_disjoint(F1, params, 2, false, 3, true);

    Reducer red(F1, params);
    const auto q = ConfigQuery::of(params, 3, true);
    while (q.s_max >= F1.r()) {
        auto S = find_configuration(red.graph(), q, SearchBudget::unlimited());
        if (!S) break;
        red.apply(1, "three-minus", *S, S->edge_indices, 3);
    }
    return red.finish();
}

std::string to_string(FourMinusCase c) {
    switch (c) {
        case FourMinusCase::NoPair: return "no-pair";
        case FourMinusCase::OnePair: return "one-pair";
        case FourMinusCase::TwoPairs: return "two-pairs";
    }
    return "unknown";
}

FourMinusClassification classify_four_minus(const Hypergraph& G, const Params& params,
                                            const Configuration& S) {
    if (S.size() != 4) throw Error(ErrorCode::BadArgs, "expected a 4-edge configuration");
    const auto& idx = S.edge_indices;
    const int s2 = params.s(2), s3 = params.s(3);
    for (int skip = 0; skip < 4; ++skip) {
        VertexSet u;
        for (int i = 0; i < 4; ++i)
            if (i != skip) u |= G.mask(idx[i]);
        if (static_cast<int>(u.count()) <= s3)
            throw Error(ErrorCode::CaseAnalysisExhausted,
                        "4^- configuration contains a 3-configuration");
    }
    FourMinusClassification out;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (static_cast<int>((G.mask(idx[i]) | G.mask(idx[j])).count()) <= s2)
                out.pairs.emplace_back(idx[i], idx[j]);
    if (out.pairs.empty()) {
        out.kind = FourMinusCase::NoPair;
    } else if (out.pairs.size() == 1) {
        out.kind = FourMinusCase::OnePair;
    } else if (out.pairs.size() == 2) {
        const auto [a, b] = out.pairs[0];
        const auto [c, d] = out.pairs[1];
        if (a == c || a == d || b == c || b == d)
            throw Error(ErrorCode::CaseAnalysisExhausted, "overlapping 2-configurations");
        out.kind = FourMinusCase::TwoPairs;
    } else {
        throw Error(ErrorCode::CaseAnalysisExhausted, "more than two 2-configurations");
    }
    return out;
}

ReductionTrace reduce_k7(const Hypergraph& F1, const Params& params) {
    params.validate();
    if (params.k != 7) throw Error(ErrorCode::BadArgs, "reduce_k7 needs k = 7");
    if (!(params.t >= 3 || params.r >= 4))
        throw Error(ErrorCode::PreconditionViolated, "needs t >= 3 or r >= 4");
    require_free(F1, params, 2, true);
    require_free(F1, params, 3, true);
    require_free(F1, params, 6, true);
    require_free(F1, params, 7, false);
    require_edge_disjoint(F1, params, 2, false, 5, true);
    require_edge_disjoint(F1, params, 3, false, 4, true);

    Reducer red(F1, params);
    while (auto S = first_three_in_four(red.graph(), params))
        red.apply(1, "three-in-four", *S, S->edge_indices, 3);

    const auto q4 = ConfigQuery::of(params, 4, true);
    while (auto S = find_configuration(red.graph(), q4, SearchBudget::unlimited())) {
        const auto cls = classify_four_minus(red.graph(), params, *S);
        switch (cls.kind) {
            case FourMinusCase::NoPair:
                red.apply(2, "four-minus-no-pair", *S, {S->edge_indices.front()}, 1);
                break;
            case FourMinusCase::OnePair:
                red.apply(2, "four-minus-one-pair", *S, {cls.pairs[0].first, cls.pairs[0].second},
                          2);
                break;
            case FourMinusCase::TwoPairs:
                red.apply(2, "four-minus-two-pairs", *S, S->edge_indices, 4);
                break;
        }
    }

    const auto q5 = ConfigQuery::of(params, 5, true);
    while (auto S = find_configuration(red.graph(), q5, SearchBudget::unlimited()))
        red.apply(3, "five-minus", *S, S->edge_indices, 5);
    return red.finish();
}

OddPartition odd_partition(const Hypergraph& F, const Params& params) {
    params.validate();
    if (params.k % 2 == 0) throw Error(ErrorCode::BadArgs, "odd_partition needs odd k");
    if (auto w = freeness_witness(F, params, params.k, false))
        throw Error(ErrorCode::NotKFree, "k-configuration at " + describe(*w));

    const int t = params.t;
    OddPartition out;
    const auto comps = t_tight_components(F, t);
    for (const auto& c : comps) {
        if (c.size() > static_cast<std::size_t>(params.k - 1))
            throw Error(ErrorCode::ComponentTooLarge,
                        "component with " + std::to_string(c.size()) + " edges");
        if (c.size() == 1) {
            out.F1.push_back(c[0]);
        } else if (c.size() == 2) {
            if (static_cast<int>((F.mask(c[0]) & F.mask(c[1])).count()) != t)
                throw Error(ErrorCode::PreconditionViolated,
                            "two-edge component sharing more than t vertices");
            out.F2.insert(out.F2.end(), c.begin(), c.end());
        } else {
            out.F3.insert(out.F3.end(), c.begin(), c.end());
            out.large_components.push_back(c);
        }
    }
    std::sort(out.F1.begin(), out.F1.end());
    std::sort(out.F2.begin(), out.F2.end());
    std::sort(out.F3.begin(), out.F3.end());

    auto shadow_of = [&](const std::vector<EdgeIndex>& idx) {
        std::vector<TSet> ts;
        for (auto i : idx) for_each_subset(F.edge(i), t, [&](const TSet& T) { ts.push_back(T); });
        return TGraph(t, std::move(ts));
    };
    out.G1 = shadow_of(out.F1);
    out.G2 = shadow_of(out.F2);

    const int s2 = params.s(2);
    std::map<TSet, int> owners;
    for (const auto& c : out.large_components) {
        std::unordered_set<TSet, TSetHash> mine;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                const auto u = F.mask(c[i]) | F.mask(c[j]);
                if (static_cast<int>(u.count()) > s2) continue;
                for_each_subset(to_vertices(u), t, [&](const TSet& T) { mine.insert(T); });
            }
        for (const auto& T : mine) ++owners[T];
    }
    std::vector<TSet> g3;
    for (const auto& [T, cnt] : owners)
        if (cnt == 1 && !out.G1.contains(T) && !out.G2.contains(T)) g3.push_back(T);
    out.G3 = TGraph(t, std::move(g3));

    const std::uint64_t c_rt =
        binom_checked(static_cast<std::uint64_t>(params.r), static_cast<std::uint64_t>(t));
    out.alpha = make_rational(2 * BigInt(c_rt) - 1, 2);

    if (out.G1.size() != c_rt * out.F1.size())
        throw Error(ErrorCode::InvariantViolated, "|G1| != C(r,t)|F1|");
    if (2 * out.G2.size() != (2 * c_rt - 1) * out.F2.size())
        throw Error(ErrorCode::InvariantViolated, "|G2| != (2C(r,t)-1)|F2|/2");
    for (const auto& T : out.G1.members())
        if (out.G2.contains(T) || out.G3.contains(T))
            throw Error(ErrorCode::InvariantViolated, "G1 meets G2 or G3");
    for (const auto& T : out.G2.members())
        if (out.G3.contains(T)) throw Error(ErrorCode::InvariantViolated, "G2 meets G3");
    if (BigInt(out.G1.size() + out.G2.size() + out.G3.size()) > binom(F.n(), t))
        throw Error(ErrorCode::InvariantViolated, "|G1|+|G2|+|G3| > C(n,t)");
    return out;
}

G3Report odd_g3_bound_report(const Hypergraph& F, const OddPartition& p, const Params& params) {
    params.validate();
    G3Report rep;
    const int t = params.t, k = params.k;
    const int s2 = params.s(2);

    // Spans of every 2-configuration of F tagged with the component holding it.
    std::vector<int> comp_of(F.size(), -1);
    for (std::size_t ci = 0; ci < p.large_components.size(); ++ci)
        for (auto e : p.large_components[ci]) comp_of.at(e) = static_cast<int>(ci);
    struct Pair {
        VertexSet span;
        int comp;
    };
    std::vector<Pair> pairs;
    for (EdgeIndex i = 0; i < F.size(); ++i)
        for (EdgeIndex j = i + 1; j < F.size(); ++j) {
            const auto u = F.mask(i) | F.mask(j);
            if (static_cast<int>(u.count()) <= s2) pairs.push_back({u, comp_of[i]});
        }

    const BigInt shadow_cap = BigInt(k - 3) * binom(2 * t - 2, t);
    const BigInt pair_cap = BigInt(k - 2) * (k - 5) * binom(4 * t - 4, t);

    for (std::size_t ci = 0; ci < p.large_components.size(); ++ci) {
        const auto& C = p.large_components[ci];
        ComponentG3Report cr;
        cr.component = C;

        std::optional<std::pair<std::size_t, std::size_t>> first;
        for (std::size_t i = 0; i < C.size() && !first; ++i)
            for (std::size_t j = i + 1; j < C.size(); ++j)
                if (static_cast<int>((F.mask(C[i]) | F.mask(C[j])).count()) <= s2) {
                    first = {i, j};
                    break;
                }
        if (!first)
            throw Error(ErrorCode::NoTwoConfiguration,
                        "component of size " + std::to_string(C.size()) + " has no 2-configuration");
        cr.s_c = make_configuration(F, {C[first->first], C[first->second]});

        const auto H = F.restricted_to(C);
        auto q3 = ConfigQuery::of(params, 3);
        q3.must_contain = {first->first, first->second};
        if (auto S3 = find_configuration(H, q3, SearchBudget::unlimited())) {
            std::vector<EdgeIndex> host;
            for (auto li : S3->edge_indices) host.push_back(C[li]);
            cr.s_c_prime = make_configuration(F, std::move(host));
        }

        const auto vs_mask = configuration_vertices(F, cr.s_c.edge_indices);
        const auto vs = to_vertices(vs_mask);
        std::vector<char> in_c(F.size(), 0);
        for (auto e : C) in_c[e] = 1;
        for_each_subset(vs, t, [&](const TSet& T) {
            ++cr.span_tsets;
            const auto tm = tset_mask(T);
            if (p.G3.contains(T)) ++cr.measured;
            for (EdgeIndex e = 0; e < F.size(); ++e)
                if (!in_c[e] && subset_of(tm, F.mask(e))) {
                    ++cr.outside_shadow;
                    break;
                }
            for (const auto& pr : pairs)
                if (pr.comp != static_cast<int>(ci) && subset_of(tm, pr.span)) {
                    ++cr.outside_two_config;
                    break;
                }
        });

        cr.outside_shadow_cap = shadow_cap;
        cr.outside_two_config_cap = pair_cap;
        cr.analytic_bound = binom(static_cast<long long>(vs.size()), t) - shadow_cap - pair_cap;
        cr.alpha_target = p.alpha * static_cast<long long>(C.size());

        if (cr.measured + cr.outside_shadow + cr.outside_two_config < cr.span_tsets)
            throw Error(ErrorCode::InvariantViolated,
                        "a t-subset of V(S_C) is neither in G3 nor excluded");
        if (BigInt(cr.outside_shadow) > shadow_cap)
            throw Error(ErrorCode::InvariantViolated, "outside shadow count above its cap");
        if (cr.s_c_prime) {
            if (BigInt(cr.outside_two_config) > pair_cap)
                throw Error(ErrorCode::InvariantViolated,
                            "outside 2-configuration count above its cap");
            if (BigInt(cr.measured) < cr.analytic_bound)
                throw Error(ErrorCode::InvariantViolated, "measured G3 count below analytic bound");
        }
        cr.alpha_holds = Rational(cr.measured) >= cr.alpha_target;
        cr.alpha_asserted = cr.s_c_prime.has_value() && Rational(cr.analytic_bound) >= cr.alpha_target;
        if (cr.alpha_asserted && !cr.alpha_holds)
            throw Error(ErrorCode::InvariantViolated, "measured G3 count below alpha |C|");
        rep.components.push_back(std::move(cr));
    }
    return rep;
}

J0J2Check check_j0_j2(const Hypergraph& F, const Params& params) {
    params.validate();
    if (params.k % 2 != 0) throw Error(ErrorCode::PreconditionViolated, "k must be even");
    require_free(F, params, params.k, false);
    require_free(F, params, 2, true);
    if (auto q = query_if_possible(F, params, 3, true)) {
        bool bad = false;
        search_configurations(F.masks(), *q, SearchBudget::unlimited(),
                              [&](std::span<const EdgeIndex> idx, const VertexSet& u) {
                                  Configuration S{{idx.begin(), idx.end()},
                                                  static_cast<int>(u.count())};
                                  bad = contains_two_configuration(F, params, S);
                                  return !bad;
                              });
        if (bad)
            throw Error(ErrorCode::PreconditionViolated,
                        "3^- configuration containing a 2-configuration");
    }
    const auto prof = cover_profile(F, params.t, true);
    J0J2Check out;
    out.j0 = prof.exactly(0);
    out.j_ge2 = prof.at_least(2);
    out.lhs = BigInt(params.k - 2) * (params.k - 2) * out.j0;
    out.rhs = j0_j2_coefficient(params.r, params.t, params.k) * out.j_ge2;
    out.holds = out.lhs >= out.rhs;
    return out;
}

}  // namespace bes
