#include "bes/report.hpp"

#include <cstdio>

namespace bes {

Json to_json(const Hypergraph& F) {
    return {{"r", F.r()}, {"n", F.n()}, {"m", F.size()}, {"edges", F.edges()}};
}

Json to_json(const Configuration& S) {
    return {{"edges", S.edge_indices}, {"span", S.span}};
}

Json to_json(const TGraph& J) { return {{"t", J.t()}, {"size", J.size()}, {"members", J.members()}}; }

Json to_json(const CoverProfile& p) {
    Json hist = Json::object();
    for (const auto& [i, c] : p.histogram) hist[std::to_string(i)] = c;
    return {{"t", p.t}, {"covered", p.counts.size()}, {"histogram", hist}};
}

Json to_json(const CleaningLedger& ledger) {
    Json stages = Json::array();
    for (const auto& s : ledger.stages)
        stages.push_back({{"stage", s.name},
                          {"configurations", s.removed.size()},
                          {"edges_removed", s.edges_removed},
                          {"bound", s.bound},
                          {"removed", s.removed}});
    return {{"stages", stages},
            {"total_removed", ledger.total_removed},
            {"total_bound", ledger.total_bound()}};
}

Json to_json(const CleaningReport& rep) {
    Json v = Json::array();
    for (const auto& x : rep.violations) {
        Json j = {{"property", x.property}, {"detail", x.detail}, {"witness", to_json(x.witness)}};
        if (x.second_witness) j["second_witness"] = to_json(*x.second_witness);
        v.push_back(std::move(j));
    }
    return {{"ok", rep.ok()}, {"violations", v}};
}

Json to_json(const ReductionStep& s, std::uint64_t c_rt) {
    return {{"phase", s.phase},
            {"rule", s.rule},
            {"configuration", s.configuration},
            {"removed", s.removed},
            {"j_before", s.j_before},
            {"j_after", s.j_after},
            {"f_before", s.f_before},
            {"f_after", s.f_after},
            {"delta_j", s.delta_j()},
            {"delta_f", s.delta_f()},
            {"inequality", std::to_string(s.delta_j()) + " >= " + std::to_string(s.required) +
                               " and >= " + std::to_string(c_rt) + "*" + std::to_string(s.delta_f())},
            {"ok", s.ok}};
}

std::string decimal(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", q.convert_to<double>());
    return buf;
}

Json to_json(const KnownValue& v) {
    return {{"r", v.r},           {"t", v.t},
            {"k", v.k},           {"value", to_string(v.value)},
            {"decimal", decimal(v.value)}, {"status", to_string(v.status)},
            {"source", v.source}};
}

std::string table_row(const KnownValue& v) {
    return std::to_string(v.r) + " " + std::to_string(v.t) + " " + std::to_string(v.k) + " " +
           to_string(v.value) + " " + to_string(v.status) + " " + decimal(v.value) + " " + v.source;
}

Json to_json(const SolverResult& res) {
    return {{"optimum", res.optimum},
            {"complete", res.complete},
            {"limit_reached", res.limit_reached},
            {"nodes", res.nodes_explored},
            {"seconds", res.seconds},
            {"witness", to_json(res.witness)}};
}

Json to_json(const GridSummary& g) {
    return {{"checked", g.checked}, {"failures", g.failures}, {"counterexamples", g.counterexamples}};
}

Json to_json(const OddPartition& p) {
    return {{"F1", p.F1},
            {"F2", p.F2},
            {"F3", p.F3},
            {"G1", p.G1.size()},
            {"G2", p.G2.size()},
            {"G3", p.G3.size()},
            {"alpha", to_string(p.alpha)}};
}

Json to_json(const ComponentG3Report& c) {
    Json j = {{"component", c.component},
              {"s_c", to_json(c.s_c)},
              {"span_tsets", c.span_tsets},
              {"outside_shadow", c.outside_shadow},
              {"outside_shadow_cap", c.outside_shadow_cap.str()},
              {"outside_two_config", c.outside_two_config},
              {"outside_two_config_cap", c.outside_two_config_cap.str()},
              {"measured", c.measured},
              {"analytic_bound", c.analytic_bound.str()},
              {"alpha_target", to_string(c.alpha_target)},
              {"alpha_asserted", c.alpha_asserted},
              {"alpha_holds", c.alpha_holds}};
    if (c.s_c_prime) j["s_c_prime"] = to_json(*c.s_c_prime);
    return j;
}

}  // namespace bes
