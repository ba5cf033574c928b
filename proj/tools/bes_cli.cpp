// Command-line front end. Exit status: 0 success, 1 violation found,
// 2 usage or parse error, 3 budget exhausted.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bes/bounds.hpp"
#include "bes/cleaning.hpp"
#include "bes/config_search.hpp"
#include "bes/density.hpp"
#include "bes/io.hpp"
#include "bes/report.hpp"
#include "bes/solver.hpp"

using namespace bes;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

struct Common {
    std::string format = "text";
    int workers = 1;
    bool structured() const { return format == "structured"; }
};

struct Out {
    const Common& c;
    void record(const Json& j) const {
        if (c.structured()) std::cout << j.dump() << "\n";
    }
    void text(const std::string& s) const {
        if (!c.structured()) std::cout << s << "\n";
    }
};

std::string indices(const std::vector<EdgeIndex>& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? " " : "") + std::to_string(idx[i]);
    return s;
}

void emit_graph(const Hypergraph& G, const std::string& path, const Out& out) {
    if (!path.empty()) {
        write_hypergraph_file(G, path);
    } else if (!out.c.structured()) {
        std::cout << serialize(G);
    }
}

int exit_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::BudgetExhausted: return kBudget;
        case ErrorCode::NonUniformEdge:
        case ErrorCode::VertexOutOfRange:
        case ErrorCode::DuplicateEdge:
        case ErrorCode::IndexOutOfRange:
        case ErrorCode::BadT:
        case ErrorCode::BadArgs:
        case ErrorCode::ParseError: return kUsage;
        default: return kViolation;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Configuration-free hypergraph toolkit"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "text or structured (JSON lines)")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--workers", common.workers, "worker threads where supported")
        ->check(CLI::PositiveNumber);

    std::string input, output;
    Params p;
    int ell = 2;
    bool minus = false, all = false;
    std::uint64_t max_nodes = SearchBudget{}.max_nodes;

    auto* check = app.add_subcommand("check", "l-freeness verdict with a witness");
    check->add_option("input", input, "hypergraph file")->required();
    check->add_option("--t", p.t)->required();
    check->add_option("--ell", ell, "configuration size")->required();
    check->add_flag("--minus", minus, "check l^- configurations");
    check->add_flag("--all", all, "list every configuration");
    check->add_option("--max-nodes", max_nodes);

    auto* shadow = app.add_subcommand("shadow", "t-shadow and cover profile");
    shadow->add_option("input", input)->required();
    shadow->add_option("--t", p.t)->required();

    auto* comps = app.add_subcommand("components", "t-tight components");
    comps->add_option("input", input)->required();
    comps->add_option("--t", p.t)->required();
    bool odd = false;
    comps->add_option("--k", p.k, "with --odd, the odd k of the partition");
    comps->add_flag("--odd", odd, "odd-k partition and per-component report");

    auto* clean_cmd = app.add_subcommand("clean", "remove configurations until the structural properties hold");
    clean_cmd->add_option("input", input)->required();
    clean_cmd->add_option("--t", p.t)->required();
    clean_cmd->add_option("--k", p.k)->required();
    clean_cmd->add_option("-o,--output", output);

    auto* reduce = app.add_subcommand("reduce", "J-ratio reduction for k = 5 or 7");
    reduce->add_option("input", input)->required();
    reduce->add_option("--t", p.t)->required();
    reduce->add_option("--k", p.k)->required()->check(CLI::IsMember({5, 7}));
    bool clean_first = false;
    reduce->add_flag("--clean", clean_first, "clean the input first");
    reduce->add_option("-o,--output", output);

    auto* bounds_cmd = app.add_subcommand("bounds", "known limit values and thresholds");
    bool table = false;
    int r_max = 8, k_max = 8;
    bounds_cmd->add_flag("--table", table);
    bounds_cmd->add_option("--r-max", r_max);
    bounds_cmd->add_option("--k-max", k_max);
    bounds_cmd->add_option("--r", p.r);
    bounds_cmd->add_option("--t", p.t);
    bounds_cmd->add_option("--k", p.k);

    auto* solve = app.add_subcommand("solve", "exact maximum of k-free r-graphs on n vertices");
    int n = 0;
    SolverOptions sopts;
    solve->add_option("--r", p.r)->required();
    solve->add_option("--t", p.t)->required();
    solve->add_option("--k", p.k)->required();
    solve->add_option("--n", n)->required();
    solve->add_option("--node-limit", sopts.node_limit);
    solve->add_option("--time-limit", sopts.time_limit_seconds, "seconds");
    solve->add_flag("--symmetry", sopts.symmetry_pruning);
    solve->add_option("-o,--output", output, "witness file");

    auto* pack = app.add_subcommand("pack", "seeded random greedy packing");
    std::uint64_t seed = 0;
    PackConstraints pc;
    pack->add_option("--r", p.r)->required();
    pack->add_option("--t", p.t)->required();
    pack->add_option("--k", p.k)->required();
    pack->add_option("--n", n)->required();
    pack->add_option("--seed", seed);
    pack->add_option("--minus-free", pc.minus_free, "l values to keep l^- free")->delimiter(',');
    pack->add_flag("--no-pair-in-three-minus", pc.no_pair_in_three_minus);
    pack->add_flag("--disjoint-minus-pairs", pc.disjoint_minus_pairs);
    pack->add_option("--max-edges", pc.max_edges);
    pack->add_option("-o,--output", output);

    auto* verify = app.add_subcommand("verify-claims", "sweep the binomial claims and the ratio step");
    int t_max = 6, grid_r = 40, grid_k = 12;
    std::size_t samples = 100000;
    verify->add_option("--r-max", grid_r);
    verify->add_option("--t-max", t_max);
    verify->add_option("--k-max", grid_k);
    verify->add_option("--samples", samples);
    verify->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    const Out out{common};
    try {
        if (*check) {
            const auto F = read_hypergraph_file(input);
            p.r = F.r();
            p.k = std::max(2, ell);
            p.validate();
            const auto q = ConfigQuery::of(p, ell, minus);
            SearchBudget budget;
            budget.max_nodes = max_nodes;
            const std::string what = std::to_string(ell) + (minus ? "^-" : "");
            if (all) {
                auto found = q.s_max >= F.r() ? enumerate_configurations(F, q, budget, common.workers)
                                              : std::vector<Configuration>{};
                Json list = Json::array();
                for (const auto& S : found) {
                    list.push_back(to_json(S));
                    out.text("configuration " + indices(S.edge_indices) + " span " + std::to_string(S.span));
                }
                out.text(found.empty() ? what + "-free" : "not " + what + "-free");
                out.record({{"command", "check"}, {"ell", ell}, {"minus", minus},
                            {"free", found.empty()}, {"configurations", list}});
                return found.empty() ? kOk : kViolation;
            }
            std::optional<Configuration> w;
            if (q.s_max >= F.r()) w = find_configuration(F, q, budget);
            if (!w) {
                out.text(what + "-free");
                out.record({{"command", "check"}, {"ell", ell}, {"minus", minus}, {"free", true}});
                return kOk;
            }
            out.text("not " + what + "-free: witness edges " + indices(w->edge_indices) + " span " +
                     std::to_string(w->span));
            out.record({{"command", "check"}, {"ell", ell}, {"minus", minus}, {"free", false},
                        {"witness", to_json(*w)}});
            return kViolation;
        }

        if (*shadow) {
            const auto F = read_hypergraph_file(input);
            const auto prof = cover_profile(F, p.t, true);
            out.text("t-shadow " + std::to_string(prof.counts.size()));
            for (const auto& [i, c] : prof.histogram)
                out.text("J_" + std::to_string(i) + " " + std::to_string(c));
            out.record({{"command", "shadow"}, {"profile", to_json(prof)}});
            return kOk;
        }

        if (*comps) {
            const auto F = read_hypergraph_file(input);
            if (odd) {
                p.r = F.r();
                const auto part = odd_partition(F, p);
                out.text("F1 " + indices(part.F1));
                out.text("F2 " + indices(part.F2));
                out.text("F3 " + indices(part.F3));
                out.text("G1 " + std::to_string(part.G1.size()) + " G2 " +
                         std::to_string(part.G2.size()) + " G3 " + std::to_string(part.G3.size()) +
                         " alpha " + to_string(part.alpha));
                out.record({{"command", "components"}, {"partition", to_json(part)}});
                const auto rep = odd_g3_bound_report(F, part, p);
                for (const auto& c : rep.components) {
                    out.text("component " + indices(c.component) + ": measured " +
                             std::to_string(c.measured) + " bound " + c.analytic_bound.str() +
                             " alpha|C| " + to_string(c.alpha_target) +
                             (c.alpha_asserted ? " (asserted)" : " (reported)"));
                    out.record({{"command", "components"}, {"g3", to_json(c)}});
                }
                return kOk;
            }
            const auto cs = t_tight_components(F, p.t);
            for (const auto& c : cs) {
                out.text(indices(c));
                out.record({{"command", "components"}, {"component", c}});
            }
            return kOk;
        }

        if (*clean_cmd) {
            const auto F = read_hypergraph_file(input);
            p.r = F.r();
            const auto res = clean(F, p);
            for (const auto& s : res.ledger.stages)
                out.text("stage " + s.name + ": removed " + std::to_string(s.edges_removed) +
                         " edges in " + std::to_string(s.removed.size()) + " configurations (bound " +
                         std::to_string(s.bound) + ")");
            out.text("total removed " + std::to_string(res.ledger.total_removed) + " of " +
                     std::to_string(F.size()));
            out.record({{"command", "clean"}, {"ledger", to_json(res.ledger)},
                        {"graph", to_json(res.cleaned)}});
            emit_graph(res.cleaned, output, out);
            return kOk;
        }

        if (*reduce) {
            auto F = read_hypergraph_file(input);
            p.r = F.r();
            if (clean_first) F = clean(F, p).cleaned;
            const auto trace = p.k == 5 ? reduce_k5(F, p) : reduce_k7(F, p);
            const auto c_rt = binom_checked(p.r, p.t);
            for (const auto& s : trace.steps) {
                out.text("phase " + std::to_string(s.phase) + " " + s.rule + ": removed " +
                         std::to_string(s.delta_f()) + " edges, |J| " + std::to_string(s.j_before) +
                         " -> " + std::to_string(s.j_after) + ", need " + std::to_string(s.required) +
                         (s.ok ? " ok" : " VIOLATED"));
                out.record({{"command", "reduce"}, {"step", to_json(s, c_rt)}});
            }
            const bool ok = trace.all_steps_ok() && trace.summed_ok(c_rt);
            out.text("edges " + std::to_string(trace.f_initial) + " -> " + std::to_string(trace.f_final) +
                     ", |J| " + std::to_string(trace.j_initial) + " -> " + std::to_string(trace.j_final) +
                     (ok ? ", all steps hold" : ", VIOLATION"));
            out.record({{"command", "reduce"}, {"ok", ok}, {"graph", to_json(trace.final_graph)}});
            emit_graph(trace.final_graph, output, out);
            return ok ? kOk : kViolation;
        }

        if (*bounds_cmd) {
            if (table) {
                for (const auto& v : known_value_table(r_max, k_max)) {
                    out.text(table_row(v));
                    out.record(to_json(v));
                }
                return kOk;
            }
            p.validate();
            Json j = {{"r", p.r}, {"t", p.t}, {"k", p.k}};
            if (auto v = pi_known(p.r, p.t, p.k)) {
                out.text(table_row(*v));
                j["known"] = to_json(*v);
            } else {
                out.text("no known value");
            }
            const auto lower = single_edge_lower_bound(p.r, p.t);
            out.text("lower bound " + to_string(lower));
            j["lower_bound"] = to_string(lower);
            if (p.t >= 2 && p.k % 2 == 0) {
                const auto th = r_threshold_even(p.k, p.t);
                out.text("even-k threshold r >= " + th.str());
                j["r_threshold"] = th.str();
            }
            if (p.t >= 2 && p.k % 2 == 1 && p.k >= 3) {
                const auto ub = odd_upper_bound(p.r, p.t, p.k);
                out.text("odd-k upper bound " + to_string(ub.value) + " (large r)");
                j["odd_upper_bound"] = to_string(ub.value);
            }
            out.record(j);
            return kOk;
        }

        if (*solve) {
            const auto res = exact_f(p, n, sopts);
            out.text("optimum " + std::to_string(res.optimum) +
                     (res.complete ? ", complete" : ", limit reached") + " (" +
                     std::to_string(res.nodes_explored) + " nodes)");
            out.record({{"command", "solve"}, {"result", to_json(res)}});
            if (!output.empty()) write_hypergraph_file(res.witness, output);
            return res.complete ? kOk : kBudget;
        }

        if (*pack) {
            const auto G = greedy_pack(p, n, seed, pc);
            out.text("edges " + std::to_string(G.size()));
            out.record({{"command", "pack"}, {"seed", seed}, {"graph", to_json(G)}});
            emit_graph(G, output, out);
            return kOk;
        }

        if (*verify) {
            const auto a = sweep_claim_calc(grid_r, t_max, grid_k);
            const auto b = sweep_claim_calc2(grid_r, t_max);
            const auto c = sweep_claim_calc3(grid_r, t_max);
            const auto d = sweep_ratio_steps(samples, seed);
            bool ok = true;
            for (const auto& [name, g] : {std::pair{"binomial-excess", &a}, std::pair{"three-span", &b},
                                          std::pair{"two-span", &c}, std::pair{"ratio-step", &d}}) {
                out.text(std::string(name) + ": " + std::to_string(g->checked) + " checked, " +
                         std::to_string(g->failures) + " failures");
                for (const auto& ce : g->counterexamples) out.text("  " + ce);
                out.record({{"command", "verify-claims"}, {"claim", name}, {"summary", to_json(*g)}});
                ok = ok && g->failures == 0;
            }
            return ok ? kOk : kViolation;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
