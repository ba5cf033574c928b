#include "bes/config_search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace bes {

ConfigQuery ConfigQuery::of(const Params& params, int ell, bool minus) {
    ConfigQuery q;
    q.ell = ell;
    q.s_max = config_bound(params, ell, minus);
    return q;
}

void ConfigQuery::validate(const Hypergraph& F) const {
    if (ell < 1) throw Error(ErrorCode::BadArgs, "query needs ell >= 1");
    if (s_max < F.r()) throw Error(ErrorCode::BadArgs, "query needs s_max >= r");
    if (must_contain.size() > static_cast<std::size_t>(ell))
        throw Error(ErrorCode::BadArgs, "must_contain larger than ell");
    for (auto i : must_contain)
        if (i >= F.size()) throw Error(ErrorCode::IndexOutOfRange, "must_contain index");
    for (auto i : disjoint_from)
        if (i >= F.size()) throw Error(ErrorCode::IndexOutOfRange, "disjoint_from index");
    if (must_cover)
        for (auto v : *must_cover)
            if (v >= static_cast<Vertex>(F.n()))
                throw Error(ErrorCode::VertexOutOfRange, "must_cover vertex");
}

namespace {

class Engine {
public:
    Engine(std::span<const VertexSet> masks, const ConfigQuery& q, const SearchBudget& budget,
           const ConfigVisitor& visit, const EngineOptions& opts)
        : masks_(masks), q_(q), budget_(budget), visit_(visit), opts_(opts) {}

    std::uint64_t run() {
        std::vector<char> blocked(masks_.size(), 0);
        for (auto i : q_.disjoint_from) blocked[i] = 1;

        chosen_ = q_.must_contain;
        std::sort(chosen_.begin(), chosen_.end());
        chosen_.erase(std::unique(chosen_.begin(), chosen_.end()), chosen_.end());
        VertexSet u;
        for (auto i : chosen_) {
            if (blocked[i]) return nodes_;
            u |= masks_[i];
            blocked[i] = 1;
        }
        fixed_ = chosen_;
        if (q_.must_cover) cover_ = to_mask(*q_.must_cover);

        const int needed = q_.ell - static_cast<int>(chosen_.size());
        if (needed < 0) return nodes_;
        levels_.assign(static_cast<std::size_t>(needed) + 1, {});
        auto& root = levels_[0];
        root.clear();
        for (std::size_t i = 0; i < masks_.size(); ++i)
            if (!blocked[i]) root.push_back(static_cast<std::uint32_t>(i));
        free_.clear();
        dfs(0, 0, needed, u);
        return nodes_;
    }

private:
    bool excluded(std::uint32_t i) const {
        return opts_.dynamic_excluded && (*opts_.dynamic_excluded)[i];
    }

    // Returns false when the visitor asked to stop.
    bool dfs(std::size_t depth, std::size_t start, int needed, const VertexSet& u) {
        if (++nodes_ > budget_.max_nodes)
            throw Error(ErrorCode::BudgetExhausted,
                        "configuration search exceeded " + std::to_string(budget_.max_nodes) +
                            " nodes");
        const int used = static_cast<int>(u.count());
        if (used > q_.s_max) return true;
        if (q_.must_cover && static_cast<int>((u | cover_).count()) > q_.s_max) return true;
        if (needed == 0) {
            if (q_.must_cover && (cover_ & ~u).any()) return true;
            emit_.clear();
            std::merge(fixed_.begin(), fixed_.end(), free_.begin(), free_.end(),
                       std::back_inserter(emit_));
            return visit_(emit_, u);
        }

        // Candidates that individually fit the remaining vertex budget. A
        // candidate dropped here can never fit deeper in this subtree, since
        // the union only grows.
        const int room = q_.s_max - used;
        const auto& parent = levels_[depth];
        auto& cands = levels_[depth + 1];
        cands.clear();
        extras_.clear();
        VertexSet reach;
        for (std::size_t p = start; p < parent.size(); ++p) {
            const auto i = parent[p];
            if (excluded(i)) continue;
            const int extra = static_cast<int>((masks_[i] & ~u).count());
            if (extra > room) continue;
            cands.push_back(i);
            extras_.push_back(extra);
            reach |= masks_[i];
        }
        if (static_cast<int>(cands.size()) < needed) return true;
        if (q_.must_cover && (cover_ & ~u & ~reach).any()) return true;
        if (needed >= 2) {
            // Any `needed` distinct candidates include one adding at least the
            // needed-th smallest extra.
            std::vector<int> tmp = extras_;
            std::nth_element(tmp.begin(), tmp.begin() + (needed - 1), tmp.end());
            if (tmp[static_cast<std::size_t>(needed - 1)] > room) return true;
        }

        const std::size_t last = cands.size() - static_cast<std::size_t>(needed);
        for (std::size_t c = 0; c <= last; ++c) {
            const auto i = cands[c];
            if (excluded(i)) continue;
            if (depth == 0 && opts_.top_branch_owned && !opts_.top_branch_owned(i)) continue;
            free_.push_back(i);
            // levels_[depth + 1] is only rewritten by the grandchildren's level.
            const bool go = dfs(depth + 1, c + 1, needed - 1, u | masks_[i]);
            free_.pop_back();
            if (!go) return false;
        }
        return true;
    }

    std::span<const VertexSet> masks_;
    const ConfigQuery& q_;
    const SearchBudget& budget_;
    const ConfigVisitor& visit_;
    const EngineOptions& opts_;

    std::vector<std::vector<std::uint32_t>> levels_;
    std::vector<int> extras_;
    std::vector<EdgeIndex> chosen_, fixed_, free_, emit_;
    VertexSet cover_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t search_configurations(std::span<const VertexSet> masks, const ConfigQuery& q,
                                    const SearchBudget& budget, const ConfigVisitor& visit,
                                    const EngineOptions& opts) {
    Engine engine(masks, q, budget, visit, opts);
    return engine.run();
}

std::optional<Configuration> find_configuration(const Hypergraph& F, const ConfigQuery& q,
                                                const SearchBudget& budget) {
    q.validate(F);
    std::optional<Configuration> hit;
    search_configurations(F.masks(), q, budget, [&](std::span<const EdgeIndex> idx, const VertexSet& u) {
        hit = Configuration{{idx.begin(), idx.end()}, static_cast<int>(u.count())};
        return false;
    });
    return hit;
}

std::vector<Configuration> enumerate_configurations(const Hypergraph& F, const ConfigQuery& q,
                                                    const SearchBudget& budget, int workers) {
    q.validate(F);
    auto collect = [&](std::vector<Configuration>& out, const EngineOptions& opts) {
        search_configurations(
            F.masks(), q, budget,
            [&](std::span<const EdgeIndex> idx, const VertexSet& u) {
                if (out.size() >= budget.max_results)
                    throw Error(ErrorCode::BudgetExhausted,
                                "more than " + std::to_string(budget.max_results) +
                                    " configurations");
                out.push_back(Configuration{{idx.begin(), idx.end()}, static_cast<int>(u.count())});
                return true;
            },
            opts);
    };

    if (workers <= 1) {
        std::vector<Configuration> out;
        collect(out, {});
        return out;
    }

    const auto w = static_cast<std::size_t>(workers);
    std::vector<std::vector<Configuration>> parts(w);
    std::vector<std::exception_ptr> errors(w);
    std::vector<std::thread> pool;
    for (std::size_t id = 0; id < w; ++id) {
        pool.emplace_back([&, id] {
            try {
                EngineOptions opts;
                opts.top_branch_owned = [&](std::size_t edge) { return edge % w == id; };
                collect(parts[id], opts);
            } catch (...) {
                errors[id] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<Configuration> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end(), [](const Configuration& a, const Configuration& b) {
        return a.edge_indices < b.edge_indices;
    });
    if (out.size() > budget.max_results)
        throw Error(ErrorCode::BudgetExhausted, "too many configurations");
    return out;
}

std::optional<Configuration> freeness_witness(const Hypergraph& F, const Params& params, int ell,
                                              bool minus) {
    params.validate();
    if (ell < 1) throw Error(ErrorCode::BadArgs, "ell must be >= 1");
    if (F.size() < static_cast<std::size_t>(ell)) return std::nullopt;
    auto q = ConfigQuery::of(params, ell, minus);
    // An l-configuration spans at least r vertices, so a smaller budget cannot be met.
    if (q.s_max < F.r()) return std::nullopt;
    return find_configuration(F, q, SearchBudget::unlimited());
}

bool is_free(const Hypergraph& F, const Params& params, int ell, bool minus) {
    return !freeness_witness(F, params, ell, minus).has_value();
}

std::vector<Configuration> two_configs_through_edge(const Hypergraph& F, const Params& params,
                                                    EdgeIndex e, bool verify_k_free) {
    params.validate();
    if (e >= F.size()) throw Error(ErrorCode::IndexOutOfRange, "edge index out of range");
    if (verify_k_free && !is_free(F, params, params.k, false))
        throw Error(ErrorCode::NotKFree, "hypergraph contains a k-configuration");
    auto q = ConfigQuery::of(params, 2);
    q.must_contain = {e};
    return enumerate_configurations(F, q, SearchBudget::unlimited());
}

std::vector<Configuration> two_configs_through_tset(const Hypergraph& F, const Params& params,
                                                    const TSet& T) {
    params.validate();
    TSet sorted = T;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != static_cast<std::size_t>(params.t) ||
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::BadT, "T must have exactly t distinct vertices");
    auto q = ConfigQuery::of(params, 2);
    q.must_cover = sorted;
    return enumerate_configurations(F, q, SearchBudget::unlimited());
}

std::vector<Configuration> maximal_disjoint_collection(const Hypergraph& F, const ConfigQuery& q,
                                                       const ConfigFilter& extra_filter,
                                                       const SearchBudget& budget) {
    q.validate(F);
    std::vector<char> used(F.size(), 0);
    std::vector<Configuration> chosen;
    EngineOptions opts;
    opts.dynamic_excluded = &used;
    search_configurations(
        F.masks(), q, budget,
        [&](std::span<const EdgeIndex> idx, const VertexSet& u) {
            for (auto i : idx)
                if (used[i]) return true;
            Configuration c{{idx.begin(), idx.end()}, static_cast<int>(u.count())};
            if (extra_filter && !extra_filter(F, c)) return true;
            for (auto i : idx) used[i] = 1;
            chosen.push_back(std::move(c));
            return true;
        },
        opts);
    return chosen;
}

std::vector<char> edges_in_configurations(const Hypergraph& F, const ConfigQuery& q,
                                          const SearchBudget& budget) {
    q.validate(F);
    std::vector<char> in(F.size(), 0);
    // Each edge needs only one witness: look for configurations through it
    // unless an earlier witness already marked it.
    for (EdgeIndex e = 0; e < F.size(); ++e) {
        if (in[e]) continue;
        auto qe = q;
        qe.must_contain.push_back(e);
        if (qe.must_contain.size() > static_cast<std::size_t>(qe.ell)) continue;
        search_configurations(F.masks(), qe, budget,
                              [&](std::span<const EdgeIndex> idx, const VertexSet&) {
                                  for (auto i : idx) in[i] = 1;
                                  return false;
                              });
    }
    return in;
}

bool contains_two_configuration(const Hypergraph& F, const Params& params, const Configuration& S) {
    const int limit = params.s(2);
    for (std::size_t a = 0; a < S.edge_indices.size(); ++a)
        for (std::size_t b = a + 1; b < S.edge_indices.size(); ++b)
            if (static_cast<int>((F.mask(S.edge_indices[a]) | F.mask(S.edge_indices[b])).count()) <=
                limit)
                return true;
    return false;
}

bool satisfies(const Hypergraph& F, const ConfigQuery& q, const Configuration& S) {
    if (S.edge_indices.size() != static_cast<std::size_t>(q.ell)) return false;
    if (!std::is_sorted(S.edge_indices.begin(), S.edge_indices.end()) ||
        std::adjacent_find(S.edge_indices.begin(), S.edge_indices.end()) != S.edge_indices.end())
        return false;
    for (auto i : S.edge_indices)
        if (i >= F.size()) return false;
    const auto u = configuration_vertices(F, S.edge_indices);
    if (static_cast<int>(u.count()) != S.span || S.span > q.s_max) return false;
    for (auto i : q.must_contain)
        if (!std::binary_search(S.edge_indices.begin(), S.edge_indices.end(), i)) return false;
    for (auto i : q.disjoint_from)
        if (std::binary_search(S.edge_indices.begin(), S.edge_indices.end(), i)) return false;
    if (q.must_cover)
        for (auto v : *q.must_cover)
            if (!u.test(v)) return false;
    return true;
}

}  // namespace bes
