#include "bes/solver.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "bes/config_search.hpp"

namespace bes {

namespace {

using Clock = std::chrono::steady_clock;

/// Rank of a sorted t-set among all t-subsets of [0, n) (colexicographic).
class TSetRanker {
public:
    TSetRanker(int n, int t) : t_(t) {
        table_.assign(static_cast<std::size_t>(n) + 1, std::vector<std::uint64_t>(t + 1, 0));
        for (int v = 0; v <= n; ++v)
            for (int i = 0; i <= t; ++i) table_[v][i] = binom_checked(v, i);
        count_ = binom_checked(n, t);
    }
    std::uint64_t count() const { return count_; }
    std::uint64_t rank(const TSet& T) const {
        std::uint64_t r = 0;
        for (int i = 0; i < t_; ++i) r += table_[T[i]][i + 1];
        return r;
    }

private:
    int t_;
    std::uint64_t count_ = 0;
    std::vector<std::vector<std::uint64_t>> table_;
};

struct Limits {
    std::uint64_t node_limit;
    double time_limit;
    Clock::time_point start = Clock::now();
    std::uint64_t nodes = 0;
    bool hit = false;

    bool tick() {
        if (hit) return false;
        if (++nodes > node_limit) hit = true;
        if ((nodes & 255) == 0 &&
            std::chrono::duration<double>(Clock::now() - start).count() > time_limit)
            hit = true;
        return !hit;
    }
};

struct Candidates {
    std::vector<Edge> edges;
    std::vector<VertexSet> masks;
    std::vector<std::vector<std::uint32_t>> tsets;     // t-set ranks inside each edge
    std::vector<std::vector<std::uint32_t>> cands_of;  // candidates containing each t-set
};

Candidates make_candidates(int n, const Params& p, const TSetRanker& tr) {
    Candidates c;
    c.edges = all_r_subsets(n, p.r);
    c.cands_of.assign(tr.count(), {});
    for (std::uint32_t i = 0; i < c.edges.size(); ++i) {
        c.masks.push_back(to_mask(c.edges[i]));
        std::vector<std::uint32_t> ts;
        for_each_subset(c.edges[i], p.t, [&](const TSet& T) {
            const auto rk = static_cast<std::uint32_t>(tr.rank(T));
            ts.push_back(rk);
            c.cands_of[rk].push_back(i);
        });
        c.tsets.push_back(std::move(ts));
    }
    return c;
}

/// k = 2: t-set packing. Each node takes the undecided t-set with the fewest
/// live candidates and either covers it by one of them or declares it
/// permanently uncovered.
class PackingSearch {
public:
    PackingSearch(const Params& p, int n, Limits& lim)
        : p_(p), lim_(lim), tr_(n, p.t), c_(make_candidates(n, p, tr_)) {
        state_.assign(tr_.count(), 0);
        blocked_.assign(c_.edges.size(), 0);
        live_ = tr_.count();
        per_edge_ = binom_checked(p.r, p.t);
        // Each live t-set T feeds the cap of every (t-1)-subset S of T.
        TSetRanker lower(n, p.t - 1);
        per_edge_lower_ = binom_checked(p.r, p.t - 1);
        link_width_ = static_cast<std::uint64_t>(p.r - p.t + 1);
        lower_of_.assign(tr_.count(), {});
        links_.assign(lower.count(), 0);
        for_each_subset(to_vertices(full_mask(n)), p.t, [&](const TSet& T) {
            const auto rk = tr_.rank(T);
            for (int drop = 0; drop < p.t; ++drop) {
                TSet S;
                for (int i = 0; i < p.t; ++i)
                    if (i != drop) S.push_back(T[i]);
                const auto sr = static_cast<std::uint32_t>(lower.rank(S));
                lower_of_[rk].push_back(sr);
                ++links_[sr];
            }
        });
        for (auto l : links_) capsum_ += l / link_width_;
    }

    void seed(const std::vector<std::uint32_t>& ids) { best_ = ids; }

    bool force(std::uint32_t c) {
        if (blocked_[c]) return false;
        include(c);
        return true;
    }

    void run() { dfs(); }

    const std::vector<std::uint32_t>& best() const { return best_; }
    const Candidates& candidates() const { return c_; }

private:
    static VertexSet full_mask(int n) {
        VertexSet m;
        for (int v = 0; v < n; ++v) m.set(v);
        return m;
    }

    void leave_live(std::uint32_t T, std::uint8_t to) {
        state_[T] = to;
        --live_;
        for (auto c : c_.cands_of[T]) ++blocked_[c];
        for (auto S : lower_of_[T]) {
            const auto before = links_[S] / link_width_;
            --links_[S];
            capsum_ -= before - links_[S] / link_width_;
        }
    }
    void back_to_live(std::uint32_t T) {
        state_[T] = 0;
        ++live_;
        for (auto c : c_.cands_of[T]) --blocked_[c];
        for (auto S : lower_of_[T]) {
            const auto before = links_[S] / link_width_;
            ++links_[S];
            capsum_ += links_[S] / link_width_ - before;
        }
    }
    void include(std::uint32_t c) {
        for (auto T : c_.tsets[c]) leave_live(T, 1);
        chosen_.push_back(c);
    }
    void undo_include(std::uint32_t c) {
        chosen_.pop_back();
        for (auto it = c_.tsets[c].rbegin(); it != c_.tsets[c].rend(); ++it) back_to_live(*it);
    }

    std::uint64_t bound() const {
        return chosen_.size() + std::min(live_ / per_edge_, capsum_ / per_edge_lower_);
    }

    void dfs() {
        if (!lim_.tick()) return;
        if (chosen_.size() > best_.size()) best_ = chosen_;
        if (bound() <= best_.size()) return;

        std::int64_t pick = -1;
        std::size_t fewest = 0;
        for (std::uint32_t T = 0; T < state_.size(); ++T) {
            if (state_[T] != 0) continue;
            std::size_t opts = 0;
            for (auto c : c_.cands_of[T]) opts += blocked_[c] == 0;
            if (pick < 0 || opts < fewest) {
                pick = T;
                fewest = opts;
                if (opts == 0) break;
            }
        }
        if (pick < 0) return;
        const auto T = static_cast<std::uint32_t>(pick);
        if (fewest > 0) {
            for (auto c : c_.cands_of[T]) {
                if (blocked_[c]) continue;
                include(c);
                dfs();
                undo_include(c);
                if (lim_.hit) return;
            }
        }
        leave_live(T, 2);
        dfs();
        back_to_live(T);
    }

    const Params& p_;
    Limits& lim_;
    TSetRanker tr_;
    Candidates c_;
    std::vector<std::uint8_t> state_;  // 0 live, 1 covered, 2 left uncovered
    std::vector<std::uint32_t> blocked_;
    std::uint64_t live_ = 0;
    std::uint64_t per_edge_ = 1, per_edge_lower_ = 1, link_width_ = 1;
    std::vector<std::vector<std::uint32_t>> lower_of_;
    std::vector<std::uint64_t> links_;
    std::uint64_t capsum_ = 0;
    std::vector<std::uint32_t> chosen_, best_;
};

/// k >= 3: include/exclude over candidates in lexicographic order. Adding an
/// edge is checked against k-configurations through it only.
class IncludeExcludeSearch {
public:
    IncludeExcludeSearch(const Params& p, int n, Limits& lim)
        : p_(p), lim_(lim), tr_(n, p.t), c_(make_candidates(n, p, tr_)) {
        cover_.assign(tr_.count(), 0);
        avail_.assign(tr_.count(), 0);
        per_edge_ = binom_checked(p.r, p.t);
        query_ = ConfigQuery::of(p, p.k);
    }

    void seed(const std::vector<std::uint32_t>& ids) { best_ = ids; }

    bool force(std::uint32_t c) {
        if (!addable(c)) return false;
        include(c);
        first_ = c + 1;
        return true;
    }

    void run() { dfs(first_); }

    const std::vector<std::uint32_t>& best() const { return best_; }
    const Candidates& candidates() const { return c_; }

private:
    bool plausible(std::uint32_t c) const {
        for (auto T : c_.tsets[c])
            if (cover_[T] + 1 > p_.k - 1) return false;
        return true;
    }

    bool addable(std::uint32_t c) {
        if (!plausible(c)) return false;
        if (static_cast<int>(chosen_.size()) + 1 < p_.k) return true;
        masks_.push_back(c_.masks[c]);
        auto q = query_;
        q.must_contain = {masks_.size() - 1};
        bool found = false;
        search_configurations(masks_, q, SearchBudget::unlimited(),
                              [&](std::span<const EdgeIndex>, const VertexSet&) {
                                  found = true;
                                  return false;
                              });
        masks_.pop_back();
        return !found;
    }

    void include(std::uint32_t c) {
        for (auto T : c_.tsets[c]) ++cover_[T];
        chosen_.push_back(c);
        masks_.push_back(c_.masks[c]);
    }
    void undo_include(std::uint32_t c) {
        masks_.pop_back();
        chosen_.pop_back();
        for (auto T : c_.tsets[c]) --cover_[T];
    }

    std::uint64_t bound(std::uint32_t pos) {
        std::uint64_t remaining = 0;
        touched_.clear();
        for (std::uint32_t c = pos; c < c_.edges.size(); ++c) {
            if (!plausible(c)) continue;
            ++remaining;
            for (auto T : c_.tsets[c]) {
                if (avail_[T]++ == 0) touched_.push_back(T);
            }
        }
        std::uint64_t weight = 0;
        for (auto T : touched_) {
            weight += std::min<std::uint64_t>(avail_[T], static_cast<std::uint64_t>(p_.k - 1 - cover_[T]));
            avail_[T] = 0;
        }
        return chosen_.size() + std::min(remaining, weight / per_edge_);
    }

    void dfs(std::uint32_t pos) {
        if (!lim_.tick()) return;
        if (chosen_.size() > best_.size()) best_ = chosen_;
        if (bound(pos) <= best_.size()) return;
        std::uint32_t c = pos;
        while (c < c_.edges.size() && !plausible(c)) ++c;
        if (c >= c_.edges.size()) return;
        if (addable(c)) {
            include(c);
            dfs(c + 1);
            undo_include(c);
            if (lim_.hit) return;
        }
        dfs(c + 1);
    }

    const Params& p_;
    Limits& lim_;
    TSetRanker tr_;
    Candidates c_;
    ConfigQuery query_;
    std::vector<int> cover_;
    std::vector<std::uint32_t> avail_, touched_;
    std::vector<VertexSet> masks_;
    std::uint64_t per_edge_ = 1;
    std::uint32_t first_ = 0;
    std::vector<std::uint32_t> chosen_, best_;
};

std::vector<std::uint32_t> ids_of(const Hypergraph& G, const std::vector<Edge>& all) {
    std::vector<std::uint32_t> ids;
    for (const auto& e : G.edges()) {
        auto it = std::lower_bound(all.begin(), all.end(), e);
        ids.push_back(static_cast<std::uint32_t>(it - all.begin()));
    }
    return ids;
}

template <class Search>
SolverResult run_search(const Params& p, int n, const SolverOptions& opts) {
    Limits lim{opts.node_limit, opts.time_limit_seconds};
    Search s(p, n, lim);
    const auto& all = s.candidates().edges;

    std::optional<Hypergraph> seed = opts.incumbent_seed;
    if (!seed) seed = greedy_pack(p, n, 0);
    if (seed->r() != p.r || seed->n() != n)
        throw Error(ErrorCode::BadArgs, "incumbent seed has the wrong r or n");
    if (!verify_witness(*seed, p))
        throw Error(ErrorCode::NotKFree, "incumbent seed is not k-free");
    s.seed(ids_of(*seed, all));

    if (opts.symmetry_pruning && !all.empty()) s.force(0);
    s.run();

    SolverResult res;
    std::vector<Edge> edges;
    for (auto id : s.best()) edges.push_back(all[id]);
    res.witness = Hypergraph::build(p.r, n, std::move(edges));
    res.optimum = res.witness.size();
    res.nodes_explored = lim.nodes;
    res.limit_reached = lim.hit;
    res.complete = !lim.hit;
    res.seconds = std::chrono::duration<double>(Clock::now() - lim.start).count();
    return res;
}

/// Unbiased draw from [0, bound) by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

bool any_config_through(std::span<const VertexSet> masks, const ConfigQuery& base,
                        EdgeIndex e) {
    if (masks.size() < static_cast<std::size_t>(base.ell)) return false;
    auto q = base;
    q.must_contain = {e};
    bool found = false;
    search_configurations(masks, q, SearchBudget::unlimited(),
                          [&](std::span<const EdgeIndex>, const VertexSet&) {
                              found = true;
                              return false;
                          });
    return found;
}

/// Edges occurring in configurations through e.
std::vector<EdgeIndex> edges_near(std::span<const VertexSet> masks, const ConfigQuery& base,
                                  EdgeIndex e) {
    std::vector<char> seen(masks.size(), 0);
    if (masks.size() >= static_cast<std::size_t>(base.ell)) {
        auto q = base;
        q.must_contain = {e};
        search_configurations(masks, q, SearchBudget::unlimited(),
                              [&](std::span<const EdgeIndex> idx, const VertexSet&) {
                                  for (auto i : idx) seen[i] = 1;
                                  return true;
                              });
    }
    std::vector<EdgeIndex> out;
    for (EdgeIndex i = 0; i < masks.size(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

bool allowed(std::span<const VertexSet> masks, const Params& p, const PackConstraints& c) {
    const EdgeIndex e = masks.size() - 1;
    const int r = static_cast<int>(masks[e].count());
    if (c.k_free && any_config_through(masks, ConfigQuery::of(p, p.k), e)) return false;
    for (int ell : c.minus_free) {
        const auto q = ConfigQuery::of(p, ell, true);
        if (q.s_max >= r && any_config_through(masks, q, e)) return false;
    }
    if (c.no_pair_in_three_minus) {
        const auto q3 = ConfigQuery::of(p, 3, true);
        const int s2 = p.s(2);
        if (q3.s_max >= r && masks.size() >= 3) {
            auto q = q3;
            q.must_contain = {e};
            bool bad = false;
            search_configurations(masks, q, SearchBudget::unlimited(),
                                  [&](std::span<const EdgeIndex> idx, const VertexSet&) {
                                      for (std::size_t i = 0; i < idx.size() && !bad; ++i)
                                          for (std::size_t j = i + 1; j < idx.size(); ++j)
                                              if (static_cast<int>(
                                                      (masks[idx[i]] | masks[idx[j]]).count()) <= s2) {
                                                  bad = true;
                                                  break;
                                              }
                                      return !bad;
                                  });
            if (bad) return false;
        }
    }
    if (c.disjoint_minus_pairs) {
        for (int a = 1; a <= p.k - 1; ++a) {
            const int b = p.k - a;
            const auto qa = ConfigQuery::of(p, a, true);
            if (qa.s_max < r) continue;
            const auto qb = ConfigQuery::of(p, b);
            for (auto x : edges_near(masks, qa, e))
                if (any_config_through(masks, qb, x)) return false;
            for (auto x : edges_near(masks, qb, e))
                if (any_config_through(masks, qa, x)) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Edge> all_r_subsets(int n, int r) {
    std::vector<Edge> out;
    if (r < 0 || r > n) return out;
    Edge cur(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) cur[i] = static_cast<Vertex>(i);
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == static_cast<Vertex>(n - r + i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

SolverResult exact_f(const Params& params, int n, const SolverOptions& opts) {
    params.validate();
    if (n < params.r) throw Error(ErrorCode::BadArgs, "need r <= n");
    if (n > static_cast<int>(kMaxVertices)) throw Error(ErrorCode::BadArgs, "n too large");
    if (!(opts.time_limit_seconds > 0) || opts.node_limit == 0)
        throw Error(ErrorCode::BadArgs, "solver limits must be positive");
    if (params.k == 2) return run_search<PackingSearch>(params, n, opts);
    return run_search<IncludeExcludeSearch>(params, n, opts);
}

bool can_add(const Hypergraph& G, const Edge& e, const Params& params, const PackConstraints& c) {
    params.validate();
    if (static_cast<int>(e.size()) != G.r())
        throw Error(ErrorCode::NonUniformEdge, "edge size differs from r");
    if (G.contains(e)) return false;
    std::vector<VertexSet> masks(G.masks().begin(), G.masks().end());
    masks.push_back(to_mask(e));
    return allowed(masks, params, c);
}

Hypergraph greedy_pack(const Params& params, int n, std::uint64_t seed,
                       const PackConstraints& constraints) {
    params.validate();
    if (n < params.r) throw Error(ErrorCode::BadArgs, "need r <= n");
    std::mt19937_64 rng(seed);
    std::vector<Edge> kept;
    std::vector<VertexSet> masks;
    auto try_add = [&](const Edge& e) {
        masks.push_back(to_mask(e));
        if (allowed(masks, params, constraints)) {
            kept.push_back(e);
        } else {
            masks.pop_back();
        }
    };

    const auto total = binom_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(params.r));
    if (total && *total <= constraints.full_shuffle_limit) {
        auto order = all_r_subsets(n, params.r);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[uniform_below(rng, i)]);
        for (const auto& e : order) {
            if (kept.size() >= constraints.max_edges) break;
            try_add(e);
        }
    } else {
        std::vector<Vertex> pool(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) pool[v] = static_cast<Vertex>(v);
        for (std::uint64_t a = 0; a < constraints.max_attempts && kept.size() < constraints.max_edges;
             ++a) {
            for (int i = 0; i < params.r; ++i)
                std::swap(pool[i], pool[i + uniform_below(rng, static_cast<std::uint64_t>(n - i))]);
            Edge e(pool.begin(), pool.begin() + params.r);
            std::sort(e.begin(), e.end());
            const auto m = to_mask(e);
            if (std::find(masks.begin(), masks.end(), m) != masks.end()) continue;
            try_add(e);
        }
    }
    return Hypergraph::build(params.r, n, std::move(kept));
}

bool verify_witness(const Hypergraph& F, const Params& params) {
    params.validate();
    if (F.r() != params.r) return false;
    return is_free(F, params, params.k, false);
}

}  // namespace bes
