#include "bes/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace bes {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonUniformEdge: return "NonUniformEdge";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::BadT: return "BadT";
        case ErrorCode::BadArgs: return "BadArgs";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::BudgetExhausted: return "BudgetExhausted";
        case ErrorCode::NotKFree: return "NotKFree";
        case ErrorCode::NotSupporting: return "NotSupporting";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::CaseAnalysisExhausted: return "CaseAnalysisExhausted";
        case ErrorCode::NoTwoConfiguration: return "NoTwoConfiguration";
        case ErrorCode::ComponentTooLarge: return "ComponentTooLarge";
        case ErrorCode::InvariantViolated: return "InvariantViolated";
    }
    return "Unknown";
}

void Params::validate() const {
    if (t < 1 || r <= t)
        throw Error(ErrorCode::BadArgs, "need r > t >= 1, got r=" + std::to_string(r) +
                                            " t=" + std::to_string(t));
    if (k < 2) throw Error(ErrorCode::BadArgs, "need k >= 2, got k=" + std::to_string(k));
}

int config_bound(const Params& params, int ell, bool minus) {
    if (ell < 1) throw Error(ErrorCode::BadArgs, "configuration size must be >= 1");
    return params.s(ell, minus);
}

// ---------------------------------------------------------------------------
// Hypergraph

Hypergraph::Hypergraph(int r, int n, std::vector<Edge> sorted_edges)
    : r_(r), n_(n), edges_(std::move(sorted_edges)) {
    masks_.reserve(edges_.size());
    for (const auto& e : edges_) masks_.push_back(to_mask(e));
}

Hypergraph Hypergraph::build(int r, int n, std::vector<Edge> raw_edges) {
    if (r < 2) throw Error(ErrorCode::BadArgs, "uniformity must be >= 2");
    if (n < r) throw Error(ErrorCode::BadArgs, "vertex count must be >= r");
    if (static_cast<std::size_t>(n) > kMaxVertices)
        throw Error(ErrorCode::BadArgs,
                    "vertex count exceeds the compiled limit of " + std::to_string(kMaxVertices));
    for (auto& e : raw_edges) {
        std::sort(e.begin(), e.end());
        if (e.size() != static_cast<std::size_t>(r) ||
            std::adjacent_find(e.begin(), e.end()) != e.end())
            throw Error(ErrorCode::NonUniformEdge,
                        "edge does not have exactly " + std::to_string(r) + " distinct vertices");
        if (e.back() >= static_cast<Vertex>(n))
            throw Error(ErrorCode::VertexOutOfRange,
                        "vertex " + std::to_string(e.back()) + " >= n=" + std::to_string(n));
    }
    std::sort(raw_edges.begin(), raw_edges.end());
    if (auto it = std::adjacent_find(raw_edges.begin(), raw_edges.end()); it != raw_edges.end()) {
        std::string s;
        for (auto v : *it) s += std::to_string(v) + " ";
        throw Error(ErrorCode::DuplicateEdge, "edge {" + s + "} given twice");
    }
    return Hypergraph(r, n, std::move(raw_edges));
}

std::optional<EdgeIndex> Hypergraph::find(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<EdgeIndex>(it - edges_.begin());
}

Hypergraph Hypergraph::without(std::span<const EdgeIndex> removed) const {
    std::vector<char> drop(edges_.size(), 0);
    for (auto i : removed) {
        if (i >= edges_.size()) throw Error(ErrorCode::IndexOutOfRange, "edge index out of range");
        drop[i] = 1;
    }
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (!drop[i]) kept.push_back(edges_[i]);
    return Hypergraph(r_, n_, std::move(kept));
}

Hypergraph Hypergraph::restricted_to(std::span<const EdgeIndex> kept) const {
    std::vector<char> keep(edges_.size(), 0);
    for (auto i : kept) {
        if (i >= edges_.size()) throw Error(ErrorCode::IndexOutOfRange, "edge index out of range");
        keep[i] = 1;
    }
    std::vector<Edge> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (keep[i]) out.push_back(edges_[i]);
    return Hypergraph(r_, n_, std::move(out));
}

Hypergraph Hypergraph::with_edge(Edge e) const {
    auto all = edges_;
    all.push_back(std::move(e));
    return build(r_, n_, std::move(all));
}

bool Hypergraph::is_subhypergraph_of(const Hypergraph& other) const {
    if (r_ != other.r_ || n_ != other.n_) return false;
    return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

// ---------------------------------------------------------------------------
// Configurations and t-graphs

VertexSet configuration_vertices(const Hypergraph& F, std::span<const EdgeIndex> idxs) {
    VertexSet u;
    for (auto i : idxs) {
        if (i >= F.size()) throw Error(ErrorCode::IndexOutOfRange, "edge index out of range");
        u |= F.mask(i);
    }
    return u;
}

int span(const Hypergraph& F, std::span<const EdgeIndex> idxs) {
    return static_cast<int>(configuration_vertices(F, idxs).count());
}

Configuration make_configuration(const Hypergraph& F, std::vector<EdgeIndex> idxs) {
    std::sort(idxs.begin(), idxs.end());
    idxs.erase(std::unique(idxs.begin(), idxs.end()), idxs.end());
    int s = span(F, idxs);
    return Configuration{std::move(idxs), s};
}

TGraph::TGraph(int t, std::vector<TSet> members) : t_(t), members_(std::move(members)) {
    if (t < 1) throw Error(ErrorCode::BadT, "t must be >= 1");
    for (auto& m : members_) {
        std::sort(m.begin(), m.end());
        if (m.size() != static_cast<std::size_t>(t) ||
            std::adjacent_find(m.begin(), m.end()) != m.end())
            throw Error(ErrorCode::BadT, "member is not a set of exactly t vertices");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool TGraph::contains(const TSet& T) const {
    return std::binary_search(members_.begin(), members_.end(), T);
}

bool TGraph::includes(const TGraph& other) const {
    return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                         other.members_.end());
}

std::uint64_t CoverProfile::at_least(std::uint64_t i) const {
    std::uint64_t total = 0;
    for (auto it = histogram.lower_bound(i); it != histogram.end(); ++it) total += it->second;
    return total;
}

std::uint64_t CoverProfile::exactly(std::uint64_t i) const {
    auto it = histogram.find(i);
    return it == histogram.end() ? 0 : it->second;
}

static void check_t(const Hypergraph& F, int t) {
    if (t < 1 || t > F.r())
        throw Error(ErrorCode::BadT, "t=" + std::to_string(t) + " outside [1, r]");
}

TGraph t_shadow(const Hypergraph& F, int t) {
    check_t(F, t);
    std::unordered_set<TSet, TSetHash> seen;
    for (const auto& e : F.edges()) for_each_subset(e, t, [&](const TSet& T) { seen.insert(T); });
    return TGraph(t, std::vector<TSet>(seen.begin(), seen.end()));
}

CoverProfile cover_profile(const Hypergraph& F, int t, bool include_zero,
                           const CoverProfileOptions& opts) {
    check_t(F, t);
    CoverProfile p;
    p.t = t;
    for (const auto& e : F.edges()) for_each_subset(e, t, [&](const TSet& T) { ++p.counts[T]; });
    for (const auto& [T, c] : p.counts) ++p.histogram[c];
    if (!include_zero) return p;

    const auto covered = static_cast<std::uint64_t>(p.counts.size());
    if (t <= opts.enumerate_max_t && F.n() <= opts.enumerate_max_n) {
        std::vector<Vertex> all(static_cast<std::size_t>(F.n()));
        std::iota(all.begin(), all.end(), Vertex{0});
        for_each_subset(all, t, [&](const TSet& T) {
            if (!p.counts.contains(T)) p.uncovered.push_back(T);
        });
        p.zero_enumerated = true;
        p.histogram[0] = p.uncovered.size();
    } else {
        p.histogram[0] = binom_checked(static_cast<std::uint64_t>(F.n()),
                                       static_cast<std::uint64_t>(t)) -
                         covered;
    }
    return p;
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

std::vector<std::vector<EdgeIndex>> t_tight_components(const Hypergraph& F, int t) {
    check_t(F, t);
    const auto m = F.size();
    DisjointSets ds(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (static_cast<int>((F.mask(i) & F.mask(j)).count()) >= t) ds.unite(i, j);
    std::map<std::size_t, std::vector<EdgeIndex>> blocks;
    for (std::size_t i = 0; i < m; ++i) blocks[ds.find(i)].push_back(i);
    std::vector<std::vector<EdgeIndex>> out;
    out.reserve(blocks.size());
    for (auto& [root, block] : blocks) out.push_back(std::move(block));
    return out;
}

// ---------------------------------------------------------------------------
// Helpers

std::vector<Vertex> to_vertices(const VertexSet& s) {
    std::vector<Vertex> out;
    out.reserve(s.count());
    for (std::size_t v = s._Find_first(); v < s.size(); v = s._Find_next(v))
        out.push_back(static_cast<Vertex>(v));
    return out;
}

VertexSet to_mask(std::span<const Vertex> vs) {
    VertexSet m;
    for (auto v : vs) m.set(v);
    return m;
}

void for_each_subset(std::span<const Vertex> vertices, int t,
                     const std::function<void(const TSet&)>& fn) {
    const int n = static_cast<int>(vertices.size());
    if (t < 0 || t > n) return;
    std::vector<int> idx(static_cast<std::size_t>(t));
    std::iota(idx.begin(), idx.end(), 0);
    TSet cur(static_cast<std::size_t>(t));
    while (true) {
        for (int i = 0; i < t; ++i) cur[i] = vertices[idx[i]];
        fn(cur);
        int i = t - 1;
        while (i >= 0 && idx[i] == n - t + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::optional<std::uint64_t> binom_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t binom_checked(std::uint64_t n, std::uint64_t k) {
    auto b = binom_u64(n, k);
    if (!b) throw Error(ErrorCode::BadArgs, "binomial coefficient overflows 64 bits");
    return *b;
}

std::size_t TSetHash::operator()(const TSet& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : s) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace bes
