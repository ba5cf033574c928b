#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bes/error.hpp"

#ifndef BES_MAX_VERTICES
#define BES_MAX_VERTICES 512
#endif

namespace bes {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;   // strictly increasing
using TSet = std::vector<Vertex>;   // strictly increasing
using EdgeIndex = std::size_t;

inline constexpr std::size_t kMaxVertices = BES_MAX_VERTICES;
using VertexSet = std::bitset<kMaxVertices>;

/// Uniformity r, intersection order t and forbidden configuration size k.
struct Params {
    int r = 3;
    int t = 2;
    int k = 2;

    /// Throws BadArgs unless r > t >= 1 and k >= 2.
    void validate() const;

    /// Vertex budget of an l-configuration: l(r-t)+t, one less for the minus variant.
    int s(int ell, bool minus = false) const { return ell * (r - t) + t - (minus ? 1 : 0); }
};

int config_bound(const Params& params, int ell, bool minus);

/// A canonical r-uniform hypergraph on vertices [0, n). Edges are kept sorted
/// lexicographically; each edge is mirrored as a bitset so span queries are a
/// popcount of an OR.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Validates and canonicalizes. Throws NonUniformEdge, VertexOutOfRange,
    /// DuplicateEdge (and BadArgs for r < 2, n < r or n above the bitset width).
    static Hypergraph build(int r, int n, std::vector<Edge> raw_edges);

    int r() const { return r_; }
    int n() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeIndex i) const { return edges_.at(i); }
    std::span<const VertexSet> masks() const { return masks_; }
    const VertexSet& mask(EdgeIndex i) const { return masks_.at(i); }

    std::optional<EdgeIndex> find(const Edge& e) const;
    bool contains(const Edge& e) const { return find(e).has_value(); }

    /// The subhypergraph on the same vertex set with the given edge indices removed.
    Hypergraph without(std::span<const EdgeIndex> removed) const;
    /// The subhypergraph keeping only the given edge indices.
    Hypergraph restricted_to(std::span<const EdgeIndex> kept) const;
    Hypergraph with_edge(Edge e) const;

    /// Edge-set inclusion on the same (r, n).
    bool is_subhypergraph_of(const Hypergraph& other) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.r_ == b.r_ && a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Hypergraph(int r, int n, std::vector<Edge> sorted_edges);

    int r_ = 2;
    int n_ = 2;
    std::vector<Edge> edges_;
    std::vector<VertexSet> masks_;
};

/// A set of edge indices into a host hypergraph together with its vertex span.
struct Configuration {
    std::vector<EdgeIndex> edge_indices;  // strictly increasing
    int span = 0;

    std::size_t size() const { return edge_indices.size(); }
    friend bool operator==(const Configuration&, const Configuration&) = default;
};

Configuration make_configuration(const Hypergraph& F, std::vector<EdgeIndex> idxs);
VertexSet configuration_vertices(const Hypergraph& F, std::span<const EdgeIndex> idxs);

/// A family of t-element vertex subsets, kept sorted and duplicate-free.
class TGraph {
public:
    TGraph() = default;
    /// Sorts and deduplicates; throws BadT if a member does not have exactly t
    /// distinct vertices.
    TGraph(int t, std::vector<TSet> members);

    int t() const { return t_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<TSet>& members() const { return members_; }
    bool contains(const TSet& T) const;
    bool includes(const TGraph& other) const;

    friend bool operator==(const TGraph&, const TGraph&) = default;

private:
    int t_ = 1;
    std::vector<TSet> members_;
};

struct CoverProfile {
    int t = 1;
    /// Cover multiplicity of every t-set contained in at least one edge.
    std::map<TSet, std::uint64_t> counts;
    /// Multiplicity i -> |J_i|. Key 0 is present only when requested.
    std::map<std::uint64_t, std::uint64_t> histogram;
    /// Whether |J_0| was obtained by walking every t-subset of [0, n).
    bool zero_enumerated = false;
    /// The zero-covered t-sets when they were enumerated.
    std::vector<TSet> uncovered;

    std::uint64_t at_least(std::uint64_t i) const;
    std::uint64_t exactly(std::uint64_t i) const;
};

struct CoverProfileOptions {
    int enumerate_max_t = 4;
    int enumerate_max_n = 64;
};

int span(const Hypergraph& F, std::span<const EdgeIndex> idxs);
TGraph t_shadow(const Hypergraph& F, int t);
CoverProfile cover_profile(const Hypergraph& F, int t, bool include_zero,
                           const CoverProfileOptions& opts = {});
/// Blocks of the transitive closure of "shares at least t vertices", each block
/// sorted, blocks ordered by their smallest edge index.
std::vector<std::vector<EdgeIndex>> t_tight_components(const Hypergraph& F, int t);

// Small combinatorial helpers shared by the other modules.

std::vector<Vertex> to_vertices(const VertexSet& s);
VertexSet to_mask(std::span<const Vertex> vs);

/// Calls fn for every t-subset of the (sorted) vertex list, in lexicographic order.
void for_each_subset(std::span<const Vertex> vertices, int t,
                     const std::function<void(const TSet&)>& fn);

/// Exact C(n, k) in 64 bits, or nullopt on overflow. Zero for k outside [0, n].
std::optional<std::uint64_t> binom_u64(std::uint64_t n, std::uint64_t k);
std::uint64_t binom_checked(std::uint64_t n, std::uint64_t k);

struct TSetHash {
    std::size_t operator()(const TSet& s) const noexcept;
};

}  // namespace bes
