#include <doctest.h>

#include "bes/bounds.hpp"
#include "bes/config_search.hpp"
#include "bes/solver.hpp"
#include "helpers.hpp"

using namespace bes;
using testing::hg;

TEST_CASE("exact_f small values") {
    CHECK(exact_f({3, 2, 2}, 3).optimum == 1);
    CHECK(exact_f({3, 2, 2}, 6).optimum == 4);
    const auto seven = exact_f({3, 2, 2}, 7);
    CHECK(seven.optimum == 7);
    CHECK(seven.complete);
    CHECK_FALSE(seven.limit_reached);
    CHECK(seven.witness.size() == 7);
    CHECK(verify_witness(seven.witness, {3, 2, 2}));
}

TEST_CASE("exact_f agrees with the naive oracle") {
    for (int n = 3; n <= 8; ++n) {
        const auto res = exact_f({3, 2, 2}, n);
        CHECK(res.complete);
        CHECK(res.optimum == static_cast<std::size_t>(oracle::extremal(3, 2, 2, n)));
    }
    for (int n = 3; n <= 6; ++n) {
        const auto res = exact_f({3, 2, 3}, n);
        CHECK(res.optimum == static_cast<std::size_t>(oracle::extremal(3, 2, 3, n)));
    }
    for (int n = 4; n <= 6; ++n)
        CHECK(exact_f({4, 2, 2}, n).optimum == static_cast<std::size_t>(oracle::extremal(4, 2, 2, n)));
}

TEST_CASE("symmetry pruning keeps the optimum") {
    for (int n = 3; n <= 9; ++n) {
        SolverOptions o;
        o.symmetry_pruning = true;
        CHECK(exact_f({3, 2, 2}, n, o).optimum == exact_f({3, 2, 2}, n).optimum);
    }
    for (int n = 3; n <= 7; ++n) {
        SolverOptions o;
        o.symmetry_pruning = true;
        CHECK(exact_f({3, 2, 3}, n, o).optimum == exact_f({3, 2, 3}, n).optimum);
    }
}

TEST_CASE("optimum is monotone in n and below the packing bound") {
    for (int k : {2, 3}) {
        std::size_t prev = 0;
        for (int n = 3; n <= (k == 2 ? 10 : 7); ++n) {
            const Params p{3, 2, k};
            const auto res = exact_f(p, n);
            CHECK(res.optimum >= prev);
            prev = res.optimum;
            CHECK(BigInt(res.optimum) * binom(3, 2) <= BigInt(k - 1) * binom(n, 2));
            CHECK(verify_witness(res.witness, p));
            CHECK(res.witness.size() == res.optimum);
        }
    }
}

TEST_CASE("node limit returns the incumbent") {
    SolverOptions o;
    o.node_limit = 10;
    const auto res = exact_f({3, 2, 3}, 8, o);
    CHECK_FALSE(res.complete);
    CHECK(res.limit_reached);
    CHECK(verify_witness(res.witness, {3, 2, 3}));
    CHECK(res.optimum == res.witness.size());
}

TEST_CASE("greedy_pack") {
    const Params p{3, 2, 2};
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto G = greedy_pack(p, 9, seed);
        CHECK(G.size() >= 8);
        CHECK(G.size() <= 12);
        const auto E = testing::plain(G);
        for (std::size_t i = 0; i < E.size(); ++i)
            for (std::size_t j = i + 1; j < E.size(); ++j) CHECK(oracle::common(E[i], E[j]) <= 1);
        const double ratio = static_cast<double>(G.size()) / 36.0;
        CHECK(ratio >= 0.22);
        CHECK(ratio <= 0.34);
    }
    CHECK(greedy_pack(p, 9, 5).edges() == greedy_pack(p, 9, 5).edges());
    CHECK(greedy_pack({3, 2, 5}, 3, 1).size() == 1);

    PackConstraints c;
    c.max_edges = 3;
    CHECK(greedy_pack({3, 2, 7}, 10, 2, c).size() == 3);
}

TEST_CASE("greedy_pack respects its constraints") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Params p{4, 2, 5};
        PackConstraints c;
        c.minus_free = {2, 4};
        c.no_pair_in_three_minus = true;
        c.disjoint_minus_pairs = true;
        c.max_edges = 20;
        const auto G = greedy_pack(p, 10, seed, c);
        CHECK(is_free(G, p, 5, false));
        CHECK(is_free(G, p, 2, true));
        CHECK(is_free(G, p, 4, true));
    }
}

TEST_CASE("verify_witness") {
    const std::vector<Edge> fano{{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                 {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    const Params p{3, 2, 2};
    CHECK(verify_witness(hg(3, 7, fano), p));
    for (const auto& extra : all_r_subsets(7, 3)) {
        if (std::find(fano.begin(), fano.end(), extra) != fano.end()) continue;
        auto plus = fano;
        plus.push_back(extra);
        CHECK_FALSE(verify_witness(hg(3, 7, plus), p));
    }
    CHECK(verify_witness(hg(3, 7, {}), p));
    CHECK(all_r_subsets(6, 3).size() == 20);
}
