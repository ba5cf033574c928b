#include <doctest.h>

#include "bes/bounds.hpp"
#include "bes/error.hpp"

using namespace bes;

namespace {

Rational q(long long a, long long b) { return make_rational(a, b); }

}  // namespace

TEST_CASE("rational formatting and binomials") {
    CHECK(to_string(q(14, 72)) == "7/36");
    CHECK(to_string(q(6, 3)) == "2");
    CHECK(binom(10, 3) == 120);
    CHECK_THROWS_AS(binom(3, 5), Error);
    CHECK(binom(80, 40) == BigInt("107507208733336176461620"));
    CHECK(factorial(6) == 720);
}

TEST_CASE("pi_known specific values") {
    auto v = pi_known(3, 2, 2);
    REQUIRE(v);
    CHECK(to_string(v->value) == "1/6");
    CHECK(v->status == ValueStatus::ProvenExact);
    CHECK(to_string(pi_known(3, 2, 3)->value) == "1/5");
    CHECK(to_string(pi_known(3, 2, 4)->value) == "7/36");
    CHECK(pi_known(3, 2, 4)->status == ValueStatus::ProvenExact);
    CHECK(pi_known(3, 2, 5)->status == ValueStatus::Conjectured);
    CHECK(to_string(pi_known(3, 2, 5)->value) == "1/5");
    CHECK_FALSE(pi_known(3, 2, 6));
}

TEST_CASE("pi_known family formulas") {
    CHECK(to_string(pi_known(5, 1, 3)->value) == "2/9");
    for (int r = 2; r <= 8; ++r)
        for (int k = 2; k <= 9; ++k)
            CHECK(pi_known(r, 1, k)->value == q(k - 1, (k - 1) * (r - 1) + 1));
    // k = 2: 1 / (t! C(r,t)).
    CHECK(pi_known(5, 2, 2)->value == q(1, 20));
    CHECK(pi_known(6, 3, 2)->value == q(1, 120));
    // k = 3: 2 / (t! (2 C(r,t) - 1)).
    CHECK(pi_known(4, 2, 3)->value == q(2, 22));
    CHECK(pi_known(5, 3, 3)->value == q(2, 6 * 19));
    // k = 4, r >= 4: same as k = 2.
    CHECK(pi_known(4, 2, 4)->value == q(1, 12));
    CHECK(pi_known(6, 3, 4)->value == q(1, 120));
    for (int r = 3; r <= 20; ++r)
        for (int t = 2; t < r; ++t)
            for (int k : {2, 4}) {
                const auto v = pi_known(r, t, k);
                if (!v || (r == 3 && t == 2)) continue;
                if (k == 2 || r >= 4)
                    CHECK(v->value == q(1, 1) / (Rational(factorial(t)) * Rational(binom(r, t))));
            }
    CHECK_FALSE(pi_known(2, 2, 3));
}

TEST_CASE("known value table") {
    const auto table = known_value_table(6, 8);
    CHECK_FALSE(table.empty());
    for (std::size_t i = 1; i < table.size(); ++i) {
        const auto& a = table[i - 1];
        const auto& b = table[i];
        CHECK(std::tie(a.r, a.t, a.k) < std::tie(b.r, b.t, b.k));
    }
    for (const auto& v : table) {
        const auto again = pi_known(v.r, v.t, v.k);
        REQUIRE(again);
        CHECK(again->value == v.value);
        if (v.t >= 2 && v.status == ValueStatus::ProvenExact)
            CHECK(single_edge_lower_bound(v.r, v.t) <= v.value);
    }
}

TEST_CASE("thresholds") {
    CHECK(min_root_excess(2, 2) == 4);
    CHECK(r_threshold_even(2, 2) == 6);
    CHECK(r_threshold_even(4, 2) == 14);
    CHECK(r_threshold_even(2, 3) == 7);
    for (int k = 2; k <= 12; k += 2)
        for (int t = 2; t <= 6; ++t) {
            const BigInt x = min_root_excess(k, t);
            const BigInt target = BigInt(k) * k * k * factorial(t);
            CHECK(boost::multiprecision::pow(x, t) >= target);
            if (x > 0) CHECK(boost::multiprecision::pow(BigInt(x - 1), t) < target);
        }
    CHECK_THROWS_AS(r_threshold_even(3, 2), Error);
}

TEST_CASE("odd_upper_bound") {
    CHECK(to_string(odd_upper_bound(4, 2, 5).value) == "1/11");
    CHECK(odd_upper_bound(3, 2, 3).value == pi_known(3, 2, 3)->value);
    CHECK_THROWS_AS(odd_upper_bound(4, 2, 4), Error);
}

TEST_CASE("claim calculations") {
    auto a = check_claim_calc(6, 2, 2);
    CHECK(a.lhs == 17);
    CHECK(a.holds);
    auto b = check_claim_calc(14, 2, 4);
    CHECK(b.lhs == 143);
    CHECK(b.rhs == 8);
    CHECK(b.holds);
    CHECK_THROWS_AS(check_claim_calc(13, 2, 4), Error);
    CHECK(j0_j2_coefficient(14, 2, 4) == 143);

    CHECK(check_claim_calc2(4, 2).lhs == 24);
    CHECK(check_claim_calc2(4, 2).rhs == 18);
    CHECK(check_claim_calc2(5, 3).lhs == 80);
    CHECK(check_claim_calc3(4, 2).lhs == 15);
    CHECK(check_claim_calc3(4, 2).rhs == 14);
    CHECK(check_claim_calc3(5, 3).lhs == 35);
    CHECK(check_claim_calc3(5, 3).rhs == 22);
    try {
        check_claim_calc2(3, 2);
        FAIL("expected HypothesisViolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HypothesisViolated);
    }
    CHECK_THROWS_AS(check_claim_calc3(3, 2), Error);
}

TEST_CASE("claim sweeps") {
    const auto s1 = sweep_claim_calc(40, 6, 12);
    CHECK(s1.checked > 0);
    CHECK(s1.failures == 0);
    const auto s2 = sweep_claim_calc2(40, 6);
    CHECK(s2.checked > 0);
    CHECK(s2.failures == 0);
    const auto s3 = sweep_claim_calc3(40, 6);
    CHECK(s3.failures == 0);

    // Threshold to threshold + 20 for even k.
    for (int t = 2; t <= 5; ++t)
        for (int k : {2, 4, 6, 8}) {
            const int r0 = static_cast<int>(r_threshold_even(k, t));
            for (int r = r0; r <= r0 + 20; ++r) CHECK(check_claim_calc(r, t, k).holds);
        }
}
