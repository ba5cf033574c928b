#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms ("p" when q = 1).
std::string to_string(const Rational& q);
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt binom(long long n, long long k);
BigInt factorial(int n);

enum class ValueStatus { ProvenExact, UpperBound, Conjectured };
std::string to_string(ValueStatus s);

struct KnownValue {
    int r = 0, t = 0, k = 0;
    Rational value;
    ValueStatus status = ValueStatus::ProvenExact;
    std::string source;
};

/// Limit density pi(r, t, k) when it is pinned in closed form. Specific
/// (3, 2, k) values take precedence over the family formulas.
std::optional<KnownValue> pi_known(int r, int t, int k);

/// Every parameter triple in the grid with a known value, in (r, t, k) order.
std::vector<KnownValue> known_value_table(int r_max, int k_max);

/// Lower bound 1/(t! C(r,t)) holding for all k >= 2 and 2 <= t < r.
Rational single_edge_lower_bound(int r, int t);

/// Smallest x >= 0 with x^t >= k^3 t!, by exact integer comparison.
BigInt min_root_excess(int k, int t);
/// Smallest integer r with r >= t + (k^3 t!)^(1/t); k even.
BigInt r_threshold_even(int k, int t);

/// 2 / (t! (2 C(r,t) - 1)) for odd k; a limsup bound valid for large r only.
KnownValue odd_upper_bound(int r, int t, int k);

struct ClaimCertificate {
    BigInt lhs;
    BigInt rhs;
    bool holds = false;
};

/// C(2r-t, t) - [2 C(r,t) - 1] - (k-3) >= (k-2)^3, for t, k >= 2 and r past
/// the even-k threshold.
ClaimCertificate check_claim_calc(int r, int t, int k);
/// C(3r-2t, t) - 4 >= 3 C(r,t), for 3 <= t < r or (t = 2, r >= 4).
ClaimCertificate check_claim_calc2(int r, int t);
/// C(2r-t, t) >= 2 C(r,t) + 2, same hypotheses.
ClaimCertificate check_claim_calc3(int r, int t);

/// Coefficient C(2r-t,t) - [2C(r,t) - 1] - (k-3) used against |J_{>=2}|.
BigInt j0_j2_coefficient(int r, int t, int k);

struct GridSummary {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::vector<std::string> counterexamples;
};

/// Sweeps all hypothesis-satisfying parameters with r <= r_max, t <= t_max,
/// k <= k_max.
GridSummary sweep_claim_calc(int r_max, int t_max, int k_max);
GridSummary sweep_claim_calc2(int r_max, int t_max);
GridSummary sweep_claim_calc3(int r_max, int t_max);

}  // namespace bes
