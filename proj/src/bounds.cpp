#include "bes/bounds.hpp"

#include "bes/error.hpp"

namespace bes {

std::string to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorCode::BadArgs, "zero denominator");
    return Rational(num, den);
}

BigInt binom(long long n, long long k) {
    if (n < 0 || k < 0 || k > n)
        throw Error(ErrorCode::BadArgs,
                    "binom needs 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    k = std::min(k, n - k);
    BigInt acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

BigInt factorial(int n) {
    if (n < 0) throw Error(ErrorCode::BadArgs, "factorial of a negative number");
    BigInt acc = 1;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

std::string to_string(ValueStatus s) {
    switch (s) {
        case ValueStatus::ProvenExact: return "proven-exact";
        case ValueStatus::UpperBound: return "upper-bound";
        case ValueStatus::Conjectured: return "conjectured";
    }
    return "unknown";
}

Rational single_edge_lower_bound(int r, int t) {
    return make_rational(1, factorial(t) * binom(r, t));
}

BigInt min_root_excess(int k, int t) {
    if (k < 2 || t < 2) throw Error(ErrorCode::BadArgs, "need k >= 2 and t >= 2");
    const BigInt target = BigInt(k) * k * k * factorial(t);
    // x^t is monotone in x, so bisect on [0, target].
    BigInt lo = 0, hi = target;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, static_cast<unsigned>(t)) >= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

BigInt r_threshold_even(int k, int t) {
    if (k < 2 || k % 2 != 0) throw Error(ErrorCode::BadArgs, "k must be even and >= 2");
    if (t < 2) throw Error(ErrorCode::BadArgs, "t must be >= 2");
    return t + min_root_excess(k, t);
}

std::optional<KnownValue> pi_known(int r, int t, int k) {
    if (t < 1 || r <= t || k < 2) return std::nullopt;
    auto make = [&](Rational v, ValueStatus st, std::string src) {
        return KnownValue{r, t, k, std::move(v), st, std::move(src)};
    };
    if (r == 3 && t == 2) {
        switch (k) {
            case 2: return make(make_rational(1, 6), ValueStatus::ProvenExact, "steiner-triple-packing");
            case 3: return make(make_rational(1, 5), ValueStatus::ProvenExact, "glock");
            case 4: return make(make_rational(7, 36), ValueStatus::ProvenExact, "gjkklp");
            case 5:
            case 7: return make(make_rational(1, 5), ValueStatus::Conjectured, "gjkklp-remark");
            default: break;
        }
    }
    if (t == 1)
        return make(make_rational(k - 1, BigInt(k - 1) * (r - 1) + 1), ValueStatus::ProvenExact,
                    "loose-trees");
    const BigInt c = binom(r, t);
    const BigInt tf = factorial(t);
    if (k == 2) return make(make_rational(1, tf * c), ValueStatus::ProvenExact, "rodl");
    if (k == 3) return make(make_rational(2, tf * (2 * c - 1)), ValueStatus::ProvenExact, "gjkklp");
    if (k == 4 && r >= 4) return make(make_rational(1, tf * c), ValueStatus::ProvenExact, "gjkklp");
    if (k % 2 == 0 && BigInt(r) >= r_threshold_even(k, t))
        return make(make_rational(1, tf * c), ValueStatus::ProvenExact, "even-k-large-r");
    return std::nullopt;
}

std::vector<KnownValue> known_value_table(int r_max, int k_max) {
    std::vector<KnownValue> out;
    for (int r = 2; r <= r_max; ++r)
        for (int t = 1; t < r; ++t)
            for (int k = 2; k <= k_max; ++k)
                if (auto v = pi_known(r, t, k)) out.push_back(std::move(*v));
    return out;
}

KnownValue odd_upper_bound(int r, int t, int k) {
    if (k < 3 || k % 2 == 0) throw Error(ErrorCode::BadArgs, "k must be odd and >= 3");
    if (t < 2 || r <= t) throw Error(ErrorCode::BadArgs, "need 2 <= t < r");
    const BigInt c = binom(r, t);
    return KnownValue{r, t, k, make_rational(2, factorial(t) * (2 * c - 1)),
                      ValueStatus::UpperBound, "odd-k-large-r"};
}

BigInt j0_j2_coefficient(int r, int t, int k) {
    return binom(2 * r - t, t) - (2 * binom(r, t) - 1) - (k - 3);
}

ClaimCertificate check_claim_calc(int r, int t, int k) {
    if (t < 2 || k < 2 || r <= t)
        throw Error(ErrorCode::HypothesisViolated, "need t, k >= 2 and r > t");
    if (BigInt(r) < t + min_root_excess(k, t))
        throw Error(ErrorCode::HypothesisViolated, "r below t + (k^3 t!)^(1/t)");
    ClaimCertificate c;
    c.lhs = j0_j2_coefficient(r, t, k);
    c.rhs = BigInt(k - 2) * (k - 2) * (k - 2);
    c.holds = c.lhs >= c.rhs;
    return c;
}

static void check_calc23_hypothesis(int r, int t) {
    const bool ok = (t >= 3 && t < r) || (t == 2 && r >= 4);
    if (!ok) throw Error(ErrorCode::HypothesisViolated, "need 3 <= t < r, or t = 2 and r >= 4");
}

ClaimCertificate check_claim_calc2(int r, int t) {
    check_calc23_hypothesis(r, t);
    ClaimCertificate c;
    c.lhs = binom(3 * r - 2 * t, t) - 4;
    c.rhs = 3 * binom(r, t);
    c.holds = c.lhs >= c.rhs;
    return c;
}

ClaimCertificate check_claim_calc3(int r, int t) {
    check_calc23_hypothesis(r, t);
    ClaimCertificate c;
    c.lhs = binom(2 * r - t, t);
    c.rhs = 2 * binom(r, t) + 2;
    c.holds = c.lhs >= c.rhs;
    return c;
}

namespace {

void record(GridSummary& g, const ClaimCertificate& c, const std::string& where) {
    ++g.checked;
    if (!c.holds) {
        ++g.failures;
        g.counterexamples.push_back(where + ": " + c.lhs.str() + " < " + c.rhs.str());
    }
}

}  // namespace

GridSummary sweep_claim_calc(int r_max, int t_max, int k_max) {
    GridSummary g;
    for (int t = 2; t <= t_max; ++t)
        for (int k = 2; k <= k_max; ++k) {
            const BigInt first = t + min_root_excess(k, t);
            for (int r = t + 1; r <= r_max; ++r) {
                if (BigInt(r) < first) continue;
                record(g, check_claim_calc(r, t, k),
                       "r=" + std::to_string(r) + " t=" + std::to_string(t) +
                           " k=" + std::to_string(k));
            }
        }
    return g;
}

GridSummary sweep_claim_calc2(int r_max, int t_max) {
    GridSummary g;
    for (int t = 2; t <= t_max; ++t)
        for (int r = t + 1; r <= r_max; ++r) {
            if (t == 2 && r < 4) continue;
            record(g, check_claim_calc2(r, t), "r=" + std::to_string(r) + " t=" + std::to_string(t));
        }
    return g;
}

GridSummary sweep_claim_calc3(int r_max, int t_max) {
    GridSummary g;
    for (int t = 2; t <= t_max; ++t)
        for (int r = t + 1; r <= r_max; ++r) {
            if (t == 2 && r < 4) continue;
            record(g, check_claim_calc3(r, t), "r=" + std::to_string(r) + " t=" + std::to_string(t));
        }
    return g;
}

}  // namespace bes
