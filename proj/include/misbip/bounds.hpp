#pragma once

#include "misbip/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace misbip::bounds
{
    /// Exact rational when every exponent is an integer; the natural log is always filled in.
    struct ExactBound
    {
        std::optional<Rational> exact;
        long double log_value = 0;

        auto value() const -> long double;
    };

    /// Relative agreement used for log-domain comparisons.
    inline constexpr long double log_tolerance = 1e-12L;

    auto moon_moser(int n) -> ExactBound;                // 3^(n/3)
    auto eppstein(int n, int k) -> ExactBound;           // 3^(4k-n) 4^(n-3k)
    auto nielsen(int n, int k) -> ExactBound;            // 4^(5k-n) 5^(n-4k)
    auto corollary1(int n, int k, double eta) -> ExactBound; // (4-η)^((5-η)k-n) (5-η)^(n-(4-η)k)

    /// ln(bound)/n as a function of x = k/n.
    auto eppstein_exponent(long double x) -> long double;
    auto nielsen_exponent(long double x) -> long double;
    auto corollary1_exponent(long double x, long double eta) -> long double;
    auto interpolation_exponent(long double x) -> long double; // x ln(1/x)

    /// The two terms of the degree >= 4-η induction step, with d + 1 = 5 - η.
    struct InductionIdentity
    {
        long double log_first = 0;  // removing u
        long double log_second = 0; // removing N[u]
        long double log_rhs = 0;
        long double relative_residual = 0;
    };

    auto corollary1_induction_identity(int n, int k, double eta) -> InductionIdentity;

    /// Split point for the A-options factor: the η-bound for k <= (1 + eps) n / 4, Eppstein above.
    struct Eq3Options
    {
        double eta = 0;
        std::optional<double> corollary1_until_eps;
    };

    struct Eq3Result
    {
        std::vector<long double> log_terms1; // k = 0..p
        std::vector<long double> log_terms2; // k = p+1..n
        long double log_mibs1 = 0;
        long double log_mibs2 = 0; // -inf when the second sum is empty
        long double log_max1 = 0;
        long double log_max2 = 0;
        int argmax1 = -1;
        int argmax2 = -1;
    };

    /// k-th term of the first sum: (options for A) x Eppstein on n - k vertices.
    auto eq3_first_term_log(int n, int k, const Eq3Options &options) -> long double;
    /// k-th term of the second sum: Eppstein x 3^((n-k)/3).
    auto eq3_second_term_log(int n, int k) -> long double;

    auto eq3_sum(int n, int p_cut, const Eq3Options &options) -> Eq3Result;

    struct Monotonicity
    {
        long double c1 = 0; // growth of first-sum terms per unit k; positive on [0,1]
        long double c2 = 0; // growth of second-sum terms per unit k; negative
    };

    auto monotonicity_conditions(double eta) -> Monotonicity;

    auto binary_entropy(long double alpha) -> long double;

    struct BinomialTail
    {
        BigInt sum;                 // sum of C(N, s) for s <= floor(alpha N)
        long double log2_sum = 0;
        long double entropy_bits = 0; // h(alpha) N
        bool holds = false;
    };

    auto binomial_tail(int big_n, long double alpha) -> BinomialTail;

    /// Exponent of 4 (per n/4) in the final count of maximal independent sets of order k.
    /// Defined for 0 <= eps < 1/12; f(0) is the eps -> 0 limit.
    auto theorem1_exponent(long double eps) -> long double;

    inline constexpr long double theorem1_eps_limit = 1.0L / 12;

    struct EpsDelta
    {
        long double eps = 0;
        long double f_at_eps = 0;
        long double delta = 0; // 4 - 4^f(eps)
        long double margin = 0;
    };

    /// Largest eps with f(eps) <= 1 - margin, bisected to 1e-12 over the range where the entropy
    /// estimate applies (12 eps / (1 + eps) <= 1/2).
    auto solve_eps_delta(long double margin) -> EpsDelta;

    /// Largest η on a bisection grid for which the bound (4-δ)^(n/4) and Eppstein's
    /// bound both sit below the η-bound in their respective k ranges.
    auto admissible_eta(long double eps, long double delta) -> long double;

    struct AsymptoticWitness
    {
        EpsDelta eps_delta;
        long double eta = 0;
        long double xi = 0;
        /// Per-n exponents of the largest terms with p = floor((1+xi) n / 4); both < ln(12)/4.
        long double first_sum_exponent = 0;
        long double second_sum_exponent = 0;
        long double nu = 0;
    };

    /// Computed (not published) witnesses for eps, delta, η, xi and ν.
    auto solve_witnesses(long double margin) -> AsymptoticWitness;

    struct CurveRow
    {
        long double x, eppstein, nielsen, interpolation, corollary1;
    };

    /// Rows at `points` evenly spaced x in [1/5, 1/3], plus the anchors 1/5, 1/4, 1/3.
    auto curve_table(int points, double eta) -> std::vector<CurveRow>;
    auto curve_csv(const std::vector<CurveRow> &rows) -> std::string;
}
