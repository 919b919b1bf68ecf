#include "misbip/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace misbip::bounds
{
    namespace
    {
        const long double ln2 = std::log(2.0L);
        const long double ln3 = std::log(3.0L);
        const long double ln4 = std::log(4.0L);
        const long double ln5 = std::log(5.0L);
        const long double ln12 = std::log(12.0L);

        void check_nk(int n, int k)
        {
            if (n < 0 || k < 0 || k > n)
                throw std::invalid_argument{"bound requires 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k)};
        }

        void check_eta(long double eta)
        {
            if (! (eta >= 0 && eta <= 1))
                throw std::invalid_argument{"eta must lie in [0,1]"};
        }

        auto log_sum_exp(const std::vector<long double> &logs) -> long double
        {
            if (logs.empty())
                return -std::numeric_limits<long double>::infinity();
            long double top = *std::max_element(logs.begin(), logs.end());
            long double sum = 0;
            for (auto l : logs)
                sum += std::exp(l - top);
            return top + std::log(sum);
        }
    }

    auto ExactBound::value() const -> long double
    {
        return exact ? to_long_double(*exact) : std::exp(log_value);
    }

    auto moon_moser(int n) -> ExactBound
    {
        if (n < 0)
            throw std::invalid_argument{"moon_moser requires n >= 0"};
        ExactBound b;
        b.log_value = n * ln3 / 3;
        if (n % 3 == 0)
            b.exact = power_product({{3, n / 3}});
        return b;
    }

    auto eppstein(int n, int k) -> ExactBound
    {
        check_nk(n, k);
        return {power_product({{3, 4L * k - n}, {4, n - 3L * k}}), (4L * k - n) * ln3 + (n - 3L * k) * ln4};
    }

    auto nielsen(int n, int k) -> ExactBound
    {
        check_nk(n, k);
        return {power_product({{4, 5L * k - n}, {5, n - 4L * k}}), (5L * k - n) * ln4 + (n - 4L * k) * ln5};
    }

    auto corollary1(int n, int k, double eta) -> ExactBound
    {
        check_nk(n, k);
        check_eta(eta);
        long double e = eta;
        return {std::nullopt, ((5 - e) * k - n) * std::log(4 - e) + (n - (4 - e) * k) * std::log(5 - e)};
    }

    auto eppstein_exponent(long double x) -> long double
    {
        return (4 * x - 1) * ln3 + (1 - 3 * x) * ln4;
    }

    auto nielsen_exponent(long double x) -> long double
    {
        return (5 * x - 1) * ln4 + (1 - 4 * x) * ln5;
    }

    auto corollary1_exponent(long double x, long double eta) -> long double
    {
        return ((5 - eta) * x - 1) * std::log(4 - eta) + (1 - (4 - eta) * x) * std::log(5 - eta);
    }

    auto interpolation_exponent(long double x) -> long double
    {
        return x > 0 ? -x * std::log(x) : 0.0L;
    }

    auto corollary1_induction_identity(int n, int k, double eta) -> InductionIdentity
    {
        check_nk(n, k);
        check_eta(eta);
        long double e = eta, a = 4 - e, b = 5 - e;
        InductionIdentity r;
        r.log_rhs = corollary1(n, k, eta).log_value;
        r.log_first = ((5 - e) * k - (n - 1)) * std::log(a) + ((n - 1) - (4 - e) * k) * std::log(b);
        long double rest = n - (5 - e);
        r.log_second = ((5 - e) * (k - 1) - rest) * std::log(a) + (rest - (4 - e) * (k - 1)) * std::log(b);
        long double ratio = std::exp(r.log_first - r.log_rhs) + std::exp(r.log_second - r.log_rhs);
        r.relative_residual = std::fabs(ratio - 1);
        return r;
    }

    auto eq3_first_term_log(int n, int k, const Eq3Options &options) -> long double
    {
        long double a_options;
        bool use_eta = options.eta > 0 &&
            (! options.corollary1_until_eps || k <= (1 + *options.corollary1_until_eps) * n / 4.0L);
        if (use_eta)
            a_options = corollary1(n, k, options.eta).log_value;
        else
            a_options = eppstein(n, k).log_value;
        // Eppstein on n - k vertices, kept as a formula since k may exceed (n - k)
        long double b_options = (4L * k - (n - k)) * ln3 + ((n - k) - 3L * k) * ln4;
        return a_options + b_options;
    }

    auto eq3_second_term_log(int n, int k) -> long double
    {
        return eppstein(n, k).log_value + (n - k) * ln3 / 3;
    }

    auto eq3_sum(int n, int p_cut, const Eq3Options &options) -> Eq3Result
    {
        if (n < 0 || p_cut < 0 || p_cut > n)
            throw std::invalid_argument{"eq3_sum requires 0 <= p <= n"};
        check_eta(options.eta);
        Eq3Result r;
        for (int k = 0; k <= p_cut; ++k)
            r.log_terms1.push_back(eq3_first_term_log(n, k, options));
        for (int k = p_cut + 1; k <= n; ++k)
            r.log_terms2.push_back(eq3_second_term_log(n, k));

        r.log_mibs1 = log_sum_exp(r.log_terms1);
        r.log_mibs2 = log_sum_exp(r.log_terms2);
        auto top1 = std::max_element(r.log_terms1.begin(), r.log_terms1.end());
        r.log_max1 = *top1;
        r.argmax1 = static_cast<int>(top1 - r.log_terms1.begin());
        if (r.log_terms2.empty())
            r.log_max2 = -std::numeric_limits<long double>::infinity();
        else {
            auto top2 = std::max_element(r.log_terms2.begin(), r.log_terms2.end());
            r.log_max2 = *top2;
            r.argmax2 = p_cut + 1 + static_cast<int>(top2 - r.log_terms2.begin());
        }
        return r;
    }

    auto monotonicity_conditions(double eta) -> Monotonicity
    {
        check_eta(eta);
        long double e = eta;
        return {(5 - e) * std::log(4 - e) - (4 - e) * std::log(5 - e) + 5 * ln3 - 4 * ln4,
            4 * ln3 - 3 * ln4 - ln3 / 3};
    }

    auto binary_entropy(long double alpha) -> long double
    {
        if (! (alpha >= 0 && alpha <= 1))
            throw std::invalid_argument{"binary entropy needs alpha in [0,1]"};
        auto term = [](long double p) { return p > 0 ? -p * std::log2(p) : 0.0L; };
        return term(alpha) + term(1 - alpha);
    }

    auto binomial_tail(int big_n, long double alpha) -> BinomialTail
    {
        if (big_n < 0)
            throw std::invalid_argument{"binomial_tail needs N >= 0"};
        BinomialTail r;
        BigInt choose = 1;
        auto top = static_cast<int>(std::floor(alpha * big_n + 1e-12L));
        for (int s = 0; s <= top && s <= big_n; ++s) {
            r.sum += choose;
            choose = choose * (big_n - s) / (s + 1);
        }
        r.log2_sum = ln(r.sum) / ln2;
        r.entropy_bits = binary_entropy(alpha) * big_n;
        r.holds = r.log2_sum <= r.entropy_bits + 1e-12L * std::max(1.0L, r.entropy_bits);
        return r;
    }

    auto theorem1_exponent(long double eps) -> long double
    {
        if (! (eps >= 0 && eps < theorem1_eps_limit))
            throw std::invalid_argument{"theorem1_exponent needs 0 <= eps < 1/12"};
        long double loss = 1 - std::log2(3.0L) / 2;
        return 1 + binary_entropy(12 * eps / (1 + eps)) * (1 + eps) / 2 + 35 * eps - loss * (1 - 112 * eps) / 37;
    }

    auto solve_eps_delta(long double margin) -> EpsDelta
    {
        const long double target = 1 - margin;
        if (! (margin >= 0) || theorem1_exponent(0) > target)
            throw std::invalid_argument{"margin must lie in [0, 1 - f(0))"};

        // 12 eps / (1 + eps) = 1/2 at eps = 1/23
        long double lo = 0, hi = 1.0L / 23;
        while (hi - lo > 1e-12L) {
            long double mid = (lo + hi) / 2;
            (theorem1_exponent(mid) <= target ? lo : hi) = mid;
        }
        EpsDelta r;
        r.eps = lo;
        r.f_at_eps = theorem1_exponent(lo);
        r.delta = 4 - std::pow(4.0L, r.f_at_eps);
        r.margin = margin;
        return r;
    }

    auto admissible_eta(long double eps, long double delta) -> long double
    {
        const long double x0 = 0.25L, x1 = (1 + eps) / 4;
        const long double theorem1_level = std::log(4 - delta) / 4;
        auto admissible = [&](long double eta) {
            // both conditions are linear in x, so endpoints suffice
            return corollary1_exponent(x0, eta) >= theorem1_level &&
                corollary1_exponent(x1, eta) >= theorem1_level &&
                corollary1_exponent(x1, eta) >= eppstein_exponent(x1) &&
                corollary1_exponent(1, eta) >= eppstein_exponent(1);
        };
        if (! admissible(0))
            throw std::invalid_argument{"no admissible eta: eta = 0 already fails"};

        constexpr int grid = 100000;
        long double lo = 0, hi = 1;
        for (int i = 1; i <= grid; ++i) {
            long double eta = static_cast<long double>(i) / grid;
            if (! admissible(eta)) {
                hi = eta;
                break;
            }
            lo = eta;
        }
        while (hi - lo > 1e-15L) {
            long double mid = (lo + hi) / 2;
            (admissible(mid) ? lo : hi) = mid;
        }
        return lo;
    }

    auto solve_witnesses(long double margin) -> AsymptoticWitness
    {
        AsymptoticWitness w;
        w.eps_delta = solve_eps_delta(margin);
        const long double eps = w.eps_delta.eps;
        w.eta = admissible_eta(eps, w.eps_delta.delta);

        auto first = [&](long double x) {
            long double a = x <= (1 + eps) / 4 ? corollary1_exponent(x, w.eta) : eppstein_exponent(x);
            return a + (5 * x - 1) * ln3 + (1 - 4 * x) * ln4;
        };
        auto second = [&](long double x) { return eppstein_exponent(x) + (1 - x) * ln3 / 3; };

        long double gap = ln12 / 4 - first(0.25L);
        long double c1 = monotonicity_conditions(static_cast<double>(w.eta)).c1;
        w.xi = std::min(eps, 2 * gap / c1);
        long double x = (1 + w.xi) / 4;
        w.first_sum_exponent = first(x);
        w.second_sum_exponent = second(x);
        w.nu = 12 - std::exp(4 * std::max(w.first_sum_exponent, w.second_sum_exponent));
        return w;
    }

    auto curve_table(int points, double eta) -> std::vector<CurveRow>
    {
        if (points < 2)
            throw std::invalid_argument{"curve_table needs at least 2 points"};
        check_eta(eta);
        std::vector<long double> xs{0.2L, 0.25L, 1.0L / 3};
        for (int i = 0; i < points; ++i)
            xs.push_back(0.2L + (1.0L / 3 - 0.2L) * i / (points - 1));
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end(), [](long double a, long double b) { return std::fabs(a - b) < 1e-15L; }),
            xs.end());

        std::vector<CurveRow> rows;
        for (auto x : xs)
            rows.push_back({x, eppstein_exponent(x), nielsen_exponent(x), interpolation_exponent(x), corollary1_exponent(x, eta)});
        return rows;
    }

    auto curve_csv(const std::vector<CurveRow> &rows) -> std::string
    {
        std::ostringstream out;
        out << "x,eppstein,nielsen,interp,corollary1_eta\n";
        char line[256];
        for (auto &r : rows) {
            std::snprintf(line, sizeof line, "%.12Lg,%.12Lg,%.12Lg,%.12Lg,%.12Lg\n", r.x, r.eppstein, r.nielsen,
                r.interpolation, r.corollary1);
            out << line;
        }
        return out.str();
    }
}
