#include "mb/verify.hpp"

#include "mb/arith.hpp"
#include "mb/bernoulli.hpp"
#include "mb/moebius_bernoulli.hpp"
#include "mb/powersums.hpp"
#include "mb/series.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <ostream>
#include <random>
#include <thread>

namespace mb {

std::int64_t SuiteReport::total_checks() const {
    std::int64_t t = 0;
    for (const auto& p : properties) t += p.checks;
    return t;
}

std::int64_t SuiteReport::total_failures() const {
    std::int64_t t = 0;
    for (const auto& p : properties) t += p.failure_count;
    return t;
}

void validate_bounds(const VerifyBounds& b) {
    if (b.max_n < 2 || b.max_n > 100) throw std::invalid_argument("verify: max_n must be in [2, 100]");
    if (b.order < 4 || b.order > 64) throw std::invalid_argument("verify: order must be in [4, 64]");
    if (b.max_k < 0 || b.max_k > 20 || b.max_k > b.order)
        throw std::invalid_argument("verify: max_k must be in [0, min(order, 20)]");
    if (b.max_N < 1 || b.max_N > 8) throw std::invalid_argument("verify: max_N must be in [1, 8]");
}

namespace {

constexpr size_t kMaxStoredFailures = 3;

struct Checker {
    PropertyResult res;

    void record_failure(std::string params, std::string lhs, std::string rhs) {
        ++res.failure_count;
        if (res.failures.size() < kMaxStoredFailures)
            res.failures.push_back({std::move(params), std::move(lhs), std::move(rhs)});
    }
    void eq(const Rational& lhs, const Rational& rhs, const std::string& params) {
        ++res.checks;
        if (lhs != rhs) record_failure(params, lhs.str(), rhs.str());
    }
    void eq(const Integer& lhs, const Integer& rhs, const std::string& params) {
        ++res.checks;
        if (lhs != rhs) record_failure(params, lhs.get_str(), rhs.get_str());
    }
    void eq(const Polynomial& lhs, const Polynomial& rhs, const std::string& params) {
        ++res.checks;
        if (!(lhs == rhs)) record_failure(params, poly_str(lhs), poly_str(rhs));
    }
    void eq(const TruncatedSeries& lhs, const TruncatedSeries& rhs, const std::string& params) {
        ++res.checks;
        if (!(lhs == rhs)) {
            for (int i = 0; i <= lhs.order(); ++i) {
                if (lhs.coeffs[static_cast<size_t>(i)] != rhs.coeffs[static_cast<size_t>(i)]) {
                    record_failure(params + " coeff=" + std::to_string(i),
                                   lhs.coeffs[static_cast<size_t>(i)].str(),
                                   rhs.coeffs[static_cast<size_t>(i)].str());
                    return;
                }
            }
        }
    }
    void is_true(bool cond, const std::string& params) {
        ++res.checks;
        if (!cond) record_failure(params, "false", "true");
    }
    void merge(PropertyResult&& chunk) {
        res.checks += chunk.checks;
        res.failure_count += chunk.failure_count;
        for (auto& f : chunk.failures) {
            if (res.failures.size() >= kMaxStoredFailures) break;
            res.failures.push_back(std::move(f));
        }
    }

    static std::string poly_str(const Polynomial& p) {
        std::string s = "[";
        for (int i = 0; i <= p.degree(); ++i) s += (i ? " " : "") + p.coeff(i).str();
        return s + "]";
    }
};

// fn(i, checker) for i in [0, count), split across jobs threads; chunks are
// merged in index order so parallel runs report identically to serial ones
template <typename Fn>
PropertyResult sweep(std::string name, std::int64_t count, int jobs, Fn&& fn) {
    std::vector<PropertyResult> chunks(static_cast<size_t>(count));
    auto run_one = [&](std::int64_t i) {
        Checker c;
        try {
            fn(i, c);
        } catch (const std::exception& e) {
            c.record_failure("index=" + std::to_string(i), std::string("exception: ") + e.what(),
                             "no exception");
        }
        chunks[static_cast<size_t>(i)] = std::move(c.res);
    };

    int workers = static_cast<int>(std::min<std::int64_t>(std::max(jobs, 1), count));
    if (workers <= 1) {
        for (std::int64_t i = 0; i < count; ++i) run_one(i);
    } else {
        std::atomic<std::int64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::int64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) run_one(i);
            });
        for (auto& t : pool) t.join();
    }

    Checker total;
    total.res.name = std::move(name);
    for (auto& ch : chunks) total.merge(std::move(ch));
    return std::move(total.res);
}

std::string fmt_params(std::initializer_list<std::pair<const char*, std::int64_t>> kv) {
    std::string s;
    for (const auto& [k, v] : kv) {
        if (!s.empty()) s += " ";
        s += std::string(k) + "=" + std::to_string(v);
    }
    return s;
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

TruncatedSeries random_series(std::mt19937& rng, int order) {
    TruncatedSeries s(order);
    for (auto& c : s.coeffs) c = random_rational(rng);
    return s;
}

// reference partition counts via the pentagonal-number recurrence
std::vector<std::int64_t> partition_counts(int max_k) {
    std::vector<std::int64_t> p(static_cast<size_t>(max_k) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_k; ++n) {
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
            if (g1 > n && g2 > n) break;
            std::int64_t sign = (j % 2 == 1) ? 1 : -1;
            if (g1 <= n) p[static_cast<size_t>(n)] += sign * p[static_cast<size_t>(n - g1)];
            if (g2 <= n) p[static_cast<size_t>(n)] += sign * p[static_cast<size_t>(n - g2)];
        }
    }
    return p;
}

// Bell numbers via the Bell triangle
std::vector<Integer> bell_numbers(int max_l) {
    std::vector<Integer> bell{Integer(1)};
    std::vector<Integer> row{Integer(1)};
    for (int i = 1; i <= max_l; ++i) {
        std::vector<Integer> next{row.back()};
        for (const Integer& v : row) next.push_back(next.back() + v);
        row = std::move(next);
        bell.push_back(row.front());
    }
    return bell;
}

}  // namespace

SuiteReport verify_arith(const VerifyBounds& b, int jobs) {
    SuiteReport rep;
    rep.suite = "arith";

    rep.properties.push_back(sweep("moebius_kronecker_delta", 200, jobs, [](std::int64_t i, Checker& c) {
        std::int64_t n = i + 1;
        std::int64_t sum = 0;
        for (std::int64_t d : divisors(n)) sum += moebius(d);
        c.eq(Integer(sum), Integer(n == 1 ? 1 : 0), fmt_params({{"n", n}}));
    }));

    rep.properties.push_back(sweep("moebius_over_d_totient_ratio", 200, jobs, [](std::int64_t i, Checker& c) {
        std::int64_t n = i + 1;
        Rational sum(0);
        for (std::int64_t d : divisors(n)) sum += Rational(Integer(moebius(d)), Integer(d));
        c.eq(sum, Rational(Integer(totient(n)), Integer(n)), fmt_params({{"n", n}}));
    }));

    rep.properties.push_back(sweep("totient_product_formula", 200, jobs, [](std::int64_t i, Checker& c) {
        std::int64_t n = i + 1;
        Rational prod{Integer(n)};
        for (const auto& [p, e] : factorize(n).pairs) prod *= Rational(1) - Rational(1, p);
        c.eq(prod, Rational(Integer(totient(n))), fmt_params({{"n", n}}));
    }));

    rep.properties.push_back(sweep("partition_count_recurrence", 1, jobs, [](std::int64_t, Checker& c) {
        auto ref = partition_counts(30);
        for (int k = 1; k <= 30; ++k)
            c.eq(Integer(static_cast<long>(partitions(k).size())), Integer(ref[static_cast<size_t>(k)]),
                 fmt_params({{"k", k}}));
    }));

    rep.properties.push_back(sweep("faa_di_bruno_vs_series_power", 1, jobs, [&](std::int64_t, Checker& c) {
        std::mt19937 rng(20240215);
        int kmax = std::min(8, b.max_k > 0 ? b.max_k : 8);
        int nmax = std::min(5, b.max_N);
        for (int k = 1; k <= kmax; ++k)
            for (int N = 1; N <= nmax; ++N)
                for (int trial = 0; trial < 3; ++trial) {
                    std::vector<Rational> derivs(static_cast<size_t>(k) + 1);
                    for (auto& d : derivs) d = random_rational(rng);
                    TruncatedSeries s(k);
                    for (int i = 0; i <= k; ++i)
                        s.coeffs[static_cast<size_t>(i)] = derivs[static_cast<size_t>(i)] / Rational(factorial(i));
                    c.eq(power_derivative_partition(derivs, N, k), egf_coeff(pow(s, N), k),
                         fmt_params({{"k", k}, {"N", N}, {"trial", trial}}));
                }
    }));

    return rep;
}

SuiteReport verify_series(const VerifyBounds& b, int jobs) {
    SuiteReport rep;
    rep.suite = "series";
    const int K = b.order;

    rep.properties.push_back(sweep("mul_commutative_associative", 1, jobs, [&](std::int64_t, Checker& c) {
        std::mt19937 rng(911);
        for (int trial = 0; trial < 8; ++trial) {
            TruncatedSeries x = random_series(rng, K), y = random_series(rng, K), z = random_series(rng, K);
            c.eq(mul(x, y), mul(y, x), fmt_params({{"trial", trial}, {"law", 0}}));
            c.eq(mul(mul(x, y), z), mul(x, mul(y, z)), fmt_params({{"trial", trial}, {"law", 1}}));
        }
    }));

    rep.properties.push_back(sweep("inverse_roundtrip", 1, jobs, [&](std::int64_t, Checker& c) {
        std::mt19937 rng(1702);
        for (int trial = 0; trial < 8; ++trial) {
            TruncatedSeries x = random_series(rng, K);
            if (x.coeffs[0].is_zero()) x.coeffs[0] = Rational(1);
            c.eq(mul(x, inverse(x)), TruncatedSeries::one(K), fmt_params({{"trial", trial}}));
        }
    }));

    rep.properties.push_back(sweep("mb_gf_odd_coefficients_vanish", std::min<std::int64_t>(30, b.max_n) - 1,
                                   jobs, [&](std::int64_t i, Checker& c) {
        std::int64_t n = i + 2;
        TruncatedSeries s = mb_gf(n, K);
        for (int k = 1; k <= K; k += 2)
            c.eq(s.coeffs[static_cast<size_t>(k)], Rational(0), fmt_params({{"n", n}, {"k", k}}));
    }));

    rep.properties.push_back(sweep("psi_gf_route_agreement", std::min<std::int64_t>(12, b.max_n) - 1,
                                   jobs, [&](std::int64_t i, Checker& c) {
        std::int64_t n = i + 2;
        const Rational xs[] = {Rational(1), Rational(5, 2), Rational(7)};
        for (size_t xi = 0; xi < 3; ++xi)
            c.eq(psi_gf(xs[xi], n, K), psi_gf_direct(xs[xi], n, K),
                 fmt_params({{"n", n}, {"x_index", static_cast<std::int64_t>(xi)}}));
    }));

    return rep;
}

SuiteReport verify_bernoulli(const VerifyBounds& b, int jobs) {
    SuiteReport rep;
    rep.suite = "bernoulli";

    rep.properties.push_back(sweep("odd_indices_vanish", 10, jobs, [](std::int64_t i, Checker& c) {
        int k = static_cast<int>(i) + 1;
        c.eq(bernoulli(2 * k + 1), Rational(0), fmt_params({{"index", 2 * k + 1}}));
    }));

    rep.properties.push_back(sweep("recurrence_vs_explicit", 21, jobs, [](std::int64_t i, Checker& c) {
        int k = static_cast<int>(i);
        c.eq(bernoulli(k), bernoulli_explicit(k), fmt_params({{"k", k}}));
    }));

    rep.properties.push_back(sweep("higher_vs_series_power", 13, jobs, [](std::int64_t i, Checker& c) {
        int j = static_cast<int>(i);
        for (int m = 0; m <= 6; ++m)
            c.eq(higher_bernoulli(j, m), higher_bernoulli_conv(j, m), fmt_params({{"j", j}, {"m", m}}));
    }));

    rep.properties.push_back(sweep("t_over_expm1_egf_readout", 1, jobs, [&](std::int64_t, Checker& c) {
        TruncatedSeries s = t_over_expm1(1, b.order);
        for (int k = 0; k <= b.order; ++k)
            c.eq(egf_coeff(s, k), bernoulli(k), fmt_params({{"k", k}}));
    }));

    rep.properties.push_back(sweep("stirling_row_sums_bell", 1, jobs, [](std::int64_t, Checker& c) {
        auto bell = bell_numbers(12);
        for (int l = 0; l <= 12; ++l) {
            Integer row(0);
            for (int m = 0; m <= l; ++m) row += stirling2(l, m);
            c.eq(row, bell[static_cast<size_t>(l)], fmt_params({{"l", l}}));
        }
    }));

    rep.properties.push_back(sweep("stirling_series_identity", 4, jobs, [](std::int64_t i, Checker& c) {
        int N = static_cast<int>(i) + 1;
        const Rational xs[] = {Rational(1), Rational(5, 2), Rational(0)};
        for (size_t xi = 0; xi < 3; ++xi)
            c.is_true(stirling_identity_check(xs[xi], N, 10),
                      fmt_params({{"N", N}, {"x_index", static_cast<std::int64_t>(xi)}}));
    }));

    return rep;
}

SuiteReport verify_mb(const VerifyBounds& b, int jobs) {
    SuiteReport rep;
    rep.suite = "mb";

    rep.properties.push_back(sweep("four_route_agreement", b.max_n - 1, jobs, [&](std::int64_t i, Checker& c) {
        std::int64_t n = i + 2;
        Factorization f = factorize(n);
        size_t beta = f.pairs.size();
        for (int N = 1; N <= b.max_N; ++N) {
            std::vector<Rational> kernel = mb_higher_kernel_table(N, n, b.max_k);
            for (int k = 0; k <= b.max_k; ++k) {
                Rational conv = mb_higher_conv(k, N, n);
                c.eq(conv, mb_higher_partition(k, N, n),
                     fmt_params({{"n", n}, {"N", N}, {"k", k}}) + " routes=conv/partition");
                c.eq(conv, kernel[static_cast<size_t>(k)],
                     fmt_params({{"n", n}, {"N", N}, {"k", k}}) + " routes=conv/kernel");
                if (beta == 1)
                    c.eq(conv, mb_higher_primepower(k, N, f.pairs[0].first, f.pairs[0].second),
                         fmt_params({{"n", n}, {"N", N}, {"k", k}}) + " routes=conv/primepower");
            }
        }
    }));

    rep.properties.push_back(sweep("odd_vanishing_all_routes", b.max_n - 1, jobs, [&](std::int64_t i, Checker& c) {
        std::int64_t n = i + 2;
        Factorization f = factorize(n);
        for (int N = 1; N <= std::min(5, b.max_N); ++N)
            for (int half = 1; half <= 5; ++half) {
                int k = 2 * half - 1;
                if (k > b.max_k) break;
                std::string params = fmt_params({{"n", n}, {"N", N}, {"k", k}});
                c.eq(mb_higher_conv(k, N, n), Rational(0), params + " route=conv");
                c.eq(mb_higher_partition(k, N, n), Rational(0), params + " route=partition");
                c.eq(mb_higher_kernel(k, N, n), Rational(0), params + " route=kernel");
                if (f.pairs.size() == 1)
                    c.eq(mb_higher_primepower(k, N, f.pairs[0].first, f.pairs[0].second), Rational(0),
                         params + " route=primepower");
            }
    }));

    rep.properties.push_back(sweep("series_power_route", std::min<std::int64_t>(12, b.max_n) - 1, jobs,
                                   [&](std::int64_t i, Checker& c) {
        std::int64_t n = i + 2;
        TruncatedSeries base = mb_gf(n, b.order);
        for (int N = 1; N <= std::min(4, b.max_N); ++N) {
            TruncatedSeries powd = pow(base, N);
            for (int k = 0; k <= b.max_k; ++k)
                c.eq(egf_coeff(powd, k), mb_higher_conv(k, N, n), fmt_params({{"n", n}, {"N", N}, {"k", k}}));
        }
    }));

    rep.properties.push_back(sweep("order_zero_and_two_closed_rows", b.max_n - 1, jobs,
                                   [&](std::int64_t i, Checker& c) {
        std::int64_t n = i + 2;
        Rational m0(Integer(totient(n)), Integer(n));
        for (int N = 1; N <= b.max_N; ++N) {
            c.eq(mb_higher_conv(0, N, n), m0.pow(N), fmt_params({{"n", n}, {"N", N}, {"k", 0}}));
            if (b.max_k >= 2)
                c.eq(mb_higher_conv(2, N, n), Rational(N) * m0.pow(N - 1) * mb_number(2, n),
                     fmt_params({{"n", n}, {"N", N}, {"k", 2}}));
        }
    }));

    rep.properties.push_back(sweep("radical_invariance", 99, jobs, [&](std::int64_t i, Checker& c) {
        std::int64_t n = i + 2;
        std::int64_t rad = radical(n);
        if (rad == n) return;  // squarefree: nothing to compare
        for (int N = 1; N <= std::min(3, b.max_N); ++N)
            for (int k = 0; k <= std::min(6, b.max_k); k += 2)
                c.eq(mb_higher_conv(k, N, n), mb_higher_conv(k, N, rad),
                     fmt_params({{"n", n}, {"N", N}, {"k", k}}));
    }));

    // the always-printed normalization comparison: generating-function value
    // vs the phi(n)-normalized convention found in some published tables
    {
        Rational gf = mb_higher_conv(2, 2, 6);
        Rational phi_norm = Rational(2) * Rational(Integer(totient(6))).pow(1) * mb_number(2, 6);
        rep.notes.push_back("mb.m2_convention n=6 N=2 k=2 generating_function_value=" + gf.str() +
                            " phi_normalized_value=" + phi_norm.str() +
                            " status=documented_discrepancy");
    }

    return rep;
}

SuiteReport verify_psi(const VerifyBounds& b, int jobs) {
    SuiteReport rep;
    rep.suite = "psi";

    rep.properties.push_back(sweep("coprime_power_sum_anchor", 49, jobs, [](std::int64_t i, Checker& c) {
        std::int64_t n = i + 2;
        for (int k = 0; k <= 8; ++k)
            c.eq(psi_eval(k, n, Rational(Integer(n))), Rational(psi_brute(k, n)),
                 fmt_params({{"n", n}, {"k", k}}));
    }));

    rep.properties.push_back(sweep("products_stirling_form_vs_definition", std::min<std::int64_t>(20, b.max_n) - 1,
                                   jobs, [&](std::int64_t i, Checker& c) {
        std::int64_t n = i + 2;
        for (int N = 1; N <= std::min(4, b.max_N); ++N)
            for (int k = 0; k <= std::min(6, b.max_k); ++k)
                c.eq(psi_products_poly(k, N, n), psi_products_conv(k, N, n),
                     fmt_params({{"n", n}, {"N", N}, {"k", k}}));
    }));

    rep.properties.push_back(sweep("products_integer_anchor", std::min<std::int64_t>(12, b.max_n) - 1,
                                   jobs, [&](std::int64_t i, Checker& c) {
        std::int64_t n = i + 2;
        for (int N = 1; N <= std::min(3, b.max_N); ++N)
            for (int k = 0; k <= std::min(6, b.max_k); ++k)
                c.eq(psi_products_conv(k, N, n).eval(Rational(Integer(n))),
                     Rational(psi_products_brute(k, N, n)), fmt_params({{"n", n}, {"N", N}, {"k", k}}));
    }));

    rep.properties.push_back(sweep("zero_constant_term", b.max_n - 1, jobs, [&](std::int64_t i, Checker& c) {
        std::int64_t n = i + 2;
        for (int k = 0; k <= b.max_k; ++k)
            c.eq(psi_poly(k, n).coeff(0), Rational(0), fmt_params({{"n", n}, {"k", k}}));
        for (int N = 1; N <= std::min(3, b.max_N); ++N)
            for (int k = 0; k <= std::min(4, b.max_k); ++k)
                c.eq(psi_products_poly(k, N, n).coeff(0), Rational(0),
                     fmt_params({{"n", n}, {"N", N}, {"k", k}}));
    }));

    rep.properties.push_back(sweep("degree_and_leading_coefficient", b.max_n - 1, jobs,
                                   [&](std::int64_t i, Checker& c) {
        std::int64_t n = i + 2;
        Rational m0(Integer(totient(n)), Integer(n));
        for (int k = 0; k <= b.max_k; ++k) {
            Polynomial p = psi_poly(k, n);
            c.is_true(p.degree() == k + 1, fmt_params({{"n", n}, {"k", k}}) + " aspect=degree");
            c.eq(p.coeff(k + 1), m0 / Rational(k + 1), fmt_params({{"n", n}, {"k", k}}) + " aspect=leading");
        }
    }));

    rep.properties.push_back(sweep("derivative_identity", b.max_n, jobs, [&](std::int64_t i, Checker& c) {
        std::int64_t n = i + 1;  // includes n = 1
        for (int k = 1; k <= b.max_k; ++k)
            c.is_true(derivative_identity_check(k, n), fmt_params({{"n", n}, {"k", k}}));
    }));

    rep.properties.push_back(sweep("products_series_anchor", 1, jobs, [&](std::int64_t, Checker& c) {
        const Rational xs[] = {Rational(1), Rational(5, 2)};
        for (std::int64_t n : {2, 6, 12}) {
            if (n > b.max_n) continue;
            for (size_t xi = 0; xi < 2; ++xi) {
                TruncatedSeries base = psi_gf(xs[xi], n, b.order);
                for (int N = 1; N <= std::min(3, b.max_N); ++N) {
                    TruncatedSeries powd = pow(base, N);
                    for (int k = 0; k <= std::min(8, b.max_k); ++k)
                        c.eq(egf_coeff(powd, k), psi_products_conv(k, N, n).eval(xs[xi]),
                             fmt_params({{"n", n}, {"N", N}, {"k", k},
                                         {"x_index", static_cast<std::int64_t>(xi)}}));
                }
            }
        }
    }));

    return rep;
}

std::vector<SuiteReport> run_suites(const std::string& which, const VerifyBounds& b, int jobs) {
    validate_bounds(b);
    std::vector<SuiteReport> out;
    bool all = which == "all";
    if (all || which == "arith") out.push_back(verify_arith(b, jobs));
    if (all || which == "series") out.push_back(verify_series(b, jobs));
    if (all || which == "bernoulli") out.push_back(verify_bernoulli(b, jobs));
    if (all || which == "mb") out.push_back(verify_mb(b, jobs));
    if (all || which == "psi") out.push_back(verify_psi(b, jobs));
    if (out.empty())
        throw std::invalid_argument("unknown suite '" + which + "' (all|arith|series|bernoulli|mb|psi)");
    return out;
}

void write_reports(std::ostream& os, const std::vector<SuiteReport>& reports, const std::string& which) {
    std::int64_t checks = 0, failures = 0;
    for (const SuiteReport& rep : reports) {
        for (const PropertyResult& p : rep.properties) {
            if (p.failure_count == 0) {
                os << "ok " << rep.suite << "." << p.name << " checks=" << p.checks << "\n";
            } else {
                os << "FAIL " << rep.suite << "." << p.name << " checks=" << p.checks
                   << " failures=" << p.failure_count;
                if (!p.failures.empty()) {
                    const VerifyFailure& f = p.failures.front();
                    os << " first={\"params\":\"" << f.params << "\",\"lhs\":\"" << f.lhs
                       << "\",\"rhs\":\"" << f.rhs << "\"}";
                }
                os << "\n";
            }
        }
        for (const std::string& note : rep.notes) os << "note " << note << "\n";
        os << "suite " << rep.suite << ": properties=" << rep.properties.size()
           << " checks=" << rep.total_checks() << " failures=" << rep.total_failures() << "\n";
        checks += rep.total_checks();
        failures += rep.total_failures();
    }
    os << "verify " << which << ": suites=" << reports.size() << " checks=" << checks
       << " failures=" << failures << " status=" << (failures == 0 ? "ok" : "fail") << "\n";
}

bool reports_ok(const std::vector<SuiteReport>& reports) {
    for (const SuiteReport& r : reports)
        if (!r.ok()) return false;
    return true;
}

}  // namespace mb
