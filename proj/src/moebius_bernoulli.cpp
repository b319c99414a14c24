#include "mb/moebius_bernoulli.hpp"

#include "mb/arith.hpp"
#include "mb/bernoulli.hpp"
#include "mb/series.hpp"

#include <map>

namespace mb {

Rational mb_number(int k, std::int64_t n) {
    if (k < 0) throw std::domain_error("mb_number: negative k");
    Rational v = bernoulli(k);
    for (const auto& [p, e] : factorize(n).pairs)
        v *= Rational(1) - Rational(Integer(p)).pow(k - 1);  // k = 0 gives 1 - 1/p
    return v;
}

MBTable::MBTable(std::int64_t n, int max_k) : n_(n) {
    if (max_k < 0) throw std::domain_error("MBTable: negative max_k");
    Factorization f = factorize(n);
    values_.reserve(static_cast<size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) {
        Rational v = bernoulli(k);
        for (const auto& [p, e] : f.pairs) v *= Rational(1) - Rational(Integer(p)).pow(k - 1);
        values_.push_back(std::move(v));
    }
}

Rational mb_number_series(int k, std::int64_t n, int order) {
    return egf_coeff(mb_gf(n, order), k);
}

Rational mb_higher_conv(int k, int N, std::int64_t n) {
    if (N < 1) throw std::domain_error("mb_higher_conv: N must be positive");
    if (k < 0) throw std::domain_error("mb_higher_conv: negative k");
    MBTable tab(n, k);
    Rational total(0);
    for_each_composition(k, N, [&](const Composition& c) {
        Rational term(multinomial(k, c));
        for (int ki : c) {
            if (tab[ki].is_zero()) return;
            term *= tab[ki];
        }
        total += term;
    });
    return total;
}

Rational mb_higher_partition(int k, int N, std::int64_t n) {
    if (N < 1) throw std::domain_error("mb_higher_partition: N must be positive");
    if (k < 0) throw std::domain_error("mb_higher_partition: negative k");
    MBTable tab(n, k);
    if (k == 0) return tab[0].pow(N);
    if (n == 1) return power_derivative_partition(tab.values(), N, k);
    if (k % 2 == 1) return Rational(0);  // no all-even partition of odd k

    // enumerate only all-even partitions: double each partition of k/2
    Rational total(0);
    std::vector<int> doubled;
    for (const Partition& half : partitions(k / 2)) {
        int j = half.length();
        if (j > N) continue;
        doubled.assign(half.parts.begin(), half.parts.end());
        for (int& v : doubled) v *= 2;
        Rational term(multinomial(k, doubled));
        for (int v : doubled) term *= tab[v];
        for (const auto& [value, count] : half.multiplicities) term /= Rational(factorial(count));
        term *= tab[0].pow(N - j);
        term *= Rational(factorial(N) / factorial(N - j));
        total += term;
    }
    return total;
}

Rational mb_higher_primepower(int k, int N, std::int64_t p, int s) {
    if (N < 1) throw std::domain_error("mb_higher_primepower: N must be positive");
    if (k < 0) throw std::domain_error("mb_higher_primepower: negative k");
    if (s < 1) throw std::domain_error("mb_higher_primepower: s must be positive");
    if (!is_prime(p)) throw std::domain_error("mb_higher_primepower: p is not prime");
    // depends on p only; s is validated but does not enter
    Rational total(0);
    Rational pr{Integer(p)};
    for (int m = 0; m <= N; ++m) {
        Rational inner(0);
        for (int j = 0; j <= k; ++j) {
            Rational hb1 = higher_bernoulli(j, m);
            if (hb1.is_zero()) continue;
            Rational hb2 = higher_bernoulli(k - j, N - m);
            if (hb2.is_zero()) continue;
            inner += Rational(binomial(k, j)) * hb1 * hb2 * pr.pow(k - j);
        }
        total += Rational(binomial(N, m)) * (-pr).pow(m - N) * inner;
    }
    return total;
}

std::vector<Rational> mb_higher_kernel_table(int N, std::int64_t n, int max_k) {
    if (N < 1) throw std::domain_error("mb_higher_kernel: N must be positive");
    if (max_k < 0) throw std::domain_error("mb_higher_kernel: negative k");
    std::vector<std::int64_t> divs = squarefree_divisors(n);
    int nd = static_cast<int>(divs.size());
    size_t len = static_cast<size_t>(max_k) + 1;

    // per-divisor EGF of (t d / (e^{dt}-1))^m: coefficients B_j^m d^j / j!
    std::map<std::pair<int, int>, std::vector<Rational>> egf_cache;
    auto divisor_egf = [&](int di, int m) -> const std::vector<Rational>& {
        auto it = egf_cache.find({di, m});
        if (it != egf_cache.end()) return it->second;
        std::vector<Rational> c(len);
        Rational dpow(1);
        Rational d{Integer(divs[static_cast<size_t>(di)])};
        for (int j = 0; j <= max_k; ++j) {
            c[static_cast<size_t>(j)] = higher_bernoulli(j, m) * dpow / Rational(factorial(j));
            dpow *= d;
        }
        return egf_cache.emplace(std::make_pair(di, m), std::move(c)).first->second;
    };

    std::vector<Rational> acc(len);
    std::vector<Rational> prod(len), next(len);
    for_each_composition(N, nd, [&](const Composition& mvec) {
        // mu(d)^{m_d} / d^{m_d} over the divisors, times the multinomial
        Rational coef(multinomial(N, mvec));
        for (int di = 0; di < nd; ++di) {
            int m = mvec[static_cast<size_t>(di)];
            if (m == 0) continue;
            coef *= Rational(Integer(moebius(divs[static_cast<size_t>(di)])), Integer(divs[static_cast<size_t>(di)])).pow(m);
        }

        // product of the participating divisor EGFs, truncated at max_k
        std::fill(prod.begin(), prod.end(), Rational(0));
        prod[0] = Rational(1);
        for (int di = 0; di < nd; ++di) {
            int m = mvec[static_cast<size_t>(di)];
            if (m == 0) continue;  // EGF is the constant series 1
            const std::vector<Rational>& f = divisor_egf(di, m);
            std::fill(next.begin(), next.end(), Rational(0));
            for (size_t i = 0; i < len; ++i) {
                if (prod[i].is_zero()) continue;
                for (size_t j = 0; i + j < len; ++j) {
                    if (f[j].is_zero()) continue;
                    next[i + j] += prod[i] * f[j];
                }
            }
            prod.swap(next);
        }
        for (size_t i = 0; i < len; ++i)
            if (!prod[i].is_zero()) acc[i] += coef * prod[i];
    });

    for (int k = 0; k <= max_k; ++k) acc[static_cast<size_t>(k)] *= Rational(factorial(k));
    return acc;
}

Rational mb_higher_kernel(int k, int N, std::int64_t n) {
    return mb_higher_kernel_table(N, n, k).at(static_cast<size_t>(k));
}

MBMethod mb_method_from_string(const std::string& s) {
    if (s == "conv") return MBMethod::convolution;
    if (s == "partition") return MBMethod::partition;
    if (s == "primepower") return MBMethod::prime_power;
    if (s == "kernel") return MBMethod::kernel;
    if (s == "auto") return MBMethod::auto_check;
    throw std::invalid_argument("unknown method '" + s + "' (conv|partition|primepower|kernel|auto)");
}

std::string mb_method_name(MBMethod m) {
    switch (m) {
        case MBMethod::convolution: return "conv";
        case MBMethod::partition: return "partition";
        case MBMethod::prime_power: return "primepower";
        case MBMethod::kernel: return "kernel";
        case MBMethod::auto_check: return "auto";
    }
    return "?";
}

static Rational primepower_route(int k, int N, std::int64_t n) {
    Factorization f = factorize(n);
    if (f.pairs.size() != 1)
        throw std::domain_error("mb_higher: primepower method requires n = p^s");
    return mb_higher_primepower(k, N, f.pairs[0].first, f.pairs[0].second);
}

Rational mb_higher(const HigherMBRequest& request) {
    if (request.n < 1) throw std::domain_error("mb_higher: n must be positive");
    if (request.N < 1) throw std::domain_error("mb_higher: N must be positive");
    if (request.k < 0) throw std::domain_error("mb_higher: k must be nonnegative");

    const std::int64_t n = request.n;
    const int N = request.N;
    const int k = request.k;
    switch (request.method) {
        case MBMethod::convolution: return mb_higher_conv(k, N, n);
        case MBMethod::partition: return mb_higher_partition(k, N, n);
        case MBMethod::prime_power: return primepower_route(k, N, n);
        case MBMethod::kernel: return mb_higher_kernel(k, N, n);
        case MBMethod::auto_check: break;
    }

    std::string context = "mb_higher(n=" + std::to_string(n) + ",N=" + std::to_string(N) +
                          ",k=" + std::to_string(k) + ")";
    Rational v = mb_higher_conv(k, N, n);
    if (k <= request.crosscheck_max_k) {
        Rational alt = mb_higher_partition(k, N, n);
        if (alt != v) throw RouteMismatchError(context, "conv", "partition", v, alt);
        size_t beta = factorize(n).pairs.size();
        if (beta == 1) {
            alt = primepower_route(k, N, n);
            if (alt != v) throw RouteMismatchError(context, "conv", "primepower", v, alt);
        }
        if (beta <= 3) {
            alt = mb_higher_kernel(k, N, n);
            if (alt != v) throw RouteMismatchError(context, "conv", "kernel", v, alt);
        }
    }
    return v;
}

}  // namespace mb
