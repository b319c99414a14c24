#include "mb/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace mb {

Factorization factorize(std::int64_t n) {
    if (n <= 0) throw std::domain_error("factorize: n must be positive");
    Factorization f;
    auto strip = [&](std::int64_t p) {
        if (n % p != 0) return;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.pairs.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    // 6k +/- 1 wheel; d <= n/d avoids overflow near 2^63
    for (std::int64_t d = 5; d <= n / d;) {
        strip(d);
        d += 2;
        if (d > n / d) break;
        strip(d);
        d += 4;
    }
    if (n > 1) f.pairs.emplace_back(n, 1);
    return f;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::int64_t d = 5; d <= n / d;) {
        if (n % d == 0) return false;
        d += 2;
        if (d > n / d) break;
        if (n % d == 0) return false;
        d += 4;
    }
    return true;
}

int moebius(std::int64_t n) {
    Factorization f = factorize(n);
    for (const auto& [p, e] : f.pairs)
        if (e > 1) return 0;
    return f.pairs.size() % 2 == 0 ? 1 : -1;
}

std::int64_t totient(std::int64_t n) {
    std::int64_t t = n;
    for (const auto& [p, e] : factorize(n).pairs) t = t / p * (p - 1);
    return t;
}

std::int64_t radical(std::int64_t n) {
    std::int64_t r = 1;
    for (const auto& [p, e] : factorize(n).pairs) r *= p;
    return r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> ds{1};
    for (const auto& [p, e] : factorize(n).pairs) {
        size_t old = ds.size();
        std::int64_t pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= p;
            for (size_t j = 0; j < old; ++j) ds.push_back(ds[j] * pw);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<std::int64_t> squarefree_divisors(std::int64_t n) {
    std::vector<std::int64_t> ds{1};
    for (const auto& [p, e] : factorize(n).pairs) {
        size_t old = ds.size();
        for (size_t j = 0; j < old; ++j) ds.push_back(ds[j] * p);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

Integer factorial(std::int64_t k) {
    if (k < 0) throw std::domain_error("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Integer binomial(std::int64_t a, std::int64_t b) {
    if (a < 0) throw std::domain_error("binomial: a must be nonnegative");
    if (b < 0 || b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

Integer multinomial(std::int64_t k, std::span<const int> parts) {
    std::int64_t sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum += p;
    }
    if (sum != k) throw std::invalid_argument("multinomial: parts do not sum to k");
    Integer r = factorial(k);
    for (int p : parts) r /= factorial(p);
    return r;
}

static void emit_partition(const std::vector<int>& cur, std::vector<Partition>& out) {
    Partition p;
    p.parts = cur;
    for (int v : cur) {
        if (!p.multiplicities.empty() && p.multiplicities.back().first == v)
            ++p.multiplicities.back().second;
        else
            p.multiplicities.emplace_back(v, 1);
    }
    out.push_back(std::move(p));
}

std::vector<Partition> partitions(int k) {
    if (k < 1) throw std::domain_error("partitions: k must be positive");
    if (k > 64) throw std::domain_error("partitions: k > 64 unsupported");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            emit_partition(cur, out);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

std::vector<Composition> compositions(int k, int N) {
    std::vector<Composition> out;
    for_each_composition(k, N, [&](const Composition& c) { out.push_back(c); });
    return out;
}

Rational power_derivative_partition(std::span<const Rational> derivs, int power, int k) {
    if (k < 1) throw std::domain_error("power_derivative_partition: k must be positive");
    if (power < 1) throw std::domain_error("power_derivative_partition: power must be positive");
    if (derivs.size() < static_cast<size_t>(k) + 1)
        throw std::invalid_argument("power_derivative_partition: need k+1 derivative values");

    Rational total(0);
    for (const Partition& part : partitions(k)) {
        int j = part.length();
        if (j > power) continue;  // 1/(power-j)! vanishes
        Rational term(multinomial(k, part.parts));
        for (int v : part.parts) term *= derivs[static_cast<size_t>(v)];
        for (const auto& [value, count] : part.multiplicities) term /= Rational(factorial(count));
        term *= derivs[0].pow(power - j);
        term *= Rational(factorial(power) / factorial(power - j));
        total += term;
    }
    return total;
}

}  // namespace mb
