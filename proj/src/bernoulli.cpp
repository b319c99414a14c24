#include "mb/bernoulli.hpp"

#include "mb/arith.hpp"
#include "mb/series.hpp"

#include <map>
#include <stdexcept>

namespace mb {

Rational BernoulliCache::value(int k) {
    if (k < 0) throw std::domain_error("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(mu_);
    if (table_.empty()) table_.push_back(Rational(1));
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    while (static_cast<int>(table_.size()) <= k) {
        int m = static_cast<int>(table_.size());
        Rational acc(0);
        for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * table_[static_cast<size_t>(j)];
        table_.push_back(-acc / Rational(m + 1));
    }
    return table_[static_cast<size_t>(k)];
}

Rational bernoulli(int k) {
    static BernoulliCache cache;
    return cache.value(k);
}

Rational bernoulli_explicit(int k) {
    if (k < 0) throw std::domain_error("bernoulli_explicit: negative index");
    if (k == 0) return Rational(1);  // the double sum is empty at k = 0
    Rational total(0);
    for (int m = 1; m <= k; ++m) {
        Rational inner(0);
        for (int n = 1; n <= m; ++n) {
            Integer term = binomial(m, n) * int_pow(Integer(n), static_cast<unsigned long>(k));
            inner += (n % 2 == 0) ? Rational(term) : -Rational(term);
        }
        total += inner / Rational(m + 1);
    }
    return total;
}

Rational higher_bernoulli(int j, int m) {
    if (j < 0 || m < 0) throw std::domain_error("higher_bernoulli: negative argument");
    if (m == 0) return j == 0 ? Rational(1) : Rational(0);

    static std::mutex mu;
    static std::map<std::pair<int, int>, Rational> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({j, m});
        if (it != cache.end()) return it->second;
    }

    Rational total(0);
    for (int l = 0; l <= j; ++l) {
        Integer inner(0);  // sum_h (-1)^h C(l,h) h^{j+l}
        for (int h = 0; h <= l; ++h) {
            Integer pw = (h == 0) ? Integer(j + l == 0 ? 1 : 0)
                                  : int_pow(Integer(h), static_cast<unsigned long>(j + l));
            Integer term = binomial(l, h) * pw;
            inner += (h % 2 == 0) ? term : -term;
        }
        if (inner == 0) continue;
        Rational coef = Rational(binomial(j + m, j - l) * binomial(m + l - 1, l));
        coef *= Rational(factorial(j), factorial(j + l));
        total += coef * Rational(inner);
    }

    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(j, m), total);
    return total;
}

Rational higher_bernoulli_conv(int j, int m) {
    if (j < 0 || m < 0) throw std::domain_error("higher_bernoulli_conv: negative argument");
    return egf_coeff(pow(t_over_expm1(1, j), m), j);
}

Integer stirling2(int n, int m) {
    if (n < 0 || m < 0) throw std::domain_error("stirling2: negative argument");
    if (m > n) return 0;
    static std::mutex mu;
    static std::vector<std::vector<Integer>> rows{{Integer(1)}};  // rows[n][m], m <= n
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(rows.size()) <= n) {
        int r = static_cast<int>(rows.size());
        std::vector<Integer> row(static_cast<size_t>(r) + 1);
        row[0] = 0;
        for (int c = 1; c < r; ++c) row[static_cast<size_t>(c)] = Integer(c) * rows.back()[static_cast<size_t>(c)] + rows.back()[static_cast<size_t>(c - 1)];
        row[static_cast<size_t>(r)] = 1;
        rows.push_back(std::move(row));
    }
    return rows[static_cast<size_t>(n)][static_cast<size_t>(m)];
}

bool stirling_identity_check(const Rational& x, int N, int order) {
    if (N < 1) throw std::domain_error("stirling_identity_check: N must be positive");
    TruncatedSeries lhs = pow(exp_growth(x, order), N);
    for (int j = 0; j <= order; ++j) {
        Rational expect = Rational(factorial(N) * stirling2(j + N, N), factorial(j + N)) * x.pow(j + N);
        if (lhs.coeffs[static_cast<size_t>(j)] != expect) return false;
    }
    return true;
}

}  // namespace mb
