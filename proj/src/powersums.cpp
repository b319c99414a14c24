#include "mb/powersums.hpp"

#include "mb/arith.hpp"
#include "mb/bernoulli.hpp"
#include "mb/moebius_bernoulli.hpp"

#include <numeric>
#include <stdexcept>

namespace mb {

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return Polynomial();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> out(p.coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = c * p.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial faulhaber_poly(int k) {
    if (k < 0) throw std::domain_error("faulhaber_poly: negative k");
    // S_k(x) = 1/(k+1) sum_j (-1)^j C(k+1,j) B_j x^{k+1-j}; the sign flip at
    // j = 1 makes the sum run through x inclusive (S_0(x) = x, not x+1)
    std::vector<Rational> c(static_cast<size_t>(k) + 2);
    for (int j = 0; j <= k; ++j) {
        Rational term = Rational(binomial(k + 1, j)) * bernoulli(j) / Rational(k + 1);
        c[static_cast<size_t>(k + 1 - j)] = (j % 2 == 0) ? term : -term;
    }
    return Polynomial(std::move(c));
}

Polynomial psi_poly(int k, std::int64_t n) {
    if (k < 0) throw std::domain_error("psi_poly: negative k");
    if (n < 1) throw std::domain_error("psi_poly: n must be positive");
    if (n == 1) return faulhaber_poly(k);  // the even-only sum below misses B_1
    Factorization f = factorize(n);
    std::vector<Rational> c(static_cast<size_t>(k) + 2);
    for (int m = 0; 2 * m <= k; ++m) {
        Rational term = Rational(binomial(k + 1, 2 * m)) * bernoulli(2 * m) / Rational(k + 1);
        for (const auto& [p, e] : f.pairs) term *= Rational(1) - Rational(Integer(p)).pow(2 * m - 1);
        c[static_cast<size_t>(k + 1 - 2 * m)] = term;
    }
    return Polynomial(std::move(c));
}

Rational psi_eval(int k, std::int64_t n, const Rational& x) {
    return psi_poly(k, n).eval(x);
}

Integer psi_brute(int k, std::int64_t n) {
    if (n < 2) throw std::domain_error("psi_brute: n must be at least 2");
    if (k < 0) throw std::domain_error("psi_brute: negative k");
    Integer total(0);
    for (std::int64_t m = 1; m < n; ++m)
        if (std::gcd(m, n) == 1) total += int_pow(Integer(m), static_cast<unsigned long>(k));
    return total;
}

Polynomial psi_products_poly(int k, int N, std::int64_t n) {
    if (n < 2) throw std::domain_error("psi_products_poly: requires n >= 2 (use psi_products_conv for n = 1)");
    if (N < 1) throw std::domain_error("psi_products_poly: N must be positive");
    if (k < 0) throw std::domain_error("psi_products_poly: negative k");
    // Psi_k^N(x,n) = k!N!/(k+N)! sum_j C(k+N,j) M_j^N(n) S(k+N-j,N) x^{k+N-j}
    Rational front(factorial(k) * factorial(N), factorial(k + N));
    std::vector<Rational> c(static_cast<size_t>(k + N) + 1);
    for (int j = 0; j <= k; ++j) {
        Rational mj = mb_higher({.n = n, .N = N, .k = j});
        if (mj.is_zero()) continue;
        c[static_cast<size_t>(k + N - j)] =
            front * Rational(binomial(k + N, j) * stirling2(k + N - j, N)) * mj;
    }
    return Polynomial(std::move(c));
}

Polynomial psi_products_conv(int k, int N, std::int64_t n) {
    if (N < 1) throw std::domain_error("psi_products_conv: N must be positive");
    if (k < 0) throw std::domain_error("psi_products_conv: negative k");
    std::vector<Polynomial> psis;
    psis.reserve(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) psis.push_back(psi_poly(i, n));
    Polynomial total;
    for_each_composition(k, N, [&](const Composition& comp) {
        Polynomial term(std::vector<Rational>{Rational(multinomial(k, comp))});
        for (int ki : comp) term = term * psis[static_cast<size_t>(ki)];
        total = total + term;
    });
    return total;
}

Integer psi_products_brute(int k, int N, std::int64_t n) {
    if (n < 2) throw std::domain_error("psi_products_brute: n must be at least 2");
    if (N < 1) throw std::domain_error("psi_products_brute: N must be positive");
    if (k < 0) throw std::domain_error("psi_products_brute: negative k");
    std::vector<std::int64_t> residues;
    for (std::int64_t m = 1; m < n; ++m)
        if (std::gcd(m, n) == 1) residues.push_back(m);

    double tuples = 1;
    for (int i = 0; i < N; ++i) tuples *= static_cast<double>(residues.size());
    if (tuples > 1e6) throw std::domain_error("psi_products_brute: phi(n)^N exceeds 10^6 tuples");

    Integer total(0);
    std::vector<size_t> idx(static_cast<size_t>(N), 0);
    while (true) {
        std::int64_t s = 0;
        for (size_t i = 0; i < idx.size(); ++i) s += residues[idx[i]];
        total += int_pow(Integer(s), static_cast<unsigned long>(k));
        size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == residues.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return total;
}

bool derivative_identity_check(int k, std::int64_t n) {
    if (k < 1) throw std::domain_error("derivative_identity_check: k must be positive");
    Polynomial lhs = psi_poly(k, n).derivative();
    Rational sign_mk = (k % 2 == 0) ? mb_number(k, n) : -mb_number(k, n);
    Polynomial rhs = Rational(k) * psi_poly(k - 1, n) + Polynomial(std::vector<Rational>{sign_mk});
    return lhs == rhs;
}

}  // namespace mb
