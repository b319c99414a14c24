#pragma once

// Power-sum polynomials over exact rationals:
//
//   S_k(x)        value at positive integer m is 1^k + 2^k + ... + m^k
//   Psi_k(x, n)   value at x = n is the sum of k-th powers of the integers
//                 below n coprime to n; closed form
//                 (1/(k+1)) sum_m C(k+1,2m) B_{2m} x^{k+1-2m} prod_{p|n}(1-p^{2m-1})
//   Psi_k^N(x,n)  multinomial convolution of N of the above; closed form via
//                 M_j^N(n) and Stirling numbers of the second kind
//
// Integer brute-force enumerations (psi_brute, psi_products_brute) anchor
// the polynomial identities at x = n.

#include "mb/rational.hpp"

#include <cstdint>
#include <vector>

namespace mb {

// univariate polynomial, coefficients ascending by power, trailing zeros trimmed
class Polynomial {
public:
    Polynomial() = default;  // zero polynomial
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<size_t>(i)]
                                                                : Rational(0);
    }
    Rational eval(const Rational& x) const;
    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

Polynomial faulhaber_poly(int k);                 // S_k; degree k+1, zero constant term
Polynomial psi_poly(int k, std::int64_t n);       // Psi_k(., n); n = 1 falls back to S_k
Rational psi_eval(int k, std::int64_t n, const Rational& x);
Integer psi_brute(int k, std::int64_t n);         // n >= 2, direct coprime enumeration

Polynomial psi_products_poly(int k, int N, std::int64_t n);  // Stirling closed form, n >= 2
Polynomial psi_products_conv(int k, int N, std::int64_t n);  // multinomial convolution, n >= 1
Integer psi_products_brute(int k, int N, std::int64_t n);    // N-tuple enumeration, n >= 2

// d/dx Psi_k(x,n) == k Psi_{k-1}(x,n) + (-1)^k M_k(n), as polynomials
bool derivative_identity_check(int k, std::int64_t n);

}  // namespace mb
