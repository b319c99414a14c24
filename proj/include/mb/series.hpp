#pragma once

// Truncated formal power series in t over Rational: the generating-function
// side of every identity in this library. A series of order K stores the
// K+1 coefficients of sum c_k t^k; all arithmetic is exact and formal
// (convergence is irrelevant), and binary operations insist on equal orders
// rather than truncating silently.
//
// Coefficients are stored plain; quantities normalized like sum a_k t^k/k!
// are read out with egf_coeff (k! * c_k).

#include "mb/rational.hpp"

#include <cstdint>
#include <vector>

namespace mb {

struct TruncatedSeries {
    std::vector<Rational> coeffs;  // c_0 .. c_K

    TruncatedSeries() : coeffs(1) {}
    explicit TruncatedSeries(int order) : coeffs(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::domain_error("TruncatedSeries: negative order");
    }
    explicit TruncatedSeries(std::vector<Rational> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw std::domain_error("TruncatedSeries: empty coefficient list");
    }

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.coeffs[0] = Rational(1);
        return s;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs == b.coeffs;
    }
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);  // Cauchy product mod t^(K+1)
TruncatedSeries pow(const TruncatedSeries& a, int n);                     // repeated mul; pow(a,0) = 1
TruncatedSeries inverse(const TruncatedSeries& a);                        // needs c_0 != 0
TruncatedSeries scale(const TruncatedSeries& a, const Rational& c);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

// k! * c_k; throws when k exceeds the truncation order
Rational egf_coeff(const TruncatedSeries& s, int k);

// (e^{at} - 1)/t: coefficients a^{k+1}/(k+1)!
TruncatedSeries exp_growth(const Rational& a, int order);

// (e^{dt} - 1)/t for integer d >= 1
TruncatedSeries expm1_over_t(std::int64_t d, int order);

// t/(e^{dt} - 1) = inverse of the above; k!*c_k = B_k d^{k-1}
TruncatedSeries t_over_expm1(std::int64_t d, int order);

// sum over divisors d|n of mu(d) * t/(e^{dt} - 1); k!*c_k = M_k(n)
TruncatedSeries mb_gf(std::int64_t n, int order);

// generating function of the coprime power sums: k!*c_k = Psi_k(x, n).
// psi_gf builds the factored form (t*[n==1] + mb_gf(n)) * (e^{xt}-1)/t;
// psi_gf_direct sums mu(d)*(e^{(d+x)t} - e^{dt})/(e^{dt}-1) termwise.
// The two must agree coefficientwise.
TruncatedSeries psi_gf(const Rational& x, std::int64_t n, int order);
TruncatedSeries psi_gf_direct(const Rational& x, std::int64_t n, int order);

}  // namespace mb
