#include "mb/series.hpp"

#include "mb/arith.hpp"

#include <stdexcept>

namespace mb {

static void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series: order mismatch (" + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()) + ")");
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i] - b.coeffs[i];
    return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (size_t j = 0; i + j < b.coeffs.size(); ++j) {
            if (b.coeffs[j].is_zero()) continue;
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return r;
}

TruncatedSeries pow(const TruncatedSeries& a, int n) {
    if (n < 0) throw std::domain_error("series pow: negative exponent");
    TruncatedSeries r = TruncatedSeries::one(a.order());
    for (int i = 0; i < n; ++i) r = mul(r, a);
    return r;
}

TruncatedSeries inverse(const TruncatedSeries& a) {
    if (a.coeffs[0].is_zero()) throw std::domain_error("series inverse: zero constant term");
    TruncatedSeries b(a.order());
    b.coeffs[0] = Rational(1) / a.coeffs[0];
    for (int k = 1; k <= a.order(); ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i) acc += a.coeffs[static_cast<size_t>(i)] * b.coeffs[static_cast<size_t>(k - i)];
        b.coeffs[static_cast<size_t>(k)] = -acc / a.coeffs[0];
    }
    return b;
}

TruncatedSeries scale(const TruncatedSeries& a, const Rational& c) {
    TruncatedSeries r(a.order());
    for (size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i] * c;
    return r;
}

Rational egf_coeff(const TruncatedSeries& s, int k) {
    if (k < 0 || k > s.order())
        throw std::out_of_range("egf_coeff: k exceeds truncation order");
    return s.coeffs[static_cast<size_t>(k)] * Rational(factorial(k));
}

TruncatedSeries exp_growth(const Rational& a, int order) {
    TruncatedSeries s(order);
    Rational c = a;  // a^{k+1}/(k+1)!
    s.coeffs[0] = c;
    for (int k = 1; k <= order; ++k) {
        c *= a / Rational(k + 1);
        s.coeffs[static_cast<size_t>(k)] = c;
    }
    return s;
}

TruncatedSeries expm1_over_t(std::int64_t d, int order) {
    if (d < 1) throw std::domain_error("expm1_over_t: d must be positive");
    return exp_growth(Rational(Integer(d)), order);
}

TruncatedSeries t_over_expm1(std::int64_t d, int order) {
    return inverse(expm1_over_t(d, order));
}

TruncatedSeries mb_gf(std::int64_t n, int order) {
    TruncatedSeries acc = TruncatedSeries::zero(order);
    for (std::int64_t d : divisors(n)) {
        int mu = moebius(d);
        if (mu == 0) continue;
        TruncatedSeries term = t_over_expm1(d, order);
        acc = mu == 1 ? add(acc, term) : sub(acc, term);
    }
    return acc;
}

TruncatedSeries psi_gf(const Rational& x, std::int64_t n, int order) {
    TruncatedSeries base = mb_gf(n, order);
    if (n == 1 && order >= 1) base.coeffs[1] += Rational(1);  // the t*delta_{1n} term
    return mul(base, exp_growth(x, order));
}

TruncatedSeries psi_gf_direct(const Rational& x, std::int64_t n, int order) {
    TruncatedSeries acc = TruncatedSeries::zero(order);
    for (std::int64_t d : divisors(n)) {
        int mu = moebius(d);
        if (mu == 0) continue;
        Rational dr{Integer(d)};
        // (e^{(d+x)t} - e^{dt})/(e^{dt} - 1), numerator and denominator each over t
        TruncatedSeries num = sub(exp_growth(dr + x, order), exp_growth(dr, order));
        TruncatedSeries term = mul(num, inverse(exp_growth(dr, order)));
        acc = mu == 1 ? add(acc, term) : sub(acc, term);
    }
    return acc;
}

}  // namespace mb
