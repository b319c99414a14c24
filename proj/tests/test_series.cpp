#include "mb/series.hpp"

#include "mb/arith.hpp"
#include "mb/bernoulli.hpp"
#include "mb/moebius_bernoulli.hpp"
#include "mb/powersums.hpp"

#include <doctest.h>

using namespace mb;

namespace {

TruncatedSeries from_ints(std::vector<long> v) {
    TruncatedSeries s(static_cast<int>(v.size()) - 1);
    for (size_t i = 0; i < v.size(); ++i) s.coeffs[i] = Rational(v[i]);
    return s;
}

}  // namespace

TEST_CASE("add and order mismatch") {
    auto one_plus_t = from_ints({1, 1, 0});
    auto one_minus_t = from_ints({1, -1, 0});
    CHECK(add(one_plus_t, one_minus_t) == from_ints({2, 0, 0}));
    CHECK(add(TruncatedSeries::zero(2), one_plus_t) == one_plus_t);
    CHECK_THROWS_AS(add(one_plus_t, TruncatedSeries::zero(5)), std::invalid_argument);
    CHECK_THROWS_AS(mul(one_plus_t, TruncatedSeries::zero(5)), std::invalid_argument);
}

TEST_CASE("mul truncates at order") {
    auto one_plus_t = from_ints({1, 1, 0});
    auto one_minus_t = from_ints({1, -1, 0});
    CHECK(mul(one_plus_t, one_minus_t) == from_ints({1, 0, -1}));
    CHECK(mul(one_plus_t, TruncatedSeries::one(2)) == one_plus_t);
}

TEST_CASE("pow") {
    auto one_plus_t = from_ints({1, 1, 0});
    CHECK(pow(one_plus_t, 2) == from_ints({1, 2, 1}));
    CHECK(pow(one_plus_t, 1) == one_plus_t);
    CHECK(pow(one_plus_t, 0) == TruncatedSeries::one(2));
}

TEST_CASE("inverse") {
    auto geom = inverse(from_ints({1, -1, 0, 0}));
    CHECK(geom == from_ints({1, 1, 1, 1}));
    auto a = from_ints({2, 3, -1, 5});
    CHECK(inverse(inverse(a)) == a);
    CHECK(mul(a, inverse(a)) == TruncatedSeries::one(3));
    CHECK_THROWS_AS(inverse(from_ints({0, 1})), std::domain_error);
}

TEST_CASE("expm1_over_t coefficients") {
    auto d1 = expm1_over_t(1, 4);
    CHECK(d1.coeffs[0] == Rational(1));
    CHECK(d1.coeffs[1] == Rational(1, 2));
    CHECK(d1.coeffs[2] == Rational(1, 6));
    auto d2 = expm1_over_t(2, 4);
    CHECK(d2.coeffs[0] == Rational(2));
    CHECK(d2.coeffs[1] == Rational(2));
    CHECK(d2.coeffs[2] == Rational(4, 3));
    for (std::int64_t d = 1; d <= 5; ++d) CHECK(expm1_over_t(d, 3).coeffs[0] == Rational(Integer(d)));
    CHECK_THROWS_AS(expm1_over_t(0, 4), std::domain_error);
}

TEST_CASE("t_over_expm1 carries Bernoulli numbers") {
    const int K = 12;
    auto d1 = t_over_expm1(1, K);
    CHECK(d1.coeffs[0] == Rational(1));
    CHECK(d1.coeffs[1] == Rational(-1, 2));
    CHECK(d1.coeffs[2] == Rational(1, 12));
    for (int k = 0; k <= K; ++k) CHECK(egf_coeff(d1, k) == bernoulli(k));

    // reciprocal pair
    CHECK(mul(expm1_over_t(1, K), t_over_expm1(1, K)) == TruncatedSeries::one(K));

    // scaling law: k! c_k(d) = B_k d^{k-1}
    auto d2 = t_over_expm1(2, K);
    CHECK(d2.coeffs[0] == Rational(1, 2));
    for (int k = 0; k <= K; ++k)
        CHECK(egf_coeff(d2, k) == bernoulli(k) * Rational(2).pow(k - 1));
}

TEST_CASE("egf_coeff range") {
    auto s = expm1_over_t(1, 4);
    CHECK_THROWS_AS(egf_coeff(s, 5), std::out_of_range);
    CHECK_THROWS_AS(egf_coeff(s, -1), std::out_of_range);
}

TEST_CASE("mb_gf") {
    const int K = 12;
    CHECK(mb_gf(1, K) == t_over_expm1(1, K));
    for (int k = 0; k <= 10; ++k) CHECK(egf_coeff(mb_gf(6, K), k) == mb_number(k, 6));
    for (std::int64_t n = 2; n <= 12; ++n) CHECK(mb_gf(n, K).coeffs[1] == Rational(0));
}

TEST_CASE("pow of mb_gf matches the convolution definition") {
    const int K = 12;
    auto sq = pow(mb_gf(6, K), 2);
    for (int k = 0; k <= 10; ++k) CHECK(egf_coeff(sq, k) == mb_higher_conv(k, 2, 6));
}

TEST_CASE("psi_gf") {
    const int K = 10;
    SUBCASE("x = 0 gives the zero series") {
        CHECK(psi_gf(Rational(0), 6, K) == TruncatedSeries::zero(K));
        CHECK(psi_gf_direct(Rational(0), 6, K) == TruncatedSeries::zero(K));
    }
    SUBCASE("n = 1, x = 1 reads out S_k(1) = 1") {
        auto s = psi_gf(Rational(1), 1, K);
        for (int k = 0; k <= 8; ++k) CHECK(egf_coeff(s, k) == Rational(1));
    }
    SUBCASE("n = 6, x = 6 matches brute coprime power sums") {
        auto s = psi_gf(Rational(6), 6, K);
        for (int k = 0; k <= 8; ++k) CHECK(egf_coeff(s, k) == Rational(psi_brute(k, 6)));
    }
    SUBCASE("both construction routes agree") {
        const Rational xs[] = {Rational(1), Rational(5, 2), Rational(7)};
        for (std::int64_t n = 1; n <= 12; ++n)
            for (const Rational& x : xs) CHECK(psi_gf(x, n, K) == psi_gf_direct(x, n, K));
    }
}
