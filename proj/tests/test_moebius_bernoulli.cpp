#include "mb/moebius_bernoulli.hpp"

#include "mb/arith.hpp"
#include "mb/bernoulli.hpp"
#include "mb/series.hpp"

#include <doctest.h>

using namespace mb;

TEST_CASE("mb_number closed form") {
    for (int k = 0; k <= 12; ++k) CHECK(mb_number(k, 1) == bernoulli(k));
    CHECK(mb_number(2, 6) == Rational(1, 3));
    CHECK(mb_number(0, 6) == Rational(1, 3));  // sum mu(d)/d = phi(6)/6
    CHECK(mb_number(4, 6) == Rational(-91, 15));
    CHECK(mb_number(6, 6) == Rational(3751, 21));
    CHECK(mb_number(8, 6) == Rational(-138811, 15));
    for (std::int64_t n = 2; n <= 40; ++n) {
        CHECK(mb_number(0, n) == Rational(Integer(totient(n)), Integer(n)));
        CHECK(mb_number(1, n) == Rational(0));
    }
}

TEST_CASE("mb_number_series matches the closed form") {
    CHECK(mb_number_series(3, 6, 16) == Rational(0));
    CHECK(mb_number_series(2, 6, 16) == Rational(1, 3));
    for (int k = 0; k <= 10; ++k) CHECK(mb_number_series(k, 1, 16) == bernoulli(k));
    CHECK_THROWS_AS(mb_number_series(17, 6, 16), std::out_of_range);
}

TEST_CASE("MBTable") {
    MBTable tab(12, 10);
    CHECK(tab.n() == 12);
    CHECK(tab.max_k() == 10);
    CHECK(tab[0] == Rational(Integer(totient(12)), Integer(12)));
    for (int k = 0; k <= 10; ++k) CHECK(tab[k] == mb_number(k, 12));
    for (int k = 1; k <= 9; k += 2) CHECK(tab[k] == Rational(0));
}

TEST_CASE("convolution route") {
    for (int k = 0; k <= 8; ++k) CHECK(mb_higher_conv(k, 1, 10) == mb_number(k, 10));
    CHECK(mb_higher_conv(2, 2, 6) == Rational(2, 9));
    CHECK(mb_higher_conv(8, 2, 6) == Rational(-11648, 45));
    CHECK(mb_higher_conv(6, 3, 10) == Rational(230504, 525));
    CHECK(mb_higher_conv(4, 2, 30) == Rational(92672, 225));
    for (int N = 1; N <= 5; ++N)
        CHECK(mb_higher_conv(0, N, 6) == Rational(1, 3).pow(N));
}

TEST_CASE("partition route") {
    CHECK(mb_higher_partition(2, 2, 6) == Rational(2, 9));
    CHECK(mb_higher_partition(8, 4, 6) == Rational(118912, 81));
    for (int half = 1; half <= 3; ++half)
        for (int N = 1; N <= 4; ++N) CHECK(mb_higher_partition(2 * half - 1, N, 10) == Rational(0));
    // n = 1 goes through the general Faa di Bruno path (M_1(1) = -1/2 != 0)
    CHECK(mb_higher_partition(3, 2, 1) == Rational(-1, 2));  // = B_3^2
    CHECK(mb_higher_partition(3, 2, 1) == higher_bernoulli(3, 2));
}

TEST_CASE("even-only enumeration equals the unfiltered Faa di Bruno value") {
    for (std::int64_t n : {6, 10, 12})
        for (int N = 1; N <= 3; ++N)
            for (int k = 1; k <= 8; ++k) {
                MBTable tab(n, k);
                CHECK(mb_higher_partition(k, N, n) == power_derivative_partition(tab.values(), N, k));
            }
}

TEST_CASE("prime-power route") {
    CHECK(mb_higher_primepower(2, 1, 2, 1) == Rational(-1, 6));  // = M_2(2)
    CHECK(mb_higher_primepower(2, 1, 2, 1) == mb_number(2, 2));
    CHECK(mb_higher_primepower(3, 2, 3, 1) == Rational(0));
    CHECK(mb_higher_primepower(8, 3, 2, 1) == Rational(3287, 120));
    CHECK(mb_higher_primepower(6, 2, 3, 1) == Rational(-1030, 63));
    // the formula sees only p, never s
    for (int s = 1; s <= 4; ++s)
        CHECK(mb_higher_primepower(6, 2, 3, s) == mb_higher_primepower(6, 2, 3, 1));
    CHECK_THROWS_AS(mb_higher_primepower(2, 1, 6, 1), std::domain_error);
    CHECK_THROWS_AS(mb_higher_primepower(2, 1, 2, 0), std::domain_error);
}

TEST_CASE("kernel route") {
    CHECK(mb_higher_kernel(2, 2, 6) == Rational(2, 9));
    CHECK(mb_higher_kernel(8, 2, 6) == Rational(-11648, 45));
    // beta = 1 specializes to the prime-power formula
    for (int N = 1; N <= 3; ++N)
        for (int k = 0; k <= 6; ++k)
            CHECK(mb_higher_kernel(k, N, 9) == mb_higher_primepower(k, N, 3, 2));
    // n = 1 degenerates to plain higher-order Bernoulli numbers
    for (int N = 1; N <= 4; ++N)
        for (int k = 0; k <= 8; ++k) CHECK(mb_higher_kernel(k, N, 1) == higher_bernoulli(k, N));
}

TEST_CASE("kernel table equals the literal composition double sum") {
    // same expansion with the inner sum written out over compositions of k
    auto literal = [](int k, int N, std::int64_t n) {
        auto divs = squarefree_divisors(n);
        int nd = static_cast<int>(divs.size());
        Rational total(0);
        for_each_composition(N, nd, [&](const Composition& mvec) {
            Rational coef(multinomial(N, mvec));
            for (int di = 0; di < nd; ++di)
                coef *= Rational(Integer(moebius(divs[di])), Integer(divs[di])).pow(mvec[di]);
            Rational inner(0);
            for_each_composition(k, nd, [&](const Composition& kvec) {
                Rational term(multinomial(k, kvec));
                for (int di = 0; di < nd; ++di)
                    term *= higher_bernoulli(kvec[di], mvec[di]) *
                            Rational(Integer(divs[di])).pow(kvec[di]);
                inner += term;
            });
            total += coef * inner;
        });
        return total;
    };
    for (int N = 1; N <= 2; ++N) {
        auto table = mb_higher_kernel_table(N, 6, 6);
        for (int k = 0; k <= 6; ++k) CHECK(table[k] == literal(k, N, 6));
    }
}

TEST_CASE("mb_higher dispatch") {
    CHECK(mb_higher({.n = 6, .N = 2, .k = 2}) == Rational(2, 9));
    CHECK(mb_higher({.n = 10, .N = 3, .k = 5}) == Rational(0));
    for (MBMethod m : {MBMethod::convolution, MBMethod::partition, MBMethod::kernel})
        CHECK(mb_higher({.n = 12, .N = 3, .k = 4, .method = m}) ==
              mb_higher({.n = 12, .N = 3, .k = 4, .method = MBMethod::auto_check}));
    CHECK_THROWS_AS(mb_higher({.n = 6, .N = 2, .k = 2, .method = MBMethod::prime_power}),
                    std::domain_error);
    CHECK_THROWS_AS(mb_higher({.n = 0, .N = 2, .k = 2}), std::domain_error);
    CHECK_THROWS_AS(mb_higher({.n = 6, .N = 0, .k = 2}), std::domain_error);
}

TEST_CASE("method names round-trip") {
    for (const char* name : {"conv", "partition", "primepower", "kernel", "auto"})
        CHECK(mb_method_name(mb_method_from_string(name)) == name);
    CHECK_THROWS_AS(mb_method_from_string("fft"), std::invalid_argument);
}

TEST_CASE("route mismatch error carries both values") {
    RouteMismatchError err("ctx", "conv", "kernel", Rational(2, 9), Rational(4, 3));
    CHECK(err.route_a() == "conv");
    CHECK(err.route_b() == "kernel");
    CHECK(err.lhs() == Rational(2, 9));
    CHECK(err.rhs() == Rational(4, 3));
    CHECK(std::string(err.what()).find("2/9") != std::string::npos);
}

TEST_CASE("radical invariance spot checks") {
    for (int k = 0; k <= 6; k += 2)
        for (int N = 1; N <= 3; ++N) {
            CHECK(mb_higher_conv(k, N, 12) == mb_higher_conv(k, N, 6));
            CHECK(mb_higher_conv(k, N, 72) == mb_higher_conv(k, N, 6));
        }
}
