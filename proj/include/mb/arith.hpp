#pragma once

// Elementary arithmetic functions and combinatorial enumeration:
// trial-division factorization, Moebius mu, Euler phi, divisor lists,
// binomials/multinomials, integer partitions (with multiplicities),
// compositions, and the power case of the Faa di Bruno formula.
//
// Everything is a pure function; inputs are capped at desk scale
// (factorize accepts up to 2^63-1, partitions up to k = 64).

#include "mb/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mb {

// (prime, exponent) pairs, primes strictly increasing; empty for n = 1
struct Factorization {
    std::vector<std::pair<std::int64_t, int>> pairs;
};

Factorization factorize(std::int64_t n);
bool is_prime(std::int64_t n);

int moebius(std::int64_t n);      // in {-1, 0, 1}
std::int64_t totient(std::int64_t n);
std::int64_t radical(std::int64_t n);  // product of distinct prime divisors

std::vector<std::int64_t> divisors(std::int64_t n);             // ascending
std::vector<std::int64_t> squarefree_divisors(std::int64_t n);  // ascending, mu != 0

Integer factorial(std::int64_t k);
Integer binomial(std::int64_t a, std::int64_t b);  // 0 when b < 0 or b > a
Integer multinomial(std::int64_t k, std::span<const int> parts);

// parts stored decreasing; multiplicities as (value, count), decreasing value
struct Partition {
    std::vector<int> parts;
    std::vector<std::pair<int, int>> multiplicities;
    int length() const { return static_cast<int>(parts.size()); }
};

// all partitions of k, decreasing-part lexicographic: [k] first, [1,...,1] last
std::vector<Partition> partitions(int k);

using Composition = std::vector<int>;

// all N-tuples of nonnegative integers summing to k, lexicographic
template <typename Fn>
void for_each_composition(int k, int N, Fn&& fn) {
    if (N < 1) throw std::domain_error("compositions: N must be positive");
    if (k < 0) throw std::domain_error("compositions: k must be nonnegative");
    Composition cur(static_cast<size_t>(N), 0);
    auto rec = [&](auto&& self, int rest, int pos) -> void {
        if (pos == N - 1) {
            cur[static_cast<size_t>(pos)] = rest;
            fn(static_cast<const Composition&>(cur));
            return;
        }
        for (int c = 0; c <= rest; ++c) {
            cur[static_cast<size_t>(pos)] = c;
            self(self, rest - c, pos + 1);
        }
    };
    rec(rec, k, 0);
}

std::vector<Composition> compositions(int k, int N);

// k-th derivative at 0 of f^power, from the derivative values
// derivs = (f(0), f'(0), ..., f^(k)(0)):
//   power! * sum_{j=1..k} f(0)^(power-j)/(power-j)!
//          * sum_{partitions of k into j parts} multinomial(k; parts)
//          * prod f^(part)(0) / prod lambda(value)!
// terms with j > power drop out (the 1/(power-j)! factor is zero).
Rational power_derivative_partition(std::span<const Rational> derivs, int power, int k);

}  // namespace mb
