#pragma once

// Moebius-Bernoulli numbers M_k(n) and their higher orders M_k^N(n).
//
//   M_k(n)   = k! * coeff_k of sum_{d|n} mu(d) t/(e^{dt}-1)
//            = B_k * prod_{p|n} (1 - p^{k-1})            (n >= 2)
//   M_k^N(n) = k! * coeff_k of the N-th power of that sum
//
// The constant term is M_0(n) = sum_{d|n} mu(d)/d = phi(n)/n. Published
// tables of these numbers sometimes carry phi(n) where the generating
// function forces phi(n)/n; this module is normalized by the generating
// function throughout (`verify` prints the comparison at n=6, N=2, k=2).
//
// Four independent routes compute M_k^N(n), and cross-checking them is the
// module's contract:
//   convolution  - multinomial sum over compositions of k (the definition)
//   partition    - Faa di Bruno over integer partitions of k; for n > 1
//                  only all-even partitions contribute (odd M_k vanish)
//   prime_power  - binomial expansion in higher-order Bernoulli numbers,
//                  for n = p^s only (depends on p alone, not s)
//   kernel       - multinomial expansion over the squarefree divisors of n
//                  with per-divisor higher-order Bernoulli EGFs
// All routes must agree exactly; `auto` computes via convolution and
// asserts the others before returning.

#include "mb/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mb {

// M_0(n) .. M_max_k(n) via the closed form, factored once
class MBTable {
public:
    MBTable(std::int64_t n, int max_k);
    std::int64_t n() const { return n_; }
    int max_k() const { return static_cast<int>(values_.size()) - 1; }
    const Rational& operator[](int k) const { return values_.at(static_cast<size_t>(k)); }
    const std::vector<Rational>& values() const { return values_; }

private:
    std::int64_t n_;
    std::vector<Rational> values_;
};

Rational mb_number(int k, std::int64_t n);                  // closed form
Rational mb_number_series(int k, std::int64_t n, int order);  // k! * coeff_k of mb_gf

Rational mb_higher_conv(int k, int N, std::int64_t n);
Rational mb_higher_partition(int k, int N, std::int64_t n);
Rational mb_higher_primepower(int k, int N, std::int64_t p, int s);

// kernel route; the table form returns M_0^N(n) .. M_max_k^N(n) in one pass
std::vector<Rational> mb_higher_kernel_table(int N, std::int64_t n, int max_k);
Rational mb_higher_kernel(int k, int N, std::int64_t n);

enum class MBMethod { convolution, partition, prime_power, kernel, auto_check };

MBMethod mb_method_from_string(const std::string& s);  // conv|partition|primepower|kernel|auto
std::string mb_method_name(MBMethod m);

struct HigherMBRequest {
    std::int64_t n = 1;
    int N = 1;
    int k = 0;
    MBMethod method = MBMethod::auto_check;
    int crosscheck_max_k = 12;  // auto route checks alternates up to here
};

// thrown when two routes disagree: a verification artifact, never a fallback
class RouteMismatchError : public std::runtime_error {
public:
    RouteMismatchError(const std::string& context, std::string route_a, std::string route_b,
                       Rational lhs, Rational rhs)
        : std::runtime_error(context + ": " + route_a + "=" + lhs.str() + " vs " + route_b +
                             "=" + rhs.str()),
          route_a_(std::move(route_a)),
          route_b_(std::move(route_b)),
          lhs_(std::move(lhs)),
          rhs_(std::move(rhs)) {}
    const std::string& route_a() const { return route_a_; }
    const std::string& route_b() const { return route_b_; }
    const Rational& lhs() const { return lhs_; }
    const Rational& rhs() const { return rhs_; }

private:
    std::string route_a_, route_b_;
    Rational lhs_, rhs_;
};

Rational mb_higher(const HigherMBRequest& request);

}  // namespace mb
