#pragma once

// Bernoulli numbers B_k (B_1 = -1/2, the sign fixed by t/(e^t - 1)),
// higher-order Bernoulli numbers B_j^m (EGF coefficients of (t/(e^t-1))^m),
// and Stirling numbers of the second kind. Each quantity has two
// independent computation routes so regressions fail loudly:
//   bernoulli        O(k^2) recurrence        <-> bernoulli_explicit double sum
//   higher_bernoulli explicit quadruple sum   <-> higher_bernoulli_conv series power
//
// The B_1 = -1/2 convention matters: with +1/2 every derivative-identity
// check downstream breaks.

#include "mb/rational.hpp"

#include <mutex>
#include <vector>

namespace mb {

// growable table of B_0..B_k, extended on demand; safe for concurrent use
class BernoulliCache {
public:
    Rational value(int k);

private:
    std::mutex mu_;
    std::vector<Rational> table_;
};

Rational bernoulli(int k);           // process-wide cache, recurrence route
Rational bernoulli_explicit(int k);  // double-sum route; k = 0 special-cased to 1

// B_j^m. The explicit sum is valid for m >= 1; B_j^0 is the coefficient of
// the constant series 1, i.e. 1 at j = 0 and 0 otherwise.
Rational higher_bernoulli(int j, int m);
Rational higher_bernoulli_conv(int j, int m);  // j! * coeff_j of (t/(e^t-1))^m

Integer stirling2(int n, int m);

// checks ((e^{xt}-1)/t)^N == sum_j N! S(j+N,N) x^{j+N} t^j/(j+N)!
// coefficientwise up to the given order
bool stirling_identity_check(const Rational& x, int N, int order);

}  // namespace mb
