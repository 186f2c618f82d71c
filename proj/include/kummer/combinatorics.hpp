#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kummer/nat.hpp"

namespace kummer {

// Maximizing pair of the triple-binomial product in d1_bound.
struct ArgmaxPair {
    int d_minus = 0;
    int d = 0;
};

enum class FormulaId {
    maroti_q,       // (d0(d0-1)/160n0)^sqrt(d0) * exp(2.5*sqrt((1-1/d0)n0))
    maroti_u,       // exp(2.5*sqrt(n0)) / (13 n0)
    five_pow_sqrt,  // 5^sqrt(l/2)
    five_pow_cbrt,  // 5^cbrt(m/2)
    two_pow_cbrt,   // 2^cbrt(2m)
    popovych2015,   // 5.7556^k / (30 k^{3/2})
};

const char* formula_id_name(FormulaId id);

// A closed-form analytic bound, evaluated in double precision. Exact counts
// stay Nat; these are the only floating-point quantities in the library.
struct RealBound {
    double value = 0.0;
    FormulaId formula = FormulaId::maroti_u;
};

// Exact binomial coefficient; 0 when r < 0 or r > n. Requires n >= 0.
Nat binom(long long n, long long r);

// Exact maximum of C(k,d-) * C(d,d-) * C(2k-d-d--1, k-d-1) over
// 0 <= d- <= d < k, with one maximizing pair (lexicographically smallest
// (d-, d) on ties). Requires k >= 2.
std::pair<Nat, ArgmaxPair> d1_bound(int k);

// Number of partitions of c (partition of 0 counts as 1). c >= 0.
Nat partition_count(int c);
// Row [0..n_max] of partition counts, one DP pass.
std::vector<Nat> partition_counts_upto(int n_max);

// Partitions of c in which every part appears at most d times. Equals
// partition_count(c) when d >= c. c >= 0, d >= 0.
Nat partition_count_bounded(int c, int d);
std::vector<Nat> partition_counts_bounded_upto(int n_max, int d);

// Partitions of c with no part divisible by d. c >= 0, d >= 1.
Nat partition_count_nondiv(int c, int d);
std::vector<Nat> partition_counts_nondiv_upto(int n_max, int d);

// Exact cardinality of T = { (u_0..u_{l-1}) : 0 <= u_i <= p-1,
// sum (i*k+1) u_i < m } for m = k*l, by a bounded-knapsack counting DP
// over capacity m-1. Requires p >= 5 prime, k >= 2, l >= 1.
Nat count_T(std::int64_t p, int k, int l);

// Integer tau in [2, p-1] maximizing f(tau) = tau^sqrt(2l/(tau-1)), ties
// toward smaller tau, plus f at the maximizer. Requires p >= 5, l >= 2.
std::pair<int, double> tau_best(std::int64_t p, int l);

// Closed-form lower bound on the count of partitions of n0 with no part
// divisible by d0. Requires d0 > 1 and n0 >= d0^2.
RealBound maroti_q_lower(int n0, int d0);

// Closed-form lower bound on the partition count of n0. Requires n0 > 1.
RealBound maroti_u_lower(int n0);

enum class ComparedBound {
    five_pow_cbrt,  // 5^cbrt(m/2)
    two_pow_cbrt,   // 2^cbrt(2m)
    five_pow_sqrt,  // 5^sqrt(l/2)
    five_pow_k,     // 5^k
    popovych2015,   // 5.7556^k / (30 k^{3/2}), only defined for k >= 8
};

const char* compared_bound_name(ComparedBound b);

// Natural-log-scale comparison of the closed-form order bounds for a
// decomposition m = k*l. Logs avoid overflow for large m.
struct BoundComparison {
    int m = 0;
    int k = 0;
    int l = 0;
    double log_five_pow_cbrt = 0.0;   // cbrt(m/2) * ln 5
    double log_two_pow_cbrt = 0.0;    // cbrt(2m) * ln 2
    double log_five_pow_sqrt = 0.0;   // sqrt(l/2) * ln 5
    double log_five_pow_k = 0.0;      // k * ln 5
    std::optional<double> log_popovych2015;  // present when k >= 8
    ComparedBound dominant = ComparedBound::five_pow_k;
    bool five_cbrt_beats_two_cbrt = false;
};

// Requires m == k*l with k >= 2.
BoundComparison compare_bounds(int m, int k, int l);

// Shared helpers for the two published cube-root bounds (defined for any
// m >= 1, independently of a decomposition).
double log_five_pow_cbrt_bound(int m);  // cbrt(m/2) * ln 5
double log_two_pow_cbrt_bound(int m);   // cbrt(2m) * ln 2

}  // namespace kummer
