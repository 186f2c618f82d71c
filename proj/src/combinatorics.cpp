#include "kummer/combinatorics.hpp"

#include <cmath>
#include <limits>

#include "kummer/errors.hpp"

namespace kummer {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kLn5 = 1.6094379124341003;

void require(bool cond, const char* msg) {
    if (!cond) throw InvalidParameterError(msg);
}

bool small_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// One pass of the bounded-multiplicity DP step: given `cur` counting
// selections from previous items, produce counts after allowing item of
// weight w with multiplicity <= max_mult. Sliding-window recurrence:
//   next[t] = next[t-w] + cur[t] - cur[t - (max_mult+1)*w].
std::vector<Nat> bounded_item_pass(const std::vector<Nat>& cur, long w,
                                   long max_mult) {
    const long size = static_cast<long>(cur.size());
    std::vector<Nat> next(cur.size());
    const long drop = (max_mult + 1) * w;
    for (long t = 0; t < size; ++t) {
        Nat v = cur[t];
        if (t >= w) v += next[t - w];
        if (drop >= 0 && t >= drop) v -= cur[t - drop];  // drop<0 on overflow-free guard
        next[t] = v;
    }
    return next;
}

}  // namespace

const char* formula_id_name(FormulaId id) {
    switch (id) {
        case FormulaId::maroti_q: return "maroti_q";
        case FormulaId::maroti_u: return "maroti_u";
        case FormulaId::five_pow_sqrt: return "five_pow_sqrt";
        case FormulaId::five_pow_cbrt: return "five_pow_cbrt";
        case FormulaId::two_pow_cbrt: return "two_pow_cbrt";
        case FormulaId::popovych2015: return "popovych2015";
    }
    return "unknown";
}

const char* compared_bound_name(ComparedBound b) {
    switch (b) {
        case ComparedBound::five_pow_cbrt: return "five_pow_cbrt";
        case ComparedBound::two_pow_cbrt: return "two_pow_cbrt";
        case ComparedBound::five_pow_sqrt: return "five_pow_sqrt";
        case ComparedBound::five_pow_k: return "five_pow_k";
        case ComparedBound::popovych2015: return "popovych2015";
    }
    return "unknown";
}

Nat binom(long long n, long long r) {
    require(n >= 0, "binom: n must be nonnegative");
    if (r < 0 || r > n) return 0;
    Nat result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(r));
    return result;
}

std::pair<Nat, ArgmaxPair> d1_bound(int k) {
    require(k >= 2, "d1_bound: k must be >= 2");
    Nat best = -1;
    ArgmaxPair arg;
    for (int dm = 0; dm < k; ++dm) {
        for (int d = dm; d < k; ++d) {
            Nat v = binom(k, dm) * binom(d, dm) *
                    binom(2LL * k - d - dm - 1, k - d - 1);
            if (v > best) {  // strict: keeps lexicographically smallest pair
                best = v;
                arg = {dm, d};
            }
        }
    }
    return {best, arg};
}

std::vector<Nat> partition_counts_upto(int n_max) {
    require(n_max >= 0, "partition_counts_upto: n_max must be >= 0");
    std::vector<Nat> ways(static_cast<std::size_t>(n_max) + 1);
    ways[0] = 1;
    for (int j = 1; j <= n_max; ++j)
        for (int t = j; t <= n_max; ++t) ways[t] += ways[t - j];
    return ways;
}

Nat partition_count(int c) {
    require(c >= 0, "partition_count: c must be >= 0");
    return partition_counts_upto(c)[static_cast<std::size_t>(c)];
}

std::vector<Nat> partition_counts_bounded_upto(int n_max, int d) {
    require(n_max >= 0, "partition_counts_bounded_upto: n_max must be >= 0");
    require(d >= 0, "partition_counts_bounded_upto: d must be >= 0");
    std::vector<Nat> cur(static_cast<std::size_t>(n_max) + 1);
    cur[0] = 1;
    if (d == 0) return cur;  // only the empty partition
    for (int j = 1; j <= n_max; ++j) cur = bounded_item_pass(cur, j, d);
    return cur;
}

Nat partition_count_bounded(int c, int d) {
    require(c >= 0, "partition_count_bounded: c must be >= 0");
    require(d >= 0, "partition_count_bounded: d must be >= 0");
    return partition_counts_bounded_upto(c, d)[static_cast<std::size_t>(c)];
}

std::vector<Nat> partition_counts_nondiv_upto(int n_max, int d) {
    require(n_max >= 0, "partition_counts_nondiv_upto: n_max must be >= 0");
    require(d >= 1, "partition_counts_nondiv_upto: d must be >= 1");
    std::vector<Nat> ways(static_cast<std::size_t>(n_max) + 1);
    ways[0] = 1;
    for (int j = 1; j <= n_max; ++j) {
        if (j % d == 0) continue;
        for (int t = j; t <= n_max; ++t) ways[t] += ways[t - j];
    }
    return ways;
}

Nat partition_count_nondiv(int c, int d) {
    require(c >= 0, "partition_count_nondiv: c must be >= 0");
    require(d >= 1, "partition_count_nondiv: d must be >= 1");
    return partition_counts_nondiv_upto(c, d)[static_cast<std::size_t>(c)];
}

Nat count_T(std::int64_t p, int k, int l) {
    require(p >= 5 && small_prime(p), "count_T: p must be a prime >= 5");
    require(k >= 2, "count_T: k must be >= 2");
    require(l >= 1, "count_T: l must be >= 1");
    const long m = static_cast<long>(k) * l;
    // ways[t] = number of vectors with weighted sum exactly t, t <= m-1.
    std::vector<Nat> ways(static_cast<std::size_t>(m));
    ways[0] = 1;
    for (int i = 0; i < l; ++i) {
        const long w = static_cast<long>(i) * k + 1;
        const long mult = static_cast<long>(std::min<std::int64_t>(p - 1, m / w));
        ways = bounded_item_pass(ways, w, mult);
    }
    Nat total = 0;
    for (const Nat& v : ways) total += v;
    return total;
}

std::pair<int, double> tau_best(std::int64_t p, int l) {
    require(p >= 5, "tau_best: p must be >= 5");
    require(l >= 2, "tau_best: l must be >= 2");
    int best_tau = 2;
    double best_log = -std::numeric_limits<double>::infinity();
    for (std::int64_t tau = 2; tau <= p - 1; ++tau) {
        const double lf = std::sqrt(2.0 * l / (static_cast<double>(tau) - 1.0)) *
                          std::log(static_cast<double>(tau));
        if (lf > best_log) {
            best_log = lf;
            best_tau = static_cast<int>(tau);
        }
    }
    return {best_tau, std::exp(best_log)};
}

RealBound maroti_q_lower(int n0, int d0) {
    require(d0 > 1, "maroti_q_lower: d0 must be > 1");
    require(static_cast<long long>(n0) >= 1LL * d0 * d0,
            "maroti_q_lower: requires n0 >= d0^2");
    const double dd = d0;
    const double nn = n0;
    const double value = std::pow(dd * (dd - 1.0) / (160.0 * nn), std::sqrt(dd)) *
                         std::exp(2.5 * std::sqrt((1.0 - 1.0 / dd) * nn));
    return {value, FormulaId::maroti_q};
}

RealBound maroti_u_lower(int n0) {
    require(n0 > 1, "maroti_u_lower: n0 must be > 1");
    const double nn = n0;
    return {std::exp(2.5 * std::sqrt(nn)) / (13.0 * nn), FormulaId::maroti_u};
}

double log_five_pow_cbrt_bound(int m) { return std::cbrt(m / 2.0) * kLn5; }

double log_two_pow_cbrt_bound(int m) { return std::cbrt(2.0 * m) * kLn2; }

BoundComparison compare_bounds(int m, int k, int l) {
    require(k >= 2, "compare_bounds: k must be >= 2");
    require(l >= 1, "compare_bounds: l must be >= 1");
    require(static_cast<long long>(k) * l == m, "compare_bounds: m != k*l");
    BoundComparison r;
    r.m = m;
    r.k = k;
    r.l = l;
    r.log_five_pow_cbrt = log_five_pow_cbrt_bound(m);
    r.log_two_pow_cbrt = log_two_pow_cbrt_bound(m);
    r.log_five_pow_sqrt = std::sqrt(l / 2.0) * kLn5;
    r.log_five_pow_k = k * kLn5;
    if (k >= 8)
        r.log_popovych2015 =
            k * std::log(5.7556) - std::log(30.0) - 1.5 * std::log(static_cast<double>(k));
    r.five_cbrt_beats_two_cbrt = r.log_five_pow_cbrt > r.log_two_pow_cbrt;

    r.dominant = ComparedBound::five_pow_cbrt;
    double best = r.log_five_pow_cbrt;
    const auto consider = [&](double v, ComparedBound id) {
        if (v > best) {
            best = v;
            r.dominant = id;
        }
    };
    consider(r.log_two_pow_cbrt, ComparedBound::two_pow_cbrt);
    consider(r.log_five_pow_sqrt, ComparedBound::five_pow_sqrt);
    consider(r.log_five_pow_k, ComparedBound::five_pow_k);
    if (r.log_popovych2015)
        consider(*r.log_popovych2015, ComparedBound::popovych2015);
    return r;
}

}  // namespace kummer
