#ifndef PERC_FORMULAS_HPP
#define PERC_FORMULAS_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <utility>

namespace perc {

using BigCount = mpz_class;

struct RangeError : std::domain_error {
  explicit RangeError(const std::string& what) : std::domain_error(what) {}
};

// C(a, b) with the convention C(a, b) = 0 for b < 0 or b > a.
BigCount binom(long a, long b);

// f = r - 1 - (n-1)(d-1) and the clamped g in [1, n] derived from it.
struct GParams {
  long f = 0;
  long g = 1;
};
GParams g_parameter(long n, long d, long r);

// The minimum edge percolating set size on K_n^d, by four independent
// routes plus two restricted-range closed forms. All require
// 0 <= r <= (n-1)d unless stated otherwise.
BigCount me_nested_sum(long n, long d, long r);
BigCount me_recurrence(long n, long d, long r);  // also accepts r > (n-1)d -> |E|
BigCount me_via_an(long n, long d, long r);
BigCount me_closed_top(long n, long d, long r);  // (n-1)(d-1) <= r <= (n-1)d
BigCount me_closed_low(long n, long d, long r);  // 0 <= r <= n-1
BigCount me_k2(long d, long r);                  // n = 2, 0 <= r <= d

// User-facing value: me_nested_sum in range, full edge count above it.
// Returns {value, clamped} where clamped reports the out-of-range case.
std::pair<BigCount, bool> me_value(long n, long d, long r);

// a_n(s, t) recurrence values, memoized.
BigCount an_value(long n, long s, long t);

// Total edge count of K_n^d.
BigCount hamming_edge_count(long n, long d);

// Identity checks; each returns (lhs, rhs) evaluated independently.
std::pair<BigCount, BigCount> identity_prop(long m, long k);
// Both sides doubled so the half-integer term stays integral. Requires
// (n-1)(d-1)+1 <= r <= (n-1)d. Values may be negative.
std::pair<BigCount, BigCount> identity_frac(long n, long d, long r);
std::pair<BigCount, BigCount> identity_binom(long n, long d, long r);

// Sandwich bounds on the minimum vertex percolating set size:
// ceil(m_e / r) <= m <= m_e + #{v : deg(v) < r}.
std::pair<BigCount, BigCount> m_bounds(long n, long d, long r);

}  // namespace perc

#endif
