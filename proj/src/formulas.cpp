#include "perc/formulas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace perc {

BigCount binom(long a, long b) {
  if (a < 0) throw std::invalid_argument("binom: a must be >= 0");
  if (b < 0 || b > a) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

GParams g_parameter(long n, long d, long r) {
  if (n < 2 || d < 1 || r < 0) throw std::invalid_argument("g_parameter: bad parameters");
  GParams p;
  p.f = r - 1 - (n - 1) * (d - 1);
  if (p.f <= -2) {
    p.g = 1;
  } else if (p.f <= n - 2) {
    p.g = p.f + 2;
  } else {
    p.g = n;
  }
  return p;
}

BigCount hamming_edge_count(long n, long d) {
  BigCount nd;
  mpz_ui_pow_ui(nd.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(d));
  return nd * (n - 1) * d / 2;
}

namespace {

void check_me_range(long n, long d, long r, const char* who) {
  if (n < 2 || d < 0) throw std::invalid_argument(std::string(who) + ": need n >= 2, d >= 0");
  if (r < 0 || r > (n - 1) * d) {
    throw RangeError(std::string(who) + ": r outside [0, (n-1)d]");
  }
}

// One level of the nested sum: prev is the top of the current binomial,
// rem = r - (i_1 + ... + i_{level-1}). The innermost factor is rem itself.
BigCount nested_level(long n, long level, long prev, long rem) {
  if (level == n) return rem;
  BigCount total = 0;
  long top = std::min(prev, rem - 1);  // C(prev, i) = 0 past prev
  for (long i = 0; i <= top; ++i) {
    total += binom(prev, i) * nested_level(n, level + 1, i, rem - i);
  }
  return total;
}

std::mutex memo_mutex;
std::map<std::tuple<long, long, long>, BigCount> me_recur_memo;
std::map<std::tuple<long, long, long>, BigCount> an_memo;

BigCount me_recurrence_impl(long n, long d, long r) {
  if (r < 0 || d == 0) return 0;
  if (r > (n - 1) * d) return hamming_edge_count(n, d);
  auto key = std::make_tuple(n, d, r);
  {
    std::scoped_lock lock(memo_mutex);
    auto it = me_recur_memo.find(key);
    if (it != me_recur_memo.end()) return it->second;
  }
  BigCount total = 0;
  for (long i = 0; i < n; ++i) total += me_recurrence_impl(n, d - 1, r - i);
  GParams p = g_parameter(n, d, r);
  BigCount layer;
  mpz_ui_pow_ui(layer.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(d - 1));
  total += binom(p.g, 2) * layer;
  std::scoped_lock lock(memo_mutex);
  return me_recur_memo.emplace(key, std::move(total)).first->second;
}

BigCount an_impl(long n, long s, long t) {
  if (t == 0) return s;
  auto key = std::make_tuple(n, s, t);
  {
    std::scoped_lock lock(memo_mutex);
    auto it = an_memo.find(key);
    if (it != an_memo.end()) return it->second;
  }
  BigCount total = 0;
  long top = std::min(s - t, n - 1);
  for (long i = 1; i <= top; ++i) total += an_impl(n, s - i, t - 1);
  std::scoped_lock lock(memo_mutex);
  return an_memo.emplace(key, std::move(total)).first->second;
}

}  // namespace

BigCount me_nested_sum(long n, long d, long r) {
  check_me_range(n, d, r, "me_nested_sum");
  return nested_level(n, 1, d, r);
}

BigCount me_recurrence(long n, long d, long r) {
  if (n < 2 || d < 0 || r < 0) throw std::invalid_argument("me_recurrence: bad parameters");
  return me_recurrence_impl(n, d, r);
}

BigCount an_value(long n, long s, long t) {
  if (n < 1 || s < 1 || t < 0 || t > s - 1) {
    throw RangeError("an_value: need s >= 1 and 0 <= t <= s-1");
  }
  return an_impl(n, s, t);
}

BigCount me_via_an(long n, long d, long r) {
  check_me_range(n, d, r, "me_via_an");
  BigCount total = 0;
  for (long j = 0; j < r; ++j) total += an_value(n, r, j) * binom(d, j);
  return total;
}

BigCount me_closed_top(long n, long d, long r) {
  if (n < 2 || d < 0) throw std::invalid_argument("me_closed_top: bad parameters");
  if (r < (n - 1) * (d - 1) || r > (n - 1) * d) {
    throw RangeError("me_closed_top: r outside [(n-1)(d-1), (n-1)d]");
  }
  BigCount nd;
  mpz_ui_pow_ui(nd.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(d));
  // (r - (n-1)d/2) * n^d written with doubled numerator; the product is
  // always even here.
  BigCount half_term = (2 * r - (n - 1) * d) * nd;
  BigCount out;
  mpz_divexact_ui(out.get_mpz_t(), half_term.get_mpz_t(), 2);
  return binom(n * d - r, d + 1) + out;
}

BigCount me_closed_low(long n, long d, long r) {
  if (n < 2 || d < 0) throw std::invalid_argument("me_closed_low: bad parameters");
  if (r < 0 || r > n - 1) throw RangeError("me_closed_low: r outside [0, n-1]");
  return binom(d + r, d + 1);
}

BigCount me_k2(long d, long r) {
  if (d < 0) throw std::invalid_argument("me_k2: bad parameters");
  if (r < 0 || r > d) throw RangeError("me_k2: r outside [0, d]");
  BigCount total = 0;
  for (long i = 0; i <= r; ++i) total += (r - i) * binom(d, i);
  return total;
}

std::pair<BigCount, bool> me_value(long n, long d, long r) {
  if (n < 2 || d < 0 || r < 0) throw std::invalid_argument("me_value: bad parameters");
  if (r > (n - 1) * d) return {hamming_edge_count(n, d), true};
  return {me_nested_sum(n, d, r), false};
}

std::pair<BigCount, BigCount> identity_prop(long m, long k) {
  if (m < 0 || k < 1) throw std::invalid_argument("identity_prop: need m >= 0, k >= 1");
  // lhs: sum over i_1 <= ... <= i_k with i_k <= k - (i_1 + ... + i_{k-1})
  // of C(m, i_k) C(i_k, i_{k-1}) ... C(i_2, i_1). Only nondecreasing
  // chains survive the binomial product, so those are enumerated directly.
  BigCount lhs = 0;
  for (long ik = 0; ik <= k; ++ik) {
    BigCount p0 = binom(m, ik);
    if (p0 == 0) continue;
    // choose i_{k-1} >= ... >= i_1 below ik, tracking their sum
    std::function<void(long, long, long, const BigCount&)> down =
        [&](long pos, long upper, long sum, const BigCount& partial) {
          if (pos == 0) {
            if (ik <= k - sum) lhs += partial;
            return;
          }
          for (long i = 0; i <= upper; ++i) {
            if (sum + i > k) break;
            BigCount next = partial * binom(upper, i);
            if (next == 0) continue;
            down(pos - 1, i, sum + i, next);
          }
        };
    down(k - 1, ik, 0, p0);
  }
  return {lhs, binom(m + k, m)};
}

std::pair<BigCount, BigCount> identity_frac(long n, long d, long r) {
  if (n < 2 || d < 0) throw std::invalid_argument("identity_frac: bad parameters");
  if (r < (n - 1) * (d - 1) + 1 || r > (n - 1) * d) {
    throw RangeError("identity_frac: r outside [(n-1)(d-1)+1, (n-1)d]");
  }
  BigCount lhs = 0;
  // full-range sum; only nonincreasing chains d >= i_1 >= ... >= i_{n-1}
  // contribute
  std::function<void(long, long, long, const BigCount&)> rec =
      [&](long pos, long upper, long sum, const BigCount& partial) {
        if (pos == n) {
          lhs += partial * (r - sum);
          return;
        }
        for (long i = 0; i <= upper; ++i) {
          BigCount next = partial * binom(upper, i);
          if (next == 0) continue;
          rec(pos + 1, i, sum + i, next);
        }
      };
  rec(1, d, 0, BigCount(1));
  BigCount nd;
  mpz_ui_pow_ui(nd.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(d));
  return {2 * lhs, (2 * r - (n - 1) * d) * nd};
}

std::pair<BigCount, BigCount> identity_binom(long n, long d, long r) {
  if (n < 2 || d < 0) throw std::invalid_argument("identity_binom: bad parameters");
  if (r < (n - 1) * (d - 1) + 1 || r > (n - 1) * d) {
    throw RangeError("identity_binom: r outside [(n-1)(d-1)+1, (n-1)d]");
  }
  BigCount lhs = 0;
  // Same chains, but the last index is truncated below at r - (i_1 + ... +
  // i_{n-2}).
  std::function<void(long, long, long, const BigCount&)> rec =
      [&](long pos, long upper, long sum, const BigCount& partial) {
        if (pos == n - 1) {
          long lo = std::max(0L, r - sum);
          for (long i = lo; i <= upper; ++i) {
            BigCount term = partial * binom(upper, i);
            if (term == 0) continue;
            lhs += term * (r - sum - i);
          }
          return;
        }
        for (long i = 0; i <= upper; ++i) {
          BigCount next = partial * binom(upper, i);
          if (next == 0) continue;
          rec(pos + 1, i, sum + i, next);
        }
      };
  rec(1, d, 0, BigCount(1));
  return {lhs, -binom(n * d - r, d + 1)};
}

std::pair<BigCount, BigCount> m_bounds(long n, long d, long r) {
  auto [me, clamped] = me_value(n, d, r);
  BigCount lower = 0;
  if (r >= 1) {
    mpz_cdiv_q_ui(lower.get_mpz_t(), me.get_mpz_t(), static_cast<unsigned long>(r));
  }
  BigCount upper = me;
  if (r > (n - 1) * d) {
    BigCount nd;
    mpz_ui_pow_ui(nd.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(d));
    upper += nd;
  }
  return {lower, upper};
}

}  // namespace perc
