#include "kesten/moments.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include "kesten/partition.hpp"
#include "kesten/power_series.hpp"

namespace kesten {

namespace {

// Histogram of (e, e') over a stream, turned into sum p^e q^e' at the end.
class WeightHistogram {
 public:
  void add(const OrderedPartition& P) { ++counts_[disorder_order_counts(P)]; }

  MultiPoly polynomial() const {
    MultiPoly sum;
    for (const auto& [c, count] : counts_) {
      sum += MultiPoly::term(Monomial{c.disorders, c.orders, 0}, Rational(Integer(static_cast<unsigned long>(count))));
    }
    return sum;
  }

  const auto& counts() const { return counts_; }

 private:
  struct Less {
    bool operator()(const OrderCounts& a, const OrderCounts& b) const {
      return a.disorders != b.disorders ? a.disorders < b.disorders : a.orders < b.orders;
    }
  };
  std::map<OrderCounts, unsigned long, Less> counts_;
};

MultiPoly pair_sum(unsigned n, const EnumerationOptions& options) {
  WeightHistogram h;
  for_each_ordered(2 * n, options, [&](const OrderedPartition& P) { h.add(P); });
  return h.polynomial() / Rational(factorial(n));
}

EnumerationOptions pair_options(bool override_limits, bool covered_only = false) {
  EnumerationOptions options;
  options.pair_only = true;
  options.covered_only = covered_only;
  options.override_limits = override_limits;
  return options;
}

MultiPoly half_p_plus_q() { return (MultiPoly::p() + MultiPoly::q()) / Rational(2); }

}  // namespace

MultiPoly r_by_enumeration(unsigned n, bool override_limits) {
  if (n == 0) return MultiPoly(1L);
  return pair_sum(n, pair_options(override_limits));
}

MultiPoly s_by_enumeration(unsigned n, bool override_limits) {
  if (n == 0) return MultiPoly();
  return pair_sum(n, pair_options(override_limits, true));
}

MultiPoly s_outer_by_enumeration(unsigned n, unsigned r, bool override_limits) {
  if (r == 0) return n == 0 ? MultiPoly(1L) : MultiPoly();
  if (n == 0) return MultiPoly();
  EnumerationOptions options = pair_options(override_limits);
  options.outer_blocks = r;
  return pair_sum(n, options);
}

MultiPoly a_by_enumeration(unsigned n, bool override_limits) {
  const int last = static_cast<int>(2 * n + 2);
  const EnumerationOptions options = pair_options(override_limits, true);
  WeightHistogram h;
  for_each_ordered(2 * n + 2, options, [&](const OrderedPartition& P) {
    const auto& top = P.at_position(P.block_count() - 1);
    if (top.front() == 1 && top.back() == last) h.add(P);
  });
  return h.polynomial() / Rational(factorial(n));
}

SequenceTable sequences_by_recursion(unsigned order, unsigned r_max) {
  if (order == 0) throw std::invalid_argument("sequences_by_recursion: order must be >= 1");
  if (r_max == 0) r_max = 1;
  const MultiPoly p = MultiPoly::p();
  const MultiPoly q = MultiPoly::q();

  SequenceTable t;
  t.order = order;
  t.r_max = r_max;
  t.r.assign(order + 1, MultiPoly());
  t.s.assign(order + 1, MultiPoly());
  t.a.assign(order + 1, MultiPoly());
  t.s_r.assign(r_max + 1, std::vector<MultiPoly>(order + 1));
  t.r[0] = MultiPoly(1L);
  t.a[0] = MultiPoly(1L);
  t.s_r[0][0] = MultiPoly(1L);

  for (unsigned n = 1; n <= order; ++n) {
    for (unsigned r = 1; r <= r_max; ++r) {
      if (n < r) continue;
      if (n == r) {
        t.s_r[r][n] = MultiPoly(1L);
        continue;
      }
      // s_n^(r) = (r/n) sum_{k=1}^{n-r+1} a_{k-1} s_{n-k}^(r-1)
      //         + (q/n) sum_{k=1}^{n-r} (2n-2k-r) a_{k-1} s_{n-k}^(r)
      MultiPoly first;
      for (unsigned k = 1; k <= n - r + 1; ++k) first += t.a[k - 1] * t.s_r[r - 1][n - k];
      MultiPoly second;
      for (unsigned k = 1; k <= n - r; ++k) {
        const long factor = 2L * n - 2L * k - static_cast<long>(r);
        second += t.a[k - 1] * t.s_r[r][n - k] * Rational(factor);
      }
      t.s_r[r][n] = first * make_rational(r, n) +
                    q * second / Rational(static_cast<long>(n));
    }
    t.s[n] = t.s_r[1][n];

    MultiPoly a_sum;
    MultiPoly r_sum;
    for (unsigned k = 1; k <= n; ++k) {
      a_sum += t.s[k] * t.a[n - k];
      r_sum += t.s[k] * t.r[n - k];
    }
    t.a[n] = p * a_sum;
    t.r[n] = r_sum;
  }
  return t;
}

std::vector<MultiPoly> r_by_closed_form(unsigned order) {
  const MultiPoly sum = MultiPoly::p() + MultiPoly::q();
  const MultiPoly u = sum - MultiPoly(2L);  // constant term of the denominator

  // numerator (p+q-1) - sqrt(1 - 2(p+q)z)
  PowerSeries radicand({MultiPoly(1L), sum * Rational(-2)}, order);
  PowerSeries root = series_sqrt(radicand);
  PowerSeries numerator = PowerSeries::constant(sum - MultiPoly(1L), order) - root;

  // R(z)(u + 2z) = numerator  =>  u r_n = N_n - 2 r_{n-1}
  std::vector<MultiPoly> r(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    MultiPoly rhs = numerator[n];
    if (n > 0) rhs -= r[n - 1] * Rational(2);
    auto quotient = divide_exact(rhs, u);
    if (!quotient) {
      throw std::logic_error("closed form: coefficient " + std::to_string(n) +
                             " does not clear its (p+q-2) denominator");
    }
    r[n] = *std::move(quotient);
  }
  return r;
}

std::vector<MultiPoly> r_by_jacobi(unsigned order) {
  const MultiPoly t = half_p_plus_q();
  const unsigned levels = order + 2;
  std::vector<MultiPoly> paths(levels);
  paths[0] = MultiPoly(1L);
  std::vector<MultiPoly> moments{MultiPoly(1L)};
  for (unsigned step = 1; step <= 2 * order; ++step) {
    std::vector<MultiPoly> next(levels);
    for (unsigned k = 0; k < levels; ++k) {
      if (paths[k].is_zero()) continue;
      if (k + 1 < levels) next[k + 1] += paths[k];
      if (k > 0) next[k - 1] += k == 1 ? paths[k] : paths[k] * t;
    }
    paths = std::move(next);
    if (step % 2 == 0) moments.push_back(paths[0]);
  }
  return moments;
}

Rational delaney(unsigned n, long k) {
  if (n == 0 || k < 0 || k > static_cast<long>(n) - 1) return Rational(0);
  const long top = static_cast<long>(n) + k - 1;
  return Rational(binomial(top, k) - binomial(top, k - 1));
}

MultiPoly r_by_delaney(unsigned n) {
  if (n == 0) return MultiPoly(1L);
  const MultiPoly t = half_p_plus_q();
  MultiPoly sum;
  MultiPoly power(1L);
  for (long k = 0; k <= static_cast<long>(n) - 1; ++k) {
    sum += power * delaney(n, k);
    power *= t;
  }
  return sum;
}

MultiPoly kesten_moment(unsigned n) {
  if (n % 2 != 0) return MultiPoly();
  return sequences_by_recursion(std::max(1U, n / 2), 1).r[n / 2];
}

std::vector<std::vector<Integer>> gen_euler_table(unsigned n, bool override_limits) {
  if (n == 0) throw std::invalid_argument("gen_euler_table: n must be >= 1");
  std::vector<std::vector<Integer>> table(n, std::vector<Integer>(n, 0));
  const EnumerationOptions options = pair_options(override_limits);
  WeightHistogram h;
  for_each_ordered(2 * n, options, [&](const OrderedPartition& P) { h.add(P); });
  for (const auto& [c, count] : h.counts()) {
    table.at(c.disorders).at(c.orders) = Integer(static_cast<unsigned long>(count));
  }
  return table;
}

Rational gen_euler(unsigned n, long k, long j, EulerRoute route) {
  if (n == 0 || k < 0 || j < 0 || k > static_cast<long>(n) - 1 || j > static_cast<long>(n) - 1) {
    return Rational(0);
  }
  if (route == EulerRoute::enumeration) {
    return Rational(gen_euler_table(n)[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
  }
  Integer two_power;
  mpz_ui_pow_ui(two_power.get_mpz_t(), 2, static_cast<unsigned long>(k + j));
  return Rational(factorial(n)) / Rational(two_power) * Rational(binomial(k + j, k)) * delaney(n, k + j);
}

std::string route_name(MomentRoute route) {
  switch (route) {
    case MomentRoute::enumeration:
      return "enumeration";
    case MomentRoute::recursion:
      return "recursion";
    case MomentRoute::closed_form:
      return "closed_form";
    case MomentRoute::jacobi:
      return "jacobi";
    case MomentRoute::delaney:
      return "delaney";
  }
  return "unknown";
}

std::span<const MomentRoute> all_routes() {
  static constexpr std::array routes{MomentRoute::enumeration, MomentRoute::recursion, MomentRoute::closed_form,
                                     MomentRoute::jacobi, MomentRoute::delaney};
  return routes;
}

MomentReport compute_moment(unsigned n, std::span<const MomentRoute> routes, bool override_limits) {
  MomentReport report;
  report.n = n;
  const unsigned order = std::max(1U, n);
  for (MomentRoute route : routes) {
    MultiPoly value;
    switch (route) {
      case MomentRoute::enumeration:
        value = r_by_enumeration(n, override_limits);
        break;
      case MomentRoute::recursion:
        value = sequences_by_recursion(order, 1).r[n];
        break;
      case MomentRoute::closed_form:
        value = r_by_closed_form(order)[n];
        break;
      case MomentRoute::jacobi:
        value = r_by_jacobi(order)[n];
        break;
      case MomentRoute::delaney:
        value = r_by_delaney(n);
        break;
    }
    report.routes.emplace_back(route, std::move(value));
  }
  if (!report.routes.empty()) report.value = report.routes.front().second;
  for (const auto& [route, value] : report.routes) {
    if (!(value == report.value)) report.agreement = false;
  }
  return report;
}

}  // namespace kesten
