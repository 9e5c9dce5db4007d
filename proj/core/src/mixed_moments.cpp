#include "kesten/mixed_moments.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kesten {

namespace {

// Condition (2) of adaptedness only involves the interval ids of blocks in
// coloring order, so colorings are filtered before computing weights.
bool colors_follow_intervals(const OrderedPartition& P, const std::vector<std::size_t>& block_interval) {
  std::size_t highest = 0;
  for (std::size_t i = 0; i < P.block_count(); ++i) {
    const std::size_t id = block_interval[P.order()[i]];
    if (id < highest) return false;
    highest = id;
  }
  return true;
}

MultiPoly histogram_to_poly(const std::map<std::pair<unsigned, unsigned>, unsigned long>& counts) {
  MultiPoly sum;
  for (const auto& [ej, count] : counts) {
    sum += MultiPoly::term(Monomial{ej.first, ej.second, 0}, Rational(Integer(count)));
  }
  return sum;
}

}  // namespace

MultiPoly adapted_weight_sum(const IntervalSignature& sig, bool override_limits) {
  const std::size_t n = sig.size();
  if (n % 2 != 0 || !sig.half_multiplicities()) return MultiPoly();
  std::map<std::pair<unsigned, unsigned>, unsigned long> counts;
  for_each_noncrossing(
      n, true,
      [&](const SetPartition& pi) {
        if (!is_adapted(pi, sig)) return;
        std::vector<std::size_t> block_interval(pi.block_count());
        for (std::size_t b = 0; b < pi.block_count(); ++b) {
          block_interval[b] = sig.at(static_cast<std::size_t>(pi.block(b).front() - 1));
        }
        // Start from the coloring sorted by interval so every adapted
        // coloring is reached by next_permutation.
        std::vector<std::size_t> order(pi.block_count());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return block_interval[a] < block_interval[b]; });
        do {
          OrderedPartition P(pi, order);
          if (!colors_follow_intervals(P, block_interval)) continue;
          const auto c = disorder_order_counts(P);
          ++counts[{c.disorders, c.orders}];
        } while (std::next_permutation(order.begin(), order.end()));
      },
      override_limits);
  return histogram_to_poly(counts);
}

MultiPoly mixed_moment_brownian(const IntervalSignature& sig, bool override_limits) {
  const auto half = sig.half_multiplicities();
  if (sig.size() % 2 != 0 || !half) return MultiPoly();
  Rational scale(1);
  for (std::size_t i = 0; i < sig.interval_count(); ++i) {
    const auto b = static_cast<std::uint32_t>((*half)[i]);
    scale *= pow(sig.interval(i).length(), b) / Rational(factorial(b));
  }
  return adapted_weight_sum(sig, override_limits) * scale;
}

MultiPoly colored_partition_sum(const SetPartition& pi, const MultiPoly& length) {
  std::vector<std::size_t> order(pi.block_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::map<std::pair<unsigned, unsigned>, unsigned long> counts;
  do {
    const auto c = disorder_order_counts(OrderedPartition(pi, order));
    ++counts[{c.disorders, c.orders}];
  } while (std::next_permutation(order.begin(), order.end()));
  const auto b = static_cast<std::uint32_t>(pi.block_count());
  return histogram_to_poly(counts) * length.pow(b) / Rational(factorial(b));
}

MultiPoly poisson_moment(unsigned n, bool override_limits) {
  // (blocks, e, e') -> count
  std::map<std::array<unsigned, 3>, unsigned long> counts;
  EnumerationOptions options;
  options.override_limits = override_limits;
  for_each_ordered(n, options, [&](const OrderedPartition& P) {
    const auto c = disorder_order_counts(P);
    ++counts[{static_cast<unsigned>(P.block_count()), c.disorders, c.orders}];
  });
  MultiPoly sum;
  for (const auto& [key, count] : counts) {
    sum += MultiPoly::term(Monomial{key[1], key[2], key[0]}, Rational(Integer(count)) / Rational(factorial(key[0])));
  }
  return sum;
}

std::vector<FactorizationCase> factorization_checks(unsigned m, std::vector<Rational> lengths) {
  if (m == 0) throw std::invalid_argument("factorization_checks: m must be >= 1");
  if (lengths.empty()) lengths.assign(m, Rational(1));
  if (lengths.size() != m) throw std::invalid_argument("factorization_checks: need one length per interval");

  // Interval i occupies [start_i, start_i + length_i], laid end to end.
  std::vector<Interval> intervals;
  Rational start(0);
  for (const auto& len : lengths) {
    intervals.push_back(Interval{start, start + len});
    start += len;
  }

  MultiPoly product(1L);
  for (std::size_t i = 0; i < m; ++i) {
    product *= mixed_moment_brownian(IntervalSignature({intervals[i]}, {0, 0}));
  }

  std::vector<FactorizationCase> out;
  for (bool increasing : {true, false}) {
    // word f_1 ... f_m f_m ... f_1 with f_1 < ... < f_m (or reversed)
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < m; ++i) word.push_back(increasing ? i : m - 1 - i);
    for (std::size_t i = m; i-- > 0;) word.push_back(increasing ? i : m - 1 - i);
    FactorizationCase c;
    c.m = m;
    c.increasing = increasing;
    c.lhs = mixed_moment_brownian(IntervalSignature(intervals, word));
    c.rhs = (increasing ? MultiPoly::q() : MultiPoly::p()).pow(m - 1) * product;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace kesten
