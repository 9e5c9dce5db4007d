#include "kesten/discrete_fock.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "kesten/partition.hpp"
#include "kesten/rational.hpp"

namespace kesten {

DiscreteState DiscreteState::vacuum() {
  DiscreteState s;
  s.add({}, MultiPoly(1L));
  return s;
}

void DiscreteState::add(const Indices& word, const MultiPoly& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly DiscreteState::vacuum_amplitude() const {
  auto it = terms_.find(Indices{});
  return it == terms_.end() ? MultiPoly() : it->second;
}

void DiscreteState::truncate(std::size_t particles) {
  std::erase_if(terms_, [&](const auto& term) { return term.first.size() > particles; });
}

DiscreteState DiscreteState::create(std::uint32_t i) const {
  DiscreteState out;
  for (const auto& [word, c] : terms_) {
    Indices w;
    w.reserve(word.size() + 1);
    w.push_back(i);
    w.insert(w.end(), word.begin(), word.end());
    out.add(w, c);
  }
  return out;
}

DiscreteState DiscreteState::annihilate(std::uint32_t i) const {
  DiscreteState out;
  for (const auto& [word, c] : terms_) {
    if (word.empty() || word.front() != i) continue;
    Indices rest(word.begin() + 1, word.end());
    if (rest.empty()) {
      out.add(rest, c);
      continue;
    }
    const std::uint32_t j = rest.front();
    const MultiPoly w = i < j ? MultiPoly::p() : (i > j ? MultiPoly::q() : MultiPoly(1L));
    out.add(rest, c * w);
  }
  return out;
}

DiscreteState DiscreteState::position(std::uint32_t i) const {
  DiscreteState out = create(i);
  for (const auto& [word, c] : annihilate(i).terms_) out.add(word, c);
  return out;
}

MultiPoly discrete_word_moment(std::span<const std::uint32_t> indices, std::uint32_t N, bool override_limits) {
  constexpr std::size_t kMaxWord = 12;
  if (!override_limits && indices.size() > kMaxWord) {
    throw LimitError("discrete word moments limited to length <= " + std::to_string(kMaxWord));
  }
  for (std::uint32_t i : indices) {
    if (i < 1 || i > N) throw std::invalid_argument("index " + std::to_string(i) + " outside [1, N]");
  }
  DiscreteState s = DiscreteState::vacuum();
  for (std::size_t j = indices.size(); j-- > 0;) {
    s = s.position(indices[j]);
    s.truncate(j);
  }
  return s.vacuum_amplitude();
}

namespace {

// Visits every surjection [n] -> [r] written as a rank word, r = 1..n.
void for_each_pattern(unsigned n, const std::function<void(const std::vector<std::uint32_t>&, unsigned)>& visit) {
  std::vector<std::uint32_t> word(n);
  for (unsigned r = 1; r <= n; ++r) {
    std::function<void(unsigned, std::uint32_t)> fill = [&](unsigned pos, std::uint32_t used_mask) {
      if (pos == n) {
        if (used_mask == (std::uint32_t{1} << r) - 1) visit(word, r);
        return;
      }
      for (std::uint32_t v = 1; v <= r; ++v) {
        word[pos] = v;
        fill(pos + 1, used_mask | (std::uint32_t{1} << (v - 1)));
      }
    };
    fill(0, 0);
  }
}

}  // namespace

UniPoly clt_moment_series(unsigned n, bool override_limits) {
  constexpr unsigned kMaxPower = 6;
  if (n == 0) return UniPoly(MultiPoly(1L));
  if (!override_limits && n > kMaxPower) {
    throw LimitError("CLT moments limited to n <= " + std::to_string(kMaxPower) +
                     " (pass an explicit override to go further)");
  }
  if (n % 2 != 0) return UniPoly();

  // phi summed over the patterns with r distinct ranks
  std::vector<MultiPoly> by_rank(n + 1);
  for_each_pattern(n, [&](const std::vector<std::uint32_t>& word, unsigned r) {
    // a value used once is a singleton and kills the moment
    if (2 * r > n) return;
    by_rank[r] += discrete_word_moment(word, r, true);
  });

  // C(N, r) / N^{n/2} = (1/r!) eps^{n/2 - r} prod_{j<r} (1 - j eps)
  const UniPoly eps = UniPoly::x();
  UniPoly total;
  for (unsigned r = 1; 2 * r <= n; ++r) {
    if (by_rank[r].is_zero()) continue;
    UniPoly count = UniPoly::x(n / 2 - r);
    for (unsigned j = 1; j < r; ++j) count = count * (UniPoly(MultiPoly(1L)) - MultiPoly(static_cast<long>(j)) * eps);
    total += (by_rank[r] / Rational(factorial(r))) * count;
  }
  return total;
}

MultiPoly clt_moment(std::uint64_t N, unsigned n, bool override_limits) {
  if (N == 0) throw std::invalid_argument("clt_moment needs N >= 1");
  const Rational eps(Integer(1), Integer(static_cast<unsigned long>(N)));
  return clt_moment_series(n, override_limits).evaluate(MultiPoly(eps));
}

MultiPoly clt_limit(unsigned n, bool override_limits) {
  return clt_moment_series(n, override_limits).coefficient(0);
}

}  // namespace kesten
