#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "kesten/multipoly.hpp"
#include "kesten/unipoly.hpp"

namespace kesten {

/// Exact state over basis words (i_1, ..., i_k) of indices in [N]; the
/// empty word is the vacuum. The basis rescaling by the kernel is folded
/// into the annihilator: A_i*(i_1, i_2, ...) = w_{i_1 i_2} [i = i_1] (i_2, ...),
/// A_i*(j) = [i = j] Omega, A_i* Omega = 0, with w_{ij} = p (i < j),
/// q (i > j), 1 (i = j).
class DiscreteState {
 public:
  using Indices = std::vector<std::uint32_t>;

  static DiscreteState vacuum();

  void add(const Indices& word, const MultiPoly& coefficient);
  const std::map<Indices, MultiPoly>& terms() const { return terms_; }
  MultiPoly vacuum_amplitude() const;
  void truncate(std::size_t particles);

  DiscreteState create(std::uint32_t i) const;
  DiscreteState annihilate(std::uint32_t i) const;
  /// omega_i = A_i + A_i*.
  DiscreteState position(std::uint32_t i) const;

 private:
  std::map<Indices, MultiPoly> terms_;
};

/// phi(omega_{i_1} ... omega_{i_k}); the rightmost operator acts first.
/// Indices must lie in [1, N]; k <= 12 unless overridden.
MultiPoly discrete_word_moment(std::span<const std::uint32_t> indices, std::uint32_t N,
                               bool override_limits = false);

/// phi(S_N^n), S_N = N^{-1/2} sum_i omega_i, as a polynomial in eps = 1/N
/// with coefficients in p, q. Index tuples are grouped by their order
/// pattern; a pattern with r distinct values occurs C(N, r) times.
/// n <= 6 unless overridden; zero for odd n.
UniPoly clt_moment_series(unsigned n, bool override_limits = false);

/// clt_moment_series(n) evaluated at eps = 1/N.
MultiPoly clt_moment(std::uint64_t N, unsigned n, bool override_limits = false);

/// The N -> infinity value: the eps^0 coefficient.
MultiPoly clt_limit(unsigned n, bool override_limits = false);

}  // namespace kesten
