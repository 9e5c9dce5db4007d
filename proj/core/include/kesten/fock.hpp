#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kesten/multipoly.hpp"
#include "kesten/partition.hpp"
#include "kesten/signature.hpp"
#include "kesten/unipoly.hpp"

namespace kesten {

/// x^power restricted to the registered cell `cell`.
struct Factor {
  std::uint32_t cell = 0;
  std::uint32_t power = 0;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

using Word = std::vector<Factor>;

/// Finite combination of words f_1 * f_2 * ... * f_k (k = particle number)
/// with polynomial coefficients. The empty word is the vacuum. Words are
/// multilinear in their factors, so expanding every factor into monomials
/// x^k chi_I gives a unique normal form; zero coefficients are dropped.
class FockVector {
 public:
  FockVector() = default;
  static FockVector vacuum();

  void add(const Word& word, const MultiPoly& coefficient);
  const std::map<Word, MultiPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  MultiPoly vacuum_amplitude() const;
  std::size_t max_particles() const;

  /// Drops every word with more than `particles` factors.
  void truncate(std::size_t particles);

  FockVector& operator+=(const FockVector& rhs);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator*(const MultiPoly& c, const FockVector& v);
  friend bool operator==(const FockVector&, const FockVector&) = default;

  std::string to_string() const;

 private:
  std::map<Word, MultiPoly> terms_;
};

struct Cell {
  MultiPoly lo;
  MultiPoly hi;
};

/// One registered family of cells and the (p,q)-operators acting on words
/// over it. Cells must be pairwise disjoint rational intervals in [0, inf)
/// (touching allowed), or a single cell with symbolic endpoints such as
/// [0, T]. Two factors on different cells are coupled by the constant p
/// (earlier cell first) or q; two factors on the same cell by
/// p on s < u and q on s > u.
class FockSpace {
 public:
  explicit FockSpace(std::vector<Cell> cells);

  /// The single cell [0, T].
  static FockSpace poisson();
  /// One cell per distinct interval, with the signature's interval ids.
  static FockSpace for_signature(const IntervalSignature& sig);

  std::size_t cell_count() const { return cells_.size(); }
  const Cell& cell(std::size_t id) const;

  /// a(g chi_J): prepends g chi_J.
  FockVector create(std::size_t J, const UniPoly& g, const FockVector& v) const;
  FockVector create(std::size_t J, const FockVector& v) const { return create(J, UniPoly(MultiPoly(1L)), v); }

  /// a*(g chi_J): pairs the first factor with g chi_J through the kernel and
  /// folds the result into the next factor (or into the vacuum amplitude
  /// when the word had one factor). a*(f) Omega = 0.
  FockVector annihilate(std::size_t J, const UniPoly& g, const FockVector& v) const;
  FockVector annihilate(std::size_t J, const FockVector& v) const {
    return annihilate(J, UniPoly(MultiPoly(1L)), v);
  }

  /// M(h chi_J): multiplies the first factor by h chi_J and the vacuum
  /// amplitude by `vacuum_scalar`, which is passed explicitly because the
  /// value of an indicator at the origin is a convention (m_t Omega = 0).
  FockVector gauge_m(std::size_t J, const UniPoly& h, const MultiPoly& vacuum_scalar, const FockVector& v) const;

  /// a*(chi_J) a(chi_J) in closed form: |J| on the vacuum, and the first
  /// factor multiplied by W(u) = integral over s in J of w(s, u).
  FockVector gauge_n(std::size_t J, const FockVector& v) const;

  /// omega(chi_J) = a(chi_J) + a*(chi_J).
  FockVector position(std::size_t J, const FockVector& v) const;

 private:
  void check(std::size_t J) const;
  // h(u) = integral over s in cell I of s^k g(s) w(s, u), u in cell `next`.
  UniPoly kernel(std::size_t I, std::uint32_t k, const UniPoly& g, std::size_t next) const;

  std::vector<Cell> cells_;
  std::vector<std::size_t> rank_;  // position of each cell on the half-line
};

/// phi(omega(f_1) ... omega(f_n)) by state evolution on the vacuum, f_j the
/// indicator of the signature's j-th interval. n <= 10 unless overridden.
MultiPoly position_moment(const IntervalSignature& sig, bool override_limits = false);

/// Vacuum moment of gamma_T^n with gamma = a + a* + a*a + m on [0, T].
/// n <= 8 unless overridden.
MultiPoly poisson_moment_operator(unsigned n, bool override_limits = false);

enum class OpKind { create, annihilate, gauge_m, gauge_n };

struct OpTag {
  OpKind kind = OpKind::create;
  std::size_t cell = 0;
};

std::string op_symbol(OpKind kind);  // "a", "a*", "m", "n"

/// <c_1 ... c_n Omega, Omega>: c_n acts first. gauge_m uses the indicator
/// with vacuum scalar 0.
MultiPoly word_vacuum_moment(const FockSpace& space, std::span<const OpTag> word);

/// The non-crossing partition pi with c_pi equal to the word, if any: a*
/// opens a block, a closes the innermost open block, m joins it, and n is a
/// singleton.
std::optional<SetPartition> nc_partition_from_word(std::span<const OpKind> word);

}  // namespace kesten
