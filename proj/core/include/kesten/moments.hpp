#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kesten/multipoly.hpp"
#include "kesten/rational.hpp"

namespace kesten {

/// Everything the generating-function recursions produce, indexed 0..order.
///  r[n]     even moments r_n (r_0 = 1)
///  s[n]     covered-partition sums s_n (s_0 = 0)
///  a[n]     sums over partitions covered by their last-colored block (a_0 = 1)
///  s_r[r][n] sums over pair partitions with exactly r outer blocks
///           (s_r[0][n] = [n = 0], s_r[r][r] = 1)
struct SequenceTable {
  unsigned order = 0;
  unsigned r_max = 0;
  std::vector<MultiPoly> r;
  std::vector<MultiPoly> s;
  std::vector<MultiPoly> a;
  std::vector<std::vector<MultiPoly>> s_r;
};

// Enumeration-backed routes. Each sums p^e q^e' over ordered non-crossing
// pair partitions and divides by n!; limited to 2n <= 14 unless overridden.

/// (1/n!) sum over ONC^2_{2n} of w(P).
MultiPoly r_by_enumeration(unsigned n, bool override_limits = false);
/// (1/n!) sum over covered partitions in ONC^2_{2n}.
MultiPoly s_by_enumeration(unsigned n, bool override_limits = false);
/// (1/n!) sum over ONC^2_{2n} with exactly r outer blocks.
MultiPoly s_outer_by_enumeration(unsigned n, unsigned r, bool override_limits = false);
/// (1/n!) sum over ONC^2_{2n+2} whose last-colored block is {1, 2n+2}.
MultiPoly a_by_enumeration(unsigned n, bool override_limits = false);

/// Fills the table in increasing n: s^(r)_n from the outer-block recursion,
/// then a_n = p sum s_k a_{n-k}, then r_n as the z^n coefficient of 1/(1 - S).
SequenceTable sequences_by_recursion(unsigned order, unsigned r_max = 3);

/// Coefficients r_0..r_N of R(z) = (p+q-1 - sqrt(1 - 2(p+q)z)) / (p+q-2 + 2z).
/// The apparent pole at p+q = 2 cancels; each coefficient is recovered by an
/// exact polynomial division and a non-polynomial result throws
/// std::logic_error.
std::vector<MultiPoly> r_by_closed_form(unsigned order);

/// Even moments m_{2n}, n = 0..N, of the measure with Jacobi parameters
/// alpha = 0, omega = (1, t, t, ...), t = (p+q)/2, via weighted Dyck paths.
std::vector<MultiPoly> r_by_jacobi(unsigned order);

/// Delaney number D(n, k) = C(n+k-1, k) - C(n+k-1, k-1); zero outside 0 <= k <= n-1.
Rational delaney(unsigned n, long k);

/// sum_k D(n, k) t^k with t = (p+q)/2.
MultiPoly r_by_delaney(unsigned n);

/// Kesten moment m_n: r_{n/2} for even n, 0 for odd n.
MultiPoly kesten_moment(unsigned n);

enum class EulerRoute { formula, enumeration };

/// E(n, k, j): ordered non-crossing pair partitions of [2n] with k
/// disorders and j orders. Zero for out-of-range indices.
Rational gen_euler(unsigned n, long k, long j, EulerRoute route);

/// Full table table[k][j], 0 <= k, j <= n-1, by a single enumeration pass.
std::vector<std::vector<Integer>> gen_euler_table(unsigned n, bool override_limits = false);

enum class MomentRoute { enumeration, recursion, closed_form, jacobi, delaney };

std::string route_name(MomentRoute route);
std::span<const MomentRoute> all_routes();

struct MomentReport {
  unsigned n = 0;
  MultiPoly value;
  std::vector<std::pair<MomentRoute, MultiPoly>> routes;
  bool agreement = true;
};

/// r_n by each requested route; agreement iff all routes coincide exactly.
MomentReport compute_moment(unsigned n, std::span<const MomentRoute> routes, bool override_limits = false);

}  // namespace kesten
