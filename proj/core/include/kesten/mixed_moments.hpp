#pragma once

#include <vector>

#include "kesten/multipoly.hpp"
#include "kesten/partition.hpp"
#include "kesten/signature.hpp"

namespace kesten {

/// Sum of w(P) over ordered pair partitions adapted to `sig`. n <= 14
/// unless overridden; zero for odd n.
MultiPoly adapted_weight_sum(const IntervalSignature& sig, bool override_limits = false);

/// phi(omega(f_1) ... omega(f_n)) for indicators of the signature's
/// intervals: prod_i lambda(I_i)^{b_i} / b_i! times adapted_weight_sum, with
/// b_i half the multiplicity of interval i. Zero if n or any multiplicity is odd.
MultiPoly mixed_moment_brownian(const IntervalSignature& sig, bool override_limits = false);

/// (length^b / b!) sum over colorings sigma of w(pi, sigma), b = |pi|.
/// `pi` must be non-crossing.
MultiPoly colored_partition_sum(const SetPartition& pi, const MultiPoly& length);

/// sum over ONC_n of T^b(P) w(P) / b(P)!, with T the symbolic time.
MultiPoly poisson_moment(unsigned n, bool override_limits = false);

struct FactorizationCase {
  unsigned m = 0;
  bool increasing = true;
  MultiPoly lhs;  // the nested (pyramidal) mixed moment
  MultiPoly rhs;  // q^{m-1} (or p^{m-1}) times the product of second moments
  bool holds() const { return lhs == rhs; }
};

/// Pyramidal factorization over m disjoint intervals with the given
/// lengths (unit lengths when empty): the nested word f_1 .. f_m f_m .. f_1
/// on increasing intervals, and the same word on decreasing intervals.
std::vector<FactorizationCase> factorization_checks(unsigned m, std::vector<Rational> lengths = {});

}  // namespace kesten
