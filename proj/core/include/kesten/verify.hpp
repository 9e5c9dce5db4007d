#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kesten/multipoly.hpp"

namespace kesten {

struct CheckResult {
  std::string name;
  std::string description;
  bool passed = false;
  /// Empty on success; otherwise the first disagreement, "expected ... got ...".
  std::string detail;
};

/// A published value that the computation does not reproduce. These are
/// documented, never counted as failures.
struct Erratum {
  std::string item;
  std::string printed;
  std::string computed;
  bool printed_matches = false;
};

struct VerifyOptions {
  unsigned order = 6;
  std::uint64_t seed = 0x6b657374656eULL;
  bool stop_on_failure = false;
};

struct VerifyReport {
  unsigned order = 0;
  std::vector<CheckResult> checks;
  std::vector<Erratum> errata;

  bool passed() const;
  const CheckResult* first_failure() const;
};

/// Runs every cross-route identity: moment routes, specializations,
/// symmetric and operator/combinatorial equivalences, factorizations,
/// Euler numbers, Poisson and CLT moments, measure analytics, series
/// identities and the vanishing rules.
VerifyReport run_verification(const VerifyOptions& options = {});

/// "expected <a>, got <b>" for two canonical polynomials.
std::string diff_text(const MultiPoly& expected, const MultiPoly& actual);

/// The polynomial in p, q multiplying T^k.
MultiPoly t_coefficient(const MultiPoly& f, std::uint32_t k);

}  // namespace kesten
