#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kesten/moments.hpp"

namespace kesten {

struct IdentityCheck {
  std::string name;
  bool passed = false;
  /// First coefficient index where the two sides differ.
  std::optional<unsigned> mismatch;
};

struct IdentityReport {
  unsigned order = 0;
  std::vector<IdentityCheck> checks;

  bool passed() const;
  /// First failing check, if any.
  const IdentityCheck* first_failure() const;
};

/// Generating-function identities between the sequences of `table`, checked
/// coefficient-wise through z^(order - 1):
///   R (1 - S) = 1,   A (1 - p S) = 1,   S^(r) = S^r,
///   (S^(r))' = r S^(r-1) A + 2 q z (S^(r))' A - q r A S^(r)
/// for every r = 1..table.r_max (with S^(0) = 1).
IdentityReport series_identity_checks(const SequenceTable& table);

}  // namespace kesten
