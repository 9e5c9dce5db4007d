#include "kesten/series_checks.hpp"

#include <algorithm>

#include "kesten/power_series.hpp"

namespace kesten {

bool IdentityReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

const IdentityCheck* IdentityReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

IdentityReport series_identity_checks(const SequenceTable& table) {
  const unsigned N = table.order;
  const unsigned through = N - 1;
  IdentityReport report;
  report.order = N;

  auto record = [&](std::string name, const PowerSeries& lhs, const PowerSeries& rhs) {
    auto at = first_mismatch(lhs, rhs, through);
    report.checks.push_back(IdentityCheck{std::move(name), !at.has_value(), at});
  };

  const PowerSeries one = PowerSeries::constant(MultiPoly(1L), N);
  const PowerSeries R(table.r, N);
  const PowerSeries S(table.s, N);
  const PowerSeries A(table.a, N);
  const MultiPoly p = MultiPoly::p();
  const MultiPoly q = MultiPoly::q();
  const PowerSeries z = PowerSeries::z(N);

  record("R(1-S)=1", R * (one - S), one);
  record("A(1-pS)=1", A * (one - p * S), one);

  for (unsigned r = 1; r <= table.r_max; ++r) {
    const PowerSeries Sr(table.s_r[r], N);
    record("S^(" + std::to_string(r) + ")=S^" + std::to_string(r), Sr, S.pow(r));
  }
  for (unsigned r = 1; r <= table.r_max; ++r) {
    const PowerSeries Sr(table.s_r[r], N);
    const PowerSeries Sprev(table.s_r[r - 1], N);
    const PowerSeries dSr = Sr.derivative();
    const MultiPoly rr(static_cast<long>(r));
    PowerSeries rhs = (rr * Sprev) * A + (MultiPoly(2L) * q) * (z * dSr) * A - (q * rr) * (A * Sr);
    record("(S^(" + std::to_string(r) + "))' recurrence", dSr, rhs);
  }
  return report;
}

}  // namespace kesten
