// One PASS/FAIL line per acceptance criterion. Reference values come from
// the brute-force oracles in tests/support or are written out literally.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kesten/discrete_fock.hpp"
#include "kesten/fock.hpp"
#include "kesten/kesten_measure.hpp"
#include "kesten/mixed_moments.hpp"
#include "kesten/moments.hpp"
#include "kesten/series_checks.hpp"
#include "oracles.hpp"

using namespace kesten;

namespace {

const MultiPoly P = MultiPoly::p();
const MultiPoly Q = MultiPoly::q();
const MultiPoly T = MultiPoly::T();

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

void expect_eq(const MultiPoly& expected, const MultiPoly& actual, const std::string& what) {
  if (!(expected == actual)) throw Failure{what + ": expected " + expected.to_string() + ", got " + actual.to_string()};
}

std::vector<OpTag> on_cell(const std::vector<OpKind>& kinds, std::size_t cell = 0) {
  std::vector<OpTag> out;
  for (auto k : kinds) out.push_back(OpTag{k, cell});
  return out;
}

std::vector<OpKind> parse_ops(const std::string& text) {
  std::vector<OpKind> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'a' && i + 1 < text.size() && text[i + 1] == '*') {
      out.push_back(OpKind::annihilate);
      ++i;
    } else {
      out.push_back(OpKind::create);
    }
  }
  return out;
}

void routes() {
  const unsigned N = 6;
  const auto table = sequences_by_recursion(N);
  const auto closed = r_by_closed_form(N);
  const auto jacobi = r_by_jacobi(N);
  for (unsigned n = 1; n <= N; ++n) {
    const std::string at = "n=" + std::to_string(n);
    const MultiPoly enumerated = r_by_enumeration(n);
    expect_eq(oracle::r(n), enumerated, at + " enumeration vs oracle");
    expect_eq(enumerated, table.r[n], at + " recursion");
    expect_eq(enumerated, closed[n], at + " closed form");
    expect_eq(enumerated, jacobi[n], at + " continued fraction");
    expect_eq(enumerated, r_by_delaney(n), at + " Delaney sum");
  }
}

void specializations() {
  const unsigned N = 8;
  const auto closed = r_by_closed_form(N);
  const auto jacobi = r_by_jacobi(N);
  const Rational arcsine[] = {Rational(1), Rational(1), Rational(3, 2), Rational(5, 2), Rational(35, 8)};
  for (unsigned n = 0; n <= N; ++n) {
    for (const auto* seq : {&closed, &jacobi}) {
      const MultiPoly& r = (*seq)[n];
      expect(r.evaluate(Rational(1), Rational(1)) == Rational(catalan(n)), "Catalan at n=" + std::to_string(n));
      const Rational a = n < 5 ? arcsine[n] : Rational(binomial(2L * n, n)) / pow(Rational(2), n);
      expect(r.evaluate(Rational(0), Rational(1)) == a && r.evaluate(Rational(1), Rational(0)) == a,
             "arcsine at n=" + std::to_string(n));
      expect(r.evaluate(Rational(0), Rational(0)) == Rational(1), "boolean at n=" + std::to_string(n));
    }
  }
}

void six_point_words() {
  const FockSpace unit({Cell{MultiPoly(0L), MultiPoly(1L)}});
  const std::vector<std::pair<std::string, MultiPoly>> table = {
      {"a*aa*aa*a", MultiPoly(1L)},
      {"a*a*aaa*a", (P + Q) / Rational(2)},
      {"a*aa*a*aa", (P + Q) / Rational(2)},
      {"a*a*aa*aa", (P * P + P * Q + Q * Q) / Rational(3)},
      {"a*a*a*aaa", (P * P + MultiPoly(4L) * P * Q + Q * Q) / Rational(6)},
  };
  MultiPoly sum;
  for (const auto& [word, expected] : table) {
    const auto ops = parse_ops(word);
    expect_eq(expected, word_vacuum_moment(unit, on_cell(ops)), word + " operator route");
    const auto pi = nc_partition_from_word(ops);
    expect(pi.has_value(), word + " has no partition");
    oracle::Histogram h;
    oracle::add_colorings(pi->blocks(), h);
    expect_eq(expected, oracle::to_poly(h) / Rational(factorial(3)), word + " oracle colorings");
    expect_eq(expected, colored_partition_sum(*pi, MultiPoly(1L)), word + " partition route");
    sum += expected;
  }
  const MultiPoly s = P + Q;
  expect_eq((s * s + MultiPoly(2L) * s + MultiPoly(2L)) / Rational(2), sum, "sum of the five words");
}

void engine_equivalence() {
  std::mt19937_64 rng(20261018);
  const std::vector<Interval> pool = {{Rational(0), Rational(1, 2)},
                                      {Rational(1, 2), Rational(2)},
                                      {Rational(2), Rational(11, 4)}};
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = 1 + rng() % 3;
    std::vector<Interval> intervals(pool.begin(), pool.begin() + static_cast<long>(k));
    std::vector<Rational> lengths;
    for (const auto& I : intervals) lengths.push_back(I.length());
    const std::size_t n = 2 + 2 * (rng() % 4);
    std::vector<std::size_t> word(n);
    for (std::size_t j = 0; j < n / 2; ++j) word[2 * j] = word[2 * j + 1] = rng() % k;
    for (std::size_t j = n; j > 1; --j) std::swap(word[j - 1], word[rng() % j]);
    if (trial % 5 == 4) {
      for (auto& w : word) w = rng() % k;
    }
    const IntervalSignature sig(intervals, word);
    const MultiPoly op = position_moment(sig);
    expect_eq(mixed_moment_brownian(sig), op, "trial " + std::to_string(trial) + " " + sig.to_string());
    expect_eq(oracle::brownian(word, lengths), op, "trial " + std::to_string(trial) + " oracle");
  }
  const auto example = IntervalSignature::parse("f f g g f f", "g=[0,1],f=[1,2]");
  const MultiPoly expected = (P * P + P * Q + MultiPoly(2L)) / Rational(2);
  expect_eq(expected, position_moment(example), "example operator route");
  expect_eq(expected, mixed_moment_brownian(example), "example combinatorial route");
  expect(!(expected == (P * Q + P + MultiPoly(2L)) / Rational(2)), "printed value unexpectedly coincides");
}

void factorization() {
  for (unsigned m = 1; m <= 5; ++m) {
    // unit lengths: every second moment is 1
    for (const auto& c : factorization_checks(m)) {
      expect(c.holds(), "m=" + std::to_string(m) + (c.increasing ? " increasing" : " decreasing"));
      expect_eq((c.increasing ? Q : P).pow(m - 1), c.rhs, "m=" + std::to_string(m) + " unit-length product");
    }
  }
  // the nested word against the oracle for m = 3
  const std::vector<Rational> lengths = {Rational(1), Rational(1), Rational(1)};
  expect_eq(Q.pow(2), oracle::brownian({0, 1, 2, 2, 1, 0}, lengths), "oracle increasing m=3");
  expect_eq(P.pow(2), oracle::brownian({2, 1, 0, 0, 1, 2}, lengths), "oracle decreasing m=3");
}

void euler_numbers() {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto table = gen_euler_table(n);
    Integer total = 0;
    for (unsigned k = 0; k < n; ++k) {
      for (unsigned j = 0; j < n; ++j) {
        const long kj = static_cast<long>(k + j);
        const Rational formula = Rational(factorial(n)) / pow(Rational(2), k + j) * Rational(binomial(kj, k)) *
                                 delaney(n, kj);
        expect(Rational(table[k][j]) == formula, "E(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                                     std::to_string(j) + ")");
        total += table[k][j];
      }
    }
    expect(total == factorial(n) * catalan(n), "total for n=" + std::to_string(n));
    if (n <= 4) {
      oracle::Histogram h;
      for (const auto& m : oracle::nc_matchings(static_cast<int>(2 * n))) oracle::add_colorings(m, h);
      for (const auto& [kj, count] : h) expect(table[kj.first][kj.second] == count, "oracle E n=" + std::to_string(n));
    }
  }
}

void poisson() {
  for (unsigned n = 1; n <= 7; ++n) {
    const MultiPoly op = poisson_moment_operator(n);
    expect_eq(poisson_moment(n), op, "n=" + std::to_string(n) + " routes");
    if (n <= 6) expect_eq(oracle::poisson(n), op, "n=" + std::to_string(n) + " oracle");
  }
  expect_eq(T, poisson_moment(1), "n=1");
  expect_eq(T + T * T, poisson_moment(2), "n=2");
  expect_eq(T + (P + Q + MultiPoly(4L)) / Rational(2) * T * T + T.pow(3), poisson_moment(3), "n=3");
  // the worked computation's cubic coefficient, not the summary line
  const MultiPoly fourth = poisson_moment(4);
  MultiPoly cubic;
  for (const auto& [m, c] : fourth.terms()) {
    if (m.t == 3) cubic += MultiPoly::term(Monomial{m.p, m.q, 0}, c);
  }
  expect_eq((P * P + P * Q + Q * Q + MultiPoly(3L) * P + MultiPoly(3L) * Q + MultiPoly(9L)) / Rational(3), cubic,
            "n=4 cubic coefficient");
}

void clt() {
  const auto r = r_by_jacobi(3);
  for (unsigned k = 1; k <= 3; ++k) {
    expect_eq(r[k], clt_limit(2 * k), "limit of moment " + std::to_string(2 * k));
    expect(clt_limit(2 * k - 1).is_zero(), "odd limit");
  }
  const std::vector<std::pair<Rational, Rational>> points = {
      {Rational(0), Rational(1)}, {Rational(1), Rational(1)}, {Rational(1, 2), Rational(1, 3)}};
  for (const auto& [p, q] : points) {
    const Rational limit = r[3].evaluate(p, q);
    for (unsigned long N : {100UL, 1000UL, 10000UL}) {
      const Rational value = clt_moment(N, 6).evaluate(p, q);
      expect(abs(value - limit) <= Rational(10) / Rational(N),
             "N=" + std::to_string(N) + " at (" + to_string(p) + "," + to_string(q) + ")");
    }
  }
  // small N against the full sum over index tuples
  for (std::uint32_t N = 1; N <= 3; ++N) {
    MultiPoly total;
    std::vector<std::uint32_t> idx(6, 1);
    while (true) {
      total += discrete_word_moment(idx, N);
      std::size_t j = 0;
      while (j < 6 && idx[j] == N) idx[j++] = 1;
      if (j == 6) break;
      ++idx[j];
    }
    expect_eq(total / pow(Rational(N), 3), clt_moment(N, 6), "N=" + std::to_string(N) + " tuple sum");
  }
}

void measure() {
  const std::vector<std::pair<double, double>> points = {{1, 1}, {0, 1}, {1, 0}, {0.5, 0.5}, {0.3, 0.2}, {1.5, 0.4}};
  bool saw_atoms = false;
  for (const auto& [p, q] : points) {
    const KestenMeasure m(p, q);
    std::ostringstream at;
    at << "(" << p << "," << q << ")";
    saw_atoms = saw_atoms || !m.atoms().empty();
    expect(std::abs(quadrature_moment(m, 0) - 1) < 1e-10, "total mass at " + at.str());
    for (unsigned k = 1; k <= 5; ++k) {
      const double exact = r_by_delaney(k).evaluate(p, q);
      expect(std::abs(quadrature_moment(m, 2 * k) - exact) < 1e-8, "moment " + std::to_string(2 * k) + " at " + at.str());
    }
    for (double frac : {-0.7, -0.2, 0.0, 0.45, 0.9}) {
      const double x = frac * m.edge();
      const double inverted = -m.cauchy({x, 1e-7}).imag() / std::numbers::pi;
      expect(std::abs(inverted - m.density(x)) < 1e-4, "Stieltjes inversion at " + at.str());
    }
  }
  expect(saw_atoms, "no atomic parameter point");
  const auto b = KestenMeasure::boolean_limit();
  expect(b.atoms().size() == 2, "boolean atoms");
  for (const auto& a : b.atoms()) {
    expect(std::abs(std::abs(a.position) - 1) < 1e-10 && std::abs(a.mass - 0.5) < 1e-10, "boolean atom values");
  }
}

void series() {
  const auto report = series_identity_checks(sequences_by_recursion(7, 3));
  expect(report.checks.size() >= 8, "identity list incomplete");
  if (const auto* f = report.first_failure()) throw Failure{f->name};
}

void vanishing() {
  // pairings with a block spanning two intervals
  const std::vector<Interval> intervals = {{Rational(0), Rational(1)}, {Rational(1), Rational(3)}};
  for (int n : {2, 4, 6, 8}) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<std::size_t> word(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) word[static_cast<std::size_t>(j)] = (mask >> j) & 1U;
      const IntervalSignature sig(intervals, word);
      const FockSpace space = FockSpace::for_signature(sig);
      for (const auto& m : oracle::nc_matchings(n)) {
        bool spans = false;
        for (const auto& b : m) spans = spans || word[static_cast<std::size_t>(b[0] - 1)] != word[static_cast<std::size_t>(b[1] - 1)];
        if (!spans) continue;
        std::vector<OpTag> tags(static_cast<std::size_t>(n));
        for (const auto& b : m) {
          const auto i = static_cast<std::size_t>(b[0] - 1);
          const auto j = static_cast<std::size_t>(b[1] - 1);
          tags[i] = OpTag{OpKind::annihilate, sig.at(i)};
          tags[j] = OpTag{OpKind::create, sig.at(j)};
        }
        expect(word_vacuum_moment(space, tags).is_zero(), "non-adapted pairing on " + sig.to_string());
      }
    }
  }
  // every word of length <= 6 in a, a*, m, n; words that are no c_pi vanish
  const FockSpace space = FockSpace::poisson();
  const OpKind kinds[] = {OpKind::create, OpKind::annihilate, OpKind::gauge_m, OpKind::gauge_n};
  std::size_t vanished = 0;
  for (std::size_t len = 1; len <= 6; ++len) {
    std::size_t total = 1;
    for (std::size_t j = 0; j < len; ++j) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<OpKind> word(len);
      std::size_t c = code;
      for (std::size_t j = 0; j < len; ++j, c /= 4) word[j] = kinds[c % 4];
      // bracket test: reading right to left, a opens, a* closes, m needs an open block
      int depth = 0;
      bool valid = true;
      for (std::size_t j = len; j-- > 0;) {
        if (word[j] == OpKind::create) ++depth;
        if (word[j] == OpKind::annihilate && --depth < 0) valid = false;
        if (word[j] == OpKind::gauge_m && depth == 0) valid = false;
      }
      valid = valid && depth == 0;
      expect(valid == nc_partition_from_word(word).has_value(), "partition detection");
      if (!valid) {
        expect(word_vacuum_moment(space, on_cell(word)).is_zero(), "word without a partition");
        ++vanished;
      }
    }
  }
  expect(vanished > 0, "no words tested");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"moment routes agree for n = 1..6 (enumeration, recursion, closed form, continued fraction, Delaney)", routes},
      {"Catalan, arcsine and boolean specializations for n <= 8", specializations},
      {"the five pairings of six points by the operator and partition routes", six_point_words},
      {"operator and combinatorial mixed moments agree on 30 random signatures and the two-interval example",
       engine_equivalence},
      {"pyramidal factorizations for m <= 5", factorization},
      {"generalized Euler numbers for n <= 6", euler_numbers},
      {"Poisson moments for n <= 7 by operator and partition routes", poisson},
      {"finite-N central limit moments and the 10/N bound", clt},
      {"Kesten measure quadrature, mass, inversion and boolean atoms", measure},
      {"generating-function identities through order 6", series},
      {"vanishing of non-adapted pairings and of non-partition operator words", vanishing},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [description, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "PASS " : "FAIL ") << index << " " << description;
    std::cout << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << seconds << "s)";
    if (!ok) std::cout << ": " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
