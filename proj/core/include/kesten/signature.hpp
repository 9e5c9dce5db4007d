#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kesten/partition.hpp"
#include "kesten/rational.hpp"

namespace kesten {

class SignatureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Which interval indicator sits at each position of a word
/// omega(f_1) ... omega(f_n). Supports must be pairwise identical or
/// disjoint (touching endpoints allowed); ids are renumbered so that
/// interval 0 < interval 1 < ... in position on the half-line.
class IntervalSignature {
 public:
  /// `assignment[j]` indexes into `intervals`. Intervals with identical
  /// endpoints are merged. Throws SignatureError on overlapping-but-unequal
  /// supports, empty intervals, negative endpoints or dangling indices.
  IntervalSignature(std::vector<Interval> intervals, std::vector<std::size_t> assignment,
                    std::vector<std::string> names = {});

  /// Parses e.g. signature "f f g g f f" with intervals "g=[0,1],f=[1,2]".
  static IntervalSignature parse(std::string_view signature, std::string_view intervals);

  /// Every position on one interval of the given length.
  static IntervalSignature single(std::size_t n, const Rational& length = Rational(1));

  std::size_t size() const { return assignment_.size(); }
  std::size_t interval_count() const { return intervals_.size(); }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const Interval& interval(std::size_t id) const { return intervals_.at(id); }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  std::size_t at(std::size_t position) const { return assignment_.at(position); }
  const std::string& name(std::size_t id) const { return names_.at(id); }

  /// |{j : f_j on interval i}| for each interval.
  std::vector<std::size_t> multiplicities() const;
  /// b_i = multiplicity / 2, or nullopt if some multiplicity is odd.
  std::optional<std::vector<std::size_t>> half_multiplicities() const;

  std::string to_string() const;

 private:
  std::vector<Interval> intervals_;
  std::vector<std::size_t> assignment_;
  std::vector<std::string> names_;
};

/// (1) positions sharing a block share an interval; (2) a block colored
/// earlier never sits on a strictly later interval than one colored later.
bool is_adapted(const OrderedPartition& P, const IntervalSignature& sig);

/// Condition (1) alone, for an unordered partition.
bool is_adapted(const SetPartition& pi, const IntervalSignature& sig);

}  // namespace kesten
