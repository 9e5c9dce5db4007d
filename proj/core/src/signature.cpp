#include "kesten/signature.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace kesten {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string interval_text(const Interval& I) { return "[" + to_string(I.lo) + "," + to_string(I.hi) + "]"; }

}  // namespace

IntervalSignature::IntervalSignature(std::vector<Interval> intervals, std::vector<std::size_t> assignment,
                                     std::vector<std::string> names) {
  if (names.empty()) {
    for (std::size_t i = 0; i < intervals.size(); ++i) names.push_back("I" + std::to_string(i + 1));
  }
  if (names.size() != intervals.size()) throw SignatureError("interval names do not match intervals");
  for (const auto& I : intervals) {
    if (I.lo < 0) throw SignatureError("interval " + interval_text(I) + " leaves the half-line");
    if (!(I.lo < I.hi)) throw SignatureError("interval " + interval_text(I) + " is empty");
  }
  for (std::size_t j : assignment) {
    if (j >= intervals.size()) throw SignatureError("signature refers to an undefined interval");
  }
  for (std::size_t a = 0; a < intervals.size(); ++a) {
    for (std::size_t b = a + 1; b < intervals.size(); ++b) {
      const auto& I = intervals[a];
      const auto& J = intervals[b];
      if (I == J) continue;
      if (I.hi <= J.lo || J.hi <= I.lo) continue;
      throw SignatureError("intervals " + interval_text(I) + " and " + interval_text(J) +
                           " overlap without being equal");
    }
  }

  // Distinct supports in increasing position; identical ones collapse.
  std::vector<std::size_t> idx(intervals.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return intervals[a].lo < intervals[b].lo; });
  std::vector<std::size_t> remap(intervals.size());
  for (std::size_t k : idx) {
    if (!intervals_.empty() && intervals_.back() == intervals[k]) {
      names_.back() += "=" + names[k];
    } else {
      intervals_.push_back(intervals[k]);
      names_.push_back(names[k]);
    }
    remap[k] = intervals_.size() - 1;
  }
  assignment_.reserve(assignment.size());
  for (std::size_t j : assignment) assignment_.push_back(remap[j]);
}

IntervalSignature IntervalSignature::parse(std::string_view signature, std::string_view intervals) {
  std::vector<Interval> list;
  std::vector<std::string> names;
  std::map<std::string, std::size_t, std::less<>> by_name;

  std::string_view rest = intervals;
  while (!trim(rest).empty()) {
    rest = trim(rest);
    auto eq = rest.find('=');
    auto close = rest.find(']');
    if (eq == std::string_view::npos || close == std::string_view::npos || close < eq) {
      throw SignatureError("malformed interval list '" + std::string(intervals) + "'");
    }
    std::string name(trim(rest.substr(0, eq)));
    std::string_view body = trim(rest.substr(eq + 1, close - eq));
    if (name.empty() || body.size() < 2 || body.front() != '[' || body.back() != ']') {
      throw SignatureError("malformed interval '" + std::string(rest.substr(0, close + 1)) + "'");
    }
    body = body.substr(1, body.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) throw SignatureError("interval needs two endpoints: " + name);
    Interval I;
    try {
      I.lo = parse_rational(body.substr(0, comma));
      I.hi = parse_rational(body.substr(comma + 1));
    } catch (const ParseError& e) {
      throw SignatureError("interval " + name + ": " + e.what());
    }
    if (by_name.count(name)) throw SignatureError("interval " + name + " defined twice");
    by_name.emplace(name, list.size());
    list.push_back(I);
    names.push_back(name);
    rest = rest.substr(close + 1);
    rest = trim(rest);
    if (!rest.empty()) {
      if (rest.front() != ',') throw SignatureError("expected ',' between intervals");
      rest.remove_prefix(1);
    }
  }

  std::vector<std::size_t> assignment;
  std::string_view s = signature;
  while (true) {
    s = trim(s);
    if (s.empty()) break;
    auto end = s.find_first_of(" \t,");
    std::string token(s.substr(0, end));
    auto it = by_name.find(token);
    if (it == by_name.end()) throw SignatureError("signature uses undefined interval '" + token + "'");
    assignment.push_back(it->second);
    if (end == std::string_view::npos) break;
    s = s.substr(end + 1);
  }
  if (assignment.empty()) throw SignatureError("empty signature");
  return IntervalSignature(std::move(list), std::move(assignment), std::move(names));
}

IntervalSignature IntervalSignature::single(std::size_t n, const Rational& length) {
  return IntervalSignature({Interval{Rational(0), length}}, std::vector<std::size_t>(n, 0), {"f"});
}

std::vector<std::size_t> IntervalSignature::multiplicities() const {
  std::vector<std::size_t> m(intervals_.size(), 0);
  for (std::size_t j : assignment_) ++m[j];
  return m;
}

std::optional<std::vector<std::size_t>> IntervalSignature::half_multiplicities() const {
  auto m = multiplicities();
  for (auto& x : m) {
    if (x % 2 != 0) return std::nullopt;
    x /= 2;
  }
  return m;
}

std::string IntervalSignature::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < assignment_.size(); ++j) {
    if (j > 0) out += " ";
    out += names_[assignment_[j]];
  }
  out += " | ";
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i > 0) out += ",";
    out += names_[i] + "=" + interval_text(intervals_[i]);
  }
  return out;
}

bool is_adapted(const SetPartition& pi, const IntervalSignature& sig) {
  if (pi.n() != sig.size()) throw std::invalid_argument("is_adapted: signature length differs from n");
  for (const auto& block : pi.blocks()) {
    const std::size_t id = sig.at(static_cast<std::size_t>(block.front() - 1));
    for (int x : block) {
      if (sig.at(static_cast<std::size_t>(x - 1)) != id) return false;
    }
  }
  return true;
}

bool is_adapted(const OrderedPartition& P, const IntervalSignature& sig) {
  if (!is_adapted(P.base(), sig)) return false;
  std::size_t highest = 0;
  for (std::size_t i = 0; i < P.block_count(); ++i) {
    const std::size_t id = sig.at(static_cast<std::size_t>(P.at_position(i).front() - 1));
    if (id < highest) return false;
    highest = id;
  }
  return true;
}

}  // namespace kesten
