#include "kesten/partition.hpp"

#include <algorithm>
#include <numeric>

namespace kesten {

namespace {

std::string block_text(const SetPartition::Block& b) {
  std::string out = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(b[i]);
  }
  return out + "}";
}

// Scans [n] left to right keeping the stack of started-but-unfinished
// blocks. Returns the parent table, or nullopt if two blocks cross.
std::optional<NestingForest> scan_nesting(const SetPartition& pi) {
  NestingForest forest;
  forest.parent.assign(pi.block_count(), std::nullopt);
  std::vector<std::size_t> seen(pi.block_count(), 0);
  std::vector<std::size_t> open;
  for (int x = 1; x <= static_cast<int>(pi.n()); ++x) {
    const std::size_t b = pi.block_of(x);
    const std::size_t size = pi.block(b).size();
    if (seen[b] == 0) {
      if (!open.empty()) forest.parent[b] = open.back();
      if (size > 1) open.push_back(b);
    } else {
      if (open.empty() || open.back() != b) return std::nullopt;
      if (seen[b] + 1 == size) open.pop_back();
    }
    ++seen[b];
  }
  return forest;
}

}  // namespace

SetPartition::SetPartition(std::size_t n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  owner_.assign(n_, n_);
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int x : blocks_[i]) {
      if (x < 1 || static_cast<std::size_t>(x) > n_) {
        throw std::invalid_argument("SetPartition: element " + std::to_string(x) + " outside [n]");
      }
      auto& slot = owner_[static_cast<std::size_t>(x - 1)];
      if (slot != n_) throw std::invalid_argument("SetPartition: element " + std::to_string(x) + " repeated");
      slot = i;
    }
  }
  if (std::find(owner_.begin(), owner_.end(), n_) != owner_.end()) {
    throw std::invalid_argument("SetPartition: blocks do not cover [n]");
  }
}

bool SetPartition::is_pair_partition() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.size() == 2; });
}

std::string SetPartition::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) out += ",";
    out += block_text(blocks_[i]);
  }
  return out + "}";
}

bool is_noncrossing(const SetPartition& pi) { return scan_nesting(pi).has_value(); }

std::size_t NestingForest::inner_count() const {
  return static_cast<std::size_t>(
      std::count_if(parent.begin(), parent.end(), [](const auto& p) { return p.has_value(); }));
}

NestingForest nesting_forest(const SetPartition& pi) {
  auto forest = scan_nesting(pi);
  if (!forest) throw std::invalid_argument("not non-crossing");
  return *std::move(forest);
}

OrderedPartition::OrderedPartition(SetPartition base, std::vector<std::size_t> order)
    : base_(std::move(base)), order_(std::move(order)), forest_(scan_nesting(base_)) {
  if (order_.size() != base_.block_count()) {
    throw std::invalid_argument("OrderedPartition: coloring size differs from block count");
  }
  std::vector<std::size_t> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw std::invalid_argument("OrderedPartition: coloring is not a permutation");
  }
  reset_positions();
}

void OrderedPartition::reset_positions() {
  position_.resize(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
}

const NestingForest& OrderedPartition::forest() const {
  if (!forest_) throw std::invalid_argument("not non-crossing");
  return *forest_;
}

OrderedPartition OrderedPartition::reversed() const {
  std::vector<std::size_t> rev(order_.rbegin(), order_.rend());
  return OrderedPartition(base_, std::move(rev));
}

std::string OrderedPartition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i > 0) out += ",";
    out += block_text(base_.block(order_[i]));
  }
  return out + "]";
}

OrderCounts disorder_order_counts(const OrderedPartition& P) {
  const auto& forest = P.forest();
  OrderCounts counts;
  for (std::size_t b = 0; b < forest.parent.size(); ++b) {
    if (!forest.parent[b]) continue;
    if (P.position_of(b) < P.position_of(*forest.parent[b])) {
      ++counts.disorders;
    } else {
      ++counts.orders;
    }
  }
  return counts;
}

MultiPoly weight(const OrderedPartition& P) {
  const auto c = disorder_order_counts(P);
  return MultiPoly::term(Monomial{c.disorders, c.orders, 0}, Rational(1));
}

}  // namespace kesten
