#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kesten/multipoly.hpp"

namespace kesten {

/// Raised when an enumeration would exceed the desk-scale limits and the
/// caller has not explicitly overridden them.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest pair-partition ground set enumerated without an override (|ONC^2_14| ~ 2.16M).
inline constexpr std::size_t kMaxPairPoints = 14;
/// Largest ground set for general (not pair-only) enumeration.
inline constexpr std::size_t kMaxPoints = 8;

/// A set partition of [n] = {1, ..., n}. Blocks are stored sorted, and the
/// block list is sorted by minimum element.
class SetPartition {
 public:
  using Block = std::vector<int>;

  /// Validates (disjoint, nonempty, union = [n]) and canonicalizes.
  SetPartition(std::size_t n, std::vector<Block> blocks);

  std::size_t n() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_.at(i); }
  /// Index of the block containing `element` (1-based element).
  std::size_t block_of(int element) const { return owner_.at(static_cast<std::size_t>(element - 1)); }
  bool is_pair_partition() const;
  /// 1 and n lie in the same block.
  bool is_covered() const { return block_of(1) == block_of(static_cast<int>(n_)); }

  std::string to_string() const;  // "{{1,4},{2,3}}"

  friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::size_t n_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> owner_;
};

/// No two blocks interleave as k < m < k' < m'.
bool is_noncrossing(const SetPartition& pi);

/// Immediate-enclosure structure of a non-crossing partition: parent[i] is
/// the neighboring outer block of block i, or nullopt when block i is outer.
struct NestingForest {
  std::vector<std::optional<std::size_t>> parent;

  std::size_t inner_count() const;
  std::size_t outer_count() const { return parent.size() - inner_count(); }
};

/// Throws std::invalid_argument("not non-crossing") on crossing input.
NestingForest nesting_forest(const SetPartition& pi);

/// A set partition together with a linear order (coloring) of its blocks,
/// identified with the sequence (P_1, ..., P_k) where P_i is the block
/// colored i.
class OrderedPartition {
 public:
  /// order[i] is the index (into base.blocks()) of the block colored i+1.
  OrderedPartition(SetPartition base, std::vector<std::size_t> order);

  const SetPartition& base() const { return base_; }
  std::span<const std::size_t> order() const { return order_; }
  /// 0-based color position of a base block.
  std::size_t position_of(std::size_t block) const { return position_[block]; }
  std::size_t block_count() const { return order_.size(); }
  const SetPartition::Block& at_position(std::size_t i) const { return base_.block(order_[i]); }

  bool is_noncrossing() const { return forest_.has_value(); }
  /// Throws std::invalid_argument for crossing bases.
  const NestingForest& forest() const;

  /// Same base, coloring reversed.
  OrderedPartition reversed() const;

  /// Blocks in coloring order, e.g. "[{2,3},{1,4}]".
  std::string to_string() const;

 private:
  friend class OrderedCursor;
  void reset_positions();

  SetPartition base_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  std::optional<NestingForest> forest_;
};

struct OrderCounts {
  unsigned disorders = 0;  // e(P): neighboring pairs whose inner block is colored first
  unsigned orders = 0;     // e'(P): neighboring pairs whose outer block is colored first
  friend bool operator==(const OrderCounts&, const OrderCounts&) = default;
};

OrderCounts disorder_order_counts(const OrderedPartition& P);

/// w(P) = p^e(P) q^e'(P).
MultiPoly weight(const OrderedPartition& P);

struct EnumerationOptions {
  bool pair_only = false;
  bool covered_only = false;
  std::optional<std::size_t> outer_blocks;
  bool override_limits = false;
};

/// Streams every non-crossing (pair) partition of [n] exactly once, in
/// lexicographic order of restricted growth strings. Odd n with pair_only
/// yields nothing.
void for_each_noncrossing(std::size_t n, bool pair_only,
                          const std::function<void(const SetPartition&)>& visit,
                          bool override_limits = false);

/// Streams every ordered non-crossing partition matching the filters.
/// Colorings of a base are visited in lexicographic permutation order.
void for_each_ordered(std::size_t n, const EnumerationOptions& options,
                      const std::function<void(const OrderedPartition&)>& visit);

std::vector<SetPartition> enumerate_nc(std::size_t n, bool pair_only, bool override_limits = false);

}  // namespace kesten
