#include <algorithm>
#include <numeric>

#include "kesten/partition.hpp"

namespace kesten {

// Steps one OrderedPartition through the colorings of its base in place, so
// the 2M-element streams at the limit do not allocate per element.
class OrderedCursor {
 public:
  explicit OrderedCursor(OrderedPartition& P) : P_(P) {}
  bool next() {
    bool more = std::next_permutation(P_.order_.begin(), P_.order_.end());
    P_.reset_positions();
    return more;
  }

 private:
  OrderedPartition& P_;
};

namespace {

void check_limits(std::size_t n, bool pair_only, bool override_limits) {
  if (n == 0) throw std::invalid_argument("enumeration requires n >= 1");
  if (override_limits) return;
  if (pair_only && n > kMaxPairPoints) {
    throw LimitError("pair-partition enumeration limited to n <= " + std::to_string(kMaxPairPoints) +
                     " (pass an explicit override to go further)");
  }
  if (!pair_only && n > kMaxPoints) {
    throw LimitError("partition enumeration limited to n <= " + std::to_string(kMaxPoints) +
                     " (pass an explicit override to go further)");
  }
}

// Restricted-growth-string generator. `open` holds the labels of blocks
// that may still receive elements, bottom to top; they are increasing, so
// trying them bottom-up and then a fresh block gives lexicographic order.
class NoncrossingGenerator {
 public:
  NoncrossingGenerator(std::size_t n, bool pair_only, const std::function<void(const SetPartition&)>& visit)
      : n_(n), pair_only_(pair_only), visit_(visit), label_(n), size_() {}

  void run() { place(0); }

 private:
  void place(std::size_t j) {
    if (j == n_) {
      emit();
      return;
    }
    if (pair_only_) {
      // Only the most recent unmatched opener can be closed.
      if (!open_.empty()) {
        const std::size_t b = open_.back();
        label_[j] = b;
        ++size_[b];
        open_.pop_back();
        place(j + 1);
        open_.push_back(b);
        --size_[b];
      }
      if (open_.size() + 1 <= n_ - j - 1) {
        open_block(j);
      }
      return;
    }
    for (std::size_t s = 0; s < open_.size(); ++s) {
      const std::size_t b = open_[s];
      std::vector<std::size_t> popped(open_.begin() + static_cast<std::ptrdiff_t>(s) + 1, open_.end());
      open_.resize(s + 1);
      label_[j] = b;
      ++size_[b];
      place(j + 1);
      --size_[b];
      open_.insert(open_.end(), popped.begin(), popped.end());
    }
    open_block(j);
  }

  void open_block(std::size_t j) {
    const std::size_t b = size_.size();
    size_.push_back(1);
    label_[j] = b;
    open_.push_back(b);
    place(j + 1);
    open_.pop_back();
    size_.pop_back();
  }

  void emit() {
    std::vector<SetPartition::Block> blocks(size_.size());
    for (std::size_t j = 0; j < n_; ++j) blocks[label_[j]].push_back(static_cast<int>(j + 1));
    visit_(SetPartition(n_, std::move(blocks)));
  }

  std::size_t n_;
  bool pair_only_;
  const std::function<void(const SetPartition&)>& visit_;
  std::vector<std::size_t> label_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> open_;
};

}  // namespace

void for_each_noncrossing(std::size_t n, bool pair_only, const std::function<void(const SetPartition&)>& visit,
                          bool override_limits) {
  check_limits(n, pair_only, override_limits);
  if (pair_only && n % 2 != 0) return;
  NoncrossingGenerator(n, pair_only, visit).run();
}

void for_each_ordered(std::size_t n, const EnumerationOptions& options,
                      const std::function<void(const OrderedPartition&)>& visit) {
  check_limits(n, options.pair_only, options.override_limits);
  if (options.covered_only && options.outer_blocks && *options.outer_blocks != 1) return;
  for_each_noncrossing(
      n, options.pair_only,
      [&](const SetPartition& pi) {
        if (options.covered_only && !pi.is_covered()) return;
        std::vector<std::size_t> order(pi.block_count());
        std::iota(order.begin(), order.end(), std::size_t{0});
        OrderedPartition P(pi, std::move(order));
        if (options.outer_blocks && P.forest().outer_count() != *options.outer_blocks) return;
        OrderedCursor cursor(P);
        do {
          visit(P);
        } while (cursor.next());
      },
      options.override_limits);
}

std::vector<SetPartition> enumerate_nc(std::size_t n, bool pair_only, bool override_limits) {
  std::vector<SetPartition> out;
  for_each_noncrossing(n, pair_only, [&](const SetPartition& pi) { out.push_back(pi); }, override_limits);
  return out;
}

}  // namespace kesten
