#include "kesten/fock.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kesten {

FockVector FockVector::vacuum() {
  FockVector v;
  v.add({}, MultiPoly(1L));
  return v;
}

void FockVector::add(const Word& word, const MultiPoly& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly FockVector::vacuum_amplitude() const {
  auto it = terms_.find(Word{});
  return it == terms_.end() ? MultiPoly() : it->second;
}

std::size_t FockVector::max_particles() const {
  std::size_t k = 0;
  for (const auto& [word, c] : terms_) k = std::max(k, word.size());
  return k;
}

void FockVector::truncate(std::size_t particles) {
  std::erase_if(terms_, [&](const auto& term) { return term.first.size() > particles; });
}

FockVector& FockVector::operator+=(const FockVector& rhs) {
  for (const auto& [word, c] : rhs.terms_) add(word, c);
  return *this;
}

FockVector operator*(const MultiPoly& c, const FockVector& v) {
  FockVector out;
  for (const auto& [word, coefficient] : v.terms_) out.add(word, c * coefficient);
  return out;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [word, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (word.empty()) {
      out += "Omega";
      continue;
    }
    for (std::size_t i = 0; i < word.size(); ++i) {
      out += i == 0 ? " " : "*";
      if (word[i].power > 0) out += "x^" + std::to_string(word[i].power);
      out += "chi" + std::to_string(word[i].cell);
    }
  }
  return out;
}

FockSpace::FockSpace(std::vector<Cell> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw std::invalid_argument("Fock space needs at least one cell");
  const bool numeric = std::all_of(cells_.begin(), cells_.end(),
                                   [](const Cell& c) { return c.lo.is_constant() && c.hi.is_constant(); });
  if (!numeric && cells_.size() > 1) {
    throw std::invalid_argument("symbolic cell endpoints are only supported for a single cell");
  }
  rank_.resize(cells_.size());
  std::iota(rank_.begin(), rank_.end(), std::size_t{0});
  if (!numeric) return;

  std::vector<std::pair<Rational, Rational>> bounds;
  for (const auto& c : cells_) {
    bounds.emplace_back(*c.lo.as_constant(), *c.hi.as_constant());
    if (bounds.back().first < 0) throw std::invalid_argument("cell leaves the half-line");
    if (!(bounds.back().first < bounds.back().second)) throw std::invalid_argument("empty cell");
  }
  std::vector<std::size_t> by_lo(cells_.size());
  std::iota(by_lo.begin(), by_lo.end(), std::size_t{0});
  std::sort(by_lo.begin(), by_lo.end(), [&](std::size_t a, std::size_t b) { return bounds[a].first < bounds[b].first; });
  for (std::size_t i = 0; i < by_lo.size(); ++i) {
    rank_[by_lo[i]] = i;
    if (i > 0 && bounds[by_lo[i - 1]].second > bounds[by_lo[i]].first) {
      throw std::invalid_argument("cells must be pairwise disjoint");
    }
  }
}

FockSpace FockSpace::poisson() { return FockSpace({Cell{MultiPoly(), MultiPoly::T()}}); }

FockSpace FockSpace::for_signature(const IntervalSignature& sig) {
  std::vector<Cell> cells;
  for (const auto& I : sig.intervals()) cells.push_back(Cell{MultiPoly(I.lo), MultiPoly(I.hi)});
  return FockSpace(std::move(cells));
}

const Cell& FockSpace::cell(std::size_t id) const {
  check(id);
  return cells_[id];
}

void FockSpace::check(std::size_t J) const {
  if (J >= cells_.size()) throw std::out_of_range("unregistered cell " + std::to_string(J));
}

UniPoly FockSpace::kernel(std::size_t I, std::uint32_t k, const UniPoly& g, std::size_t next) const {
  const Cell& c = cells_[I];
  const UniPoly integrand = UniPoly::x(k) * g;
  const MultiPoly p = MultiPoly::p();
  const MultiPoly q = MultiPoly::q();
  if (next == I) {
    return p * integrate(integrand, Bound::at(c.lo), Bound::variable()) +
           q * integrate(integrand, Bound::variable(), Bound::at(c.hi));
  }
  const MultiPoly total = integrate_definite(integrand, c.lo, c.hi);
  return UniPoly(rank_[I] < rank_[next] ? p * total : q * total);
}

namespace {

// Multiplies the factor at `index` of `word` by h(x), expanding into words.
void add_times_factor(FockVector& out, const Word& word, std::size_t index, const UniPoly& h,
                      const MultiPoly& coefficient) {
  for (std::size_t j = 0; j < h.coefficients().size(); ++j) {
    const MultiPoly& hj = h.coefficients()[j];
    if (hj.is_zero()) continue;
    Word w = word;
    w[index].power += static_cast<std::uint32_t>(j);
    out.add(w, coefficient * hj);
  }
}

}  // namespace

FockVector FockSpace::create(std::size_t J, const UniPoly& g, const FockVector& v) const {
  check(J);
  FockVector out;
  for (const auto& [word, c] : v.terms()) {
    Word w;
    w.reserve(word.size() + 1);
    w.push_back(Factor{static_cast<std::uint32_t>(J), 0});
    w.insert(w.end(), word.begin(), word.end());
    add_times_factor(out, w, 0, g, c);
  }
  return out;
}

FockVector FockSpace::annihilate(std::size_t J, const UniPoly& g, const FockVector& v) const {
  check(J);
  FockVector out;
  for (const auto& [word, c] : v.terms()) {
    if (word.empty() || word.front().cell != J) continue;
    const Factor first = word.front();
    Word rest(word.begin() + 1, word.end());
    if (rest.empty()) {
      // coupling to the vacuum is w(s, 0) = 1
      const Cell& cell = cells_[J];
      out.add(rest, c * integrate_definite(UniPoly::x(first.power) * g, cell.lo, cell.hi));
      continue;
    }
    add_times_factor(out, rest, 0, kernel(J, first.power, g, rest.front().cell), c);
  }
  return out;
}

FockVector FockSpace::gauge_m(std::size_t J, const UniPoly& h, const MultiPoly& vacuum_scalar,
                              const FockVector& v) const {
  check(J);
  FockVector out;
  for (const auto& [word, c] : v.terms()) {
    if (word.empty()) {
      out.add(word, c * vacuum_scalar);
    } else if (word.front().cell == J) {
      add_times_factor(out, word, 0, h, c);
    }
  }
  return out;
}

FockVector FockSpace::gauge_n(std::size_t J, const FockVector& v) const {
  check(J);
  const Cell& cell = cells_[J];
  const MultiPoly p = MultiPoly::p();
  const MultiPoly q = MultiPoly::q();
  const MultiPoly length = cell.hi - cell.lo;
  // W(u) = p (u - lo) + q (hi - u) on J itself; p|J| or q|J| on other cells.
  const UniPoly inside({q * cell.hi - p * cell.lo, p - q});
  FockVector out;
  for (const auto& [word, c] : v.terms()) {
    if (word.empty()) {
      out.add(word, c * length);
      continue;
    }
    const std::size_t I = word.front().cell;
    if (I == J) {
      add_times_factor(out, word, 0, inside, c);
    } else {
      out.add(word, c * (rank_[J] < rank_[I] ? p : q) * length);
    }
  }
  return out;
}

FockVector FockSpace::position(std::size_t J, const FockVector& v) const { return create(J, v) + annihilate(J, v); }

MultiPoly position_moment(const IntervalSignature& sig, bool override_limits) {
  constexpr std::size_t kMaxWord = 10;
  if (!override_limits && sig.size() > kMaxWord) {
    throw LimitError("position_moment limited to n <= " + std::to_string(kMaxWord) +
                     " (pass an explicit override to go further)");
  }
  const FockSpace space = FockSpace::for_signature(sig);
  FockVector v = FockVector::vacuum();
  for (std::size_t j = sig.size(); j-- > 0;) {
    v = space.position(sig.at(j), v);
    v.truncate(j);  // j operators remain, each removes at most one factor
  }
  return v.vacuum_amplitude();
}

MultiPoly poisson_moment_operator(unsigned n, bool override_limits) {
  constexpr unsigned kMaxPower = 8;
  if (!override_limits && n > kMaxPower) {
    throw LimitError("Poisson operator moments limited to n <= " + std::to_string(kMaxPower) +
                     " (pass an explicit override to go further)");
  }
  const FockSpace space = FockSpace::poisson();
  const UniPoly one(MultiPoly(1L));
  FockVector v = FockVector::vacuum();
  for (unsigned j = n; j-- > 0;) {
    FockVector next = space.create(0, v);
    next += space.annihilate(0, v);
    next += space.gauge_n(0, v);
    next += space.gauge_m(0, one, MultiPoly(), v);
    next.truncate(j);
    v = std::move(next);
  }
  return v.vacuum_amplitude();
}

std::string op_symbol(OpKind kind) {
  switch (kind) {
    case OpKind::create:
      return "a";
    case OpKind::annihilate:
      return "a*";
    case OpKind::gauge_m:
      return "m";
    case OpKind::gauge_n:
      return "n";
  }
  return "?";
}

MultiPoly word_vacuum_moment(const FockSpace& space, std::span<const OpTag> word) {
  const UniPoly one(MultiPoly(1L));
  FockVector v = FockVector::vacuum();
  for (std::size_t j = word.size(); j-- > 0;) {
    const OpTag& op = word[j];
    switch (op.kind) {
      case OpKind::create:
        v = space.create(op.cell, v);
        break;
      case OpKind::annihilate:
        v = space.annihilate(op.cell, v);
        break;
      case OpKind::gauge_m:
        v = space.gauge_m(op.cell, one, MultiPoly(), v);
        break;
      case OpKind::gauge_n:
        v = space.gauge_n(op.cell, v);
        break;
    }
    if (v.is_zero()) return MultiPoly();
  }
  return v.vacuum_amplitude();
}

std::optional<SetPartition> nc_partition_from_word(std::span<const OpKind> word) {
  std::vector<SetPartition::Block> blocks;
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int element = static_cast<int>(i + 1);
    switch (word[i]) {
      case OpKind::annihilate:
        open.push_back(blocks.size());
        blocks.push_back({element});
        break;
      case OpKind::gauge_m:
        if (open.empty()) return std::nullopt;
        blocks[open.back()].push_back(element);
        break;
      case OpKind::create:
        if (open.empty()) return std::nullopt;
        blocks[open.back()].push_back(element);
        open.pop_back();
        break;
      case OpKind::gauge_n:
        blocks.push_back({element});
        break;
    }
  }
  if (!open.empty()) return std::nullopt;
  if (word.empty()) return std::nullopt;
  return SetPartition(word.size(), std::move(blocks));
}

}  // namespace kesten
