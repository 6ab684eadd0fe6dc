#include "mjdt/jdt.hpp"

#include <limits>

namespace mjdt {

namespace {

using IndexMoves = std::vector<std::pair<std::size_t, std::size_t>>;

void require_same_shape(const Filling& a, const Filling& b) {
  if (!(a.shape() == b.shape())) {
    throw Error(ErrorCode::ShapeMismatch,
                "fillings have shapes " + a.shape().spec() + " and " + b.shape().spec());
  }
}

void require_standard(const Filling& f, const char* role) {
  if (!is_standard(f)) {
    throw Error(ErrorCode::NotStandard, std::string(role) + " is not a standard filling");
  }
}

// Backward slide confined to `mask`; returns the landing index.
std::size_t backward_slide(const Shape& shape, std::span<int> entries, std::size_t start,
                           const std::vector<bool>& mask, IndexMoves* moves) {
  std::size_t pos = start;
  for (;;) {
    std::ptrdiff_t best = kNoCell;
    int best_value = 0;
    for (Direction d : {Direction::Left, Direction::Above}) {
      const auto nb = shape.neighbor_index(pos, d);
      if (nb == kNoCell || !mask[static_cast<std::size_t>(nb)]) continue;
      const int v = entries[static_cast<std::size_t>(nb)];
      if (best == kNoCell || v > best_value) {
        best = nb;
        best_value = v;
      }
    }
    if (best == kNoCell) return pos;
    const auto next = static_cast<std::size_t>(best);
    std::swap(entries[pos], entries[next]);
    if (moves) moves->emplace_back(pos, next);
    pos = next;
  }
}

Transcript to_transcript(const Shape& shape, const IndexMoves& moves) {
  Transcript out;
  out.reserve(moves.size());
  for (const auto& [from, to] : moves) out.push_back({shape.cell(from), shape.cell(to)});
  return out;
}

std::vector<int> copy_entries(const Filling& f) {
  return {f.entries().begin(), f.entries().end()};
}

void apply_moves(Filling& f, const IndexMoves& moves) {
  for (const auto& [from, to] : moves) f.swap_indices(from, to);
}

}  // namespace

namespace detail {

std::size_t forward_slide(const Shape& shape, std::span<int> entries, std::size_t start,
                          IndexMoves* moves) {
  constexpr int kInfinity = std::numeric_limits<int>::max();
  std::size_t pos = start;
  for (;;) {
    const auto right = shape.neighbor_index(pos, Direction::Right);
    const auto below = shape.neighbor_index(pos, Direction::Below);
    const int a = right == kNoCell ? kInfinity : entries[static_cast<std::size_t>(right)];
    const int b = below == kNoCell ? kInfinity : entries[static_cast<std::size_t>(below)];
    const int e = entries[pos];
    // Entries are distinct, so a == b only when both are infinity.
    if (e < a && e < b) return pos;
    const auto next = static_cast<std::size_t>(a < b ? right : below);
    std::swap(entries[pos], entries[next]);
    if (moves) moves->emplace_back(pos, next);
    pos = next;
  }
}

std::vector<std::size_t> processing_order(const Filling& s) {
  std::vector<std::size_t> order(s.size());
  for (std::size_t idx = 0; idx < s.size(); ++idx) {
    order[s.size() - static_cast<std::size_t>(s.at_index(idx))] = idx;
  }
  return order;
}

void modified_jdt_in_place(const Shape& shape, std::span<int> entries,
                           std::span<const std::size_t> order) {
  for (std::size_t idx : order) forward_slide(shape, entries, idx);
}

}  // namespace detail

Filling replay(const Filling& f, const Transcript& transcript) {
  Filling out = f;
  for (const Move& m : transcript) {
    const std::size_t a = out.shape().require_index(m.from);
    const std::size_t b = out.shape().require_index(m.to);
    out.swap_indices(a, b);
  }
  return out;
}

JdtResult forward_jdt(const Filling& t, Cell start) {
  const Shape& shape = t.shape();
  const std::size_t idx = shape.require_index(start);
  std::vector<int> entries = copy_entries(t);
  IndexMoves moves;
  const std::size_t landing = detail::forward_slide(shape, entries, idx, &moves);
  return {Filling(shape, std::move(entries)), to_transcript(shape, moves), shape.cell(landing)};
}

JdtResult backward_jdt(const Filling& t, Cell start, const Mask& mask) {
  const Shape& shape = t.shape();
  if (!(mask.shape() == shape)) {
    throw Error(ErrorCode::ShapeMismatch, "mask shape differs from filling shape");
  }
  const std::size_t idx = shape.require_index(start);
  if (!mask.contains_index(idx)) {
    throw Error(ErrorCode::NotInMask, to_string(start) + " is not in the mask");
  }
  std::vector<bool> included(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) included[i] = mask.contains_index(i);
  std::vector<int> entries = copy_entries(t);
  IndexMoves moves;
  const std::size_t landing = backward_slide(shape, entries, idx, included, &moves);
  return {Filling(shape, std::move(entries)), to_transcript(shape, moves), shape.cell(landing)};
}

Filling modified_jdt(const Filling& t, const Filling& s, const MjObserver& observer) {
  require_same_shape(t, s);
  require_standard(s, "order tableau");
  const Shape& shape = t.shape();
  std::vector<int> entries = copy_entries(t);
  const auto order = detail::processing_order(s);
  if (!observer) {
    detail::modified_jdt_in_place(shape, entries, order);
    return Filling(shape, std::move(entries));
  }
  int label = static_cast<int>(s.size());
  for (std::size_t idx : order) {
    const std::size_t landing = detail::forward_slide(shape, entries, idx);
    observer(label--, Filling(shape, entries), landing != idx);
  }
  return Filling(shape, std::move(entries));
}

namespace {

PairedState step_up_impl(int label, PairedState state, const PairObserver* observer) {
  require_same_shape(state.first, state.second);
  const Shape& shape = state.first.shape();
  const std::size_t start = state.second.index_of_entry(label);
  std::vector<int> entries = copy_entries(state.first);
  IndexMoves moves;
  detail::forward_slide(shape, entries, start, &moves);
  if (observer && observer->after_move) {
    // Apply each transposition to both fillings so observers see matched pairs.
    for (const auto& [from, to] : moves) {
      state.first.swap_indices(from, to);
      state.second.swap_indices(from, to);
      observer->after_move(state);
    }
  } else {
    state.first = Filling(shape, std::move(entries));
    apply_moves(state.second, moves);
  }
  if (observer && observer->after_step) observer->after_step(label, state, !moves.empty());
  return state;
}

PairedState step_down_impl(int label, PairedState state, const PairObserver* observer) {
  require_same_shape(state.first, state.second);
  const Shape& shape = state.first.shape();
  const std::size_t start = state.first.index_of_entry(label);
  std::vector<bool> mask(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) mask[i] = state.first.at_index(i) >= label;
  std::vector<int> entries = copy_entries(state.second);
  IndexMoves moves;
  backward_slide(shape, entries, start, mask, &moves);
  if (observer && observer->after_move) {
    for (const auto& [from, to] : moves) {
      state.first.swap_indices(from, to);
      state.second.swap_indices(from, to);
      observer->after_move(state);
    }
  } else {
    state.second = Filling(shape, std::move(entries));
    apply_moves(state.first, moves);
  }
  if (observer && observer->after_step) observer->after_step(label, state, !moves.empty());
  return state;
}

}  // namespace

PairedState step_up(int label, const PairedState& state) {
  return step_up_impl(label, state, nullptr);
}

PairedState step_down(int label, const PairedState& state) {
  return step_down_impl(label, state, nullptr);
}

PairedState fj(const Filling& t, const Filling& s, const PairObserver& observer) {
  require_same_shape(t, s);
  require_standard(s, "second filling");
  PairedState state{t, s};
  for (int label = static_cast<int>(s.size()); label >= 1; --label) {
    state = step_up_impl(label, std::move(state), &observer);
  }
  return state.switched();
}

PairedState bj(const Filling& s_prime, const Filling& t_prime, const PairObserver& observer) {
  require_same_shape(s_prime, t_prime);
  require_standard(t_prime, "second filling");
  PairedState state{s_prime, t_prime};
  const int n = static_cast<int>(s_prime.size());
  for (int label = 1; label <= n; ++label) {
    state = step_down_impl(label, std::move(state), &observer);
  }
  return state.switched();
}

}  // namespace mjdt
