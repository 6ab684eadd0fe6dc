#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mjdt/tableau.hpp"

namespace mjdt {

// One adjacent transposition: the moving entry travels from `from` to `to`.
struct Move {
  Cell from;
  Cell to;

  friend bool operator==(const Move&, const Move&) = default;
};

using Transcript = std::vector<Move>;

// Applies every move of `transcript` to `f` in order.
Filling replay(const Filling& f, const Transcript& transcript);

struct JdtResult {
  Filling filling;
  Transcript transcript;
  Cell landing;
};

// Slides the entry at `start` right/down, exchanging it with the smaller of
// its right and lower neighbours (missing neighbours count as infinity)
// until it is smaller than both.
JdtResult forward_jdt(const Filling& t, Cell start);

// Slides the entry at `start` left/up within `mask`, exchanging it with the
// larger of its left and upper neighbours (missing neighbours count as 0)
// until it has neither.
JdtResult backward_jdt(const Filling& t, Cell start, const Mask& mask);

// Called after forward jdt for `label` finished; `moved` is false when the
// entry was already stable.
using MjObserver = std::function<void(int label, const Filling& current, bool moved)>;

// Forward jdt on the entries of `t` in the order of decreasing labels of the
// standard filling `s`.
Filling modified_jdt(const Filling& t, const Filling& s, const MjObserver& observer = {});

struct PairedState {
  Filling first;
  Filling second;

  PairedState switched() const { return {second, first}; }

  friend bool operator==(const PairedState&, const PairedState&) = default;
};

// Forward jdt on `first`, starting from the cell holding `label` in
// `second`; the transcript is replayed onto `second`.
PairedState step_up(int label, const PairedState& state);

// Backward jdt on `second` starting from the cell holding `label` in
// `first`, confined to the cells whose `first` entry is >= label; the
// transcript is replayed onto `first`.
PairedState step_down(int label, const PairedState& state);

struct PairObserver {
  // After each elementary step with its label.
  std::function<void(int label, const PairedState& state, bool moved)> after_step;
  // After each single transposition applied to both fillings.
  std::function<void(const PairedState& state)> after_move;
};

// FJ(T,S): apply step_up for labels n..1, then switch. Returns (S', T') with
// T' = modified_jdt(t, s).
PairedState fj(const Filling& t, const Filling& s, const PairObserver& observer = {});

// BJ(S',T'): apply step_down for labels 1..n, then switch. Returns (T, S).
PairedState bj(const Filling& s_prime, const Filling& t_prime,
               const PairObserver& observer = {});

namespace detail {

// Index-level forward slide used by the bulk enumerations. Returns the
// landing index. When `moves` is non-null every (from, to) swap is appended.
std::size_t forward_slide(const Shape& shape, std::span<int> entries, std::size_t start,
                          std::vector<std::pair<std::size_t, std::size_t>>* moves = nullptr);

// Cell indices of labels n, n-1, ..., 1 in the standard filling `s`.
std::vector<std::size_t> processing_order(const Filling& s);

// In-place modified jdt driven by a precomputed processing order.
void modified_jdt_in_place(const Shape& shape, std::span<int> entries,
                           std::span<const std::size_t> order);

}  // namespace detail

}  // namespace mjdt
