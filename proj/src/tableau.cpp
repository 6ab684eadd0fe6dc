#include "mjdt/tableau.hpp"

#include <algorithm>
#include <numeric>

namespace mjdt {

namespace {

bool is_bijection(std::span<const int> word) {
  std::vector<bool> seen(word.size() + 1, false);
  for (int v : word) {
    if (v < 1 || static_cast<std::size_t>(v) > word.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (!is_bijection(word_)) {
    throw Error(ErrorCode::InvalidPermutation, "word is not a permutation of 1..n");
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> word(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    word[static_cast<std::size_t>(p.word()[i] - 1)] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(word));
}

Filling::Filling(Shape shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (entries_.size() != shape_.size()) {
    throw Error(ErrorCode::InvalidFilling, "expected " + std::to_string(shape_.size()) +
                                               " entries, got " +
                                               std::to_string(entries_.size()));
  }
  if (!is_bijection(entries_)) {
    throw Error(ErrorCode::InvalidFilling, "entries are not a bijection onto 1..n");
  }
}

std::size_t Filling::index_of_entry(int entry) const {
  const auto it = std::find(entries_.begin(), entries_.end(), entry);
  if (it == entries_.end()) {
    throw Error(ErrorCode::NotFound, "entry " + std::to_string(entry) + " not present");
  }
  return static_cast<std::size_t>(it - entries_.begin());
}

bool is_standard(const Filling& f) {
  const Shape& shape = f.shape();
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (Direction d : {Direction::Right, Direction::Below}) {
      const auto n = shape.neighbor_index(i, d);
      if (n != kNoCell && f.at_index(i) > f.at_index(static_cast<std::size_t>(n))) return false;
    }
  }
  return true;
}

std::vector<Filling> enumerate_standard(const Shape& shape, bool force_large) {
  const std::size_t n = shape.size();
  if (n > kEnumerationCap && !force_large) {
    throw Error(ErrorCode::TooLarge, "shape has " + std::to_string(n) +
                                         " cells; enumeration cap is " +
                                         std::to_string(kEnumerationCap));
  }

  std::vector<int> entries(n, 0);
  std::vector<Filling> out;

  // A cell may receive the next entry once its left and upper member
  // neighbours are filled.
  auto ready = [&](std::size_t idx) {
    if (entries[idx] != 0) return false;
    for (Direction d : {Direction::Left, Direction::Above}) {
      const auto nb = shape.neighbor_index(idx, d);
      if (nb != kNoCell && entries[static_cast<std::size_t>(nb)] == 0) return false;
    }
    return true;
  };

  auto place = [&](auto&& self, int next) -> void {
    if (static_cast<std::size_t>(next) > n) {
      out.emplace_back(shape, entries);
      return;
    }
    for (std::size_t idx = 0; idx < n; ++idx) {
      if (!ready(idx)) continue;
      entries[idx] = next;
      self(self, next + 1);
      entries[idx] = 0;
    }
  };
  place(place, 1);

  std::sort(out.begin(), out.end(), [](const Filling& a, const Filling& b) {
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                        b.entries().begin(), b.entries().end());
  });
  return out;
}

Permutation reading_word(const Filling& f) {
  return Permutation(std::vector<int>(f.entries().begin(), f.entries().end()));
}

std::size_t lex_index(const Filling& f, std::span<const Filling> universe) {
  const auto less = [](const Filling& a, const Filling& b) {
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                        b.entries().begin(), b.entries().end());
  };
  const auto it = std::lower_bound(universe.begin(), universe.end(), f, less);
  if (it == universe.end() || !(*it == f)) {
    throw Error(ErrorCode::NotFound, "filling is not in the tableau universe");
  }
  return static_cast<std::size_t>(it - universe.begin());
}

Filling apply_permutation(const Filling& f, const Permutation& p) {
  if (p.size() != f.size()) {
    throw Error(ErrorCode::ShapeMismatch, "permutation size does not match filling size");
  }
  std::vector<int> entries(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) entries[i] = p(f.at_index(i));
  return Filling(f.shape(), std::move(entries));
}

Filling canonical_order(const Shape& shape, CanonicalOrder kind) {
  std::vector<int> entries(shape.size(), 0);
  switch (kind) {
    case CanonicalOrder::NpsColumn: {
      if (shape.shifted()) {
        throw Error(ErrorCode::Unsupported, "column order is defined for unshifted shapes");
      }
      std::vector<std::size_t> order(shape.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Cell ca = shape.cell(a);
        const Cell cb = shape.cell(b);
        return ca.col != cb.col ? ca.col < cb.col : ca.row < cb.row;
      });
      for (std::size_t k = 0; k < order.size(); ++k) entries[order[k]] = static_cast<int>(k + 1);
      break;
    }
    case CanonicalOrder::RowwiseBottomUpRightLeft:
      std::iota(entries.begin(), entries.end(), 1);
      break;
  }
  Filling out(shape, std::move(entries));
  if (!is_standard(out)) {
    throw Error(ErrorCode::NotStandard, "canonical order is not standard on " + shape.spec());
  }
  return out;
}

std::uint64_t hook_product(const Shape& shape) {
  if (shape.shifted() || !shape.is_straight()) {
    throw Error(ErrorCode::Unsupported, "hook product needs an unshifted straight shape");
  }
  const auto& parts = shape.outer();
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 1; j <= parts[i]; ++j) {
      const int arm = parts[i] - j;
      int leg = 0;
      for (std::size_t k = i + 1; k < parts.size() && parts[k] >= j; ++k) ++leg;
      product *= static_cast<std::uint64_t>(arm + leg + 1);
    }
  }
  return product;
}

}  // namespace mjdt
