#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mjdt/shape.hpp"

namespace mjdt {

// A permutation of {1..n} in one-line notation: word()[i-1] == p(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return word_.size(); }
  int operator()(int i) const noexcept { return word_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& word() const noexcept { return word_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

Permutation inverse(const Permutation& p);

// A tabloid: a bijective filling of the cells of a shape with 1..n. Entries
// are stored in the shape's row-major cell order.
class Filling {
 public:
  Filling() = default;
  Filling(Shape shape, std::vector<int> entries);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const int> entries() const noexcept { return entries_; }

  int at(Cell c) const { return entries_[shape_.require_index(c)]; }
  int at_index(std::size_t index) const noexcept { return entries_[index]; }

  std::size_t index_of_entry(int entry) const;
  Cell cell_of(int entry) const { return shape_.cell(index_of_entry(entry)); }

  void swap_indices(std::size_t a, std::size_t b) noexcept { std::swap(entries_[a], entries_[b]); }

  friend bool operator==(const Filling& a, const Filling& b) noexcept {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }

 private:
  Shape shape_;
  std::vector<int> entries_;
};

// Rows increase left to right and columns increase top to bottom.
bool is_standard(const Filling& f);

// Largest n accepted by enumerate_standard without `force_large`.
inline constexpr std::size_t kEnumerationCap = 20;

// All standard fillings of `shape`, sorted by reading word.
std::vector<Filling> enumerate_standard(const Shape& shape, bool force_large = false);

// Row-major reading word (top to bottom, left to right).
Permutation reading_word(const Filling& f);

// 0-based position of `f` in `universe` (as returned by enumerate_standard).
std::size_t lex_index(const Filling& f, std::span<const Filling> universe);

// Replaces every entry i by p(i).
Filling apply_permutation(const Filling& f, const Permutation& p);

enum class CanonicalOrder {
  // Column by column from the left, top to bottom within a column.
  NpsColumn,
  // Processed bottom to top and right to left; i.e. labels 1..n in row-major
  // order, so the bottom row's rightmost cell carries n.
  RowwiseBottomUpRightLeft,
};

Filling canonical_order(const Shape& shape, CanonicalOrder kind);

// Product of hook lengths; unshifted straight shapes only.
std::uint64_t hook_product(const Shape& shape);

}  // namespace mjdt
