#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mjdt/error.hpp"

namespace mjdt {

// A cell in absolute coordinates: 1-based row, 1-based column. Shifted rows
// are indented, so row i of a shifted shape starts at column i + inner_i.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(Cell c);

enum class Direction { Right, Below, Left, Above };

class Mask;

// Index of a neighbouring cell inside Shape::cells(), or kNoCell.
inline constexpr std::ptrdiff_t kNoCell = -1;

// An unshifted or shifted skew shape outer/inner. Immutable; copies share the
// precomputed cell geometry.
class Shape {
 public:
  // Empty shape (n = 0).
  Shape();

  // Validates and builds a shape. Trailing zero parts of `outer` are dropped
  // and `inner` is zero-padded to the length of `outer`.
  static Shape make(std::vector<int> outer, std::vector<int> inner, bool shifted);

  const std::vector<int>& outer() const noexcept;
  const std::vector<int>& inner() const noexcept;
  bool shifted() const noexcept;
  bool is_straight() const noexcept;

  // Number of cells.
  std::size_t size() const noexcept;
  int rows() const noexcept;
  // Largest column index used by any row of the outer diagram.
  int width() const noexcept;

  // First and last member column of `row`; first > last for an empty row.
  int row_begin(int row) const noexcept;
  int row_end(int row) const noexcept;

  // Member cells in row-major order.
  std::span<const Cell> cells() const noexcept;
  const Cell& cell(std::size_t index) const noexcept;

  bool contains(Cell c) const noexcept;
  std::optional<std::size_t> index_of(Cell c) const noexcept;
  // Like index_of, but throws CellOutside.
  std::size_t require_index(Cell c) const;

  std::optional<Cell> neighbor(Cell c, Direction dir) const;
  std::optional<Cell> neighbor(Cell c, Direction dir, const Mask& mask) const;

  // Hot-path lookup used by the jdt engine.
  std::ptrdiff_t neighbor_index(std::size_t index, Direction dir) const noexcept;

  // Canonical spec string, e.g. "6,5,4,2/5,3:shifted".
  std::string spec() const;

  friend bool operator==(const Shape& a, const Shape& b) noexcept;

 private:
  struct Data;
  explicit Shape(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

Shape make_shape(std::vector<int> outer, std::vector<int> inner = {}, bool shifted = false);

std::vector<Cell> cells(const Shape& shape);

// A subset of a shape's cells.
class Mask {
 public:
  Mask(Shape shape, std::vector<bool> included);

  const Shape& shape() const noexcept { return shape_; }
  bool contains(Cell c) const noexcept;
  bool contains_index(std::size_t index) const noexcept { return included_[index]; }
  std::size_t count() const noexcept;
  std::vector<Cell> cells() const;

 private:
  Shape shape_;
  std::vector<bool> included_;
};

Mask full_mask(const Shape& shape);
Mask restrict_mask(const Mask& mask, const std::function<bool(Cell)>& keep);

}  // namespace mjdt
