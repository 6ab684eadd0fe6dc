#include "mjdt/shape.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace mjdt {

std::string to_string(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

struct Shape::Data {
  std::vector<int> outer;
  std::vector<int> inner;
  bool shifted = false;
  std::vector<int> begin;        // first member column per row (0-based row)
  std::vector<int> end;          // last member column per row
  std::vector<std::size_t> row_offset;
  std::vector<Cell> cells;
  // neighbors[index][Direction]
  std::vector<std::array<std::ptrdiff_t, 4>> neighbors;
  int width = 0;
};

namespace {

void trim_trailing_zeros(std::vector<int>& parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

std::string join(const std::vector<int>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

void check_partition(const std::vector<int>& parts, bool strict, const char* which) {
  for (int p : parts) {
    if (p < 0) {
      throw Error(ErrorCode::NotPartition,
                  std::string(which) + " has a negative part: " + join(parts));
    }
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) {
      throw Error(ErrorCode::NotPartition,
                  std::string(which) + " is not weakly decreasing: " + join(parts));
    }
  }
  if (!strict) return;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > 0 && parts[i] == parts[i - 1]) {
      throw Error(ErrorCode::NotStrict,
                  std::string(which) + " repeats a positive part: " + join(parts));
    }
  }
}

}  // namespace

Shape::Shape() : Shape(make({}, {}, false)) {}

Shape::Shape(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

Shape Shape::make(std::vector<int> outer, std::vector<int> inner, bool shifted) {
  check_partition(outer, shifted, "outer partition");
  check_partition(inner, shifted, "inner partition");
  trim_trailing_zeros(outer);
  trim_trailing_zeros(inner);
  if (inner.size() > outer.size()) {
    throw Error(ErrorCode::InnerExceeds, "inner partition has more rows than outer");
  }
  inner.resize(outer.size(), 0);
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (inner[i] > outer[i]) {
      throw Error(ErrorCode::InnerExceeds, "inner part exceeds outer part in row " +
                                               std::to_string(i + 1));
    }
  }

  auto data = std::make_shared<Data>();
  data->outer = std::move(outer);
  data->inner = std::move(inner);
  data->shifted = shifted;

  const int r = static_cast<int>(data->outer.size());
  for (int i = 1; i <= r; ++i) {
    const int mu = data->outer[i - 1];
    const int lambda = data->inner[i - 1];
    const int first = shifted ? i + lambda : lambda + 1;
    const int last = shifted ? i + mu - 1 : mu;
    data->begin.push_back(first);
    data->end.push_back(last);
    data->row_offset.push_back(data->cells.size());
    for (int j = first; j <= last; ++j) data->cells.push_back({i, j});
    data->width = std::max(data->width, shifted ? i + mu - 1 : mu);
  }

  Shape shape(data);
  data->neighbors.resize(data->cells.size());
  for (std::size_t k = 0; k < data->cells.size(); ++k) {
    const Cell c = data->cells[k];
    const std::array<Cell, 4> adjacent = {
        Cell{c.row, c.col + 1}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1},
        Cell{c.row - 1, c.col}};
    for (std::size_t d = 0; d < 4; ++d) {
      const auto idx = shape.index_of(adjacent[d]);
      data->neighbors[k][d] = idx ? static_cast<std::ptrdiff_t>(*idx) : kNoCell;
    }
  }
  return shape;
}

const std::vector<int>& Shape::outer() const noexcept { return data_->outer; }
const std::vector<int>& Shape::inner() const noexcept { return data_->inner; }
bool Shape::shifted() const noexcept { return data_->shifted; }

bool Shape::is_straight() const noexcept {
  return std::all_of(data_->inner.begin(), data_->inner.end(), [](int p) { return p == 0; });
}

std::size_t Shape::size() const noexcept { return data_->cells.size(); }
int Shape::rows() const noexcept { return static_cast<int>(data_->outer.size()); }
int Shape::width() const noexcept { return data_->width; }

int Shape::row_begin(int row) const noexcept {
  if (row < 1 || row > rows()) return 1;
  return data_->begin[row - 1];
}

int Shape::row_end(int row) const noexcept {
  if (row < 1 || row > rows()) return 0;
  return data_->end[row - 1];
}

std::span<const Cell> Shape::cells() const noexcept { return data_->cells; }

const Cell& Shape::cell(std::size_t index) const noexcept { return data_->cells[index]; }

bool Shape::contains(Cell c) const noexcept { return index_of(c).has_value(); }

std::optional<std::size_t> Shape::index_of(Cell c) const noexcept {
  if (c.row < 1 || c.row > rows()) return std::nullopt;
  const int first = data_->begin[c.row - 1];
  const int last = data_->end[c.row - 1];
  if (c.col < first || c.col > last) return std::nullopt;
  return data_->row_offset[c.row - 1] + static_cast<std::size_t>(c.col - first);
}

std::size_t Shape::require_index(Cell c) const {
  const auto idx = index_of(c);
  if (!idx) {
    throw Error(ErrorCode::CellOutside, to_string(c) + " is not a cell of " + spec());
  }
  return *idx;
}

std::optional<Cell> Shape::neighbor(Cell c, Direction dir) const {
  const auto n = neighbor_index(require_index(c), dir);
  if (n == kNoCell) return std::nullopt;
  return data_->cells[static_cast<std::size_t>(n)];
}

std::optional<Cell> Shape::neighbor(Cell c, Direction dir, const Mask& mask) const {
  const std::size_t idx = require_index(c);
  if (!mask.contains_index(idx)) {
    throw Error(ErrorCode::NotInMask, to_string(c) + " is not in the mask");
  }
  const auto n = neighbor_index(idx, dir);
  if (n == kNoCell || !mask.contains_index(static_cast<std::size_t>(n))) return std::nullopt;
  return data_->cells[static_cast<std::size_t>(n)];
}

std::ptrdiff_t Shape::neighbor_index(std::size_t index, Direction dir) const noexcept {
  return data_->neighbors[index][static_cast<std::size_t>(dir)];
}

std::string Shape::spec() const {
  std::string out = join(data_->outer);
  std::vector<int> inner = data_->inner;
  trim_trailing_zeros(inner);
  if (!inner.empty()) out += "/" + join(inner);
  if (data_->shifted) out += ":shifted";
  return out;
}

bool operator==(const Shape& a, const Shape& b) noexcept {
  if (a.data_ == b.data_) return true;
  return a.data_->shifted == b.data_->shifted && a.data_->outer == b.data_->outer &&
         a.data_->inner == b.data_->inner;
}

Shape make_shape(std::vector<int> outer, std::vector<int> inner, bool shifted) {
  return Shape::make(std::move(outer), std::move(inner), shifted);
}

std::vector<Cell> cells(const Shape& shape) {
  const auto span = shape.cells();
  return {span.begin(), span.end()};
}

Mask::Mask(Shape shape, std::vector<bool> included)
    : shape_(std::move(shape)), included_(std::move(included)) {
  if (included_.size() != shape_.size()) {
    throw Error(ErrorCode::ShapeMismatch, "mask size does not match shape");
  }
}

bool Mask::contains(Cell c) const noexcept {
  const auto idx = shape_.index_of(c);
  return idx && included_[*idx];
}

std::size_t Mask::count() const noexcept {
  return static_cast<std::size_t>(std::count(included_.begin(), included_.end(), true));
}

std::vector<Cell> Mask::cells() const {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < included_.size(); ++i) {
    if (included_[i]) out.push_back(shape_.cell(i));
  }
  return out;
}

Mask full_mask(const Shape& shape) {
  return Mask(shape, std::vector<bool>(shape.size(), true));
}

Mask restrict_mask(const Mask& mask, const std::function<bool(Cell)>& keep) {
  const Shape& shape = mask.shape();
  std::vector<bool> included(shape.size(), false);
  for (std::size_t i = 0; i < shape.size(); ++i) {
    included[i] = mask.contains_index(i) && keep(shape.cell(i));
  }
  return Mask(shape, std::move(included));
}

}  // namespace mjdt
