#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "saddle/value.hpp"

namespace saddle {

/// Read-only backing store of a root matrix. Implementations return raw
/// entries without counting; counting happens in the view layer.
class MatrixSource {
 public:
  virtual ~MatrixSource() = default;
  [[nodiscard]] virtual std::size_t rows() const = 0;
  [[nodiscard]] virtual std::size_t cols() const = 0;
  [[nodiscard]] virtual Value at(std::size_t i, std::size_t j) const = 0;
};

/// Row-major dense matrix held in memory.
class DenseMatrix final : public MatrixSource {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  [[nodiscard]] std::size_t rows() const override { return rows_; }
  [[nodiscard]] std::size_t cols() const override { return cols_; }
  [[nodiscard]] Value at(std::size_t i, std::size_t j) const override {
    return Value{data_[i * cols_ + j]};
  }
  [[nodiscard]] std::span<const double> data() const { return data_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// Copies every entry of `source` into a DenseMatrix.
DenseMatrix materialize(const MatrixSource& source);

namespace detail {

struct Root {
  std::shared_ptr<const MatrixSource> source;
  mutable Counters counters;
};

class ViewNode {
 public:
  ViewNode(std::size_t rows, std::size_t cols, std::shared_ptr<const Root> root, bool reversed)
      : rows_(rows), cols_(cols), reversed_(reversed), root_(std::move(root)) {}
  virtual ~ViewNode() = default;

  // Unchecked read. When `origin` is non-null it receives the root position
  // the returned value was read from.
  virtual Value fetch(std::size_t i, std::size_t j, Position* origin) const = 0;

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool reversed() const { return reversed_; }
  [[nodiscard]] const std::shared_ptr<const Root>& root() const { return root_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  bool reversed_;
  std::shared_ptr<const Root> root_;
};

class PermutationNode;

}  // namespace detail

/// Instrumented, read-only handle onto an m x n matrix. Views are cheap to
/// copy and share their root's counters. Every read that reaches the base
/// matrix bumps the root query counter once.
///
/// Indices are 0-based.
class MatrixView {
 public:
  MatrixView() = default;
  explicit MatrixView(std::shared_ptr<const MatrixSource> source);

  template <class Source>
  static MatrixView of(Source source) {
    return MatrixView(std::make_shared<const Source>(std::move(source)));
  }

  [[nodiscard]] std::size_t rows() const { return node_->rows(); }
  [[nodiscard]] std::size_t cols() const { return node_->cols(); }
  [[nodiscard]] bool square() const { return rows() == cols(); }

  /// Bounds-checked query; throws std::out_of_range.
  [[nodiscard]] Value operator()(std::size_t i, std::size_t j) const;
  /// Query that also reports the root position of the value.
  [[nodiscard]] Entry entry(std::size_t i, std::size_t j) const;

  // Unchecked variants for algorithm inner loops.
  [[nodiscard]] Value get(std::size_t i, std::size_t j) const {
    return node_->fetch(i, j, nullptr);
  }
  [[nodiscard]] Entry get_entry(std::size_t i, std::size_t j) const {
    Entry e;
    e.value = node_->fetch(i, j, &e.pos);
    return e;
  }

  [[nodiscard]] Order order() const { return {&node_->root()->counters, node_->reversed()}; }
  [[nodiscard]] const Counters& counters() const { return node_->root()->counters; }
  [[nodiscard]] std::uint64_t queries() const { return counters().queries; }
  [[nodiscard]] std::uint64_t comparisons() const { return counters().comparisons; }

  /// Transposed view with reversed order (the comparison-only form of -A^T).
  [[nodiscard]] MatrixView reflect() const;
  /// Submatrix on the given local rows and columns, in the given order.
  [[nodiscard]] MatrixView subview(std::vector<std::size_t> rows,
                                   std::vector<std::size_t> cols) const;
  /// Contiguous block [row0, row0+nrows) x [col0, col0+ncols).
  [[nodiscard]] MatrixView block(std::size_t row0, std::size_t nrows, std::size_t col0,
                                 std::size_t ncols) const;

  [[nodiscard]] bool valid() const { return node_ != nullptr; }

 private:
  friend class PermutedView;
  explicit MatrixView(std::shared_ptr<const detail::ViewNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::ViewNode> node_;
};

/// A mutable row/column permutation layer with an optional diagonal overlay.
/// Owned by one running algorithm; `view()` handles observe later mutations.
///
/// Overlays are keyed on the layer's current coordinates and are not moved
/// by later swaps. Each overlay carries the root entry the value came from,
/// so results read through it can still be reported as real entries.
class PermutedView {
 public:
  explicit PermutedView(const MatrixView& base);

  [[nodiscard]] std::size_t rows() const;
  [[nodiscard]] std::size_t cols() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// After this, reading (i, i) yields `source.value` without a base query.
  void overlay_diagonal(std::size_t i, const Entry& source);

  [[nodiscard]] MatrixView view() const;
  /// Base-layer row/column currently shown at local index i.
  [[nodiscard]] std::size_t row_origin(std::size_t i) const;
  [[nodiscard]] std::size_t col_origin(std::size_t j) const;

 private:
  std::shared_ptr<detail::PermutationNode> node_;
};

}  // namespace saddle
