#include "saddle/matrix_view.hpp"

#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>

namespace saddle {

std::string to_string(Value v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v.raw);
  return std::string(buf, res.ptr);
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows_ == 0 || cols_ == 0) throw ContractError("matrix dimensions must be positive");
  if (data_.size() != rows_ * cols_) throw ContractError("matrix data size mismatch");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw ContractError("matrix dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ContractError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

DenseMatrix materialize(const MatrixSource& source) {
  std::vector<double> data;
  data.reserve(source.rows() * source.cols());
  for (std::size_t i = 0; i < source.rows(); ++i)
    for (std::size_t j = 0; j < source.cols(); ++j) data.push_back(source.at(i, j).raw);
  return DenseMatrix(source.rows(), source.cols(), std::move(data));
}

namespace detail {
namespace {

class RootNode final : public ViewNode {
 public:
  explicit RootNode(std::shared_ptr<const Root> root)
      : ViewNode(root->source->rows(), root->source->cols(), root, false),
        source_(root->source.get()) {}

  Value fetch(std::size_t i, std::size_t j, Position* origin) const override {
    ++root()->counters.queries;
    if (origin) *origin = {i, j};
    return source_->at(i, j);
  }

 private:
  const MatrixSource* source_;
};

class ReflectNode final : public ViewNode {
 public:
  explicit ReflectNode(std::shared_ptr<const ViewNode> parent)
      : ViewNode(parent->cols(), parent->rows(), parent->root(), !parent->reversed()),
        parent_(std::move(parent)) {}

  Value fetch(std::size_t i, std::size_t j, Position* origin) const override {
    return parent_->fetch(j, i, origin);
  }

  [[nodiscard]] const std::shared_ptr<const ViewNode>& parent() const { return parent_; }

 private:
  std::shared_ptr<const ViewNode> parent_;
};

class SubviewNode final : public ViewNode {
 public:
  SubviewNode(std::shared_ptr<const ViewNode> parent, std::vector<std::size_t> rows,
              std::vector<std::size_t> cols)
      : ViewNode(rows.size(), cols.size(), parent->root(), parent->reversed()),
        parent_(std::move(parent)),
        rows_(std::move(rows)),
        cols_(std::move(cols)) {}

  Value fetch(std::size_t i, std::size_t j, Position* origin) const override {
    return parent_->fetch(rows_[i], cols_[j], origin);
  }

  [[nodiscard]] const std::shared_ptr<const ViewNode>& parent() const { return parent_; }
  [[nodiscard]] const std::vector<std::size_t>& row_map() const { return rows_; }
  [[nodiscard]] const std::vector<std::size_t>& col_map() const { return cols_; }

 private:
  std::shared_ptr<const ViewNode> parent_;
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> cols_;
};

}  // namespace

class PermutationNode final : public ViewNode {
 public:
  explicit PermutationNode(std::shared_ptr<const ViewNode> parent)
      : ViewNode(parent->rows(), parent->cols(), parent->root(), parent->reversed()),
        parent_(std::move(parent)),
        row_perm_(rows()),
        col_perm_(cols()) {
    for (std::size_t i = 0; i < row_perm_.size(); ++i) row_perm_[i] = i;
    for (std::size_t j = 0; j < col_perm_.size(); ++j) col_perm_[j] = j;
  }

  Value fetch(std::size_t i, std::size_t j, Position* origin) const override {
    if (i == j && !overlay_.empty() && overlay_[i]) {
      if (origin) *origin = overlay_[i]->pos;
      return overlay_[i]->value;
    }
    return parent_->fetch(row_perm_[i], col_perm_[j], origin);
  }

  void swap_rows(std::size_t a, std::size_t b) { std::swap(row_perm_[a], row_perm_[b]); }
  void swap_cols(std::size_t a, std::size_t b) { std::swap(col_perm_[a], col_perm_[b]); }
  void overlay(std::size_t i, const Entry& e) {
    if (overlay_.empty()) overlay_.resize(rows());
    overlay_[i] = e;
  }
  [[nodiscard]] std::size_t row_origin(std::size_t i) const { return row_perm_[i]; }
  [[nodiscard]] std::size_t col_origin(std::size_t j) const { return col_perm_[j]; }

 private:
  std::shared_ptr<const ViewNode> parent_;
  std::vector<std::size_t> row_perm_;
  std::vector<std::size_t> col_perm_;
  std::vector<std::optional<Entry>> overlay_;
};

}  // namespace detail

namespace {

void check_index(std::size_t i, std::size_t limit, const char* what) {
  if (i >= limit)
    throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                            " out of range [0, " + std::to_string(limit) + ")");
}

}  // namespace

MatrixView::MatrixView(std::shared_ptr<const MatrixSource> source) {
  if (!source || source->rows() == 0 || source->cols() == 0)
    throw ContractError("matrix dimensions must be positive");
  auto root = std::make_shared<detail::Root>();
  root->source = std::move(source);
  node_ = std::make_shared<detail::RootNode>(std::move(root));
}

Value MatrixView::operator()(std::size_t i, std::size_t j) const {
  check_index(i, rows(), "row");
  check_index(j, cols(), "column");
  return node_->fetch(i, j, nullptr);
}

Entry MatrixView::entry(std::size_t i, std::size_t j) const {
  check_index(i, rows(), "row");
  check_index(j, cols(), "column");
  return get_entry(i, j);
}

MatrixView MatrixView::reflect() const {
  if (auto* r = dynamic_cast<const detail::ReflectNode*>(node_.get())) return MatrixView(r->parent());
  return MatrixView(std::make_shared<const detail::ReflectNode>(node_));
}

MatrixView MatrixView::subview(std::vector<std::size_t> rows, std::vector<std::size_t> cols) const {
  if (rows.empty() || cols.empty()) throw ContractError("subview index sets must be non-empty");
  for (auto i : rows) check_index(i, this->rows(), "row");
  for (auto j : cols) check_index(j, this->cols(), "column");
  // Collapse subview-of-subview into a single layer.
  if (auto* s = dynamic_cast<const detail::SubviewNode*>(node_.get())) {
    for (auto& i : rows) i = s->row_map()[i];
    for (auto& j : cols) j = s->col_map()[j];
    return MatrixView(
        std::make_shared<const detail::SubviewNode>(s->parent(), std::move(rows), std::move(cols)));
  }
  return MatrixView(
      std::make_shared<const detail::SubviewNode>(node_, std::move(rows), std::move(cols)));
}

MatrixView MatrixView::block(std::size_t row0, std::size_t nrows, std::size_t col0,
                             std::size_t ncols) const {
  std::vector<std::size_t> r(nrows), c(ncols);
  for (std::size_t k = 0; k < nrows; ++k) r[k] = row0 + k;
  for (std::size_t k = 0; k < ncols; ++k) c[k] = col0 + k;
  return subview(std::move(r), std::move(c));
}

PermutedView::PermutedView(const MatrixView& base)
    : node_(std::make_shared<detail::PermutationNode>(base.node_)) {}

std::size_t PermutedView::rows() const { return node_->rows(); }
std::size_t PermutedView::cols() const { return node_->cols(); }

void PermutedView::swap_rows(std::size_t a, std::size_t b) {
  check_index(a, rows(), "row");
  check_index(b, rows(), "row");
  node_->swap_rows(a, b);
}

void PermutedView::swap_cols(std::size_t a, std::size_t b) {
  check_index(a, cols(), "column");
  check_index(b, cols(), "column");
  node_->swap_cols(a, b);
}

void PermutedView::overlay_diagonal(std::size_t i, const Entry& source) {
  if (rows() != cols()) throw ContractError("diagonal overlay requires a square view");
  check_index(i, rows(), "diagonal");
  node_->overlay(i, source);
}

MatrixView PermutedView::view() const { return MatrixView(node_); }
std::size_t PermutedView::row_origin(std::size_t i) const { return node_->row_origin(i); }
std::size_t PermutedView::col_origin(std::size_t j) const { return node_->col_origin(j); }

}  // namespace saddle
