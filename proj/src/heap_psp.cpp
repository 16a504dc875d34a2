#include "saddle/heap_psp.hpp"

namespace saddle {

ActiveSet::ActiveSet(Order order, std::size_t rows, std::size_t cols)
    : order_(order), set_(Less{order}), row_used_(rows, false), col_used_(cols, false) {}

void ActiveSet::insert(const Triplet& t) {
  if (t.row >= row_used_.size() || t.col >= col_used_.size())
    throw ContractError("triplet outside the active set's matrix");
  if (row_used_[t.row] || col_used_[t.col])
    throw ContractError("active set already holds a triplet in this row or column");
  set_.insert(t);
  row_used_[t.row] = true;
  col_used_[t.col] = true;
}

void ActiveSet::erase(std::set<Triplet, Less>::iterator it) {
  row_used_[it->row] = false;
  col_used_[it->col] = false;
  set_.erase(it);
}

void ActiveSet::pop_min() { erase(set_.begin()); }
void ActiveSet::pop_max() { erase(std::prev(set_.end())); }

ReduceCase reduce_step(ActiveSet& h, const MatrixView& a) {
  return reduce_step(h, [&](std::size_t i, std::size_t j) { return a.get_entry(i, j); });
}

ActiveSet diagonal_set(const MatrixView& a) {
  if (!a.square()) throw ContractError("baseline PSP requires a square matrix");
  ActiveSet h(a.order(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) h.insert({i, i, a.get_entry(i, i)});
  return h;
}

Entry psp_baseline(const MatrixView& a) {
  ActiveSet h = diagonal_set(a);
  return reduce_to_one(h, [&](std::size_t i, std::size_t j) { return a.get_entry(i, j); }).entry;
}

Entry psp_baseline(const MatrixView& a, std::span<const Entry> diagonal) {
  if (!a.square()) throw ContractError("baseline PSP requires a square matrix");
  if (diagonal.size() != a.rows()) throw ContractError("diagonal seed has the wrong length");
  ActiveSet h(a.order(), a.rows(), a.cols());
  for (std::size_t i = 0; i < diagonal.size(); ++i) h.insert({i, i, diagonal[i]});
  return reduce_to_one(h, [&](std::size_t i, std::size_t j) { return a.get_entry(i, j); }).entry;
}

}  // namespace saddle
