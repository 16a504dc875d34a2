#include "saddle/staircase.hpp"

namespace saddle {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::found: return "found";
    case Verdict::no_ssp: return "absent";
    case Verdict::ssp_greater: return "greater";
    case Verdict::ssp_less: return "less";
  }
  return "?";
}

StaircasePath horizontal_search(const MatrixView& a, Value s) {
  return horizontal_search(a, s, [](std::size_t, std::size_t, Value) {});
}

StaircasePath vertical_search(const MatrixView& a, Value s) {
  const Order order = a.order();
  StaircasePath path{SearchMode::vertical};
  std::size_t i = 0, j = 0;
  while (i < a.rows() && j < a.cols()) {
    ++path.steps;
    if (order.less_equal(s, a.get(i, j)))
      ++i;
    else
      ++j;
  }
  path.row = i;
  path.col = j;
  path.success = i >= a.rows();
  return path;
}

bool verify_ssp_candidate(const MatrixView& a, std::size_t i, std::size_t j) {
  const Order order = a.order();
  const Value v = a(i, j);
  bool ok = true;
  for (std::size_t k = 0; k < a.cols(); ++k)
    if (k != j && !order.less(a.get(i, k), v)) ok = false;
  for (std::size_t k = 0; k < a.rows(); ++k)
    if (k != i && !order.less(v, a.get(k, j))) ok = false;
  return ok;
}

SearchVerdict test_value(const MatrixView& a, Value s) {
  const StaircasePath h = horizontal_search(a, s);
  const StaircasePath v = vertical_search(a, s);
  if (!h.success && !v.success)
    throw InternalError("horizontal and vertical searches both failed");
  if (!h.success) return {Verdict::ssp_greater};
  if (!v.success) return {Verdict::ssp_less};

  // Horizontal exited at (h.row, n), vertical at (m, v.col).
  if (!verify_ssp_candidate(a, h.row, v.col)) return {Verdict::no_ssp};
  SearchVerdict out{Verdict::found};
  out.ssp = a.get_entry(h.row, v.col);
  out.ssp_local = Position{h.row, v.col};
  return out;
}

}  // namespace saddle
