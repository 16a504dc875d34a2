#include "saddle/oracle.hpp"

namespace saddle {

OracleReport oracle_scan(const MatrixView& a, OracleOptions options) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const Order order = a.order();

  std::vector<Entry> cache(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) cache[i * n + j] = a.get_entry(i, j);

  OracleReport report;
  std::vector<std::size_t> row_arg(m, 0), col_arg(n, 0);
  std::vector<bool> row_unique(m, true), col_unique(n, true);

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      auto c = order.compare(cache[i * n + j].value, cache[i * n + row_arg[i]].value);
      if (c > 0) {
        row_arg[i] = j;
        row_unique[i] = true;
      } else if (c == 0) {
        row_unique[i] = false;
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 1; i < m; ++i) {
      auto c = order.compare(cache[i * n + j].value, cache[col_arg[j] * n + j].value);
      if (c < 0) {
        col_arg[j] = i;
        col_unique[j] = true;
      } else if (c == 0) {
        col_unique[j] = false;
      }
    }
  }

  report.row_maxima.reserve(m);
  for (std::size_t i = 0; i < m; ++i) report.row_maxima.push_back(cache[i * n + row_arg[i]]);
  report.col_minima.reserve(n);
  for (std::size_t j = 0; j < n; ++j) report.col_minima.push_back(cache[col_arg[j] * n + j]);

  Value c_val = report.col_minima[0].value;
  for (std::size_t j = 1; j < n; ++j) c_val = order.max(c_val, report.col_minima[j].value);
  Value r_val = report.row_maxima[0].value;
  for (std::size_t i = 1; i < m; ++i) r_val = order.min(r_val, report.row_maxima[i].value);
  report.interval = {c_val, r_val};

  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = row_arg[i];
    if (row_unique[i] && col_unique[j] && col_arg[j] == i) {
      if (report.ssp) throw InternalError("oracle found two strict saddlepoints");
      report.ssp = cache[i * n + j];
      report.ssp_local = Position{i, j};
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    const Value rmax = report.row_maxima[i].value;
    for (std::size_t j = 0; j < n; ++j) {
      const Entry& e = cache[i * n + j];
      if (order.less_equal(c_val, e.value) && order.less_equal(e.value, r_val)) {
        ++report.psp_count;
        if (options.collect_entries) report.psp_entries.push_back(e);
        if (order.equal(e.value, rmax) && order.equal(e.value, report.col_minima[j].value)) {
          ++report.sp_count;
          if (options.collect_entries) report.sp_entries.push_back(e);
        }
      }
    }
  }
  return report;
}

bool verify_psp(const MatrixView& a, Value v) {
  const Order order = a.order();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool ok = false;
    for (std::size_t j = 0; j < a.cols() && !ok; ++j) ok = order.greater_equal(a.get(i, j), v);
    if (!ok) return false;
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool ok = false;
    for (std::size_t i = 0; i < a.rows() && !ok; ++i) ok = order.less_equal(a.get(i, j), v);
    if (!ok) return false;
  }
  return true;
}

bool is_saddlepoint(const MatrixView& a, std::size_t i, std::size_t j) {
  const Order order = a.order();
  const Value v = a(i, j);
  for (std::size_t k = 0; k < a.cols(); ++k)
    if (k != j && order.less(v, a.get(i, k))) return false;
  for (std::size_t k = 0; k < a.rows(); ++k)
    if (k != i && order.less(a.get(k, j), v)) return false;
  return true;
}

std::vector<Entry> quadratic_sp(const MatrixView& a) {
  const Order order = a.order();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<Value> row_max(m), col_min(n);
  for (std::size_t i = 0; i < m; ++i) {
    row_max[i] = a.get(i, 0);
    for (std::size_t j = 1; j < n; ++j) row_max[i] = order.max(row_max[i], a.get(i, j));
  }
  for (std::size_t j = 0; j < n; ++j) {
    col_min[j] = a.get(0, j);
    for (std::size_t i = 1; i < m; ++i) col_min[j] = order.min(col_min[j], a.get(i, j));
  }
  std::vector<Entry> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Entry e = a.get_entry(i, j);
      if (order.equal(e.value, row_max[i]) && order.equal(e.value, col_min[j])) out.push_back(e);
    }
  return out;
}

}  // namespace saddle
