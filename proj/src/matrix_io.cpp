#include "saddle/matrix_io.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace saddle {
namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_dim(std::string_view tok) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || v == 0)
    throw InputError("bad matrix dimension '" + std::string(tok) + "'");
  return v;
}

double parse_value(std::string_view tok, std::size_t line_no) {
  std::string_view body = tok;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double v = 0.0;
  auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc() || p != body.data() + body.size() || body.empty())
    throw InputError("line " + std::to_string(line_no) + ": bad number '" + std::string(tok) + "'");
  if (!std::isfinite(v))
    throw InputError("line " + std::to_string(line_no) + ": non-finite value '" +
                     std::string(tok) + "'");
  return v;
}

}  // namespace

DenseMatrix parse_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_nonblank = [&](std::vector<std::string_view>& toks) {
    while (std::getline(in, line)) {
      ++line_no;
      toks = split(line);
      if (!toks.empty()) return true;
    }
    return false;
  };

  std::vector<std::string_view> toks;
  if (!next_nonblank(toks)) throw InputError("empty matrix file");
  if (toks.size() != 2) throw InputError("header must be 'm n'");
  const std::size_t m = parse_dim(toks[0]);
  const std::size_t n = parse_dim(toks[1]);

  std::vector<double> data;
  data.reserve(m * n);
  for (std::size_t r = 0; r < m; ++r) {
    if (!next_nonblank(toks))
      throw InputError("expected " + std::to_string(m) + " rows, got " + std::to_string(r));
    if (toks.size() != n)
      throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                       " values, got " + std::to_string(toks.size()));
    for (auto t : toks) data.push_back(parse_value(t, line_no));
  }
  if (next_nonblank(toks))
    throw InputError("line " + std::to_string(line_no) + ": trailing data after " +
                     std::to_string(m) + " rows");
  return DenseMatrix(m, n, std::move(data));
}

DenseMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_matrix(in);
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_matrix(std::ostream& out, const MatrixSource& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  std::string line;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    line.clear();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) line += ' ';
      line += format_double(m.at(i, j).raw);
    }
    line += '\n';
    out << line;
  }
}

}  // namespace saddle
