#include "saddle/bench.hpp"

#include <cmath>
#include <ostream>

#include "saddle/recursive_psp.hpp"

namespace saddle {
namespace budget {

std::uint64_t baseline(std::size_t n) { return 2 * static_cast<std::uint64_t>(n) - 1; }

double simple(std::size_t n) {
  return kSimple * static_cast<double>(n) * std::exp2(static_cast<double>(lg_star(n)));
}

double fast(std::size_t n) {
  return kFast * static_cast<double>(n) * static_cast<double>(std::max<std::size_t>(1, lg_star(n)));
}

double alternative(std::size_t n) {
  const double lglg = n > 2 ? std::log2(std::log2(static_cast<double>(n))) : 0.0;
  return kAlternative * static_cast<double>(n) * (lglg + 1.0);
}

double rect(std::size_t m, std::size_t n) {
  if (m < n) std::swap(m, n);
  const double chunks = std::ceil(static_cast<double>(m) / static_cast<double>(n));
  return kFast * static_cast<double>(std::max<std::size_t>(1, lg_star(n))) * static_cast<double>(n) *
             chunks +
         chunks;
}

double locate(std::size_t k, std::size_t m, std::size_t n) {
  return kLocate * static_cast<double>(k) * static_cast<double>(m + n);
}

double solve(Algorithm algo, std::size_t m, std::size_t n) {
  const double test = 3.0 * static_cast<double>(m + n);
  if (m != n) return rect(m, n) + test;
  switch (algo) {
    case Algorithm::baseline: return static_cast<double>(baseline(n)) + test;
    case Algorithm::simple: return simple(n) + test;
    case Algorithm::alternative: return alternative(n);
    default: return fast(n) + test;
  }
}

}  // namespace budget

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  std::vector<BenchRecord> out;
  for (std::size_t n : config.sizes) {
    for (Family family : config.families) {
      for (Algorithm algo : config.algorithms) {
        const MatrixView a = generate({family, n, n, config.seed, 0});
        const SspResult r = find_ssp(a, algo);
        BenchRecord rec;
        rec.algorithm = std::string(to_string(algo));
        rec.m = n;
        rec.n = n;
        rec.seed = config.seed;
        rec.family = std::string(to_string(family));
        rec.queries = r.stats.queries;
        rec.comparisons = r.stats.comparisons;
        rec.elapsed_ns = r.stats.elapsed.count();
        if (r.outcome.found())
          rec.outcome = "ssp_found " + std::to_string(r.outcome.ssp->pos.row + 1) + " " +
                        std::to_string(r.outcome.ssp->pos.col + 1);
        else
          rec.outcome = "no_ssp";
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "algorithm,m,n,seed,family,queries,comparisons,elapsed_ns,outcome\n";
  for (const auto& r : records)
    out << r.algorithm << ',' << r.m << ',' << r.n << ',' << r.seed << ',' << r.family << ','
        << r.queries << ',' << r.comparisons << ',' << r.elapsed_ns << ',' << r.outcome << '\n';
}

std::vector<BudgetCheck> check_budgets(std::span<const BenchRecord> records) {
  std::vector<BudgetCheck> out;
  for (const auto& r : records) {
    const Algorithm algo = parse_algorithm(r.algorithm).value_or(Algorithm::automatic);
    BudgetCheck c;
    c.record = &r;
    c.limit = budget::solve(algo, r.m, r.n);
    c.ok = static_cast<double>(r.queries) <= c.limit;
    out.push_back(c);
  }
  return out;
}

}  // namespace saddle
