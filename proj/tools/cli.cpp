#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "saddle/bench.hpp"
#include "saddle/generate.hpp"
#include "saddle/matrix_io.hpp"
#include "saddle/oracle.hpp"
#include "saddle/solver.hpp"
#include "saddle/staircase.hpp"

namespace saddle::cli {
namespace {

using json = nlohmann::ordered_json;

json entry_json(const Entry& e) {
  return {{"row", e.pos.row + 1}, {"col", e.pos.col + 1}, {"value", e.value.raw}};
}

json entries_json(const std::vector<Entry>& es) {
  json out = json::array();
  for (const auto& e : es) out.push_back(entry_json(e));
  return out;
}

double to_ms(std::chrono::nanoseconds ns) { return static_cast<double>(ns.count()) / 1e6; }

MatrixView load(const std::string& path) { return MatrixView::of(read_matrix_file(path)); }

Algorithm algorithm_arg(const std::string& name) {
  auto a = parse_algorithm(name);
  if (!a) throw InputError("unknown algorithm '" + name + "'");
  return *a;
}

struct Args {
  std::string file;
  std::string algo = "auto";
  bool verify = false;
  double value = 0.0;

  std::string family = "random";
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::size_t multiplicity = 0;

  std::vector<std::size_t> sizes{256, 1024, 4096, 16384};
  std::vector<std::string> families{"random"};
  std::vector<std::string> algos{"auto"};
  std::string csv_out;
};

int cmd_ssp(const Args& args, std::ostream& out, std::ostream& err) {
  const MatrixView a = load(args.file);
  const SspResult r = find_ssp(a, algorithm_arg(args.algo));
  json j;
  j["result"] = r.outcome.found() ? "ssp_found" : "no_ssp";
  if (r.outcome.found()) {
    j["row"] = r.outcome.ssp->pos.row + 1;
    j["col"] = r.outcome.ssp->pos.col + 1;
    j["value"] = r.outcome.ssp->value.raw;
  } else {
    j["row"] = nullptr;
    j["col"] = nullptr;
    j["value"] = nullptr;
  }
  j["queries"] = r.stats.queries;
  j["comparisons"] = r.stats.comparisons;
  j["elapsed_ms"] = to_ms(r.stats.elapsed);
  j["algorithm"] = to_string(r.stats.algorithm);
  bool agree = true;
  if (args.verify) {
    const OracleReport o = oracle_scan(a, {.collect_entries = false});
    agree = o.ssp.has_value() == r.outcome.found() &&
            (!o.ssp || o.ssp->pos == r.outcome.ssp->pos);
    j["verified"] = agree;
  }
  out << j.dump() << '\n';
  if (!agree) {
    err << "error: result disagrees with the brute-force oracle\n";
    return kInternalError;
  }
  return kOk;
}

int cmd_psp(const Args& args, std::ostream& out, std::ostream& err) {
  const Algorithm algo = algorithm_arg(args.algo);
  if (algo == Algorithm::alternative)
    throw InputError("the alternative algorithm decides SSPs only; use baseline, simple or fast");
  const MatrixView a = load(args.file);
  const PspResult r = find_psp(a, algo);
  json j = entry_json(r.entry);
  j["queries"] = r.stats.queries;
  j["comparisons"] = r.stats.comparisons;
  j["elapsed_ms"] = to_ms(r.stats.elapsed);
  j["algorithm"] = to_string(r.stats.algorithm);
  bool ok = true;
  if (args.verify) {
    ok = verify_psp(a, r.entry.value);
    j["verified"] = ok;
  } else {
    j["verified"] = nullptr;
  }
  out << j.dump() << '\n';
  if (!ok) {
    err << "error: returned entry is not a pseudo-saddlepoint\n";
    return kInternalError;
  }
  return kOk;
}

int cmd_sp_value(const Args& args, std::ostream& out, std::ostream&) {
  const MatrixView a = load(args.file);
  const SpValue v = sp_value_assuming_exists(a);
  json j;
  j["value"] = v.entry.value.raw;
  j["witness"] = entry_json(v.entry);
  j["assumes_sp_exists"] = true;
  j["assumption_checked"] = v.assumption_checked;
  j["queries"] = a.queries();
  j["comparisons"] = a.comparisons();
  out << j.dump() << '\n';
  return kOk;
}

int cmd_sp_locate(const Args& args, std::ostream& out, std::ostream&) {
  const MatrixView a = load(args.file);
  const auto sps = locate_sp(a, Value{args.value});
  json j;
  j["value"] = args.value;
  j["saddlepoints"] = entries_json(sps);
  j["queries"] = a.queries();
  out << j.dump() << '\n';
  return kOk;
}

int cmd_test_value(const Args& args, std::ostream& out, std::ostream&) {
  const MatrixView a = load(args.file);
  const SearchVerdict v = test_value(a, Value{args.value});
  json j;
  j["verdict"] = to_string(v.kind);
  if (v.ssp) j["ssp"] = entry_json(*v.ssp);
  j["queries"] = a.queries();
  j["comparisons"] = a.comparisons();
  out << j.dump() << '\n';
  return kOk;
}

int cmd_oracle(const Args& args, std::ostream& out, std::ostream&) {
  const MatrixView a = load(args.file);
  const OracleReport o = oracle_scan(a);
  json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  j["C"] = o.interval.lo.raw;
  j["R"] = o.interval.hi.raw;
  j["ssp"] = o.ssp ? entry_json(*o.ssp) : json(nullptr);
  j["row_maxima"] = entries_json(o.row_maxima);
  j["col_minima"] = entries_json(o.col_minima);
  j["psp_count"] = o.psp_count;
  j["psp_entries"] = entries_json(o.psp_entries);
  j["sp_count"] = o.sp_count;
  j["sp_entries"] = entries_json(o.sp_entries);
  out << j.dump() << '\n';
  return kOk;
}

int cmd_gen(const Args& args, std::ostream& out, std::ostream&) {
  auto family = parse_family(args.family);
  if (!family) throw InputError("unknown family '" + args.family + "'");
  try {
    write_matrix(out, GeneratedMatrix({*family, args.m, args.n, args.seed, args.multiplicity}));
  } catch (const ContractError& e) {
    throw InputError(e.what());
  }
  return kOk;
}

int cmd_bench(const Args& args, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  config.sizes = args.sizes;
  config.seed = args.seed;
  for (const auto& f : args.families) {
    auto family = parse_family(f);
    if (!family) throw InputError("unknown family '" + f + "'");
    config.families.push_back(*family);
  }
  for (const auto& name : args.algos) config.algorithms.push_back(algorithm_arg(name));
  for (std::size_t n : config.sizes)
    if (n == 0) throw InputError("sizes must be positive");

  std::vector<BenchRecord> records;
  try {
    records = run_bench(config);
  } catch (const ContractError& e) {
    throw InputError(e.what());
  }

  std::ostream* summary = &out;
  if (args.csv_out.empty()) {
    write_csv(out, records);
    summary = &err;
  } else {
    std::ofstream file(args.csv_out);
    if (!file) throw InputError("cannot write '" + args.csv_out + "'");
    write_csv(file, records);
  }

  std::size_t violations = 0;
  for (const auto& c : check_budgets(records)) {
    if (c.ok) continue;
    ++violations;
    *summary << "budget exceeded: " << c.record->algorithm << " n=" << c.record->n << " "
             << c.record->family << " queries=" << c.record->queries << " limit=" << c.limit
             << '\n';
  }
  *summary << "cells: " << records.size() << ", budget violations: " << violations << '\n';
  return violations == 0 ? kOk : kInternalError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Saddlepoint search in the comparison model"};
  app.require_subcommand(1);
  Args args;

  const std::string algo_help = "auto|baseline|simple|fast|alt";

  auto* ssp = app.add_subcommand("ssp", "Find the strict saddlepoint of a matrix file");
  ssp->add_option("file", args.file)->required();
  ssp->add_option("--algo", args.algo, algo_help);
  ssp->add_flag("--verify", args.verify, "Cross-check against the O(mn) oracle");

  auto* psp = app.add_subcommand("psp", "Find a pseudo-saddlepoint");
  psp->add_option("file", args.file)->required();
  psp->add_option("--algo", args.algo, "auto|baseline|simple|fast");
  psp->add_flag("--verify", args.verify, "Check the result in O(mn)");

  auto* spv = app.add_subcommand("sp-value", "Saddlepoint value, assuming one exists");
  spv->add_option("file", args.file)->required();

  auto* spl = app.add_subcommand("sp-locate", "List the saddlepoints of a given value");
  spl->add_option("file", args.file)->required();
  spl->add_option("--value", args.value)->required();

  auto* tv = app.add_subcommand("test-value", "Compare a value with the strict saddlepoint");
  tv->add_option("file", args.file)->required();
  tv->add_option("--value", args.value)->required();

  auto* orc = app.add_subcommand("oracle", "Brute-force report");
  orc->add_option("file", args.file)->required();

  auto* gen = app.add_subcommand("gen", "Write a generated instance to standard output");
  gen->add_option("--family", args.family, "planted-ssp|planted-sp|no-sp|random|constant")
      ->required();
  gen->add_option("--m", args.m)->required()->check(CLI::PositiveNumber);
  gen->add_option("--n", args.n)->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", args.seed);
  gen->add_option("--multiplicity", args.multiplicity, "Tied saddlepoints for planted-sp");

  auto* bench = app.add_subcommand("bench", "Query-count benchmark on square instances");
  bench->add_option("--sizes", args.sizes)->delimiter(',');
  bench->add_option("--families", args.families)->delimiter(',');
  bench->add_option("--algos", args.algos)->delimiter(',');
  bench->add_option("--seed", args.seed);
  bench->add_option("--out", args.csv_out, "CSV path; standard output if omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*ssp) return cmd_ssp(args, out, err);
    if (*psp) return cmd_psp(args, out, err);
    if (*spv) return cmd_sp_value(args, out, err);
    if (*spl) return cmd_sp_locate(args, out, err);
    if (*tv) return cmd_test_value(args, out, err);
    if (*orc) return cmd_oracle(args, out, err);
    if (*gen) return cmd_gen(args, out, err);
    if (*bench) return cmd_bench(args, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const ContractError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}

}  // namespace saddle::cli
