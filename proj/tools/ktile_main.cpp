// ktile — exact combinatorics of one-black-square board tilings: memoized
// big-integer evaluators for the generalized Fibonacci and Lucas sequences,
// exhaustive tiling enumeration, structural decompositions, and an identity
// verification harness with counterexample reporting.
//
// Exit codes: 0 success / all identities matched, 1 verified mismatch,
// 2 usage or limit error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ktile/decompositions.hpp"
#include "ktile/identities.hpp"
#include "ktile/report_io.hpp"
#include "ktile/sequences.hpp"
#include "ktile/tilings.hpp"

namespace {

using ktile::Errc;
using ktile::Natural;
using ktile::SequenceCache;
using ktile::Tiling;

struct Range {
  long lo = 0;
  long hi = 0;
};

Range parse_range(const std::string& text, const char* what) {
  auto bad = [&] {
    ktile::fail(Errc::InvalidArgument,
                std::string(what) + " must be N or LO..HI, got '" + text + "'");
  };
  try {
    std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
      long v = std::stol(text);
      return {v, v};
    }
    Range r{std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
    if (r.lo > r.hi) bad();
    return r;
  } catch (const ktile::Error&) {
    throw;
  } catch (const std::exception&) {
    bad();
  }
  return {};
}

Range parse_k_range(const std::string& text) {
  Range r = parse_range(text, "--k");
  if (r.lo < 2) ktile::fail(Errc::InvalidArgument, "--k values must be >= 2");
  if (r.hi > 1000000)
    ktile::fail(Errc::InvalidArgument, "--k upper bound is unreasonable");
  return r;
}

long enumeration_limit(long flag_value) {
  if (flag_value >= 0) return flag_value;
  const char* env = std::getenv("KTILE_ENUM_LIMIT");
  if (!env) return ktile::kDefaultEnumLimit;
  try {
    long v = std::stol(env);
    if (v < 0) throw std::invalid_argument("negative");
    return v;
  } catch (const std::exception&) {
    ktile::fail(Errc::InvalidArgument,
                "KTILE_ENUM_LIMIT must be a non-negative integer, got '" +
                    std::string(env) + "'");
  }
}

struct CacheOpts {
  std::string file;
  bool no_cache = false;
};

void add_cache_opts(CLI::App* cmd, CacheOpts& o) {
  cmd->add_option("--cache-file", o.file,
                  "Warm-start the memo table from this file and write the "
                  "merged table back after the run");
  cmd->add_flag("--no-cache", o.no_cache,
                "Skip loading --cache-file; everything is re-derived (the "
                "file is still rewritten)");
}

void load_cache(const CacheOpts& o, SequenceCache& cache) {
  if (o.file.empty() || o.no_cache) return;
  if (!std::filesystem::exists(o.file)) return;  // first run creates it
  ktile::load_cache_file(o.file, cache);
}

void save_cache(const CacheOpts& o, const SequenceCache& cache) {
  if (o.file.empty()) return;
  ktile::save_cache_file(o.file, cache);
}

std::ostream& output_stream(const std::string& out_path, std::ofstream& file) {
  if (out_path.empty()) return std::cout;
  file.open(out_path, std::ios::trunc);
  if (!file) ktile::fail(Errc::IoError, "cannot write " + out_path);
  return file;
}

// ---- table ----

struct TableRow {
  std::string label;
  std::vector<Natural> values;
};

std::vector<TableRow> table_rows(long lo, long hi, SequenceCache& cache) {
  std::vector<TableRow> rows = {{"F_n", {}},    {"F(3,n)", {}},
                                {"F(4,n)", {}}, {"L_n", {}},
                                {"L(3,n)", {}}, {"L(4,n)", {}}};
  for (long n = lo; n <= hi; ++n) {
    rows[0].values.push_back(ktile::classic_fib(n, cache));
    rows[1].values.push_back(ktile::gen_fib(3, n, cache));
    rows[2].values.push_back(ktile::gen_fib(4, n, cache));
    rows[3].values.push_back(ktile::classic_lucas(n, cache));
    rows[4].values.push_back(ktile::gen_lucas(3, n, cache));
    rows[5].values.push_back(ktile::gen_lucas(4, n, cache));
  }
  return rows;
}

void render_table_text(std::ostream& out, long lo, long hi,
                       const std::vector<TableRow>& rows) {
  const long cols = hi - lo + 1;
  std::size_t label_w = 1;  // the "n" header
  for (const auto& r : rows) label_w = std::max(label_w, r.label.size());
  std::vector<std::size_t> col_w(cols);
  for (long j = 0; j < cols; ++j) {
    col_w[j] = std::to_string(lo + j).size();
    for (const auto& r : rows)
      col_w[j] = std::max(col_w[j], r.values[j].get_str().size());
  }
  auto emit_row = [&](const std::string& label,
                      const std::function<std::string(long)>& cell) {
    out << label << std::string(label_w - label.size(), ' ');
    for (long j = 0; j < cols; ++j) {
      std::string v = cell(j);
      out << "  " << std::string(col_w[j] - v.size(), ' ') << v;
    }
    out << '\n';
  };
  emit_row("n", [&](long j) { return std::to_string(lo + j); });
  for (const auto& r : rows)
    emit_row(r.label, [&](long j) { return r.values[j].get_str(); });
}

int run_table(const std::string& n_range, const std::string& format,
              const CacheOpts& cache_opts, const std::string& out_path) {
  Range r = parse_range(n_range, "--n");
  if (r.lo < 0) ktile::fail(Errc::InvalidArgument, "--n bounds must be >= 0");
  SequenceCache cache;
  load_cache(cache_opts, cache);
  auto rows = table_rows(r.lo, r.hi, cache);
  std::ofstream file;
  std::ostream& out = output_stream(out_path, file);
  if (format == "text") {
    render_table_text(out, r.lo, r.hi, rows);
  } else if (format == "csv") {
    out << "n";
    for (const auto& row : rows) out << ',' << row.label;
    out << '\n';
    for (long j = 0; j <= r.hi - r.lo; ++j) {
      out << (r.lo + j);
      for (const auto& row : rows) out << ',' << row.values[j].get_str();
      out << '\n';
    }
  } else {
    nlohmann::json j;
    j["n"] = nlohmann::json::array();
    for (long n = r.lo; n <= r.hi; ++n) j["n"].push_back(n);
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json jr{{"label", row.label},
                        {"values", nlohmann::json::array()}};
      for (const auto& v : row.values) jr["values"].push_back(v.get_str());
      j["rows"].push_back(std::move(jr));
    }
    out << j.dump(2) << '\n';
  }
  save_cache(cache_opts, cache);
  return 0;
}

// ---- enumerate ----

int run_enumerate(const std::string& klass, int k, long n, long limit_flag) {
  long limit = enumeration_limit(limit_flag);
  long count = 0;
  auto emit = [&](const Tiling& t) {
    std::cout << ktile::encode(t) << '\n';
    ++count;
  };
  if (klass == "a")
    ktile::for_each_type_a(k, n, emit, limit);
  else
    ktile::for_each_type_b(k, n, emit, limit);
  std::cout << "count=" << count << '\n';
  return 0;
}

// ---- decompose ----

int run_decompose(const std::string& kind_text, int k,
                  const std::string& code) {
  auto kind = ktile::kind_from_name(kind_text);
  if (!kind)
    ktile::fail(Errc::InvalidArgument,
                "unknown decomposition kind '" + kind_text + "'");
  long width = 0;
  for (char c : code) width += (c == 'g') ? k : 1;
  Tiling t = ktile::decode(k, width - 1, code);
  ktile::Decomposition d;
  switch (*kind) {
    case ktile::DecompositionKind::LastPiece:
      d = ktile::split_last_piece(t);
      break;
    case ktile::DecompositionKind::RightmostGray:
      d = ktile::split_rightmost_gray(t);
      break;
    case ktile::DecompositionKind::TrailingWhiteRun:
      d = ktile::split_trailing_white_run(t);
      break;
    case ktile::DecompositionKind::BeforeTail:
      d = ktile::split_before_tail(t);
      break;
    case ktile::DecompositionKind::LastTwoGrays:
      d = ktile::split_last_two_grays(t);
      break;
  }
  std::cout << "kind=" << ktile::kind_name(d.kind) << " k=" << k
            << " n=" << t.n() << " code=" << code
            << " remainder=" << ktile::encode(d.remainder)
            << " removed=" << ktile::code_of(d.removed);
  for (const auto& [name, value] : d.params)
    std::cout << ' ' << name << '=' << value;
  std::cout << '\n';
  return 0;
}

// ---- oracle ----

int run_oracle(const std::string& k_range, const std::string& n_range,
               long limit_flag, const CacheOpts& cache_opts) {
  Range kr = parse_k_range(k_range);
  Range nr = parse_range(n_range, "--n");
  if (nr.lo < 0) ktile::fail(Errc::InvalidArgument, "--n bounds must be >= 0");
  long limit = enumeration_limit(limit_flag);
  SequenceCache cache;
  load_cache(cache_opts, cache);
  long cells = 0;
  long mismatches = 0;
  for (long k = kr.lo; k <= kr.hi; ++k) {
    for (long n = nr.lo; n <= nr.hi; ++n) {
      long count_a = 0;
      long count_b = 0;
      ktile::for_each_type_a(
          static_cast<int>(k), n,
          [&](const Tiling& t) {
            ++count_a;
            if (ktile::is_type_b(t)) ++count_b;
          },
          limit);
      Natural fib = ktile::gen_fib(static_cast<int>(k), n, cache);
      Natural lucas = ktile::gen_lucas(static_cast<int>(k), n, cache);
      bool ok = fib == count_a && lucas == count_b;
      ++cells;
      if (!ok) ++mismatches;
      std::cout << "k=" << k << " n=" << n << " type_a=" << count_a
                << " fib=" << fib.get_str() << " type_b=" << count_b
                << " lucas=" << lucas.get_str() << (ok ? " ok" : " MISMATCH")
                << '\n';
    }
  }
  std::cout << "cells=" << cells << " mismatches=" << mismatches << '\n';
  save_cache(cache_opts, cache);
  return mismatches == 0 ? 0 : 1;
}

// ---- verify ----

int run_verify(std::string ids_csv, const std::string& k_range, long n_max,
               bool explore, const std::string& format,
               const std::string& out_path, const std::string& convention,
               bool list_only, const CacheOpts& cache_opts) {
  if (list_only) {
    for (const auto& d : ktile::registry())
      std::cout << d.id << "  [" << ktile::variant_name(d.variant) << "]  "
                << d.statement << '\n';
    return 0;
  }
  std::vector<ktile::IdentityDescriptor> selected;
  if (ids_csv.empty()) {
    selected = ktile::registry();
  } else {
    std::stringstream ss(ids_csv);
    std::string id;
    while (std::getline(ss, id, ','))
      if (!id.empty()) selected.push_back(ktile::find_identity(id));
    if (selected.empty())
      ktile::fail(Errc::InvalidArgument, "--ids selected nothing");
  }
  if (convention == "classic")
    for (auto& d : selected)
      if (d.id == "I-4.5p")
        d = ktile::make_cor_45(ktile::LucasConvention::ClassicalConstants);

  Range kr = parse_k_range(k_range);
  ktile::GridSpec grid;
  grid.k_min = static_cast<int>(kr.lo);
  grid.k_max = static_cast<int>(kr.hi);
  grid.n_max = n_max;
  grid.explore = explore;

  SequenceCache cache;
  load_cache(cache_opts, cache);
  ktile::VerificationReport report = ktile::verify_grid(selected, grid, cache);
  std::ofstream file;
  std::ostream& out = output_stream(out_path, file);
  if (format == "json")
    out << ktile::report_to_json(report);
  else if (format == "csv")
    ktile::write_report_csv(out, report);
  else
    ktile::write_report_text(out, report);
  save_cache(cache_opts, cache);
  return report.all_matched() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact generalized Fibonacci/Lucas numbers, board-tiling enumeration, "
      "and identity verification"};
  app.require_subcommand(1);
  auto format_check = CLI::IsMember({"text", "json", "csv"});

  auto* table = app.add_subcommand(
      "table", "Print the F/L value table (defaults reproduce n = 0..11)");
  std::string table_n = "0..11";
  std::string table_format = "text";
  std::string table_out;
  CacheOpts table_cache;
  table->add_option("--n", table_n, "Column range, N or LO..HI")
      ->capture_default_str();
  table->add_option("--format", table_format, "text, json, or csv")
      ->check(format_check)
      ->capture_default_str();
  table->add_option("--out", table_out, "Write to this file instead of stdout");
  add_cache_opts(table, table_cache);

  auto* enumerate = app.add_subcommand(
      "enumerate", "Stream every tiling of one class as code lines");
  std::string enum_class;
  int enum_k = 0;
  long enum_n = 0;
  long enum_limit = -1;
  enumerate->add_option("--class", enum_class, "Tiling class: a or b")
      ->required()
      ->check(CLI::IsMember({"a", "b"}));
  enumerate->add_option("--k", enum_k, "Gray block width, >= 2")->required();
  enumerate->add_option("--n", enum_n, "Board index (board has n+1 cells)")
      ->required();
  enumerate
      ->add_option("--limit", enum_limit,
                   "Enumeration bound override (default 24, or "
                   "KTILE_ENUM_LIMIT)")
      ->check(CLI::NonNegativeNumber);

  auto* decompose = app.add_subcommand(
      "decompose", "Apply one structural decomposition to a coded tiling");
  std::string dec_kind;
  int dec_k = 0;
  std::string dec_code;
  decompose
      ->add_option("--kind", dec_kind,
                   "last-piece, rightmost-gray, trailing-white-run, "
                   "before-tail, or last-two-grays")
      ->required();
  decompose->add_option("--k", dec_k, "Gray block width, >= 2")->required();
  decompose->add_option("--code", dec_code, "Tiling code over w/b/g")
      ->required();

  auto* oracle = app.add_subcommand(
      "oracle", "Compare enumerated tiling counts against the recurrences");
  std::string oracle_k = "2..5";
  std::string oracle_n = "0..14";
  long oracle_limit = -1;
  std::string oracle_out;  // unused; oracle prints to stdout
  CacheOpts oracle_cache;
  oracle->add_option("--k", oracle_k, "k range, N or LO..HI")
      ->capture_default_str();
  oracle->add_option("--n", oracle_n, "n range, N or LO..HI")
      ->capture_default_str();
  oracle
      ->add_option("--limit", oracle_limit,
                   "Enumeration bound override (default 24, or "
                   "KTILE_ENUM_LIMIT)")
      ->check(CLI::NonNegativeNumber);
  add_cache_opts(oracle, oracle_cache);

  auto* verify = app.add_subcommand(
      "verify", "Evaluate registered identities over a (k,n) grid");
  std::string verify_ids;
  std::string verify_k = "2..6";
  long verify_n_max = 40;
  bool verify_explore = false;
  std::string verify_format = "text";
  std::string verify_out;
  std::string verify_convention = "l2";
  bool verify_list = false;
  CacheOpts verify_cache;
  verify->add_option("--ids", verify_ids,
                     "Comma-separated identity ids (default: all)");
  verify->add_option("--k", verify_k, "k range, N or LO..HI")
      ->capture_default_str();
  verify->add_option("--n-max", verify_n_max,
                     "Upper bound for each identity's free variable")
      ->capture_default_str();
  verify->add_flag("--explore", verify_explore,
                   "Also evaluate exploration bands (reported, never gating)");
  verify->add_option("--format", verify_format, "text, json, or csv")
      ->check(format_check)
      ->capture_default_str();
  verify->add_option("--out", verify_out, "Write to this file instead of stdout");
  verify
      ->add_option("--lucas-convention", verify_convention,
                   "Small Lucas indices in I-4.5p: l2 (L(2,m) = m+1) or "
                   "classic (2, 1, 3)")
      ->check(CLI::IsMember({"l2", "classic"}))
      ->capture_default_str();
  verify->add_flag("--list", verify_list, "List the registry and exit");
  add_cache_opts(verify, verify_cache);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (table->parsed())
      return run_table(table_n, table_format, table_cache, table_out);
    if (enumerate->parsed())
      return run_enumerate(enum_class, enum_k, enum_n, enum_limit);
    if (decompose->parsed()) return run_decompose(dec_kind, dec_k, dec_code);
    if (oracle->parsed())
      return run_oracle(oracle_k, oracle_n, oracle_limit, oracle_cache);
    if (verify->parsed())
      return run_verify(verify_ids, verify_k, verify_n_max, verify_explore,
                        verify_format, verify_out, verify_convention,
                        verify_list, verify_cache);
  } catch (const ktile::Error& e) {
    std::cerr << "ktile: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ktile: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
