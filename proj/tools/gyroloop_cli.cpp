// Command-line front end: validation, predicate queries, gyration tables,
// batch classification, enumeration and structure reports over Cayley-table
// corpora. Exit codes: 0 success / property true, 1 property false,
// 2 usage or processing error.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gyroloop/enumeration.hpp"
#include "gyroloop/gyration.hpp"
#include "gyroloop/io.hpp"
#include "gyroloop/morphisms.hpp"
#include "gyroloop/pipeline.hpp"
#include "gyroloop/structure.hpp"

using namespace gyroloop;

namespace {

int env_threads() {
  if (const char* env = std::getenv("GYROLOOP_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;
}

double env_time_budget() {
  if (const char* env = std::getenv("GYROLOOP_TIME_BUDGET_SECS")) {
    const double v = std::atof(env);
    if (v > 0) return v;
  }
  return 0;
}

const char* yn(bool v) { return v ? "yes" : "no"; }

struct LoadedLoop {
  std::string name;
  Loop loop;
};

std::vector<LoadedLoop> load_loops(const std::vector<std::string>& files, bool strict) {
  std::vector<LoadedLoop> out;
  const Corpus corpus = read_corpus(files, strict);
  for (const std::string& diag : corpus.diagnostics) std::cerr << diag << "\n";
  for (const CorpusEntry& entry : corpus.entries) {
    try {
      out.push_back(LoadedLoop{entry.name, Loop::from_table(entry.table)});
    } catch (const Error& e) {
      std::cerr << entry.name << ": " << e.what() << "\n";
      if (strict) throw;
    }
  }
  return out;
}

Loop first_loop(const std::string& file) {
  const Corpus corpus = read_corpus({file}, true);
  if (corpus.entries.empty()) throw IoError(file + ": no tables found");
  return Loop::from_table(corpus.entries.front().table);
}

int cmd_validate(const std::vector<std::string>& files, bool strict) {
  const Corpus corpus = read_corpus(files, strict);
  for (const std::string& diag : corpus.diagnostics) std::cerr << diag << "\n";
  bool all_ok = corpus.diagnostics.empty();
  for (const CorpusEntry& entry : corpus.entries) {
    try {
      const Loop loop = Loop::from_table(entry.table);
      std::cout << entry.name << ": loop of order " << loop.order()
                << ", identity " << loop.identity() << "\n";
    } catch (const Error& e) {
      std::cout << entry.name << ": INVALID (" << e.what() << ")\n";
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_props(const std::vector<std::string>& files, bool strict) {
  for (const LoadedLoop& item : load_loops(files, strict)) {
    std::cout << item.name << ": order=" << item.loop.order()
              << " loop=yes left_bol=" << yn(is_left_bol(item.loop))
              << " moufang=" << yn(is_moufang(item.loop))
              << " group=" << yn(is_associative(item.loop)) << "\n";
  }
  return 0;
}

int cmd_gyr(const std::string& file, const std::string& pair) {
  const Loop loop = first_loop(file);
  const auto comma = pair.find(',');
  if (comma == std::string::npos)
    throw Error("--pair expects two comma-separated element indices");
  const int a = std::stoi(pair.substr(0, comma));
  const int b = std::stoi(pair.substr(comma + 1));
  const GyrMap g = gyr(loop, a, b);
  std::cout << "gyr[" << a << "," << b << "] = " << format_cycles(g.as_perm(), true)
            << "\n";
  return 0;
}

int cmd_gyrtable(const std::string& file) {
  const Loop loop = first_loop(file);
  const GyroProfile profile = gyration_table(loop);
  if (!profile.gyrators.empty()) std::cout << "non-identity gyroautomorphisms:\n";
  std::cout << render_gyration_table(profile);
  return 0;
}

int cmd_isgyro(const std::string& file) {
  const Loop loop = first_loop(file);
  const GyroCheck check = is_gyrogroup(loop);
  if (check.ok) {
    const GyratorScan scan = gyrator_set(loop);
    std::cout << "gyrogroup (order " << loop.order() << ", "
              << scan.non_identity.size() << " non-identity gyrators";
    if (scan.non_identity.empty()) std::cout << ", degenerate: a group";
    std::cout << ")\n";
    return 0;
  }
  std::cout << "not a gyrogroup: " << check.describe() << "\n";
  return 1;
}

int cmd_classify(const std::vector<std::string>& files, const std::string& out_path,
                 const std::string& format, bool strict) {
  const Corpus corpus = read_corpus(files, strict);
  for (const std::string& diag : corpus.diagnostics) std::cerr << diag << "\n";
  const ClassificationReport report = classify(corpus, env_threads());
  for (const SummaryRow& s : report.summary)
    std::cout << "order " << s.order << ": alpha=" << s.alpha << " beta=" << s.beta
              << " (" << s.status << ")\n";
  if (!out_path.empty()) {
    const ReportFormat fmt = format == "json" ? ReportFormat::Json : ReportFormat::Csv;
    emit_report(report, fmt, out_path);
    std::cout << "report written to " << out_path << "\n";
  }
  return 0;
}

int cmd_enumerate(int order, bool non_associative, const std::string& out_path) {
  EnumOptions opts;
  opts.non_associative_only = non_associative;
  opts.threads = env_threads();
  opts.time_budget_secs = env_time_budget();
  const EnumerationResult res = enumerate_left_bol(order, opts);
  std::cout << res.loops.size() << " left Bol loop(s) of order " << order;
  if (non_associative) std::cout << " (non-associative only)";
  std::cout << (res.complete ? "" : " [INCOMPLETE: time budget exceeded]") << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot open " + out_path);
    if (!res.complete) out << "# status: incomplete (time budget exceeded)\n\n";
    for (size_t i = 0; i < res.loops.size(); ++i) {
      if (i) out << "\n";
      write_table(out, res.loops[i].table(), "bol" + std::to_string(order) + "_" +
                                                 std::to_string(i));
    }
    std::cout << "corpus written to " << out_path << "\n";
  }
  return res.complete ? 0 : 2;
}

int cmd_iso(const std::string& file_a, const std::string& file_b) {
  const Loop a = first_loop(file_a);
  const Loop b = first_loop(file_b);
  const auto witness = are_isomorphic(a, b);
  if (witness) {
    std::cout << "isomorphic via " << format_cycles(*witness, true) << "\n";
    return 0;
  }
  std::cout << "not isomorphic\n";
  return 1;
}

int cmd_aut(const std::string& file) {
  const Loop loop = first_loop(file);
  const auto aut = automorphism_group(loop);
  std::cout << "automorphism group of order " << aut.size() << "\n";
  for (const Perm& p : aut) std::cout << format_cycles(p, true) << "\n";
  return 0;
}

int cmd_derived(const std::string& file) {
  const Loop loop = first_loop(file);
  const GyroCheck check = is_gyrogroup(loop);
  if (!check.ok) {
    std::cout << "not a gyrogroup: " << check.describe() << "\n";
    return 2;
  }
  const int n = loop.order();
  int nonzero = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (commutator(loop, a, b) != loop.identity()) ++nonzero;
  const Subsystem derived = derived_subgyrogroup(loop);
  std::cout << "non-vanishing commutators: " << nonzero << " of " << n * n << " pairs\n";
  std::cout << "derived subgyrogroup order " << derived.size() << ": {";
  for (size_t i = 0; i < derived.members.size(); ++i) {
    if (i) std::cout << ",";
    std::cout << derived.members[i];
  }
  std::cout << "}\n";
  std::cout << "subgroup: " << yn(is_subgroup(derived)) << "\n";
  const NormalityCheck normal = is_normal(derived);
  std::cout << "normal (congruence criterion): " << yn(normal.normal) << "\n";
  std::cout << "gyration-stable: " << yn(gyr_stable(derived)) << "\n";
  return 0;
}

int cmd_sweep(const std::vector<std::string>& files, bool strict) {
  std::vector<Loop> gyrogroups;
  std::vector<std::string> names;
  for (LoadedLoop& item : load_loops(files, strict)) {
    if (!is_gyrogroup(item.loop).ok) {
      std::cerr << item.name << ": skipped (not a gyrogroup)\n";
      continue;
    }
    names.push_back(item.name);
    gyrogroups.push_back(std::move(item.loop));
  }
  const std::vector<size_t> hits = commutativity_sweep(gyrogroups);
  if (hits.empty()) {
    std::cout << "no commutative non-associative gyrogroup among " << gyrogroups.size()
              << " input(s)\n";
    return 0;
  }
  for (size_t idx : hits)
    std::cout << "counterexample: " << names[idx] << " (commutative but not a group)\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite loop and gyrogroup classification toolkit"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string file, file_b, out_path, pair;
  std::string format = "csv";
  bool strict = false;
  bool non_associative = false;
  int order = 0;

  auto* validate = app.add_subcommand("validate", "check tables for the loop axioms");
  validate->add_option("files", files)->required()->expected(-1);
  validate->add_flag("--strict", strict, "treat malformed tables as fatal");

  auto* props = app.add_subcommand("props", "print loop/Bol/Moufang/group flags");
  props->add_option("files", files)->required()->expected(-1);
  props->add_flag("--strict", strict);

  auto* gyr_cmd = app.add_subcommand("gyr", "print one gyration map in cycle notation");
  gyr_cmd->add_option("file", file)->required();
  gyr_cmd->add_option("--pair", pair, "element pair a,b (0-based)")->required();

  auto* gyrtable = app.add_subcommand("gyrtable", "print the gyration letter table");
  gyrtable->add_option("file", file)->required();

  auto* isgyro = app.add_subcommand("isgyro", "decide whether a table is a gyrogroup");
  isgyro->add_option("file", file)->required();

  auto* classify_cmd = app.add_subcommand("classify", "batch classification report");
  classify_cmd->add_option("files", files)->required()->expected(-1);
  classify_cmd->add_option("--out", out_path, "report path");
  classify_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  classify_cmd->add_flag("--strict", strict);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate left Bol loops up to isomorphism");
  enumerate->add_option("--order", order, "loop order")->required();
  enumerate->add_flag("--non-associative", non_associative, "drop group tables");
  enumerate->add_option("--out", out_path, "corpus output path");

  auto* iso = app.add_subcommand("iso", "test two tables for isomorphism");
  iso->add_option("fileA", file)->required();
  iso->add_option("fileB", file_b)->required();

  auto* aut = app.add_subcommand("aut", "print the automorphism group");
  aut->add_option("file", file)->required();

  auto* derived = app.add_subcommand("derived", "commutators and the derived subgyrogroup");
  derived->add_option("file", file)->required();

  auto* sweep = app.add_subcommand("sweep-commutative",
                                   "search gyrogroup corpora for commutative non-groups");
  sweep->add_option("files", files)->required()->expected(-1);
  sweep->add_flag("--strict", strict);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(files, strict);
    if (props->parsed()) return cmd_props(files, strict);
    if (gyr_cmd->parsed()) return cmd_gyr(file, pair);
    if (gyrtable->parsed()) return cmd_gyrtable(file);
    if (isgyro->parsed()) return cmd_isgyro(file);
    if (classify_cmd->parsed()) return cmd_classify(files, out_path, format, strict);
    if (enumerate->parsed()) return cmd_enumerate(order, non_associative, out_path);
    if (iso->parsed()) return cmd_iso(file, file_b);
    if (aut->parsed()) return cmd_aut(file);
    if (derived->parsed()) return cmd_derived(file);
    if (sweep->parsed()) return cmd_sweep(files, strict);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
