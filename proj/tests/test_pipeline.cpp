#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gyroloop/enumeration.hpp"
#include "gyroloop/fixtures.hpp"
#include "gyroloop/io.hpp"
#include "gyroloop/pipeline.hpp"
#include "support/groups_catalog.hpp"
#include "support/properties.hpp"

using namespace gyroloop;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "gyroloop_test_" + std::to_string(counter++) + ".txt";
    std::ofstream out(path, std::ios::binary);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::string table_block(const CayleyTable& table, const std::string& name) {
  std::ostringstream out;
  write_table(out, table, name);
  return out.str();
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("read_corpus parses the fixture") {
  TempFile file(table_block(g16_table(), "g16"));
  const Corpus corpus = read_corpus({file.path});
  REQUIRE(corpus.entries.size() == 1);
  CHECK(corpus.entries[0].name == "g16");
  CHECK(corpus.entries[0].table.order() == 16);
  CHECK(corpus.entries[0].table == g16_table());
}

TEST_CASE("empty files and strictness") {
  TempFile empty("");
  CHECK(read_corpus({empty.path}).entries.empty());
  CHECK(read_corpus({empty.path}, true).entries.empty());

  TempFile junk("not a table\n");
  const Corpus lax = read_corpus({junk.path});
  CHECK(lax.entries.empty());
  CHECK_FALSE(lax.diagnostics.empty());
  CHECK_THROWS_AS(read_corpus({junk.path}, true), ParseError);

  CHECK_THROWS_AS(read_corpus({"does_not_exist.txt"}), IoError);
}

TEST_CASE("two blocks separated by a blank line") {
  const Loop c8 = testsupport::cyclic_group(8);
  const Loop d4 = testsupport::dihedral_group(4);
  TempFile file(table_block(c8.table(), "c8") + "\n" + table_block(d4.table(), "d4"));
  const Corpus corpus = read_corpus({file.path});
  REQUIRE(corpus.entries.size() == 2);
  CHECK(corpus.entries[0].name == "c8");
  CHECK(corpus.entries[1].name == "d4");
}

TEST_CASE("unnamed tables and name collisions") {
  const Loop c2 = testsupport::cyclic_group(2);
  TempFile file(table_block(c2.table(), "") + "\n" + table_block(c2.table(), "x") + "\n" +
                table_block(c2.table(), "x"));
  const Corpus corpus = read_corpus({file.path});
  REQUIRE(corpus.entries.size() == 3);
  CHECK(corpus.entries[0].name.find("_0") != std::string::npos);
  CHECK(corpus.entries[1].name == "x");
  CHECK(corpus.entries[2].name == "x_2");
}

TEST_CASE("comments may carry names and interleave tables") {
  TempFile file("# a comment\n# name: tiny\n2\n0 1\n1 0\n");
  const Corpus corpus = read_corpus({file.path});
  REQUIRE(corpus.entries.size() == 1);
  CHECK(corpus.entries[0].name == "tiny");
}

TEST_CASE("classify the order-8 corpus reproduces the 6/3 split") {
  EnumOptions opts;
  opts.non_associative_only = true;
  const auto res = enumerate_left_bol_serial(8, opts);
  REQUIRE(res.loops.size() == 6);

  Corpus corpus;
  for (size_t i = 0; i < res.loops.size(); ++i)
    corpus.entries.push_back(CorpusEntry{"bol8_" + std::to_string(i),
                                         res.loops[i].table(), "<memory>",
                                         static_cast<int>(i), 0});
  const ClassificationReport report = classify_serial(corpus);
  REQUIRE(report.summary.size() == 1);
  CHECK(report.summary[0].order == 8);
  CHECK(report.summary[0].alpha == 6);
  CHECK(report.summary[0].beta == 3);
  CHECK(report.summary[0].status == "exact");

  const std::string csv = emit_csv(report);
  CHECK(csv.find("\n8,6,3,exact\n") != std::string::npos);
}

TEST_CASE("duplicate tables are counted once in the summary") {
  EnumOptions opts;
  opts.non_associative_only = true;
  const auto res = enumerate_left_bol_serial(8, opts);
  Corpus corpus;
  corpus.entries.push_back(CorpusEntry{"a", res.loops[0].table(), "<memory>", 0, 0});
  corpus.entries.push_back(CorpusEntry{"b", res.loops[0].table(), "<memory>", 1, 0});
  const ClassificationReport report = classify_serial(corpus);
  REQUIRE(report.summary.size() == 1);
  CHECK(report.summary[0].alpha == 1);
  CHECK(report.rows.size() == 2);
}

TEST_CASE("groups are excluded from alpha and beta") {
  Corpus corpus;
  corpus.entries.push_back(CorpusEntry{"c8", testsupport::cyclic_group(8).table(), "<memory>", 0, 0});
  const ClassificationReport report = classify_serial(corpus);
  REQUIRE(report.summary.size() == 1);
  CHECK(report.summary[0].alpha == 0);
  CHECK(report.summary[0].beta == 0);
  CHECK(report.rows[0].is_gyrogroup.value_or(false));
  CHECK(report.rows[0].is_group.value_or(false));
}

TEST_CASE("invalid tables become diagnostic rows") {
  TempFile file("# name: broken\n2\n0 0\n1 1\n");
  const Corpus corpus = read_corpus({file.path});
  REQUIRE(corpus.entries.size() == 1);
  const ClassificationReport report = classify_serial(corpus);
  CHECK_FALSE(report.rows[0].is_loop);
  CHECK_FALSE(report.rows[0].error.empty());
  CHECK_FALSE(report.rows[0].is_left_bol.has_value());
  CHECK(report.summary.empty());

  const std::string csv = emit_csv(report);
  CHECK(csv.find("broken,2,false,,,,,,,,,,,") != std::string::npos);
}

TEST_CASE("report emission is deterministic and byte-stable") {
  Corpus corpus;
  corpus.entries.push_back(CorpusEntry{"g16", g16_table(), "<memory>", 0, 0});
  corpus.entries.push_back(
      CorpusEntry{"klein", testsupport::direct_product(testsupport::cyclic_group(2),
                                                       testsupport::cyclic_group(2)).table(),
                  "<memory>", 1, 0});
  const ClassificationReport report = classify_serial(corpus);
  CHECK(emit_csv(report) == emit_csv(classify_serial(corpus)));
  CHECK(emit_json(report) == emit_json(classify_serial(corpus)));

  TempFile out1("");
  TempFile out2("");
  emit_report(report, ReportFormat::Json, out1.path);
  emit_report(report, ReportFormat::Json, out2.path);
  std::ifstream f1(out1.path, std::ios::binary), f2(out2.path, std::ios::binary);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK_FALSE(s1.str().empty());
}

TEST_CASE("empty corpus emits a header-only CSV") {
  const ClassificationReport report = classify_serial(Corpus{});
  const std::string csv = emit_csv(report);
  CHECK(csv ==
        "name,order,is_loop,is_left_bol,is_moufang,is_group,is_gyrogroup,"
        "is_gyrocommutative,non_identity_gyrator_count,gyrators_closed,"
        "derived_order,derived_is_subgroup,derived_is_normal,canonical_key,error\n");
}

TEST_CASE("csv quoting") {
  Corpus corpus;
  corpus.entries.push_back(
      CorpusEntry{"weird, \"name\"", testsupport::cyclic_group(2).table(), "<memory>", 0, 0});
  const std::string csv = emit_csv(classify_serial(corpus));
  CHECK(csv.find("\"weird, \"\"name\"\"\",2,") != std::string::npos);
}

TEST_CASE("classification round-trips through the corpus text format") {
  EnumOptions opts;
  opts.non_associative_only = true;
  const auto res = enumerate_left_bol_serial(8, opts);

  std::ostringstream blob;
  for (size_t i = 0; i < res.loops.size(); ++i) {
    if (i) blob << "\n";
    write_table(blob, res.loops[i].table(), "bol8_" + std::to_string(i));
  }
  TempFile file(blob.str());
  const Corpus from_disk = read_corpus({file.path});

  Corpus in_memory;
  for (size_t i = 0; i < res.loops.size(); ++i)
    in_memory.entries.push_back(CorpusEntry{"bol8_" + std::to_string(i),
                                            res.loops[i].table(), file.path,
                                            static_cast<int>(i), 0});
  CHECK(emit_csv(classify_serial(from_disk)) == emit_csv(classify_serial(in_memory)));
}

TEST_CASE("summary marks unclassified orders as partial") {
  // A sham order-24 entry: any group will do; the flag is order-driven.
  Corpus corpus;
  corpus.entries.push_back(
      CorpusEntry{"c24", testsupport::cyclic_group(24).table(), "<memory>", 0, 0});
  const ClassificationReport report = classify_serial(corpus);
  REQUIRE(report.summary.size() == 1);
  CHECK(report.summary[0].order == 24);
  CHECK(report.summary[0].status == "partial");
}

TEST_CASE("property: deterministic report bytes") {
  CHECK(testsupport::prop_report_determinism() == "");
}

}  // TEST_SUITE
