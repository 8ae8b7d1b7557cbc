#include "gyroloop/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "gyroloop/gyration.hpp"
#include "gyroloop/morphisms.hpp"
#include "gyroloop/structure.hpp"

namespace gyroloop {

namespace {

ClassifiedRow classify_entry(const CorpusEntry& entry) {
  ClassifiedRow row;
  row.name = entry.name;
  row.order = entry.table.order();
  try {
    Loop loop = Loop::from_table(entry.table);
    row.is_loop = true;
    GyroProfile profile = gyration_table(loop);
    row.is_left_bol = profile.is_left_bol;
    row.is_moufang = profile.is_moufang;
    row.is_group = profile.is_group;
    row.is_gyrogroup = profile.is_gyrogroup_flag;
    row.is_gyrocommutative = profile.is_gyrocommutative;
    row.non_identity_gyrator_count = profile.non_identity_gyrator_count();
    row.gyrators_closed = profile.gyrators_closed;
    row.key = canonical_key(loop);
    row.canonical_key_digest = key_digest(row.key);
    if (profile.is_gyrogroup_flag) {
      Subsystem derived = derived_subgyrogroup(loop);
      row.derived_order = derived.size();
      row.derived_is_subgroup = is_subgroup(derived);
      row.derived_is_normal = is_normal(derived).normal;
    }
  } catch (const Error& e) {
    row.is_loop = false;
    row.error = e.what();
  }
  return row;
}

std::vector<SummaryRow> summarize(const std::vector<ClassifiedRow>& rows) {
  // Count isomorphism classes of non-degenerate gyrogroups per order.
  std::map<int, std::set<std::vector<std::uint8_t>>> alpha, beta;
  std::set<int> orders;
  for (const ClassifiedRow& row : rows) {
    if (!row.is_loop) continue;
    orders.insert(row.order);
    const bool nondegenerate = row.is_gyrogroup.value_or(false) &&
                               row.non_identity_gyrator_count.value_or(0) > 0;
    if (!nondegenerate) continue;
    alpha[row.order].insert(row.key);
    if (row.is_gyrocommutative.value_or(false)) beta[row.order].insert(row.key);
  }
  std::vector<SummaryRow> out;
  for (int order : orders) {
    SummaryRow s;
    s.order = order;
    s.alpha = static_cast<int>(alpha[order].size());
    s.beta = static_cast<int>(beta[order].size());
    s.status = (order == 24 || order == 27 || order == 30) ? "partial" : "exact";
    out.push_back(s);
  }
  return out;
}

}  // namespace

ClassificationReport classify_serial(const Corpus& corpus) {
  ClassificationReport report;
  report.rows.reserve(corpus.entries.size());
  for (const CorpusEntry& entry : corpus.entries)
    report.rows.push_back(classify_entry(entry));
  report.summary = summarize(report.rows);
  return report;
}

ClassificationReport classify(const Corpus& corpus, int threads) {
#ifndef _OPENMP
  (void)threads;
  return classify_serial(corpus);
#else
  ClassificationReport report;
  report.rows.resize(corpus.entries.size());
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (long long i = 0; i < static_cast<long long>(corpus.entries.size()); ++i)
    report.rows[static_cast<size_t>(i)] = classify_entry(corpus.entries[static_cast<size_t>(i)]);
  report.summary = summarize(report.rows);
  return report;
#endif
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string opt_bool(const std::optional<bool>& v) {
  if (!v) return "";
  return *v ? "true" : "false";
}

std::string opt_int(const std::optional<int>& v) {
  if (!v) return "";
  return std::to_string(*v);
}

}  // namespace

std::string emit_csv(const ClassificationReport& report) {
  std::string out =
      "name,order,is_loop,is_left_bol,is_moufang,is_group,is_gyrogroup,"
      "is_gyrocommutative,non_identity_gyrator_count,gyrators_closed,"
      "derived_order,derived_is_subgroup,derived_is_normal,canonical_key,error\n";
  for (const ClassifiedRow& row : report.rows) {
    out += csv_escape(row.name);
    out += ',' + std::to_string(row.order);
    out += row.is_loop ? ",true" : ",false";
    out += ',' + opt_bool(row.is_left_bol);
    out += ',' + opt_bool(row.is_moufang);
    out += ',' + opt_bool(row.is_group);
    out += ',' + opt_bool(row.is_gyrogroup);
    out += ',' + opt_bool(row.is_gyrocommutative);
    out += ',' + opt_int(row.non_identity_gyrator_count);
    out += ',' + opt_bool(row.gyrators_closed);
    out += ',' + opt_int(row.derived_order);
    out += ',' + opt_bool(row.derived_is_subgroup);
    out += ',' + opt_bool(row.derived_is_normal);
    out += ',' + row.canonical_key_digest;
    out += ',' + csv_escape(row.error);
    out += '\n';
  }
  if (!report.summary.empty()) {
    out += "\norder,alpha,beta,status\n";
    for (const SummaryRow& s : report.summary) {
      out += std::to_string(s.order) + ',' + std::to_string(s.alpha) + ',' +
             std::to_string(s.beta) + ',' + s.status + '\n';
    }
  }
  return out;
}

std::string emit_json(const ClassificationReport& report) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const ClassifiedRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["name"] = row.name;
    r["order"] = row.order;
    r["is_loop"] = row.is_loop;
    auto put_bool = [&](const char* key, const std::optional<bool>& v) {
      if (v)
        r[key] = *v;
      else
        r[key] = nullptr;
    };
    auto put_int = [&](const char* key, const std::optional<int>& v) {
      if (v)
        r[key] = *v;
      else
        r[key] = nullptr;
    };
    put_bool("is_left_bol", row.is_left_bol);
    put_bool("is_moufang", row.is_moufang);
    put_bool("is_group", row.is_group);
    put_bool("is_gyrogroup", row.is_gyrogroup);
    put_bool("is_gyrocommutative", row.is_gyrocommutative);
    put_int("non_identity_gyrator_count", row.non_identity_gyrator_count);
    put_bool("gyrators_closed", row.gyrators_closed);
    put_int("derived_order", row.derived_order);
    put_bool("derived_is_subgroup", row.derived_is_subgroup);
    put_bool("derived_is_normal", row.derived_is_normal);
    r["canonical_key"] = row.canonical_key_digest;
    r["error"] = row.error;
    doc["rows"].push_back(std::move(r));
  }
  doc["summary"] = nlohmann::ordered_json::array();
  for (const SummaryRow& s : report.summary) {
    nlohmann::ordered_json j;
    j["order"] = s.order;
    j["alpha"] = s.alpha;
    j["beta"] = s.beta;
    j["status"] = s.status;
    doc["summary"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

void emit_report(const ClassificationReport& report, ReportFormat format,
                 const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << (format == ReportFormat::Csv ? emit_csv(report) : emit_json(report));
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace gyroloop
