#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "hypstab/arithstat/arithstat.hpp"
#include "hypstab/series/stable_series.hpp"
#include "hypstab/symfunc/graded.hpp"

namespace hypstab {

using json = nlohmann::ordered_json;

json partition_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const json& j);
json to_json(const GradedElement& g);
GradedElement graded_from_json(const json& j);
json to_json(const QAdjSqrt& x);
QAdjSqrt qadj_from_json(const json& j);

struct SeriesRow {
  std::string family;
  Partition lambda;
  std::vector<Integer> poincare;  // dim H_k, k = 0..z_max
  std::string rational_fit;
  bool operator==(const SeriesRow&) const = default;
};
std::vector<SeriesRow> series_rows(Family f, const std::vector<Partition>& lambdas, int z_max, int guard = 6);

json to_json(const SeriesRow& r);
SeriesRow series_row_from_json(const json& j);

json to_json(const TraceReport& r);
TraceReport trace_report_from_json(const json& j);

struct MomentsReport {
  Integer q;
  std::vector<MomentReport> rows;
};
json to_json(const MomentReport& r);
MomentReport moment_report_from_json(const json& j);
bool same_report(const MomentReport& a, const MomentReport& b);

struct VerifyRow {
  std::string suite;
  bool pass = false;
  std::string detail;
  double seconds = 0;  // reported on stderr only
  bool operator==(const VerifyRow& o) const { return suite == o.suite && pass == o.pass && detail == o.detail; }
};
json to_json(const VerifyRow& r);
VerifyRow verify_row_from_json(const json& j);

enum class Format { Json, Csv, Pretty };
Format parse_format(const std::string& s);

void emit_series(std::ostream& os, const std::vector<SeriesRow>& rows, Format f);
void emit_traces(std::ostream& os, const TraceReport& r, Format f);
void emit_moments(std::ostream& os, const MomentsReport& r, Format f);
void emit_verify(std::ostream& os, const std::vector<VerifyRow>& rows, const std::string& profile, Format f);

}  // namespace hypstab
