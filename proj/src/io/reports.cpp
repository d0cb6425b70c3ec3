#include "hypstab/io/reports.hpp"

#include <iomanip>
#include <sstream>

#include "hypstab/core/errors.hpp"

namespace hypstab {

json partition_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

namespace {

json rational_terms(const Partition& lam, const Rational& c, const int* z) {
  json t;
  if (z) t["z"] = *z;
  t["partition"] = partition_json(lam);
  t["num"] = c.get_num().get_str();
  t["den"] = c.get_den().get_str();
  return t;
}

Rational rational_from(const json& t) {
  Integer num(t.at("num").get<std::string>()), den(t.at("den").get<std::string>());
  if (den == 0) throw ParseError("zero denominator");
  return frac(num, den);
}

std::string str_of(const json& j) {
  if (!j.is_string()) throw ParseError("expected a string, got " + j.dump());
  return j.get<std::string>();
}

}  // namespace

json to_json(const SymFunc& f) {
  json j;
  j["basis"] = basis_name(f.basis());
  j["max_arity"] = f.max_arity();
  j["terms"] = json::array();
  for (const auto& [lam, c] : f.terms()) j["terms"].push_back(rational_terms(lam, c, nullptr));
  return j;
}

SymFunc symfunc_from_json(const json& j) {
  SymFunc f(parse_basis(str_of(j.at("basis"))), j.at("max_arity").get<int>());
  for (const auto& t : j.at("terms")) f.add(partition_from_json(t.at("partition")), rational_from(t));
  return f;
}

json to_json(const GradedElement& g) {
  json j;
  j["basis"] = basis_name(g.basis());
  j["window"] = {{"z_min", g.window().z_min}, {"z_max", g.window().z_max}, {"max_arity", g.window().max_arity}};
  j["terms"] = json::array();
  for (const auto& [m, c] : g.terms()) j["terms"].push_back(rational_terms(m.lambda, c, &m.z));
  return j;
}

GradedElement graded_from_json(const json& j) {
  const auto& w = j.at("window");
  Window win{w.at("z_min").get<int>(), w.at("z_max").get<int>(), w.at("max_arity").get<int>()};
  GradedElement g(win, parse_basis(str_of(j.at("basis"))));
  for (const auto& t : j.at("terms")) g.add(t.at("z").get<int>(), partition_from_json(t.at("partition")), rational_from(t));
  return g;
}

json to_json(const QAdjSqrt& x) { return {{"q", x.q().get_str()}, {"a", to_string(x.a())}, {"b", to_string(x.b())}}; }

QAdjSqrt qadj_from_json(const json& j) {
  return QAdjSqrt(Integer(str_of(j.at("q"))), parse_rational(str_of(j.at("a"))), parse_rational(str_of(j.at("b"))));
}

std::vector<SeriesRow> series_rows(Family f, const std::vector<Partition>& lambdas, int z_max, int guard) {
  int arity = 2;
  for (const auto& p : lambdas) arity = std::max(arity, p.weight());
  GradedElement s = family_series(f, arity, z_max);
  BettiTable bt = betti_from_series(f, s, lambdas, z_max);
  std::vector<SeriesRow> rows;
  for (const auto& lam : lambdas) {
    SeriesRow r;
    r.family = family_name(f);
    r.lambda = lam;
    r.poincare = bt.row(lam);
    try {
      r.rational_fit = fit_rational(s.series(slot_for(f, lam)), guard).str();
    } catch (const InsufficientData&) {
      r.rational_fit = "inconclusive";
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

json to_json(const SeriesRow& r) {
  json j;
  j["family"] = r.family;
  j["lambda"] = partition_json(r.lambda);
  j["poincare"] = json::array();
  for (size_t k = 0; k < r.poincare.size(); ++k) j["poincare"].push_back({{"k", k}, {"dim", r.poincare[k].get_si()}});
  j["rational_fit"] = r.rational_fit;
  return j;
}

SeriesRow series_row_from_json(const json& j) {
  SeriesRow r;
  r.family = str_of(j.at("family"));
  r.lambda = partition_from_json(j.at("lambda"));
  for (const auto& e : j.at("poincare")) {
    if (e.at("k").get<size_t>() != r.poincare.size()) throw ParseError("poincare entries out of order");
    r.poincare.emplace_back(e.at("dim").get<long>());
  }
  r.rational_fit = str_of(j.at("rational_fit"));
  return r;
}

json to_json(const TraceReport& r) {
  json j;
  j["q"] = r.q.get_si();
  j["n"] = r.n;
  j["max_weight"] = r.max_weight;
  j["slack"] = to_string(r.slack);
  j["rows"] = json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back({{"lambda", partition_json(row.lambda)},
                         {"brute", to_string(row.brute)},
                         {"stable", to_string(row.stable)},
                         {"bound", row.bound.str()},
                         {"pass", row.pass}});
  j["pass"] = r.all_pass();
  return j;
}

TraceReport trace_report_from_json(const json& j) {
  TraceReport r;
  r.q = Integer(j.at("q").get<long>());
  r.n = j.at("n").get<int>();
  r.max_weight = j.at("max_weight").get<int>();
  r.slack = parse_rational(str_of(j.at("slack")));
  for (const auto& e : j.at("rows")) {
    TraceRow row;
    row.lambda = partition_from_json(e.at("lambda"));
    row.brute = parse_rational(str_of(e.at("brute")));
    row.stable = parse_rational(str_of(e.at("stable")));
    row.bound = PowerBound::parse(str_of(e.at("bound")));
    row.pass = e.at("pass").get<bool>();
    r.rows.push_back(row);
  }
  return r;
}

json to_json(const MomentReport& r) {
  json j;
  j["q"] = r.q.get_si();
  j["g"] = r.g;
  j["r"] = r.r;
  j["moment"] = to_json(r.moment);
  j["identity_rhs"] = to_json(r.identity_rhs);
  j["prediction"] = to_string(r.prediction);
  j["thmc_bound"] = r.thmc_bound.str();
  j["pass"] = r.identity_holds() && r.rational();
  return j;
}

MomentReport moment_report_from_json(const json& j) {
  MomentReport r;
  r.q = Integer(j.at("q").get<long>());
  r.g = j.at("g").get<int>();
  r.r = j.at("r").get<int>();
  r.moment = qadj_from_json(j.at("moment"));
  r.identity_rhs = qadj_from_json(j.at("identity_rhs"));
  r.prediction = parse_rational(str_of(j.at("prediction")));
  r.thmc_bound = PowerBound::parse(str_of(j.at("thmc_bound")));
  return r;
}

bool same_report(const MomentReport& a, const MomentReport& b) {
  return a.q == b.q && a.g == b.g && a.r == b.r && a.moment == b.moment && a.identity_rhs == b.identity_rhs &&
         a.prediction == b.prediction && a.thmc_bound.str() == b.thmc_bound.str();
}

json to_json(const VerifyRow& r) { return {{"suite", r.suite}, {"pass", r.pass}, {"detail", r.detail}}; }

VerifyRow verify_row_from_json(const json& j) {
  VerifyRow r;
  r.suite = str_of(j.at("suite"));
  r.pass = j.at("pass").get<bool>();
  r.detail = str_of(j.at("detail"));
  return r;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "pretty") return Format::Pretty;
  throw ParseError("unknown format '" + s + "' (json, csv, pretty)");
}

namespace {

std::string csv_partition(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.parts().size(); ++i) s += (i ? " " : "") + std::to_string(p.parts()[i]);
  return s;
}

std::string pass_word(bool b) { return b ? "pass" : "FAIL"; }

}  // namespace

void emit_series(std::ostream& os, const std::vector<SeriesRow>& rows, Format f) {
  if (f == Format::Json) {
    if (rows.size() == 1) {
      os << to_json(rows[0]).dump(2) << "\n";
    } else {
      json a = json::array();
      for (const auto& r : rows) a.push_back(to_json(r));
      os << a.dump(2) << "\n";
    }
  } else if (f == Format::Csv) {
    os << "family,lambda,k,dim\n";
    for (const auto& r : rows)
      for (size_t k = 0; k < r.poincare.size(); ++k) os << r.family << "," << csv_partition(r.lambda) << "," << k << "," << r.poincare[k] << "\n";
  } else {
    for (const auto& r : rows) {
      os << r.family << "  lambda=" << r.lambda.str() << "\n  dims:";
      for (const auto& d : r.poincare) os << " " << d;
      os << "\n  fit:  " << r.rational_fit << "\n";
    }
  }
}

void emit_traces(std::ostream& os, const TraceReport& r, Format f) {
  if (f == Format::Json) {
    os << to_json(r).dump(2) << "\n";
  } else if (f == Format::Csv) {
    os << "lambda,brute,stable,bound,pass\n";
    for (const auto& row : r.rows)
      os << csv_partition(row.lambda) << "," << to_string(row.brute) << "," << to_string(row.stable) << "," << row.bound.str() << ","
         << (row.pass ? "true" : "false") << "\n";
  } else {
    os << "Z_n vs stable traces, q=" << r.q << " n=" << r.n << " (slack " << to_string(r.slack) << ")\n";
    os << std::left << std::setw(12) << "lambda" << std::setw(22) << "brute" << std::setw(14) << "stable" << std::setw(14) << "bound"
       << "result\n";
    for (const auto& row : r.rows) {
      std::ostringstream b;
      b << std::setprecision(6) << row.bound.to_double();
      os << std::left << std::setw(12) << row.lambda.str() << std::setw(22) << to_string(row.brute) << std::setw(14)
         << to_string(row.stable) << std::setw(14) << b.str() << pass_word(row.pass) << "\n";
    }
  }
}

void emit_moments(std::ostream& os, const MomentsReport& r, Format f) {
  if (f == Format::Json) {
    json j;
    j["q"] = r.q.get_si();
    j["rows"] = json::array();
    bool all = true;
    for (const auto& m : r.rows) {
      j["rows"].push_back(to_json(m));
      all = all && m.identity_holds() && m.rational();
    }
    j["pass"] = all;
    os << j.dump(2) << "\n";
  } else if (f == Format::Csv) {
    os << "g,r,moment_a,moment_b,rhs_a,rhs_b,prediction,thmc_bound,pass\n";
    for (const auto& m : r.rows)
      os << m.g << "," << m.r << "," << to_string(m.moment.a()) << "," << to_string(m.moment.b()) << "," << to_string(m.identity_rhs.a())
         << "," << to_string(m.identity_rhs.b()) << "," << to_string(m.prediction) << "," << m.thmc_bound.str() << ","
         << (m.identity_holds() && m.rational() ? "true" : "false") << "\n";
  } else {
    os << "moments of central values, q=" << r.q << "\n";
    for (const auto& m : r.rows) {
      os << "  g=" << m.g << " r=" << m.r << "  moment " << m.moment.str() << "  identity " << m.identity_rhs.str() << "  Q1 "
         << std::setprecision(6) << m.prediction.get_d() << "  ThmC " << m.thmc_bound.to_double() << "  "
         << pass_word(m.identity_holds() && m.rational()) << "\n";
    }
  }
}

void emit_verify(std::ostream& os, const std::vector<VerifyRow>& rows, const std::string& profile, Format f) {
  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  if (f == Format::Json) {
    json j;
    j["profile"] = profile;
    j["rows"] = json::array();
    for (const auto& r : rows) j["rows"].push_back(to_json(r));
    j["pass"] = all;
    os << j.dump(2) << "\n";
  } else if (f == Format::Csv) {
    os << "suite,pass,detail\n";
    for (const auto& r : rows) os << r.suite << "," << (r.pass ? "true" : "false") << ",\"" << r.detail << "\"\n";
  } else {
    os << "verify " << profile << "\n";
    for (const auto& r : rows) os << "  " << std::left << std::setw(28) << r.suite << std::setw(6) << pass_word(r.pass) << r.detail << "\n";
    os << (all ? "all suites pass\n" : "FAILURES present\n");
  }
}

}  // namespace hypstab
