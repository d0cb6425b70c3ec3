#include "hypstab/cli/app.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <iomanip>

#include "hypstab/core/errors.hpp"
#include "hypstab/ffcurves/fq_poly.hpp"
#include "hypstab/ffcurves/galois_field.hpp"

namespace hypstab {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

std::vector<int> parse_int_list(const std::string& s, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      require(pos == tok.size(), "");
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(flag + ": expected comma-separated integers, got '" + s + "'");
    }
  }
  require(!out.empty(), flag + ": empty list");
  return out;
}

void check_q(std::uint64_t q) {
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint64_t r = q;
  while (p && r % p == 0) r /= p;
  require(q >= 3 && r == 1 && p != 2, "--q must be an odd prime power, got " + std::to_string(q));
  require(q <= 49, "--q must be at most 49 for brute-force enumeration");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"stable twisted homology series and hyperelliptic point-count verification", "hypstab"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_config("--config", "", "TOML-like config file; explicit flags take precedence");

  std::string format = "json", cache;
  int workers = 1;
  app.add_option("--format", format, "json | csv | pretty")->capture_default_str();
  app.add_option("--workers", workers, "worker threads for curve enumeration")->capture_default_str();
  app.add_option("--cache", cache, "directory for enumeration cache files");

  auto* series = app.add_subcommand("series", "Poincare rows of a stable series");
  std::string family = "braid-schur", lambdas;
  int zmax = 8;
  series->add_option("--family", family, "braid-schur | braid-symplectic | hyperelliptic-closed | mcg-open | mcg-closed")
      ->capture_default_str();
  series->add_option("--lambda", lambdas, "partitions, e.g. \"2,1,1;4;∅\"")->required();
  series->add_option("--zmax", zmax, "largest homological degree")->capture_default_str();

  auto* traces = app.add_subcommand("traces", "brute-force Z_n coefficients against stable traces");
  std::uint64_t q = 3;
  int n = 5, max_weight = 4;
  std::string slack = "2";
  traces->add_option("--q", q)->capture_default_str();
  traces->add_option("--n", n, "degree of d")->capture_default_str();
  traces->add_option("--max-weight", max_weight)->capture_default_str();
  traces->add_option("--slack", slack, "constant in front of the error bound")->capture_default_str();

  auto* moments = app.add_subcommand("moments", "moments of central L-values against the character identity");
  std::string genus = "1,2", rs = "1,2,3";
  int cutoff = 8;
  moments->add_option("--q", q)->capture_default_str();
  moments->add_option("--genus", genus, "comma-separated genera")->capture_default_str();
  moments->add_option("--r", rs, "comma-separated moment orders")->capture_default_str();
  moments->add_option("--cutoff", cutoff, "weight cutoff of the Q1 prediction")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "invariant suites of all modules");
  std::string profile = "quick", inject;
  verify->add_option("--profile", profile, "quick | full")->capture_default_str();
  verify->add_option("--inject-fault", inject, "negative control: reciprocity");

  std::vector<const char*> argv{"hypstab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    Format fmt;
    try {
      fmt = parse_format(format);
    } catch (const Error&) {
      throw UsageError("--format must be json, csv or pretty, got '" + format + "'");
    }
    require(workers >= 1 && workers <= 256, "--workers must be between 1 and 256");
    EnumOptions opt(workers, cache);
    auto t0 = std::chrono::steady_clock::now();
    int status = 0;

    if (*series) {
      Family fam;
      try {
        fam = parse_family(family);
      } catch (const Error&) {
        throw UsageError("unknown --family '" + family + "'");
      }
      std::vector<Partition> ls;
      try {
        ls = parse_partition_list(lambdas);
      } catch (const Error& e) {
        throw UsageError(std::string("--lambda: ") + e.what());
      }
      require(zmax >= 0 && zmax <= 24, "--zmax must be between 0 and 24");
      for (const auto& l : ls) require(l.weight() <= 12, "--lambda: partitions of weight at most 12 are supported");
      emit_series(out, series_rows(fam, ls, zmax), fmt);
    } else if (*traces) {
      check_q(q);
      require(n >= 1 && n <= 12, "--n must be between 1 and 12");
      require(max_weight >= 0 && max_weight <= 8, "--max-weight must be between 0 and 8");
      Rational sl;
      try {
        sl = parse_rational(slack);
      } catch (const Error&) {
        throw UsageError("--slack must be a rational number");
      }
      require(sl > 0, "--slack must be positive");
      auto rep = trace_report(*make_field(q), n, max_weight, opt, sl);
      emit_traces(out, rep, fmt);
      status = rep.all_pass() ? 0 : 1;
    } else if (*moments) {
      check_q(q);
      auto gs = parse_int_list(genus, "--genus");
      auto rr = parse_int_list(rs, "--r");
      for (int g : gs) require(g >= 1 && g <= 4, "--genus values must be between 1 and 4");
      for (int r : rr) require(r >= 1 && r <= 4, "--r values must be between 1 and 4");
      require(cutoff >= 1 && cutoff <= 12, "--cutoff must be between 1 and 12");
      MomentsReport rep{Integer(static_cast<unsigned long>(q)), {}};
      auto F = make_field(q);
      for (int g : gs)
        for (int r : rr) {
          rep.rows.push_back(moment_sum(*F, g, r, opt, cutoff));
          if (!rep.rows.back().identity_holds() || !rep.rows.back().rational()) status = 1;
        }
      emit_moments(out, rep, fmt);
    } else if (*verify) {
      require(profile == "quick" || profile == "full", "--profile must be quick or full");
      require(inject.empty() || inject == "reciprocity", "--inject-fault supports only 'reciprocity'");
      g_flip_reciprocity = inject == "reciprocity";
      auto rows = run_verify(profile == "full" ? Profile::Full : Profile::Quick, opt, err);
      g_flip_reciprocity = false;
      emit_verify(out, rows, profile, fmt);
      for (const auto& r : rows)
        if (!r.pass) status = 1;
    }
    err << "[time] " << std::fixed << std::setprecision(2)
        << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    g_flip_reciprocity = false;
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hypstab
