#include "invharm/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "invharm/errors.hpp"
#include "invharm/formulas.hpp"
#include "invharm/oracle.hpp"
#include "invharm/repr.hpp"
#include "invharm/serialize.hpp"

namespace invharm::cli {

using nlohmann::json;

namespace {

enum class Locus { Matchings, Pm, Fixed };

Locus parse_locus(const std::string& s) {
  if (s == "matchings") return Locus::Matchings;
  if (s == "pm") return Locus::Pm;
  if (s == "fixed") return Locus::Fixed;
  throw DomainError("unknown locus '" + s + "' (expected matchings, pm or fixed)");
}

std::string locus_name(Locus l) {
  switch (l) {
    case Locus::Matchings: return "matchings";
    case Locus::Pm: return "pm";
    case Locus::Fixed: return "fixed";
  }
  return "";
}

IdealKind ideal_kind(Locus l) {
  switch (l) {
    case Locus::Matchings: return IdealKind::Matchings;
    case Locus::Pm: return IdealKind::PerfectMatchings;
    case Locus::Fixed: return IdealKind::FixedCount;
  }
  return IdealKind::Matchings;
}

// Parity and bound checks shared by the single-locus commands.
Locus validated_locus(const RunConfig& c) {
  const Locus l = parse_locus(c.locus);
  if (c.n < 0) throw DomainError("--n is required and must be nonnegative");
  if (l == Locus::Pm && c.n % 2 != 0) throw DomainError("perfect matchings need an even --n");
  if (l == Locus::Fixed) {
    if (!c.a) throw DomainError("--a is required for --locus fixed");
    if (*c.a < 0 || *c.a > c.n || (c.n - *c.a) % 2 != 0) throw DomainError("need 0 <= a <= n with a = n mod 2");
  } else if (c.a) {
    throw DomainError("--a only applies to --locus fixed");
  }
  if (c.max_deg && *c.max_deg < 0) throw DomainError("--max-deg must be nonnegative");
  if (c.threads < 1) throw DomainError("--threads must be positive");
  return l;
}

SchurSeries formula_grfrob(Locus l, int n, int a) {
  switch (l) {
    case Locus::Matchings: return grfrob_matchings(n);
    case Locus::Pm: return grfrob_pm(n);
    case Locus::Fixed: return grfrob_conjugacy(n, a);
  }
  return SchurSeries(n);
}

QPoly formula_hilb(Locus l, int n, int a) {
  switch (l) {
    case Locus::Matchings: return histogram_matchings(n).as_qpoly();
    case Locus::Pm: return histogram_pm(n).as_qpoly();
    case Locus::Fixed: return hilb_conjugacy(n, a);
  }
  return QPoly();
}

LocusSpec spec_for(Locus l, int n, int a) { return locus_for(ideal_kind(l), n, a); }

OracleOptions oracle_options(const RunConfig& c) {
  OracleOptions o;
  o.mode = c.modular ? ArithmeticMode::Modular : ArithmeticMode::Exact;
  o.max_n = c.oracle_max_n;
  o.threads = c.threads;
  return o;
}

std::string render_grade(const SchurSeries& s, int grade) {
  const SchurSeries part = s.grade_part(grade);
  if (part.is_zero()) return "0";
  std::string text = part.to_string();
  const auto colon = text.find(": ");
  return colon == std::string::npos ? text : text.substr(colon + 2);
}

std::string header(const std::string& command, Locus l, const RunConfig& c) {
  std::string h = command + " " + locus_name(l) + " n=" + std::to_string(c.n);
  if (c.a) h += " a=" + std::to_string(*c.a);
  return h;
}

int cmd_grfrob(const RunConfig& c, std::ostream& out) {
  const Locus l = validated_locus(c);
  const SchurSeries s = formula_grfrob(l, c.n, c.a.value_or(0));
  switch (c.format) {
    case Format::Json: out << to_json(s) << '\n'; break;
    case Format::Csv: out << to_csv(s); break;
    case Format::Text: out << s.to_string() << '\n'; break;
  }
  return kExitSuccess;
}

int cmd_hilb(const RunConfig& c, std::ostream& out) {
  const Locus l = validated_locus(c);
  const QPoly p = formula_hilb(l, c.n, c.a.value_or(0));
  switch (c.format) {
    case Format::Json: out << to_json(p) << '\n'; break;
    case Format::Csv: out << to_csv(p); break;
    case Format::Text: out << coefficient_list(p) << '\n'; break;
  }
  return kExitSuccess;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const Locus l = validated_locus(c);
  if (c.format == Format::Csv) throw DomainError("verify supports --format json or text");
  const int a = c.a.value_or(0);
  const SchurSeries formula = formula_grfrob(l, c.n, a);
  const int top = c.max_deg.value_or(formula.max_grade() + 1);

  json report{{"command", "verify"}, {"locus", locus_name(l)}, {"n", c.n}, {"max_deg", top}};
  if (c.a) report["a"] = *c.a;
  std::ostringstream text;
  text << header("verify", l, c) << " max_deg=" << top << (c.modular ? " (modular)" : " (exact)") << '\n';

  SchurSeries oracle(c.n);
  try {
    oracle = grfrob_oracle(spec_for(l, c.n, a), top, oracle_options(c));
  } catch (const ResourceError& e) {
    report["result"] = "RESOURCE";
    report["message"] = e.what();
    if (c.format == Format::Json) out << report.dump() << '\n';
    else out << text.str() << "RESOURCE: " << e.what() << '\n';
    return kExitResource;
  }

  bool pass = true;
  json grades = json::array();
  for (int d = 0; d <= top; ++d) {
    const bool match = formula.grade_part(d) == oracle.grade_part(d);
    pass = pass && match;
    grades.push_back({{"q", d},
                      {"formula", json::parse(to_json(formula.grade_part(d)))},
                      {"oracle", json::parse(to_json(oracle.grade_part(d)))},
                      {"match", match}});
    text << "q^" << d << ": formula " << render_grade(formula, d) << " | oracle " << render_grade(oracle, d)
         << (match ? "  ok" : "  MISMATCH") << '\n';
  }
  report["grades"] = grades;
  report["result"] = pass ? "PASS" : "FAIL";
  if (c.format == Format::Json) out << report.dump() << '\n';
  else out << text.str() << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kExitSuccess : kExitFail;
}

void check_range(const RunConfig& c) {
  if (c.n_min < 0 || c.n_max < c.n_min) throw DomainError("need 0 <= --n-min <= --n-max");
  if (c.format == Format::Csv) throw DomainError("this command supports --format json or text");
}

int cmd_identities(const RunConfig& c, std::ostream& out) {
  check_range(c);
  json rows = json::array();
  std::ostringstream text;
  bool all = true;
  for (int n = c.n_min; n <= c.n_max; ++n) {
    for (int a = n % 2; a <= n; a += 2) {
      const bool ok = check_identity_s1(n, a);
      all = all && ok;
      rows.push_back({{"identity", "s1"}, {"n", n}, {"a", a}, {"holds", ok}});
      text << "s1 n=" << n << " a=" << a << ' ' << (ok ? "true" : "false") << '\n';
    }
    const bool ok = check_identity_s2(n);
    all = all && ok;
    rows.push_back({{"identity", "s2"}, {"n", n}, {"holds", ok}});
    text << "s2 n=" << n << ' ' << (ok ? "true" : "false") << '\n';
  }
  if (c.format == Format::Json) out << json{{"command", "identities"}, {"rows", rows}, {"all_hold", all}}.dump() << '\n';
  else out << text.str() << (all ? "PASS" : "FAIL") << '\n';
  return all ? kExitSuccess : kExitFail;
}

int cmd_logconcave(const RunConfig& c, std::ostream& out) {
  check_range(c);
  const Locus l = parse_locus(c.locus);
  if (c.equivariant && c.n_max > c.table_bound)
    throw ResourceError("equivariant check at n = " + std::to_string(c.n_max) + " exceeds the character table bound " +
                        std::to_string(c.table_bound));

  struct Job {
    int n;
    std::optional<int> a;
  };
  std::vector<Job> jobs;
  for (int n = c.n_min; n <= c.n_max; ++n) {
    if (l == Locus::Matchings) jobs.push_back({n, std::nullopt});
    if (l == Locus::Pm && n % 2 == 0) jobs.push_back({n, std::nullopt});
    if (l == Locus::Fixed)
      for (int a = n % 2; a <= n; a += 2)
        if (!c.a || *c.a == a) jobs.push_back({n, a});
  }

  json rows = json::array();
  std::ostringstream text;
  bool all = true;
  for (const Job& job : jobs) {
    const int a = job.a.value_or(0);
    const QPoly h = formula_hilb(l, job.n, a);
    const bool hilbert = is_log_concave(h);
    json row{{"locus", locus_name(l)}, {"n", job.n}, {"hilbert", hilbert}};
    if (job.a) row["a"] = a;
    text << locus_name(l) << " n=" << job.n;
    if (job.a) text << " a=" << a;
    text << " hilbert=" << (hilbert ? "true" : "false");
    all = all && hilbert;
    if (c.equivariant) {
      const LogConcavityResult r = equivariant_log_concave(formula_grfrob(l, job.n, a), c.table_bound);
      row["equivariant"] = r.holds;
      text << " equivariant=" << (r.holds ? "true" : "false");
      if (r.witness) {
        row["witness"] = {{"grade", r.witness->grade},
                          {"lambda", r.witness->lambda.parts()},
                          {"outer", r.witness->outer.get_str()},
                          {"middle", r.witness->middle.get_str()}};
        text << " witness: grade " << r.witness->grade << " lambda " << r.witness->lambda.to_string() << " outer "
             << r.witness->outer.get_str() << " > middle " << r.witness->middle.get_str();
      }
      all = all && r.holds;
    }
    text << '\n';
    rows.push_back(std::move(row));
  }
  if (c.format == Format::Json) out << json{{"command", "logconcave"}, {"rows", rows}, {"all_hold", all}}.dump() << '\n';
  else out << text.str() << (all ? "PASS" : "COUNTEREXAMPLE FOUND") << '\n';
  return all ? kExitSuccess : kExitFail;
}

json comparison_json(const IdealComparison& cmp) {
  json degrees = json::array();
  for (int d = 0; d <= cmp.max_deg; ++d)
    degrees.push_back({{"degree", d}, {"ideal", cmp.ideal.coefficient(d).get_str()}, {"oracle", cmp.oracle.coefficient(d).get_str()}});
  json j{{"n", cmp.n}, {"max_deg", cmp.max_deg}, {"equal", cmp.equal}, {"degrees", degrees}};
  if (cmp.kind == IdealKind::FixedCount) j["a"] = cmp.a;
  if (cmp.first_difference) j["first_difference"] = *cmp.first_difference;
  return j;
}

void comparison_text(const IdealComparison& cmp, std::ostream& text) {
  text << "degree ideal oracle\n";
  for (int d = 0; d <= cmp.max_deg; ++d)
    text << d << ' ' << cmp.ideal.coefficient(d).get_str() << ' ' << cmp.oracle.coefficient(d).get_str() << '\n';
  text << (cmp.equal ? "EQUAL" : "STRICT (first difference in degree " + std::to_string(*cmp.first_difference) + ")") << '\n';
}

int cmd_ideal_check(const RunConfig& c, std::ostream& out) {
  if (c.format == Format::Csv) throw DomainError("ideal-check supports --format json or text");
  const OracleOptions options = oracle_options(c);
  if (c.search_max_n) {
    if (*c.search_max_n < 1) throw DomainError("--search must be positive");
    const auto found = find_first_strict_containment(*c.search_max_n, options);
    if (c.format == Format::Json) {
      json j{{"command", "ideal-check"}, {"search_max_n", *c.search_max_n}};
      j["found"] = found ? comparison_json(*found) : json(nullptr);
      out << j.dump() << '\n';
    } else if (found) {
      out << "first strict containment: n=" << found->n << " a=" << found->a << '\n';
      comparison_text(*found, out);
    } else {
      out << "no strict containment for n <= " << *c.search_max_n << '\n';
    }
    return kExitSuccess;
  }

  const Locus l = validated_locus(c);
  const int top = c.max_deg.value_or(c.n / 2 + 1);
  const IdealComparison cmp = compare_ideal_vs_gr(ideal_kind(l), c.n, c.a, top, options);
  if (c.format == Format::Json) {
    json j = comparison_json(cmp);
    j["command"] = "ideal-check";
    j["locus"] = locus_name(l);
    out << j.dump() << '\n';
  } else {
    out << header("ideal-check", l, c) << '\n';
    comparison_text(cmp, out);
  }
  return cmp.equal || l == Locus::Fixed ? kExitSuccess : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string format = "text";

  CLI::App app{"Graded Frobenius images and Hilbert series of involution loci", "invharm"};
  app.require_subcommand(1);

  auto add_locus = [&](CLI::App* cmd) {
    cmd->add_option("--locus", config.locus, "matchings | pm | fixed")->check(CLI::IsMember({"matchings", "pm", "fixed"}));
    cmd->add_option("--n", config.n, "number of points");
    cmd->add_option("--a", config.a, "fixed points (fixed locus)");
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", config.out_path, "write output to this file");
    cmd->add_option("--threads", config.threads, "worker threads");
  };
  auto add_oracle = [&](CLI::App* cmd) {
    cmd->add_option("--max-deg", config.max_deg, "largest degree examined");
    cmd->add_flag("--modular", config.modular, "prime-field ranks, re-verified exactly for small n");
    cmd->add_option("--oracle-max-n", config.oracle_max_n, "largest n the oracle will enumerate");
  };
  auto add_range = [&](CLI::App* cmd) {
    cmd->add_option("--n-min", config.n_min, "smallest n");
    cmd->add_option("--n-max", config.n_max, "largest n");
  };

  std::map<CLI::App*, std::function<int(std::ostream&)>> handlers;

  auto* grfrob = app.add_subcommand("grfrob", "graded Frobenius image from the closed formula");
  add_locus(grfrob);
  add_common(grfrob);
  handlers[grfrob] = [&](std::ostream& o) { return cmd_grfrob(config, o); };

  auto* hilb = app.add_subcommand("hilb", "graded Hilbert series coefficients");
  add_locus(hilb);
  add_common(hilb);
  handlers[hilb] = [&](std::ostream& o) { return cmd_hilb(config, o); };

  auto* verify = app.add_subcommand("verify", "compare the closed formula with the brute-force oracle");
  add_locus(verify);
  add_common(verify);
  add_oracle(verify);
  handlers[verify] = [&](std::ostream& o) { return cmd_verify(config, o); };

  auto* identities = app.add_subcommand("identities", "check the truncated plethysm identities");
  add_common(identities);
  add_range(identities);
  handlers[identities] = [&](std::ostream& o) { return cmd_identities(config, o); };

  auto* logconcave = app.add_subcommand("logconcave", "check log-concavity of Hilbert series and graded modules");
  add_locus(logconcave);
  add_common(logconcave);
  add_range(logconcave);
  logconcave->add_flag("--equivariant", config.equivariant, "also check Kronecker-product dominance");
  logconcave->add_option("--table-bound", config.table_bound, "largest n for character tables");
  handlers[logconcave] = [&](std::ostream& o) { return cmd_logconcave(config, o); };

  auto* ideal = app.add_subcommand("ideal-check", "compare explicit ideal generators with the associated graded ideal");
  add_locus(ideal);
  add_common(ideal);
  add_oracle(ideal);
  ideal->add_option("--search", config.search_max_n, "find the first strict containment over n <= value");
  handlers[ideal] = [&](std::ostream& o) { return cmd_ideal_check(config, o); };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  config.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;

  std::ostringstream buffer;
  int code = kExitSuccess;
  try {
    for (auto* sub : app.get_subcommands()) code = handlers.at(sub)(buffer);
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    code = kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource bound: " << e.what() << '\n';
    code = kExitResource;
  } catch (const InvariantError& e) {
    err << "FAIL: " << e.what() << '\n';
    code = kExitFail;
  }

  if (config.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.out_path);
    if (!file) {
      err << "usage error: cannot write " << config.out_path << '\n';
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace invharm::cli
