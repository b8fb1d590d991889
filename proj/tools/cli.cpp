#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qseries/congruence.hpp"
#include "qseries/dissection.hpp"
#include "qseries/eta_quotient.hpp"
#include "qseries/family.hpp"
#include "qseries/witness.hpp"

namespace qseries::cli {

namespace {

/// One output line. Fields whose key is "ms" carry wall-clock timings and
/// are excluded from the stable rendering used by --bless/--check.
struct Record {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;
  bool ok = true;
  bool informational = false;
};

struct Report {
  std::string header;
  std::vector<Record> records;

  bool summarize = true;

  bool ok() const {
    return std::all_of(records.begin(), records.end(),
                       [](const Record& r) { return r.informational || r.ok; });
  }
};

struct Options {
  std::int64_t T = 500;
  std::int64_t n_max = kDefaultNMax;
  std::string ring = "exact";
  std::string format = "table";
  unsigned workers = 1;
  std::int64_t budget = kDefaultFamilyBudget;
  std::string bless_path;
  std::string check_path;
};

bool is_timing(const std::string& key) { return key == "ms"; }

std::string quoted(const std::string& v) {
  if (!v.empty() && v.find_first_of(" \t\"") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string render_records(const Report& report, bool with_timing) {
  std::ostringstream out;
  out << report.header << "\n";
  for (const auto& r : report.records) {
    out << r.kind;
    for (const auto& [k, v] : r.fields) {
      if (!with_timing && is_timing(k)) continue;
      out << " " << k << "=" << quoted(v);
    }
    out << "\n";
  }
  return out.str();
}

std::string summary_line(const Report& report) {
  std::size_t checked = 0, failed = 0;
  for (const auto& r : report.records) {
    if (r.informational) continue;
    ++checked;
    failed += !r.ok;
  }
  return "# summary: " + std::to_string(checked) + " checked, " +
         std::to_string(checked - failed) + " ok, " + std::to_string(failed) + " failed";
}

std::string render_table(const Report& report) {
  std::ostringstream out;
  out << report.header << "\n";
  std::size_t i = 0;
  while (i < report.records.size()) {
    std::size_t end = i;
    while (end < report.records.size() && report.records[end].kind == report.records[i].kind &&
           report.records[end].fields.size() == report.records[i].fields.size()) {
      ++end;
    }
    const auto& first = report.records[i];
    std::vector<std::size_t> width(first.fields.size());
    for (std::size_t c = 0; c < width.size(); ++c) {
      width[c] = first.fields[c].first.size();
      for (std::size_t r = i; r < end; ++r) {
        width[c] = std::max(width[c], report.records[r].fields[c].second.size());
      }
    }
    out << "\n[" << first.kind << "]\n";
    auto row = [&](auto cell) {
      std::string line;
      for (std::size_t c = 0; c < width.size(); ++c) {
        const std::string& v = cell(c);
        line += (c ? "  " : "") + v + std::string(width[c] - v.size(), ' ');
      }
      line.erase(line.find_last_not_of(' ') + 1);
      out << line << "\n";
    };
    row([&](std::size_t c) -> const std::string& { return first.fields[c].first; });
    for (std::size_t r = i; r < end; ++r) {
      row([&](std::size_t c) -> const std::string& { return report.records[r].fields[c].second; });
    }
    i = end;
  }
  if (report.summarize) out << "\n" << summary_line(report) << "\n";
  return out.str();
}

/// Writes the report and applies --bless/--check. Returns the exit status.
int emit(const Report& report, const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.format == "records") {
    out << render_records(report, true);
  } else {
    out << render_table(report);
  }
  const std::string stable = render_records(report, false);
  if (!opt.bless_path.empty()) {
    std::ofstream f(opt.bless_path);
    if (!f) {
      err << "error: cannot write " << opt.bless_path << "\n";
      return kExitUsageOrData;
    }
    f << stable;
  }
  int status = report.ok() ? kExitOk : kExitVerificationFailed;
  if (!opt.check_path.empty()) {
    std::ifstream f(opt.check_path);
    if (!f) {
      err << "error: cannot read " << opt.check_path << "\n";
      return kExitUsageOrData;
    }
    std::stringstream expected;
    expected << f.rdbuf();
    if (expected.str() != stable) {
      std::istringstream a(expected.str()), b(stable);
      std::string la, lb;
      std::size_t line = 0;
      while (true) {
        const bool ha = static_cast<bool>(std::getline(a, la));
        const bool hb = static_cast<bool>(std::getline(b, lb));
        ++line;
        if (!ha && !hb) break;
        if (!ha || !hb || la != lb) {
          err << "check: line " << line << " differs\n  expected: " << (ha ? la : "<eof>")
              << "\n  actual:   " << (hb ? lb : "<eof>") << "\n";
          break;
        }
      }
      status = kExitVerificationFailed;
    }
  }
  return status;
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

std::string fmt_ms(double ms) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(1);
  s << ms;
  return s.str();
}

Record claim_record(const ClaimReport& r) {
  Record rec{"claim", {}, r.holds, false};
  rec.fields = {
      {"source", to_string(r.claim.source)},
      {"t", std::to_string(r.claim.t)},
      {"m", std::to_string(r.claim.m)},
      {"j", std::to_string(r.claim.j)},
      {"k", std::to_string(r.claim.k)},
      {"n_max", std::to_string(r.n_max)},
      {"verdict", r.holds ? "holds" : "fails"},
      {"counterexample_n", r.counterexample ? std::to_string(r.counterexample->n) : "-"},
      {"counterexample_value", r.counterexample ? std::to_string(r.counterexample->value) : "-"},
      {"v2min", r.min_valuation ? std::to_string(*r.min_valuation)
                                : ">=" + std::to_string(r.ring_bits)},
      {"ms", fmt_ms(r.elapsed_ms)},
  };
  return rec;
}

Record identity_record(const IdentityReport& r, bool informational = false) {
  Record rec{"identity", {}, r.matched, informational};
  const auto& mm = r.first_mismatch;
  rec.fields = {
      {"name", r.name},
      {"T", std::to_string(r.truncation)},
      {"verdict", r.matched ? "matched" : "mismatch"},
      {"mismatch_exponent", mm ? std::to_string(mm->exponent) : "-"},
      {"lhs", mm ? mm->lhs.get_str() : "-"},
      {"rhs", mm ? mm->rhs.get_str() : "-"},
      {"role", informational ? "info" : "check"},
  };
  return rec;
}

Record witness_record(const WitnessCertificate& c, const WitnessReport& r) {
  Record rec{"witness", {}, r.identity_matched && r.claimed_factor_divides, false};
  const auto& mm = r.first_mismatch;
  rec.fields = {
      {"id", r.id},
      {"T", std::to_string(r.truncation)},
      {"verdict", r.identity_matched ? "matched" : "mismatch"},
      {"mismatch_exponent", mm ? std::to_string(mm->exponent) : "-"},
      {"gcd", r.gcd_of_poly.get_str()},
      {"v2", opt_str(r.two_adic_valuation)},
      {"implied_modulus", r.implied_modulus ? r.implied_modulus->get_str() : "-"},
      {"claimed_common_factor", c.claimed_common_factor.get_str()},
      {"claimed_factor_divides", r.claimed_factor_divides ? "yes" : "no"},
  };
  return rec;
}

std::string progression_str(const Progression& p) {
  return std::to_string(p.step()) + "n+" + std::to_string(p.residue());
}

Record family_record(const FamilyReport& r) {
  Record rec{"family", {}, r.matched, false};
  const auto& fi = r.instance;
  std::string selection = "-";
  if (r.selected_progression) {
    selection = *r.selected_progression == r.printed ? "printed" : "derived";
  }
  rec.fields = {
      {"variant", to_string(fi.variant)},
      {"alpha", std::to_string(fi.alpha)},
      {"beta", std::to_string(fi.beta)},
      {"gamma", std::to_string(fi.gamma)},
      {"printed", progression_str(r.printed)},
      {"n_max", std::to_string(r.n_max)},
      {"printed_verdict", r.printed_check.matched ? "matched" : "mismatch"},
      {"verdict", r.matched ? "matched" : "mismatch"},
      {"progression", r.selected_progression ? progression_str(*r.selected_progression) : "-"},
      {"progression_source", selection},
      {"rhs", r.matched ? r.selected_rhs : "-"},
  };
  return rec;
}

std::string header_for(const std::string& what, const Options& opt) {
  return "# qverify " + what + " T=" + std::to_string(opt.T) + " n_max=" +
         std::to_string(opt.n_max) + " budget=" + std::to_string(opt.budget);
}

// ---------------------------------------------------------------------------
// verify targets

void add_theorems(Report& rep, const Options& opt) {
  for (const auto& r : run_theorems(opt.n_max, opt.workers)) rep.records.push_back(claim_record(r));
}

void add_dissections(Report& rep, const Options& opt) {
  rep.records.push_back(identity_record(dissection3_f1cubed(opt.T)));
  rep.records.push_back(identity_record(dissection5(opt.T)));
  rep.records.push_back(identity_record(dissection7(opt.T)));
  for (std::int64_t n : {5, 7, 13}) rep.records.push_back(identity_record(ramanathan(n, opt.T)));
}

void add_witness(Report& rep, const Options& opt, const std::vector<std::string>& sources) {
  std::vector<std::string> list = sources.empty() ? std::vector<std::string>{"builtin"} : sources;
  for (const auto& src : list) {
    const auto cert = src == "builtin" ? builtin_certificate() : load_certificate(src);
    rep.records.push_back(witness_record(cert, verify_witness(cert, opt.T)));
  }
}

void add_eq1(Report& rep, const Options& opt) {
  const auto reports = verify_eq1(opt.T);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    rep.records.push_back(identity_record(reports[i], i == 2));
  }
  for (std::int64_t m = 1; m <= 3; ++m) {
    for (int k = 1; k <= 5; ++k) {
      rep.records.push_back(identity_record(check_lift_congruence(m, k, opt.T)));
    }
  }
}

std::vector<FamilyInstance> default_instances() {
  using V = FamilyVariant;
  return {{0, 0, 0, V::Inf},  {1, 0, 0, V::Inf},  {0, 1, 0, V::Inf}, {0, 0, 1, V::Inf},
          {0, 0, 0, V::Inf2}, {0, 0, 0, V::Inf3}, {0, 0, 0, V::Inf4}};
}

FamilyInstance parse_instance(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 4) throw ParseError(0, "family instance must be alpha,beta,gamma,variant");
  try {
    return {std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2]),
            parse_family_variant(parts[3])};
  } catch (const std::logic_error&) {
    throw ParseError(0, "family instance must be alpha,beta,gamma,variant");
  }
}

void add_families(Report& rep, const Options& opt, const std::vector<std::string>& args) {
  std::vector<FamilyInstance> instances;
  for (const auto& a : args) instances.push_back(parse_instance(a));
  if (instances.empty()) instances = default_instances();
  std::vector<std::int64_t> n_max;
  std::int64_t T = 1;
  for (const auto& fi : instances) {
    n_max.push_back(std::min(opt.n_max, max_family_n(fi, opt.budget)));
    T = std::max({T, printed_progression(fi).step() * n_max.back() +
                         printed_progression(fi).residue() + 1,
                  derived_progression(fi).step() * n_max.back() +
                      derived_progression(fi).residue() + 1});
  }
  const auto gf = overpartition_gf(5, Ring::mod2k(3), T);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    rep.records.push_back(family_record(verify_family_instance(instances[i], n_max[i], gf)));
  }
  for (int base : {3, 5, 7}) {
    for (const auto& r : verify_induction_step(base, opt.T)) {
      rep.records.push_back(identity_record(r));
    }
  }
}

int run_verify(const std::string& target, const std::vector<std::string>& args, const Options& opt,
               std::ostream& out, std::ostream& err) {
  Report rep;
  std::string what = "verify " + target;
  for (const auto& a : args) what += " " + a;
  rep.header = header_for(what, opt);

  if (target == "theorems") {
    add_theorems(rep, opt);
  } else if (target == "conjecture") {
    if (args.empty()) throw Error("verify conjecture needs at least one prime");
    for (const auto& a : args) {
      std::int64_t q = 0;
      try {
        q = std::stoll(a);
      } catch (const std::logic_error&) {
        throw ParseError(0, "expected a prime, found '" + a + "'");
      }
      for (const auto& r : scan_conjecture(q, opt.n_max, opt.workers)) {
        rep.records.push_back(claim_record(r));
      }
    }
  } else if (target == "claim") {
    if (args.size() != 4) throw Error("verify claim needs t m j k");
    std::vector<std::int64_t> v;
    for (const auto& a : args) {
      try {
        v.push_back(std::stoll(a));
      } catch (const std::logic_error&) {
        throw ParseError(0, "expected an integer, found '" + a + "'");
      }
    }
    const auto claim = make_claim(v[0], v[1], v[2], static_cast<int>(v[3]));
    for (const auto& r : run_claims({claim}, opt.n_max, opt.workers)) {
      rep.records.push_back(claim_record(r));
    }
  } else if (target == "dissections") {
    add_dissections(rep, opt);
  } else if (target == "witness") {
    add_witness(rep, opt, args);
  } else if (target == "eq1") {
    add_eq1(rep, opt);
  } else if (target == "families") {
    add_families(rep, opt, args);
  } else if (target == "all") {
    add_theorems(rep, opt);
    add_dissections(rep, opt);
    add_witness(rep, opt, {});
    add_eq1(rep, opt);
    add_families(rep, opt, {});
  } else {
    err << "error: unknown verify target '" << target << "'\n";
    return kExitUsageOrData;
  }
  return emit(rep, opt, out, err);
}

int run_expand(const std::string& text, const Options& opt, std::ostream& out, std::ostream& err) {
  const auto eq = parse_eta_quotient(text);
  const auto series = expand(eq, Ring::parse(opt.ring), opt.T);
  Report rep;
  rep.summarize = false;
  rep.header = "# qverify expand " + quoted(to_string(eq)) + " T=" + std::to_string(opt.T) +
               " ring=" + opt.ring;
  for (std::int64_t e = series.offset(); e < series.trunc(); ++e) {
    rep.records.push_back(
        {"coeff", {{"exponent", std::to_string(e)}, {"coefficient", series.coefficient(e).get_str()}}});
  }
  return emit(rep, opt, out, err);
}

int run_extract(const std::string& text, std::int64_t m, std::int64_t j, const Options& opt,
                std::ostream& out, std::ostream& err) {
  const auto eq = parse_eta_quotient(text);
  const Progression p(m, j);
  if (opt.T < 1) throw Error("--T must be >= 1");
  const auto series = extract(expand(eq, Ring::parse(opt.ring), m * (opt.T - 1) + j + 1), p);
  Report rep;
  rep.summarize = false;
  rep.header = "# qverify extract " + quoted(to_string(eq)) + " m=" + std::to_string(m) +
               " j=" + std::to_string(j) + " T=" + std::to_string(opt.T) + " ring=" + opt.ring;
  for (std::int64_t n = 0; n < opt.T; ++n) {
    rep.records.push_back(
        {"coeff", {{"n", std::to_string(n)}, {"coefficient", series.coefficient(n).get_str()}}});
  }
  return emit(rep, opt, out, err);
}

int run_oracle(int t_max, int n_max, const Options& opt, std::ostream& out, std::ostream& err) {
  Report rep;
  rep.header = "# qverify oracle t_max=" + std::to_string(t_max) + " n_max=" + std::to_string(n_max);
  for (int t = 1; t <= t_max; ++t) {
    const auto gf = overpartition_gf(t, Ring::exact(), n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
      const BigInt counted(static_cast<unsigned long>(enumerate_colored_overpartitions(t, n)));
      const BigInt coeff = gf.coefficient(n);
      rep.records.push_back({"oracle",
                             {{"t", std::to_string(t)},
                              {"n", std::to_string(n)},
                              {"enumerated", counted.get_str()},
                              {"gf", coeff.get_str()},
                              {"verdict", counted == coeff ? "matched" : "mismatch"}},
                             counted == coeff});
    }
  }
  return emit(rep, opt, out, err);
}

void add_output_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "records"}))
      ->capture_default_str();
  cmd->add_option("--bless", opt.bless_path, "Write the stable record rendering to FILE");
  cmd->add_option("--check", opt.check_path, "Compare the stable record rendering with FILE");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated q-series engine and congruence verifier for t-colored overpartitions",
               "qverify"};
  app.require_subcommand(1);
  Options opt;

  std::string quotient;
  auto* expand_cmd = app.add_subcommand("expand", "Expand an eta quotient");
  expand_cmd->add_option("quotient", quotient, "Eta quotient, e.g. \"q^-1 * f2^-4 * f4^12\"")->required();
  expand_cmd->add_option("--T", opt.T, "Truncation: list exponents below T")->capture_default_str();
  expand_cmd->add_option("--ring", opt.ring, "exact or mod2k:K")->capture_default_str();
  add_output_options(expand_cmd, opt);

  std::int64_t m = 1, j = 0;
  auto* extract_cmd = app.add_subcommand("extract", "Coefficients of q^(m n + j) of an eta quotient");
  extract_cmd->add_option("quotient", quotient, "Eta quotient")->required();
  extract_cmd->add_option("--m", m, "Progression step")->required();
  extract_cmd->add_option("--j", j, "Progression residue")->required();
  extract_cmd->add_option("--T", opt.T, "Number of extracted coefficients")->capture_default_str();
  extract_cmd->add_option("--ring", opt.ring, "exact or mod2k:K")->capture_default_str();
  add_output_options(extract_cmd, opt);

  std::string target;
  std::vector<std::string> args;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification targets");
  verify_cmd
      ->add_option("target", target,
                   "theorems | conjecture Q... | claim T M J K | dissections | witness [builtin|FILE]... "
                   "| families [A,B,C,VARIANT]... | eq1 | all")
      ->required();
  verify_cmd->add_option("args", args, "Target arguments");
  verify_cmd->add_option("--T", opt.T, "Truncation for identity checks")->capture_default_str();
  verify_cmd->add_option("--n-max", opt.n_max, "Largest n checked per claim")->capture_default_str();
  verify_cmd->add_option("--workers", opt.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--budget", opt.budget, "Largest exponent expanded for families")
      ->capture_default_str();
  add_output_options(verify_cmd, opt);

  int t_max = 3, oracle_n = 10;
  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check enumeration against the generating function");
  oracle_cmd->add_option("--t-max", t_max, "Largest color count (<= 5)")->capture_default_str();
  oracle_cmd->add_option("--n-max", oracle_n, "Largest n (<= 14)")->capture_default_str();
  add_output_options(oracle_cmd, opt);

  try {
    std::vector<std::string> arguments;
    for (int i = argc - 1; i > 0; --i) arguments.emplace_back(argv[i]);
    app.parse(arguments);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsageOrData;
  }

  try {
    if (opt.T < 1 && !expand_cmd->parsed()) throw Error("--T must be >= 1");
    if (opt.n_max < 0) throw Error("--n-max must be >= 0");
    if (expand_cmd->parsed()) return run_expand(quotient, opt, out, err);
    if (extract_cmd->parsed()) return run_extract(quotient, m, j, opt, out, err);
    if (verify_cmd->parsed()) return run_verify(target, args, opt, out, err);
    if (oracle_cmd->parsed()) return run_oracle(t_max, oracle_n, opt, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrData;
  }
  return kExitUsageOrData;
}

}  // namespace qseries::cli
