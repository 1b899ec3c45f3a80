#include "grouplab/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "grouplab/budget.hpp"
#include "grouplab/catalog.hpp"
#include "grouplab/classes.hpp"
#include "grouplab/embeddings.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/report.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/theorems.hpp"

namespace grouplab::cli {

namespace {

GroupPtr load_group(const std::string& token) {
  if (token.rfind("builtin:", 0) == 0) return builtin(token.substr(8));
  return group_from_path(token);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<unsigned> parse_primes(const std::string& text,
                                   std::size_t order) {
  if (text == "all") return prime_divisors(order);
  std::vector<unsigned> out;
  for (const std::string& tok : split_commas(text)) {
    unsigned long p = 0;
    try {
      p = std::stoul(tok);
    } catch (const std::exception&) {
      throw Error("invalid prime '" + tok + "'");
    }
    if (!is_prime(p)) throw Error("'" + tok + "' is not prime");
    out.push_back(static_cast<unsigned>(p));
  }
  return out;
}

struct CheckSelection {
  std::vector<TheoremId> theorems;
  std::vector<LemmaId> lemmas;
  bool lemmas_are_explicit = false;
};

CheckSelection parse_checks(const std::string& text) {
  CheckSelection sel;
  if (text == "all") {
    sel.theorems = all_theorems();
    sel.lemmas = all_lemmas();
    return sel;
  }
  for (const std::string& tok : split_commas(text)) {
    if (auto t = theorem_from_string(tok)) {
      sel.theorems.push_back(*t);
    } else if (auto l = lemma_from_string(tok)) {
      sel.lemmas.push_back(*l);
      sel.lemmas_are_explicit = true;
    } else {
      throw Error("unknown theorem or lemma id '" + tok + "'");
    }
  }
  return sel;
}

void print_report_line(std::ostream& out, const TheoremReport& rep,
                       bool verbose) {
  out << rep.group << " p=" << rep.prime << " " << rep.check << ": "
      << to_string(rep.verdict) << "\n";
  if (verbose || rep.verdict == Verdict::violation ||
      rep.verdict == Verdict::undecided) {
    for (const auto& h : rep.hypotheses) {
      out << "  hypothesis: " << h.description << " :: "
          << to_string(h.status);
      if (!h.witness.empty()) out << " :: " << h.witness;
      out << "\n";
    }
    out << "  conclusion: " << rep.conclusion.description << " :: "
        << to_string(rep.conclusion.status);
    if (!rep.conclusion.witness.empty())
      out << " :: " << rep.conclusion.witness;
    out << "\n";
  }
}

ScanSummary summarize(const std::vector<TheoremReport>& reports) {
  ScanSummary s;
  s.records = reports.size();
  for (const TheoremReport& rep : reports) {
    switch (rep.verdict) {
      case Verdict::confirmed: ++s.confirmed; break;
      case Verdict::vacuous: ++s.vacuous; break;
      case Verdict::violation: ++s.violations; break;
      case Verdict::undecided: ++s.undecided; break;
    }
  }
  return s;
}

void print_summary(std::ostream& out, const ScanSummary& s) {
  out << "records " << s.records << ": " << s.confirmed << " confirmed, "
      << s.vacuous << " vacuous, " << s.violations << " VIOLATION, "
      << s.undecided << " undecided\n";
}

int run_check(const std::string& group_token, const std::string& theorem_text,
              const std::string& prime_text, const std::string& report_path,
              bool verbose, std::ostream& out) {
  GroupPtr g = load_group(group_token);
  CheckSelection sel = parse_checks(theorem_text);
  std::vector<unsigned> primes = parse_primes(prime_text, g->order());
  AnalysisContext ctx;
  std::vector<TheoremReport> reports;
  LemmaOptions lemma_opts;
  for (unsigned p : primes) {
    for (TheoremId id : sel.theorems)
      reports.push_back(evaluate(id, g, p, ctx));
    for (LemmaId id : sel.lemmas) {
      bool is_21 = id == LemmaId::L2_1_QUOTIENT ||
                   id == LemmaId::L2_1_INTERSECTION ||
                   id == LemmaId::L2_1_RESTRICTION ||
                   id == LemmaId::L2_1_CLOSURE_SOLVABLE;
      if (is_21 && !sel.lemmas_are_explicit &&
          g->order() > lemma_opts.lemma21_max_order)
        continue;
      reports.push_back(evaluate_lemma(id, g, p, ctx));
    }
  }
  for (const TheoremReport& rep : reports)
    print_report_line(out, rep, verbose);
  ScanSummary summary = summarize(reports);
  print_summary(out, summary);
  if (!report_path.empty())
    write_text_file(report_path, format_reports(reports, {}, summary));
  return summary.violations > 0 ? 2 : 0;
}

int run_predicate(const std::string& name, const std::string& group_token,
                  const std::string& subgroup_text, std::ostream& out) {
  GroupPtr g = load_group(group_token);
  ElementList gens;
  for (const std::string& tok : split_commas(subgroup_text)) {
    std::string t = tok;
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    if (!t.empty()) gens.push_back(parse_cycles(g->degree(), t));
  }
  Subgroup h = subgroup_generated(g, gens);
  out << name << "(" << h.generators_string() << " of order " << h.order()
      << ", " << (g->name().empty() ? "group" : g->name()) << ") = ";

  AnalysisContext ctx;
  if (name == "normal") {
    out << (is_normal(h) ? "true" : "false") << "\n";
    return 0;
  }
  if (name == "subnormal") {
    out << (is_subnormal(h) ? "true" : "false") << "\n";
    return 0;
  }
  EmbeddingVerdict v;
  if (name == "s-permutable") v = is_s_permutable(h, ctx);
  else if (name == "s-semipermutable") v = is_s_semipermutable(h, ctx);
  else if (name == "pronormal") v = is_pronormal(h, ctx);
  else if (name == "c-supplemented") v = is_c_supplemented(h, ctx);
  else if (name == "h-subgroup") v = is_h_subgroup(h, ctx);
  else if (name == "weakly-h-subgroup") v = is_weakly_h_subgroup(h, ctx);
  else throw Error("unknown predicate '" + name + "'");
  out << (v.value ? "true" : "false") << "\n";
  if (!v.witness_text.empty()) out << "  witness: " << v.witness_text << "\n";
  return 0;
}

void print_subgroup(std::ostream& out, const std::string& label,
                    const Subgroup& s) {
  out << label << ": order " << s.order() << ", generators "
      << s.generators_string() << "\n";
}

int run_structure(const std::string& group_token, const std::string& show,
                  const std::string& prime_text, std::ostream& out) {
  GroupPtr g = load_group(group_token);
  out << (g->name().empty() ? "group" : g->name()) << ": order "
      << g->order() << ", degree " << g->degree() << "\n";
  auto need_prime = [&]() -> unsigned {
    if (prime_text.empty() || prime_text == "all")
      throw Error("--show " + show + " needs --p <prime>");
    unsigned long p = std::stoul(prime_text);
    if (!is_prime(p)) throw Error("'" + prime_text + "' is not prime");
    return static_cast<unsigned>(p);
  };
  if (show == "sylow") {
    unsigned p = need_prime();
    Subgroup syl = sylow_subgroup(g, p);
    print_subgroup(out, "Sylow " + std::to_string(p) + "-subgroup", syl);
    out << "conjugates: " << sylow_conjugates(g, p).size() << "\n";
  } else if (show == "frattini") {
    print_subgroup(out, "Frattini subgroup", frattini(g));
  } else if (show == "chief") {
    SeriesRecord s = chief_series(g);
    out << "chief series term orders:";
    for (const Subgroup& t : s.terms) out << " " << t.order();
    out << "\nchief factor orders:";
    for (std::size_t f : s.factor_orders()) out << " " << f;
    out << "\n";
  } else if (show == "series") {
    SeriesRecord d = derived_series(g);
    out << "derived series orders:";
    for (const Subgroup& t : d.terms) out << " " << t.order();
    out << "\n";
    SeriesRecord u = upper_central_series(g);
    out << "upper central series orders:";
    for (const Subgroup& t : u.terms) out << " " << t.order();
    out << "\n";
    auto cls = nilpotency_class(g);
    out << "nilpotency class: " << (cls ? std::to_string(*cls) : "none")
        << "\n";
  } else if (show == "ops") {
    unsigned p = need_prime();
    print_subgroup(out, "O_p(G)", o_p(g, p));
    print_subgroup(out, "O_p'(G)", o_p_prime(g, p));
    print_subgroup(out, "O^p(G)", o_upper_p(g, p));
  } else {
    throw Error("unknown --show value '" + show + "'");
  }
  return 0;
}

int run_scan(const std::string& catalog_dir, const std::string& theorem_text,
             const std::string& prime_text, unsigned jobs,
             const std::string& report_path, std::size_t lemma21_cap,
             std::ostream& out) {
  std::vector<CatalogEntry> entries = load_catalog_dir(catalog_dir);
  std::vector<ScanTarget> targets;
  std::vector<std::string> entry_errors;
  for (const CatalogEntry& e : entries) {
    try {
      targets.push_back(ScanTarget{e.name, materialize(e)});
    } catch (const Error& err) {
      entry_errors.push_back(e.name + ": " + err.what());
    }
  }
  CheckSelection sel = parse_checks(theorem_text);
  ScanOptions opts;
  opts.theorems = sel.theorems;
  opts.lemmas = sel.lemmas;
  opts.lemma21_max_order = lemma21_cap;
  opts.jobs = jobs;
  if (prime_text != "all") {
    for (const std::string& tok : split_commas(prime_text)) {
      unsigned long p = std::stoul(tok);
      if (!is_prime(p)) throw Error("'" + tok + "' is not prime");
      opts.primes.push_back(static_cast<unsigned>(p));
    }
  }
  ScanResult result = scan(targets, opts);
  if (!report_path.empty())
    write_text_file(report_path, format_reports(result.reports, entry_errors,
                                                result.summary));
  out << "scanned " << targets.size() << " group(s)";
  if (!entry_errors.empty())
    out << " (" << entry_errors.size() << " entr(ies) failed to load)";
  out << "\n";
  for (const std::string& e : entry_errors) out << "  error: " << e << "\n";
  for (const TheoremReport& rep : result.reports)
    if (rep.verdict == Verdict::violation) print_report_line(out, rep, true);
  print_summary(out, result.summary);
  return result.summary.violations > 0 ? 2 : 0;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"grouplab: finite permutation group computations and "
               "theorem scanning"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t element_budget = 0;
  std::size_t lattice_budget = 0;
  app.add_option("--budget", element_budget,
                 "element budget for group materialization");
  app.add_option("--subgroup-budget", lattice_budget,
                 "group order bound for full subgroup enumeration");

  auto* check = app.add_subcommand("check", "evaluate checkers on one group");
  std::string check_group, check_theorem = "all", check_p = "all";
  std::string check_report;
  bool check_verbose = false;
  check->add_option("--group", check_group, "builtin:<token> or a group file")
      ->required();
  check->add_option("--theorem", check_theorem, "theorem/lemma id or 'all'");
  check->add_option("--p", check_p, "prime or 'all'");
  check->add_option("--report", check_report, "write a report file");
  check->add_flag("--verbose", check_verbose, "print hypothesis details");

  auto* pred = app.add_subcommand("predicate",
                                  "evaluate an embedding predicate");
  std::string pred_name, pred_group, pred_subgroup;
  pred->add_option("name", pred_name,
                   "s-permutable | s-semipermutable | pronormal | "
                   "c-supplemented | h-subgroup | weakly-h-subgroup | "
                   "normal | subnormal")
      ->required();
  pred->add_option("--group", pred_group, "builtin:<token> or a group file")
      ->required();
  pred->add_option("--subgroup", pred_subgroup,
                   "generators in cycle notation, comma separated")
      ->required();

  auto* structure = app.add_subcommand("structure",
                                       "print structural subgroups/series");
  std::string struct_group, struct_show, struct_p;
  structure->add_option("--group", struct_group,
                        "builtin:<token> or a group file")
      ->required();
  structure->add_option("--show", struct_show,
                        "sylow | frattini | chief | series | ops")
      ->required();
  structure->add_option("--p", struct_p, "prime (for sylow/ops)");

  auto* scan_cmd = app.add_subcommand("scan", "scan a catalog of groups");
  std::string scan_catalog, scan_theorems = "all", scan_p = "all";
  std::string scan_report;
  unsigned scan_jobs = 1;
  std::size_t scan_lemma21_cap = 120;
  scan_cmd->add_option("--catalog", scan_catalog, "catalog directory")
      ->required();
  scan_cmd->add_option("--theorems", scan_theorems,
                       "comma-separated ids or 'all'");
  scan_cmd->add_option("--p", scan_p, "primes or 'all'");
  scan_cmd->add_option("--jobs", scan_jobs, "worker threads");
  scan_cmd->add_option("--report", scan_report, "write the report file");
  scan_cmd->add_option("--lemma21-max-order", scan_lemma21_cap,
                       "largest group order for the L2_1 property suite");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (element_budget > 0) global_budget().element_limit = element_budget;
  if (lattice_budget > 0) global_budget().lattice_limit = lattice_budget;

  try {
    if (*check)
      return run_check(check_group, check_theorem, check_p, check_report,
                       check_verbose, out);
    if (*pred) return run_predicate(pred_name, pred_group, pred_subgroup, out);
    if (*structure)
      return run_structure(struct_group, struct_show, struct_p, out);
    if (*scan_cmd)
      return run_scan(scan_catalog, scan_theorems, scan_p, scan_jobs,
                      scan_report, scan_lemma21_cap, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

} // namespace grouplab::cli
