// Command-line front end: parses inputs, dispatches to the library, and
// emits human-readable text or stable machine-readable JSON.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lced/code.hpp"
#include "lced/conjectures.hpp"
#include "lced/decide.hpp"
#include "lced/io.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoull(text);
    } else {
      r.lo = std::stoull(text.substr(0, dots));
      r.hi = std::stoull(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw lced::Error("bad range \"" + text + "\" (expected N or A..B)");
  }
  if (r.hi < r.lo) throw lced::Error("empty range \"" + text + "\"");
  return r;
}

struct StrategyArgs {
  std::string order = "identity-first";
  std::uint64_t limit = 0;
  bool has_limit = false;
  std::uint64_t seed = 0;
  bool certify = false;
};

void add_strategy_flags(CLI::App* cmd, StrategyArgs& s) {
  cmd->add_option("--order", s.order, "search order")
      ->check(CLI::IsMember(
          {"identity-first", "transpositions-first", "full-lex", "heap"}));
  cmd->add_option("--limit", s.limit,
                  "cap on determinant evaluations per decision")
      ->each([&s](const std::string&) { s.has_limit = true; });
  cmd->add_option("--seed", s.seed, "nonzero enables seeded probe phase");
  cmd->add_flag("--certify", s.certify,
                "require certified exhaustion (forbids --limit)");
}

lced::SearchStrategy make_strategy(const StrategyArgs& s) {
  if (s.certify && s.has_limit)
    throw lced::Error("--certify requires an unlimited search (drop --limit)");
  lced::SearchStrategy st;
  st.order = *lced::parse_search_order(s.order);
  if (s.has_limit) st.limit = s.limit;
  st.seed = s.seed;
  return st;
}

struct OutputArgs {
  std::string format = "text";
  std::string out;
};

void add_output_flags(CLI::App* cmd, OutputArgs& o) {
  cmd->add_option("--format", o.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--out", o.out, "output path (default stdout)");
}

void emit(const OutputArgs& o, const ordered_json& doc, const std::string& text) {
  std::string payload = o.format == "structured" ? doc.dump(2) + "\n" : text;
  if (o.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(o.out);
    if (!f) throw lced::Error("cannot write \"" + o.out + "\"");
    f << payload;
  }
}

std::uint64_t default_budget(std::uint64_t cli_value, bool cli_given) {
  if (cli_given) return cli_value;
  if (const char* env = std::getenv("LCED_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw lced::Error("LCED_BUDGET is not a number");
    }
  }
  return 100'000'000;
}

std::string verdict_text(const lced::Verdict& v, const std::string& strategy) {
  std::ostringstream os;
  os << "status: " << lced::to_string(v.status) << "\n"
     << "certificate: " << lced::to_string(v.certificate) << "\n";
  if (v.witness) os << "witness: " << v.witness->cycles() << "\n";
  os << "perms_examined: " << v.perms_examined << "\n";
  if (!v.note.empty()) os << "note: " << v.note << "\n";
  if (!strategy.empty()) os << "strategy: " << strategy << "\n";
  return os.str();
}

// ---------------------------------------------------------------- check ----

int run_check(const std::string& matrix_path, const std::string& field_literal,
              const StrategyArgs& sargs, bool allow_deficient,
              const OutputArgs& oargs) {
  lced::Matrix g = lced::parse_matrix_file(matrix_path);
  if (!field_literal.empty() &&
      lced::Field::parse(field_literal) != g.field())
    throw lced::Error("matrix file declares field " + g.field().literal() +
                      ", not " + field_literal);

  const auto rank = lced::gauss(g).rank;
  if (rank < g.rows() && !allow_deficient)
    throw lced::Error("matrix has rank " + std::to_string(rank) + " < k = " +
                      std::to_string(g.rows()) +
                      " (pass --allow-deficient to get a verdict)");

  lced::DecideOptions opt;
  opt.strategy = make_strategy(sargs);
  const std::string fingerprint = lced::strategy_fingerprint(opt.strategy);

  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "check";
  doc["strategy"] = fingerprint;

  try {
    lced::Verdict v = lced::decide(g, opt);
    doc["verdict"] = lced::to_json(v);
    emit(oargs, doc, verdict_text(v, fingerprint));
    return v.status == lced::Status::lced ? 0 : 1;
  } catch (const lced::LimitReachedError& e) {
    doc["verdict"] = nullptr;
    doc["inconclusive"] = true;
    doc["perms_examined"] = e.examined;
    std::ostringstream os;
    os << "status: Inconclusive\nperms_examined: " << e.examined
       << "\nnote: evaluation limit reached before any conclusion\n";
    emit(oargs, doc, os.str());
    return 3;
  }
}

// ---------------------------------------------------------------- sweep ----

std::string sweep_text(const lced::SweepReport& r) {
  std::ostringstream os;
  os << "field " << r.field_literal << "  k " << r.k << "  n " << r.n << "\n"
     << "  candidates: " << r.candidates_total << " (processed "
     << r.candidates_after_canonicalization << ")\n"
     << "  lced: " << r.lced_count << "  notlced: " << r.notlced_count
     << "  condition: " << r.condition_count << "\n"
     << "  counterexamples: " << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples)
    os << "    " << c.direction << "\n"
       << lced::format_matrix_text(c.tail);
  os << "  dets: " << r.dets_used << "  certified: "
     << (r.certified ? "yes" : "no") << "  wall: " << r.wall_seconds << "s\n";
  if (!r.note.empty()) os << "  note: " << r.note << "\n";
  return os.str();
}

int run_sweep(const std::string& field_literal, const Range& ks, const Range& ns,
              bool canonical, unsigned jobs, std::uint64_t budget,
              const StrategyArgs& sargs, const OutputArgs& oargs) {
  lced::Field f = lced::Field::parse(field_literal);
  lced::SweepOptions opt;
  opt.strategy = make_strategy(sargs);
  opt.canonical = canonical;
  opt.jobs = jobs;
  opt.budget = budget;

  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "sweep";
  doc["reports"] = ordered_json::array();
  std::ostringstream text;
  bool counterexample = false, exhausted = false;

  for (std::uint64_t k = ks.lo; k <= ks.hi; ++k)
    for (std::uint64_t n = std::max(ns.lo, k); n <= ns.hi; ++n) {
      try {
        lced::SweepReport r = lced::sweep_conjecture(f, k, n, opt);
        counterexample |= !r.counterexamples.empty();
        exhausted |= !r.certified;
        doc["reports"].push_back(lced::to_json(r));
        text << sweep_text(r);
      } catch (const lced::BudgetExceededError& e) {
        exhausted = true;
        ordered_json cell;
        cell["field"] = f.literal();
        cell["k"] = k;
        cell["n"] = n;
        cell["certified"] = false;
        cell["note"] = e.what();
        doc["reports"].push_back(std::move(cell));
        text << "field " << f.literal() << "  k " << k << "  n " << n
             << "\n  skipped: " << e.what() << "\n";
      }
    }

  emit(oargs, doc, text.str());
  if (counterexample) return 2;
  if (exhausted) return 3;
  return 0;
}

// ------------------------------------------------------------------ pik ----

std::string pik_text(const lced::PiReport& r) {
  std::ostringstream os;
  os << "field " << r.field_literal << "  k " << r.k
     << (r.symmetric_only ? "  symmetric" : "  all matrices") << "\n"
     << "  candidates: " << r.candidates_total
     << "  qualifying: " << r.qualifying_count << "\n"
     << "  entry-sum violations: " << r.entry_sum_violations.size()
     << "  stronger-property violations: " << r.stronger_violations.size()
     << "\n  dets: " << r.dets_used << "  wall: " << r.wall_seconds << "s\n";
  for (const auto& m : r.entry_sum_violations)
    os << "  entry-sum violation:\n" << lced::format_matrix_text(m);
  for (const auto& m : r.stronger_violations)
    os << "  stronger-property violation:\n" << lced::format_matrix_text(m);
  return os.str();
}

int run_pik(const std::string& field_literal, const Range& ks, bool symmetric,
            std::uint64_t budget, const OutputArgs& oargs) {
  lced::Field f = lced::Field::parse(field_literal);
  lced::PiOptions opt;
  opt.symmetric_only = symmetric;
  opt.budget = budget;

  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "pik";
  doc["reports"] = ordered_json::array();
  std::ostringstream text;
  bool violation = false, exhausted = false;

  for (std::uint64_t k = ks.lo; k <= ks.hi; ++k) {
    try {
      lced::PiReport r = lced::verify_pi_k(f, k, opt);
      violation |= !r.verified();
      doc["reports"].push_back(lced::to_json(r));
      text << pik_text(r);
    } catch (const lced::BudgetExceededError& e) {
      exhausted = true;
      ordered_json cell;
      cell["field"] = f.literal();
      cell["k"] = k;
      cell["certified"] = false;
      cell["note"] = e.what();
      doc["reports"].push_back(std::move(cell));
      text << "field " << f.literal() << "  k " << k << "\n  skipped: "
           << e.what() << "\n";
    }
  }

  emit(oargs, doc, text.str());
  if (violation) return 2;
  if (exhausted) return 3;
  return 0;
}

// ----------------------------------------------------------- identities ----

std::string identities_text(const lced::IdentityReport& r) {
  std::ostringstream os;
  os << "field " << r.field_literal << "  k " << r.k << "  trials " << r.trials
     << "  seed " << r.seed << "\n";
  for (const auto& it : r.items) {
    os << "  " << it.name << ": ";
    if (!it.ran)
      os << "skipped (" << it.note << ")";
    else if (it.failures == 0)
      os << "ok (" << it.checks << " checks)";
    else
      os << it.failures << " FAILURES of " << it.checks;
    os << "\n";
  }
  return os.str();
}

int run_identities(const std::string& field_literal, const Range& ks,
                   std::uint64_t trials, std::uint64_t seed,
                   const OutputArgs& oargs) {
  std::optional<lced::Field> f;
  if (field_literal != "Z") f = lced::Field::parse(field_literal);

  lced::IdentityOptions opt;
  opt.trials = trials;
  opt.seed = seed;

  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "identities";
  doc["reports"] = ordered_json::array();
  std::ostringstream text;
  bool failures = false;

  for (std::uint64_t k = ks.lo; k <= ks.hi; ++k) {
    lced::IdentityReport r = f ? lced::identity_suite(*f, k, opt)
                               : lced::identity_suite_integers(k, opt);
    failures |= !r.all_passed();
    doc["reports"].push_back(lced::to_json(r));
    text << identities_text(r);
  }

  emit(oargs, doc, text.str());
  return failures ? 2 : 0;
}

// --------------------------------------------------------------- cyclic ----

int run_cyclic(const std::string& field_literal, const std::string& poly,
               std::uint64_t n, const std::string& lambda,
               const StrategyArgs& sargs, const OutputArgs& oargs) {
  lced::Field f = lced::Field::parse(field_literal);
  lced::Polynomial g = lced::parse_poly_literal(f, poly);
  lced::FieldElement lam = lced::parse_element(f, lambda);
  lced::SearchStrategy strat = make_strategy(sargs);

  ordered_json report =
      lced::cyclic_report(g, static_cast<std::size_t>(n), lam, strat);
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "cyclic";
  doc.update(report);

  std::ostringstream text;
  text << "field " << f.literal() << "  generator " << g.str() << "  n " << n
       << "  lambda " << lam.str() << "\n"
       << "gcd criterion (coprime factors): "
       << (report["gcd_criterion"].get<bool>() ? "true" : "false")
       << "\nreciprocal construction: "
       << report["reciprocal_construction"].get<std::string>();
  if (report.contains("reciprocal_witness"))
    text << "  " << report["reciprocal_witness"].get<std::string>();
  text << "\n";

  if (report["verdict"].is_null()) {
    text << "status: Inconclusive\nperms_examined: "
         << report["perms_examined"].get<std::uint64_t>() << "\n";
    emit(oargs, doc, text.str());
    return 3;
  }
  const auto& v = report["verdict"];
  text << "status: " << v["status"].get<std::string>() << "\n"
       << "certificate: " << v["certificate"].get<std::string>() << "\n";
  if (!v["witness"].is_null())
    text << "witness: " << v["witness"].get<std::string>() << "\n";
  text << "perms_examined: " << v["perms_examined"].get<std::uint64_t>()
       << "\nstrategy: " << lced::strategy_fingerprint(strat) << "\n";
  emit(oargs, doc, text.str());
  return v["status"] == "LCED" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact LCED decisions, conjecture sweeps, and identity checks "
               "for linear codes over finite fields"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "decide one generator matrix");
  std::string check_matrix, check_field;
  StrategyArgs check_strategy;
  OutputArgs check_output;
  bool allow_deficient = false;
  check->add_option("--matrix", check_matrix, "matrix file")->required();
  check->add_option("--field", check_field,
                    "field literal; must match the file when given");
  check->add_flag("--allow-deficient", allow_deficient,
                  "verdict instead of error on dependent rows");
  add_strategy_flags(check, check_strategy);
  add_output_flags(check, check_output);

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "enumerate standard-form matrices and test the membership "
               "condition against decided status");
  std::string sweep_field, sweep_k, sweep_n;
  bool sweep_canonical = false;
  unsigned sweep_jobs = 1;
  std::uint64_t sweep_budget = 0;
  bool sweep_budget_given = false;
  StrategyArgs sweep_strategy;
  OutputArgs sweep_output;
  sweep->add_option("--field", sweep_field, "field literal")->required();
  sweep->add_option("--k", sweep_k, "dimension or range A..B")->required();
  sweep->add_option("--n", sweep_n, "length or range A..B")->required();
  sweep->add_flag("--canonical", sweep_canonical,
                  "enumerate orbit representatives, orbit-weighted counts");
  sweep->add_option("--jobs", sweep_jobs, "worker threads");
  sweep->add_option("--budget", sweep_budget, "determinant-evaluation cap")
      ->each([&](const std::string&) { sweep_budget_given = true; });
  add_strategy_flags(sweep, sweep_strategy);
  add_output_flags(sweep, sweep_output);

  // pik
  auto* pik = app.add_subcommand(
      "pik", "enumerate matrices whose row-permuted copies all have "
             "eigenvalue -1 and check their sum properties");
  std::string pik_field, pik_k;
  bool pik_symmetric = false;
  std::uint64_t pik_budget = 0;
  bool pik_budget_given = false;
  OutputArgs pik_output;
  pik->add_option("--field", pik_field, "field literal")->required();
  pik->add_option("--k", pik_k, "size or range A..B")->required();
  pik->add_flag("--symmetric", pik_symmetric, "symmetric candidates only");
  pik->add_option("--budget", pik_budget, "determinant-evaluation cap")
      ->each([&](const std::string&) { pik_budget_given = true; });
  add_output_flags(pik, pik_output);

  // identities
  auto* identities = app.add_subcommand(
      "identities", "randomized checks of the permutation-sum identities");
  std::string id_field, id_k;
  std::uint64_t id_trials = 100, id_seed = 1;
  OutputArgs id_output;
  identities
      ->add_option("--field", id_field, "field literal, or Z for exact integers")
      ->required();
  identities->add_option("--k", id_k, "size or range A..B")->required();
  identities->add_option("--trials", id_trials, "random matrices per item");
  identities->add_option("--seed", id_seed, "random seed");
  add_output_flags(identities, id_output);

  // cyclic
  auto* cyclic = app.add_subcommand(
      "cyclic", "constacyclic pathway: coprimality criterion, reciprocal "
                "construction, and a final decision");
  std::string cy_field, cy_poly, cy_lambda = "1";
  std::uint64_t cy_n = 0;
  StrategyArgs cy_strategy;
  OutputArgs cy_output;
  cyclic->add_option("--field", cy_field, "field literal")->required();
  cyclic->add_option("--poly", cy_poly, "generator coefficients, low to high")
      ->required();
  cyclic->add_option("--n", cy_n, "code length")->required();
  cyclic->add_option("--lambda", cy_lambda, "shift constant (default 1)");
  add_strategy_flags(cyclic, cy_strategy);
  add_output_flags(cyclic, cy_output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check)
      return run_check(check_matrix, check_field, check_strategy,
                       allow_deficient, check_output);
    if (*sweep)
      return run_sweep(sweep_field, parse_range(sweep_k), parse_range(sweep_n),
                       sweep_canonical, sweep_jobs,
                       default_budget(sweep_budget, sweep_budget_given),
                       sweep_strategy, sweep_output);
    if (*pik)
      return run_pik(pik_field, parse_range(pik_k), pik_symmetric,
                     default_budget(pik_budget, pik_budget_given), pik_output);
    if (*identities)
      return run_identities(id_field, parse_range(id_k), id_trials, id_seed,
                            id_output);
    if (*cyclic)
      return run_cyclic(cy_field, cy_poly, cy_n, cy_lambda, cy_strategy,
                        cy_output);
  } catch (const lced::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
