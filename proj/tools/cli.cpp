#include "cli.hpp"

#include "thr/output.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ostream>

namespace thr::cli {
namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_spec_range(int n, int k, int l) {
  if (n < 1) throw UsageError("n must be >= 1");
  if (k < 0 || l < 0) throw UsageError("k and l must be >= 0");
  if (n > kMaxN) throw UsageError("n must be <= " + std::to_string(kMaxN));
  if (k + l > kMaxKEff) throw UsageError("k + l must be <= " + std::to_string(kMaxKEff));
}

PolyFormat poly_format(const std::string& name) {
  return name == "latex" ? PolyFormat::Latex : PolyFormat::Plain;
}

// chi

struct ChiArgs {
  int n = 1, k = 0, l = 0;
  std::string format = "json";
};

int cmd_chi(const ChiArgs& a, std::ostream& out) {
  check_spec_range(a.n, a.k, a.l);
  const auto start = Clock::now();
  const ArrangementSpec spec(a.n, a.k, a.l);
  const auto result = characteristic_polynomial(spec);
  if (auto why = charpoly_violation(result.poly, a.n, hyperplane_count(spec)); !why.empty())
    throw SanityCheckFailed(why);
  if (a.format == "json") {
    out << chi_document(result, std::nullopt, elapsed_ms(start)).dump() << '\n';
  } else {
    out << format_polynomial(result.poly, poly_format(a.format)) << "; regions = " << result.regions << '\n';
  }
  return Ok;
}

// verify

struct VerifyArgs {
  int n_max = 1, k_max = 0, l_max = 0, primes = 2;
  std::uint64_t budget = EnumerationBudget{}.max_nodes;
};

Json mismatch_line(const ArrangementSpec& spec, const ReducedFamily& reduced, const std::string& kind) {
  Json line;
  line["n"] = spec.n;
  line["k"] = spec.k;
  line["l"] = spec.l;
  line["family"] = to_string(reduced.family);
  line["k_eff"] = reduced.k_eff;
  line["kind"] = kind;
  return line;
}

void verify_cell(const ArrangementSpec& spec, const VerifyArgs& a, std::vector<Json>& mismatches, long& checks) {
  const auto reduced = reduce(spec);
  const EnumerationBudget budget{a.budget};
  CharPolyResult chi;
  try {
    chi = characteristic_polynomial(spec);
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const Error& e) {
    auto line = mismatch_line(spec, reduced, "sanity");
    line["message"] = e.what();
    mismatches.push_back(std::move(line));
    return;
  }
  ++checks;

  for (long p : odd_primes_from(validity_bound(spec.n, reduced.k_eff), a.primes)) {
    const BigInt brute = brute_count_tuples(reduced, p, budget).count;
    const auto original = SumGraph::for_spec(spec, static_cast<int>(p));
    const auto reduced_graph = SumGraph::for_family(reduced, static_cast<int>(p));
    const std::pair<std::string, BigInt> observed[] = {
        {"case_counts", case_counts(reduced, p).total},
        {"polynomial", poly_eval(chi.poly, p)},
        {"reduction", count_admissible_tuples(original, spec.n, budget)},
        {"independent_sets", count_tuples_via_independent_sets(reduced_graph, spec.n, budget)},
    };
    for (const auto& [kind, value] : observed) {
      ++checks;
      if (value == brute) continue;
      auto line = mismatch_line(spec, reduced, kind);
      line["t"] = p;
      line["expected"] = brute.get_str();
      line["actual"] = value.get_str();
      mismatches.push_back(std::move(line));
    }
  }

  if (auto ref = reference_formula(reduced)) {
    ++checks;
    if (ref->poly != chi.poly) {
      auto line = mismatch_line(spec, reduced, "reference");
      line["formula"] = ref->name;
      line["expected"] = bigint_array(ref->poly.coefficients());
      line["actual"] = bigint_array(chi.poly.coefficients());
      mismatches.push_back(std::move(line));
    }
  }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  check_spec_range(a.n_max, a.k_max, a.l_max);
  if (a.primes < 1) throw UsageError("--primes must be >= 1");
  const auto start = Clock::now();
  std::vector<Json> mismatches;
  long cells = 0, checks = 0;
  for (int n = 1; n <= a.n_max; ++n)
    for (int k = 0; k <= a.k_max; ++k)
      for (int l = 0; l <= a.l_max; ++l) {
        verify_cell(ArrangementSpec(n, k, l), a, mismatches, checks);
        ++cells;
      }
  for (const auto& line : mismatches) out << line.dump() << '\n';
  Json summary;
  summary["cells"] = cells;
  summary["checks"] = checks;
  summary["mismatches"] = mismatches.size();
  summary["runtime_ms"] = elapsed_ms(start);
  Json wrapper;
  wrapper["summary"] = std::move(summary);
  out << wrapper.dump() << '\n';
  return mismatches.empty() ? Ok : Mismatch;
}

// table

struct TableArgs {
  std::string format = "plain";
  std::string fixture = THR_DEFAULT_FIXTURE;
  int primes = 2;
};

std::string join(const std::vector<BigInt>& values) {
  std::string s;
  for (const auto& v : values) s += (s.empty() ? "" : ", ") + v.get_str();
  return s;
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  PublishedTable table;
  try {
    table = load_published_table(a.fixture);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const bool json = a.format == "json";
  AdjudicateOptions options;
  options.primes = a.primes;

  for (const auto& row : table.entries) {
    const auto start = Clock::now();
    const ArrangementSpec query = row.family == Family::ST ? ArrangementSpec(row.n, row.k, 0)
                                                           : ArrangementSpec(row.n, row.k - 2, 1);
    const auto report = adjudicate(query, &table, options);
    if (json) {
      CharPolyResult r{query, report.reduced, report.engine_poly, report.samples, report.engine_regions};
      auto doc = chi_document(r, report.verdict, elapsed_ms(start));
      doc["published_coefficients"] = bigint_array(row.poly.coefficients());
      doc["published_disputed"] = row.disputed;
      doc["notes"] = report.notes;
      out << doc.dump() << '\n';
    } else {
      out << to_string(row.family) << " n=" << row.n << " k=" << row.k << " | published: "
          << format_polynomial(row.poly, PolyFormat::Plain) << " | engine: "
          << format_polynomial(report.engine_poly, PolyFormat::Plain) << " | " << to_string(report.verdict) << '\n';
    }
  }

  for (const auto& seq : table.sequences) {
    std::vector<BigInt> engine;
    for (std::size_t i = 0; i < seq.values.size(); ++i)
      engine.push_back(characteristic_polynomial(ArrangementSpec(seq.n_from + static_cast<int>(i), seq.k, seq.l)).regions);
    const auto verdict = engine == seq.values ? Verdict::AllAgree : Verdict::FixtureDisputed;
    if (json) {
      Json doc;
      doc["family"] = to_string(reduce(ArrangementSpec(1, seq.k, seq.l)).family);
      doc["k"] = seq.k;
      doc["l"] = seq.l;
      doc["n_from"] = seq.n_from;
      doc["published"] = bigint_array(seq.values);
      doc["engine"] = bigint_array(engine);
      doc["verdict"] = to_string(verdict);
      out << doc.dump() << '\n';
    } else {
      out << "regions k=" << seq.k << " l=" << seq.l << " n=" << seq.n_from << ".."
          << seq.n_from + static_cast<int>(seq.values.size()) - 1 << " | published: " << join(seq.values)
          << " | engine: " << join(engine) << " | " << to_string(verdict) << '\n';
    }
  }
  return Ok;
}

// sequence

struct SequenceArgs {
  int k = 0, l = 0, n_from = 1, n_to = 1;
};

int cmd_sequence(const SequenceArgs& a, std::ostream& out) {
  if (a.n_from < 1) throw UsageError("--n-from must be >= 1");
  if (a.n_to < a.n_from) throw UsageError("--n-to must be >= --n-from");
  check_spec_range(a.n_to, a.k, a.l);
  const auto start = Clock::now();
  std::vector<BigInt> values;
  for (int n = a.n_from; n <= a.n_to; ++n) values.push_back(characteristic_polynomial(ArrangementSpec(n, a.k, a.l)).regions);
  out << join(values) << '\n';
  Json doc;
  doc["k"] = a.k;
  doc["l"] = a.l;
  doc["n_from"] = a.n_from;
  doc["n_to"] = a.n_to;
  doc["regions"] = bigint_array(values);
  doc["runtime_ms"] = elapsed_ms(start);
  out << doc.dump() << '\n';
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic polynomials and region counts of threshold arrangements", "thrchi"};
  app.require_subcommand(1);

  ChiArgs chi;
  auto* chi_cmd = app.add_subcommand("chi", "Characteristic polynomial and region count of T_{n,k,l}");
  chi_cmd->add_option("--n", chi.n)->required();
  chi_cmd->add_option("--k", chi.k)->required();
  chi_cmd->add_option("--l", chi.l)->required();
  chi_cmd->add_option("--format", chi.format)->check(CLI::IsMember({"json", "latex", "plain"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Engine against oracles and closed forms over a grid");
  verify_cmd->add_option("--n-max", verify.n_max)->required();
  verify_cmd->add_option("--k-max", verify.k_max)->required();
  verify_cmd->add_option("--l-max", verify.l_max)->required();
  verify_cmd->add_option("--primes", verify.primes)->required();
  verify_cmd->add_option("--budget", verify.budget, "Node budget per brute-force count");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Adjudicate the published table");
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"json", "plain"}));
  table_cmd->add_option("--fixture", table.fixture);
  table_cmd->add_option("--primes", table.primes)->check(CLI::PositiveNumber);

  SequenceArgs seq;
  auto* seq_cmd = app.add_subcommand("sequence", "Region counts for a range of n");
  seq_cmd->add_option("--k", seq.k)->required();
  seq_cmd->add_option("--l", seq.l)->required();
  seq_cmd->add_option("--n-from", seq.n_from)->required();
  seq_cmd->add_option("--n-to", seq.n_to)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (*chi_cmd) return cmd_chi(chi, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*table_cmd) return cmd_table(table, out);
    return cmd_sequence(seq, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return Usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return Usage;
  } catch (const BudgetExceeded& e) {
    err << "BudgetExceeded: " << e.what() << '\n';
    return Usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return Internal;
  }
}

}  // namespace thr::cli
