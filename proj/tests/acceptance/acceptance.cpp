// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "thr/output.hpp"
#include "thr/reference.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace thr;

namespace {

// Pinned limits. All comparisons are exact; only wall-clock budgets are tolerances.
constexpr double kGridSeconds = 300.0;
constexpr double kInvariantSeconds = 120.0;
constexpr double kFullScaleSeconds = 60.0;
constexpr int kPrimes = 2;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

ArrangementSpec spec_for(const ReducedFamily& f) {
  return f.family == Family::ST ? ArrangementSpec(f.n, f.k_eff, 0) : ArrangementSpec(f.n, f.k_eff - 2, 1);
}

std::string cell(const ReducedFamily& f, long t) {
  return to_string(f.family) + "(n=" + std::to_string(f.n) + ",k=" + std::to_string(f.k_eff) +
         ",t=" + std::to_string(t) + ")";
}

void oracle_grid(Outcome& o, const std::function<BigInt(const ReducedFamily&, long)>& candidate, double limit) {
  const auto start = std::chrono::steady_clock::now();
  int checks = 0;
  for (Family family : {Family::ST, Family::CT})
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k <= 4; ++k) {
        const ReducedFamily f{family, n, k};
        for (long p : odd_primes_from(validity_bound(n, k), kPrimes)) {
          ++checks;
          const BigInt brute = brute_count_tuples(f, p).count;
          const BigInt got = candidate(f, p);
          if (got != brute) o.fail(cell(f, p) + ": " + got.get_str() + " != " + brute.get_str() + "; ");
        }
      }
  const double s = seconds_since(start);
  if (s > limit) o.fail("runtime " + std::to_string(s) + " s over limit; ");
  o.detail << checks << " cells, " << s << " s";
}

Outcome ac1() {
  Outcome o;
  oracle_grid(o, [](const ReducedFamily& f, long p) { return case_counts(f, p).total; }, kGridSeconds);
  return o;
}

Outcome ac2() {
  Outcome o;
  oracle_grid(
      o,
      [](const ReducedFamily& f, long p) {
        return count_tuples_via_independent_sets(SumGraph::for_family(f, static_cast<int>(p)), f.n);
      },
      kGridSeconds);
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto table = load_published_table(THR_DEFAULT_FIXTURE);
  const std::pair<int, IntPolynomial> expected[] = {
      {3, IntPolynomial{-8, 12, -6, 1}},
      {4, IntPolynomial{130, -142, 60, -12, 1}},
      {5, IntPolynomial{-2252, 2190, -870, 180, -20, 1}},
  };
  for (const auto& [n, poly] : expected) {
    const auto chi = characteristic_polynomial({n, 1, 0});
    if (chi.poly != poly) o.fail("chi(ST n=" + std::to_string(n) + ",k=1) differs; ");
    if (!charpoly_violation(poly, n, hyperplane_count({n, 1, 0})).empty()) o.fail("sanity check rejects row; ");
  }
  int agree = 0, disputed = 0;
  for (const auto& row : table.entries) {
    const auto report = adjudicate(spec_for({row.family, row.n, row.k}), &table);
    const bool published_ok = row.k == 1 && row.n >= 3;
    const auto want = published_ok ? Verdict::AllAgree : Verdict::FixtureDisputed;
    if (report.verdict != want)
      o.fail("row n=" + std::to_string(row.n) + " k=" + std::to_string(row.k) + " is " + to_string(report.verdict) + "; ");
    if (!charpoly_violation(report.engine_poly, row.n, binomial(row.n, 2) * (row.k + 1)).empty())
      o.fail("replacement fails sanity; ");
    (report.verdict == Verdict::AllAgree ? agree : disputed)++;
  }
  const long want_regions[] = {27, 345, 5513};
  for (int n = 3; n <= 5; ++n)
    if (characteristic_polynomial({n, 1, 0}).regions != want_regions[n - 3]) o.fail("regions n=" + std::to_string(n) + "; ");
  o.detail << agree << " rows AllAgree, " << disputed << " rows FixtureDisputed, regions 27, 345, 5513";
  return o;
}

Outcome ac4() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    if (chi_seo_ST(n) != characteristic_polynomial({n, 1, 0}).poly) o.fail("Seo ST n=" + std::to_string(n) + "; ");
    if (chi_seo_CT(n) != characteristic_polynomial({n, 1, 1}).poly) o.fail("Seo CT n=" + std::to_string(n) + "; ");
  }
  for (int n = 1; n <= 6; ++n) {
    BigInt shi;
    mpz_ui_pow_ui(shi.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(n - 1));
    const BigInt fact = factorial(static_cast<unsigned>(n));
    if (regions(chi_shi(n), n) != shi) o.fail("r(S_" + std::to_string(n) + "); ");
    if (regions(chi_catalan(n), n) != fact * catalan_number(n)) o.fail("r(C_" + std::to_string(n) + "); ");
    if (regions(chi_braid(n), n) != fact) o.fail("r(B_" + std::to_string(n) + "); ");
  }
  o.detail << "Seo ST/CT n=2..6, Shi/Catalan/braid regions n=1..6";
  return o;
}

Outcome ac5() {
  Outcome o;
  int checks = 0;
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 3; ++l) {
        const ArrangementSpec spec(n, k, l);
        const auto reduced = reduce(spec);
        const auto target = l % 2 == 0 ? ArrangementSpec(n, k + l, 0) : ArrangementSpec(n, k + l - 1, 1);
        if (reduced != (l % 2 == 0 ? ReducedFamily{Family::ST, n, k + l} : ReducedFamily{Family::CT, n, k + l + 1}))
          o.fail("reduce(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + "); ");
        if (characteristic_polynomial(spec).poly != characteristic_polynomial(target).poly)
          o.fail("engine path n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l) + "; ");
        for (long p : odd_primes_from(validity_bound(n, reduced.k_eff), kPrimes)) {
          ++checks;
          const auto original = SumGraph::for_spec(spec, static_cast<int>(p));
          if (count_admissible_tuples(original, n) != brute_count_tuples(reduced, p).count)
            o.fail("brute n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l) + "; ");
        }
      }
  o.detail << "48 specs, " << checks << " brute-force comparisons";
  return o;
}

Outcome ac6() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int cells = 0;
  for (int n = 1; n <= 6; ++n)
    for (int k_eff = 0; k_eff <= 5; ++k_eff)
      for (Family family : {Family::ST, Family::CT}) {
        const ReducedFamily f{family, n, k_eff};
        for (long t : sample_points(n, k_eff)) {
          const auto b = case_counts(f, t);
          if (!b.parts_nonnegative() || b.total != b.sum_of_parts()) o.fail(cell(f, t) + " case parts; ");
        }
        if (family == Family::CT && k_eff < 2) continue;  // not reachable from any T_{n,k,l}
        ++cells;
        const auto spec = spec_for(f);
        try {
          const auto chi = characteristic_polynomial(spec);
          if (auto why = charpoly_violation(chi.poly, n, hyperplane_count(spec)); !why.empty()) o.fail(why + "; ");
          if (chi.regions < 0) o.fail("negative regions; ");
        } catch (const Error& e) {
          o.fail(cell(f, 0) + ": " + e.what() + "; ");
        }
      }
  const double s = seconds_since(start);
  if (s > kInvariantSeconds) o.fail("runtime " + std::to_string(s) + " s over limit; ");
  o.detail << cells << " polynomials, " << s << " s";
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto table = load_published_table(THR_DEFAULT_FIXTURE);
  int computed = 0;
  for (const auto& row : table.entries) {
    const auto report = adjudicate(spec_for({row.family, row.n, row.k}), &table);
    if (report.verdict == Verdict::EngineMismatch) o.fail("engine mismatch at full scale; ");
    ++computed;
  }
  for (const auto& seq : table.sequences)
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
      characteristic_polynomial({seq.n_from + static_cast<int>(i), seq.k, seq.l});
      ++computed;
    }
  const double s = seconds_since(start);
  if (s > kFullScaleSeconds) o.fail("runtime " + std::to_string(s) + " s over limit; ");
  o.detail << computed << " published values recomputed unscaled with oracle checks, " << s << " s";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"AC1 engine vs brute-force grid", ac1},
      {"AC2 independent-set oracle vs brute force", ac2},
      {"AC3 published table adjudication", ac3},
      {"AC4 closed-form cross-checks", ac4},
      {"AC5 parity reduction", ac5},
      {"AC6 structural invariants n<=6 k_eff<=5", ac6},
      {"AC7 published results at full scale", ac7},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << o.detail.str() << ")" << std::endl;
  }
  return all ? 0 : 1;
}
