#pragma once

#include "thr/arrangement.hpp"
#include "thr/engine.hpp"
#include "thr/exact_arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thr {

/// t (t - 1) ... (t - n + 1)
IntPolynomial chi_braid(int n);
/// t (t - n)^{n-1}
IntPolynomial chi_shi(int n);
/// t (t - n - 1)(t - n - 2) ... (t - 2n + 1)
IntPolynomial chi_catalan(int n);

/// Seo's closed form for x_i + x_j = 0, 1 (n >= 2):
///   sum_j (t-j-1)_j S(n,j) + 2n sum_j (t-j-2)_j S(n-1,j)
///   + n(n-1) sum_j (t-j-3)_j S(n-2,j), with j running to n.
IntPolynomial chi_seo_ST(int n);

/// Coefficient alpha_{n,k,l} of Seo's Catalan-threshold formula; rational.
BigRational seo_alpha(int n, int k, int l);

/// Seo's closed form for x_i + x_j = -1, 0, 1 (n >= 2):
///   n! sum_{k=0}^{n} sum_{l=0}^{k} alpha_{n,k,l} ((t - 2k - 1))_l / l!
/// Throws IntegralityViolation if the rational sum is not an integer polynomial.
IntPolynomial chi_seo_CT(int n);

BigInt catalan_number(int n);

/// Closed form applying to this reduced family, if any, with its name.
struct ReferenceFormula {
  std::string name;
  IntPolynomial poly;
};
std::optional<ReferenceFormula> reference_formula(const ReducedFamily& f);

/// One polynomial row of the published computations table.
struct FixtureEntry {
  Family family = Family::ST;
  int n = 1;
  int k = 0;
  IntPolynomial poly;
  std::string source;
  /// Recomputed on load: the row fails the degree / monic / t^{n-1} check.
  bool disputed = false;
  /// The flag as written in the file, kept only to detect hand edits.
  bool disputed_in_file = false;
};

/// A published region sequence r(T_{n,k,l}) for n = n_from, n_from + 1, ...
struct RegionSequence {
  Family family = Family::ST;
  int k = 0;
  int l = 0;
  int n_from = 1;
  std::vector<BigInt> values;
  std::string source;
};

struct PublishedTable {
  std::vector<FixtureEntry> entries;
  std::vector<RegionSequence> sequences;

  const FixtureEntry* find(Family family, int n, int k) const;
};

/// The disputed flag for a polynomial row of family ST_{n,k}.
bool fixture_row_disputed(const IntPolynomial& poly, int n, int k);

PublishedTable parse_published_table(const std::string& json_text);
PublishedTable load_published_table(const std::string& path);

enum class Verdict { AllAgree, FixtureDisputed, EngineMismatch };
std::string to_string(Verdict v);

struct OracleCheck {
  long t = 0;
  BigInt brute;
  BigInt engine_cases;
  BigInt engine_poly;

  bool agrees() const { return brute == engine_cases && brute == engine_poly; }
};

struct DiffReport {
  ArrangementSpec spec;
  ReducedFamily reduced;
  IntPolynomial engine_poly;
  BigInt engine_regions;
  std::vector<SamplePoint> samples;
  std::vector<OracleCheck> oracle_counts;
  std::optional<ReferenceFormula> reference;
  std::optional<IntPolynomial> fixture_poly;
  Verdict verdict = Verdict::AllAgree;
  std::string notes;

  bool reference_agrees() const { return !reference || reference->poly == engine_poly; }
};

struct AdjudicateOptions {
  int primes = 2;
  EnumerationBudget budget;
};

/// First `count` odd primes >= from.
std::vector<long> odd_primes_from(long from, int count);

/// Engine, brute-force oracle at odd primes >= T0, the applicable closed
/// form and the fixture row (looked up by reduced family) side by side.
/// EngineMismatch iff the engine disagrees with the oracle at some prime;
/// FixtureDisputed iff they agree but the fixture row differs.
DiffReport adjudicate(const ArrangementSpec& spec, const PublishedTable* fixture = nullptr,
                      AdjudicateOptions options = {});

}  // namespace thr
