#pragma once

#include "thr/arrangement.hpp"
#include "thr/exact_arith.hpp"

#include <map>
#include <vector>

namespace thr {

class InvalidSamplePoint : public Error {
 public:
  using Error::Error;
};
class HoldoutMismatch : public Error {
 public:
  using Error::Error;
};
class SanityCheckFailed : public Error {
 public:
  using Error::Error;
};
class NegativeRegionCount : public Error {
 public:
  using Error::Error;
};

/// One side of a bipartite residual graph, seen from the positive partition.
///
/// The positive partition is [lower, upper]. For chosen positives
/// i_1 < ... < i_l the number of opposite vertices adjacent to none of them is
///
///   g = max(i_1 - shift - gap_penalty, 0)
///     + sum_{j >= 2} max(i_j - i_{j-1} - gap_penalty, 0)
///     + max(tail_offset - i_l, 0)
///
/// and g = max(tail_offset - shift, 0) when nothing is chosen. The formula is
/// exact (no clipping) when lower >= shift and upper - gap_penalty <= tail_offset.
struct SlicePlan {
  int lower = 0;
  int upper = -1;
  int gap_penalty = 1;
  int tail_offset = 0;
  int shift = 0;

  /// Plan for positives [pos_lo, pos_hi] against negative magnitudes
  /// [neg_lo, neg_hi], where positive i is adjacent to magnitude b iff
  /// b lies in [i - window_hi, i - window_lo].
  static SlicePlan for_windows(int pos_lo, int pos_hi, int neg_lo, int neg_hi, int window_lo,
                               int window_hi);

  int positive_size() const { return upper >= lower ? upper - lower + 1 : 0; }
  /// Number of opposite-partition vertices.
  int opposite_size() const { return tail_offset > shift ? tail_offset - shift : 0; }
  /// Throws std::logic_error when the unclipped g formula would be inexact.
  void validate() const;

  friend bool operator==(const SlicePlan&, const SlicePlan&) = default;
};

/// g value of one increasing tuple under `plan` (the closed formula).
int slice_excess(const SlicePlan& plan, std::span<const int> chosen);

/// Histogram of g over all increasing l-tuples in [lower, upper].
struct ExcessDistribution {
  int l = 0;
  std::map<int, BigInt> counts;
};

ExcessDistribution excess_distribution(const SlicePlan& plan, int l);

/// Distributions for l = 0..max_l from a single dynamic-programming pass.
std::vector<ExcessDistribution> excess_distributions(const SlicePlan& plan, int max_l);

/// Independent sets of size q in the residual bipartite graph:
/// sum_l sum_g D_l[g] C(g, q - l).
BigInt count_I(const SlicePlan& plan, int q);
std::vector<BigInt> independent_set_counts(const SlicePlan& plan, int max_q);

/// Per-case counts of admissible tuples at one odd modulus t.
///
/// ST: N (no clique vertex), N_p over both cliques, N_pairs. CT adds the
/// zero-vertex cases: zero_case_2 (zeros only) and zero_case_5 (one vertex of
/// the second clique plus zeros).
struct CaseBreakdown {
  long t = 0;
  Family family = Family::ST;
  int n = 1;
  int k = 0;
  BigInt N;
  std::vector<BigInt> N_p_first_clique;
  std::vector<BigInt> N_p_second_clique;
  std::vector<std::vector<BigInt>> N_pairs;
  BigInt zero_case_2;
  std::vector<BigInt> zero_case_5;
  BigInt total;

  BigInt sum_of_parts() const;
  bool parts_nonnegative() const;
};

/// Smallest odd t at which the case decomposition is exact for sums up to k.
long min_case_modulus(int k);

/// Smallest odd t >= 2(n + 2)(k_eff + 2) + 1.
long validity_bound(int n, int k_eff);

/// Throws InvalidSamplePoint when t is even or below min_case_modulus(k).
CaseBreakdown case_counts_ST(int n, int k, long t);
CaseBreakdown case_counts_CT(int n, int k, long t);
CaseBreakdown case_counts(const ReducedFamily& f, long t);

/// n + 2 consecutive odd integers from validity_bound(n, k_eff); the last
/// one is a holdout.
std::vector<long> sample_points(int n, int k_eff);

struct CharPolyResult {
  ArrangementSpec spec;
  ReducedFamily reduced;
  IntPolynomial poly;
  std::vector<SamplePoint> samples;
  BigInt regions;
};

/// Region count (-1)^n chi(-1). Throws NegativeRegionCount if negative.
BigInt regions(const IntPolynomial& poly, int n);

/// Coefficient checks every characteristic polynomial must pass; returns an
/// empty string or the first violation.
std::string charpoly_violation(const IntPolynomial& poly, int n, const BigInt& hyperplanes);

/// Reduce, evaluate at sample_points, interpolate on the first n + 1 and
/// check the holdout, degree, monicity, t^{n-1} coefficient and sign pattern.
CharPolyResult characteristic_polynomial(const ArrangementSpec& spec);

}  // namespace thr
