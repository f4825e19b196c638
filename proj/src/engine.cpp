#include "thr/engine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace thr {

SlicePlan SlicePlan::for_windows(int pos_lo, int pos_hi, int neg_lo, int neg_hi, int window_lo,
                                 int window_hi) {
  SlicePlan plan;
  plan.lower = pos_lo;
  plan.upper = pos_hi;
  plan.gap_penalty = window_hi - window_lo + 1;
  plan.shift = neg_lo - 1 + window_lo;
  plan.tail_offset = neg_hi + window_lo;
  return plan;
}

void SlicePlan::validate() const {
  if (gap_penalty < 0) throw std::logic_error("slice plan: negative gap penalty");
  if (positive_size() == 0) return;
  if (lower < shift)
    throw std::logic_error("slice plan: first positive " + std::to_string(lower) + " below shift " +
                           std::to_string(shift));
  if (upper - gap_penalty > tail_offset)
    throw std::logic_error("slice plan: gaps would run past the opposite partition");
}

int slice_excess(const SlicePlan& plan, std::span<const int> chosen) {
  if (chosen.empty()) return std::max(plan.tail_offset - plan.shift, 0);
  int g = std::max(chosen.front() - plan.shift - plan.gap_penalty, 0);
  for (std::size_t j = 1; j < chosen.size(); ++j) g += std::max(chosen[j] - chosen[j - 1] - plan.gap_penalty, 0);
  g += std::max(plan.tail_offset - chosen.back(), 0);
  return g;
}

namespace {

// DP over (last chosen position, accumulated g). A step to the next position
// adds 0 while the gap is within the penalty and one unit per excess step
// beyond it, so both contributions are prefix sums: along a row for the flat
// part and along a diagonal for the excess part.
template <class Count>
std::vector<std::vector<Count>> excess_tables(const SlicePlan& plan, int max_l) {
  const int width = plan.positive_size();
  const int gmax = plan.opposite_size();
  const int cols = gmax + 1;
  std::vector<std::vector<Count>> out(static_cast<std::size_t>(max_l + 1), std::vector<Count>(cols, Count(0)));
  out[0][static_cast<std::size_t>(gmax)] = Count(1);
  if (max_l == 0 || width == 0) return out;

  auto at = [cols](std::vector<Count>& v, int pos, int g) -> Count& {
    return v[static_cast<std::size_t>(pos) * cols + static_cast<std::size_t>(g)];
  };
  auto tail = [&](int pos_index) { return std::max(plan.tail_offset - (plan.lower + pos_index), 0); };

  std::vector<Count> cur(static_cast<std::size_t>(width) * cols, Count(0));
  std::vector<Count> row(cur.size()), diag(cur.size()), next(cur.size());
  for (int p = 0; p < width; ++p) {
    const int g = std::max(plan.lower + p - plan.shift - plan.gap_penalty, 0);
    if (g > gmax) throw std::logic_error("slice plan: first gap exceeds the opposite partition");
    at(cur, p, g) = Count(1);
  }

  const int pen = plan.gap_penalty;
  for (int l = 1;; ++l) {
    auto& dist = out[static_cast<std::size_t>(l)];
    for (int p = 0; p < width; ++p)
      for (int g = 0; g <= gmax; ++g) {
        const Count& c = at(cur, p, g);
        if (c == 0) continue;
        const int total = g + tail(p);
        if (total > gmax) throw std::logic_error("slice plan: excess exceeds the opposite partition");
        dist[static_cast<std::size_t>(total)] += c;
      }
    if (l == max_l) break;

    for (int p = 0; p < width; ++p)
      for (int g = 0; g <= gmax; ++g) {
        at(row, p, g) = at(cur, p, g);
        if (p > 0) at(row, p, g) += at(row, p - 1, g);
        at(diag, p, g) = at(cur, p, g);
        if (p > 0 && g > 0) at(diag, p, g) += at(diag, p - 1, g - 1);
      }
    for (int p = 0; p < width; ++p)
      for (int g = 0; g <= gmax; ++g) {
        Count v(0);
        if (p > 0) {
          // previous position in [p - pen, p - 1], no excess
          v += at(row, p - 1, g);
          const int cut = p - pen - 1;
          if (cut >= 0) v -= at(row, cut, g);
        }
        // previous position p - pen - e with e >= 1 excess
        const int dp = p - pen - 1;
        if (dp >= 0 && g > 0) v += at(diag, dp, g - 1);
        at(next, p, g) = v;
      }
    std::swap(cur, next);
  }
  return out;
}

bool fits_machine_words(const SlicePlan& plan, int max_l) {
  const BigInt limit = BigInt(std::numeric_limits<std::uint64_t>::max() / 4);
  for (int l = 0; l <= max_l; ++l)
    if (binomial(plan.positive_size(), l) > limit) return false;
  return true;
}

BigInt to_big(std::uint64_t x) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
  return out;
}

}  // namespace

std::vector<ExcessDistribution> excess_distributions(const SlicePlan& plan, int max_l) {
  if (max_l < 0) throw std::invalid_argument("excess distribution: l must be >= 0");
  plan.validate();
  std::vector<ExcessDistribution> out(static_cast<std::size_t>(max_l + 1));
  auto collect = [&](const auto& tables, auto convert) {
    for (int l = 0; l <= max_l; ++l) {
      out[static_cast<std::size_t>(l)].l = l;
      const auto& dist = tables[static_cast<std::size_t>(l)];
      for (std::size_t g = 0; g < dist.size(); ++g)
        if (dist[g] != 0) out[static_cast<std::size_t>(l)].counts[static_cast<int>(g)] = convert(dist[g]);
    }
  };
  if (fits_machine_words(plan, max_l)) {
    collect(excess_tables<std::uint64_t>(plan, max_l), to_big);
  } else {
    collect(excess_tables<BigInt>(plan, max_l), [](const BigInt& x) { return x; });
  }
  return out;
}

ExcessDistribution excess_distribution(const SlicePlan& plan, int l) {
  return excess_distributions(plan, l).back();
}

std::vector<BigInt> independent_set_counts(const SlicePlan& plan, int max_q) {
  if (max_q < 0) throw std::invalid_argument("independent set size must be >= 0");
  const auto dists = excess_distributions(plan, max_q);
  std::vector<BigInt> out(static_cast<std::size_t>(max_q + 1), 0);
  for (int q = 0; q <= max_q; ++q)
    for (int l = 0; l <= q; ++l)
      for (const auto& [g, count] : dists[static_cast<std::size_t>(l)].counts) out[q] += count * binomial(g, q - l);
  return out;
}

BigInt count_I(const SlicePlan& plan, int q) { return independent_set_counts(plan, q).back(); }

BigInt CaseBreakdown::sum_of_parts() const {
  BigInt s = N + zero_case_2;
  for (const auto& x : N_p_first_clique) s += x;
  for (const auto& x : N_p_second_clique) s += x;
  for (const auto& row : N_pairs)
    for (const auto& x : row) s += x;
  for (const auto& x : zero_case_5) s += x;
  return s;
}

bool CaseBreakdown::parts_nonnegative() const {
  auto ok = [](const BigInt& x) { return x >= 0; };
  if (!ok(N) || !ok(zero_case_2)) return false;
  for (const auto* v : {&N_p_first_clique, &N_p_second_clique, &zero_case_5})
    if (!std::all_of(v->begin(), v->end(), ok)) return false;
  for (const auto& row : N_pairs)
    if (!std::all_of(row.begin(), row.end(), ok)) return false;
  return true;
}

long min_case_modulus(int k) { return 2L * k + 3; }

long validity_bound(int n, int k_eff) {
  long t0 = 2L * (n + 2) * (k_eff + 2) + 1;
  return t0 % 2 == 0 ? t0 + 1 : t0;
}

namespace {

void check_sample_point(int n, int k, long t) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (t % 2 == 0) throw InvalidSamplePoint("evaluation point t = " + std::to_string(t) + " is even");
  if (t < min_case_modulus(k))
    throw InvalidSamplePoint("evaluation point t = " + std::to_string(t) + " is below " +
                             std::to_string(min_case_modulus(k)) + " for k = " + std::to_string(k));
}

// Tuples of length m whose values are a fixed independent set of size q,
// each value used at least once: S(m, q) q!. Summed against I(q).
struct SurjectionWeights {
  // weight[m][q] = S(m, q) q!
  std::vector<std::vector<BigInt>> weight;
  explicit SurjectionWeights(int n) {
    for (int m = 0; m <= n; ++m) {
      auto row = stirling2_row(static_cast<unsigned>(m));
      for (int q = 0; q <= m; ++q) row[q] *= factorial(static_cast<unsigned>(q));
      weight.push_back(std::move(row));
    }
  }
  BigInt tuples(const std::vector<BigInt>& I, int m) const {
    if (m < 0) return 0;
    BigInt s = 0;
    for (int q = 0; q <= m && q < static_cast<int>(I.size()); ++q) s += I[q] * weight[m][q];
    return s;
  }
};

}  // namespace

// Residues are signed in [-r, r]; negative vertices are tracked by magnitude
// b = -v. In both families a positive residual vertex i meets the negative
// residual vertex -b iff i - b is a forbidden sum, so the bipartite residual
// is described by the window of magnitudes each positive blocks.
CaseBreakdown case_counts_ST(int n, int k, long t) {
  check_sample_point(n, k, t);
  const int r = static_cast<int>((t - 1) / 2);
  const int half_lo = k / 2;        // first clique {0..half_lo}
  const int half_hi = (k + 1) / 2;  // second clique {-r..-r+half_hi-1}
  const SurjectionWeights w(n);
  auto plan = [&](int pos_lo, int pos_hi, int neg_lo, int neg_hi) {
    return SlicePlan::for_windows(pos_lo, pos_hi, neg_lo, neg_hi, 0, k);
  };

  CaseBreakdown out;
  out.t = t;
  out.family = Family::ST;
  out.n = n;
  out.k = k;

  out.N = w.tuples(independent_set_counts(plan(half_lo + 1, r, 1, r - half_hi), n), n);

  // p in the first clique blocks positives up to k - p and magnitudes 1..p.
  for (int p = 0; p <= half_lo; ++p) {
    const auto I = independent_set_counts(plan(k - p + 1, r, p + 1, r - half_hi), n - 1);
    out.N_p_first_clique.push_back(n * w.tuples(I, n - 1));
  }
  // -r + a blocks positives from r - a and magnitudes from r + a + 1 - k.
  for (int a = 0; a < half_hi; ++a) {
    const auto I = independent_set_counts(plan(half_lo + 1, r - a - 1, 1, r + a - k), n - 1);
    out.N_p_second_clique.push_back(n * w.tuples(I, n - 1));
  }
  const SumGraph g(static_cast<int>(t), forbidden_sums(ReducedFamily{Family::ST, n, k}));
  for (int p = 0; p <= half_lo; ++p) {
    std::vector<BigInt> row;
    for (int a = 0; a < half_hi; ++a) {
      if (n < 2 || g.is_edge(p, -r + a)) {
        row.emplace_back(0);
        continue;
      }
      const auto I = independent_set_counts(plan(k - p + 1, r - a - 1, p + 1, r + a - k), n - 2);
      row.push_back(BigInt(n) * (n - 1) * w.tuples(I, n - 2));
    }
    out.N_pairs.push_back(std::move(row));
  }
  out.total = out.sum_of_parts();
  return out;
}

CaseBreakdown case_counts_CT(int n, int k, long t) {
  check_sample_point(n, k, t);
  const int r = static_cast<int>((t - 1) / 2);
  const int half_lo = k / 2;        // first clique {1..half_lo}
  const int half_hi = (k + 1) / 2;  // second clique {-r..-r+half_hi-1}
  const SurjectionWeights w(n);
  auto plan = [&](int pos_lo, int pos_hi, int neg_lo, int neg_hi) {
    return SlicePlan::for_windows(pos_lo, pos_hi, neg_lo, neg_hi, 1, k);
  };

  CaseBreakdown out;
  out.t = t;
  out.family = Family::CT;
  out.n = n;
  out.k = k;

  // Case 1: no clique vertex, no zero.
  out.N = w.tuples(independent_set_counts(plan(half_lo + 1, r, 1, r - half_hi), n), n);

  // Case 2: z >= 1 zeros; the remaining coordinates avoid N(0) = {1..k}.
  {
    const auto I = independent_set_counts(plan(k + 1, r, 1, r - half_hi), n);
    BigInt s = 0;
    for (int z = 1; z <= n; ++z) s += binomial(n, z) * w.tuples(I, n - z);
    out.zero_case_2 = s;
  }

  // Case 3: one p in {1..half_lo}; p is adjacent to 0, so no zeros.
  for (int p = 1; p <= half_lo; ++p) {
    const auto I = independent_set_counts(plan(k - p + 1, r, p, r - half_hi), n - 1);
    out.N_p_first_clique.push_back(n * w.tuples(I, n - 1));
  }

  // Cases 4 and 5: one -r + a, without and with zeros.
  for (int a = 0; a < half_hi; ++a) {
    const auto I = independent_set_counts(plan(half_lo + 1, r - a, 1, r + a - k), n - 1);
    out.N_p_second_clique.push_back(n * w.tuples(I, n - 1));

    const auto I0 = independent_set_counts(plan(k + 1, r - a, 1, r + a - k), n - 1);
    BigInt s = 0;
    for (int z = 1; z <= n - 1; ++z) s += binomial(n - 1, z) * w.tuples(I0, n - 1 - z);
    out.zero_case_5.push_back(n * s);
  }

  // Case 6: one vertex from each clique.
  const SumGraph g(static_cast<int>(t), forbidden_sums(ReducedFamily{Family::CT, n, k}));
  for (int p = 1; p <= half_lo; ++p) {
    std::vector<BigInt> row;
    for (int a = 0; a < half_hi; ++a) {
      if (n < 2 || g.is_edge(p, -r + a)) {
        row.emplace_back(0);
        continue;
      }
      const auto I = independent_set_counts(plan(k - p + 1, r - a, p, r + a - k), n - 2);
      row.push_back(BigInt(n) * (n - 1) * w.tuples(I, n - 2));
    }
    out.N_pairs.push_back(std::move(row));
  }
  out.total = out.sum_of_parts();
  return out;
}

CaseBreakdown case_counts(const ReducedFamily& f, long t) {
  return f.family == Family::ST ? case_counts_ST(f.n, f.k_eff, t) : case_counts_CT(f.n, f.k_eff, t);
}

std::vector<long> sample_points(int n, int k_eff) {
  std::vector<long> out;
  const long t0 = validity_bound(n, k_eff);
  for (int i = 0; i < n + 2; ++i) out.push_back(t0 + 2L * i);
  return out;
}

BigInt regions(const IntPolynomial& poly, int n) {
  if (poly.degree() != n)
    throw std::invalid_argument("regions: polynomial degree " + std::to_string(poly.degree()) +
                                " does not match n = " + std::to_string(n));
  BigInt v = poly_eval(poly, -1);
  if (n % 2 != 0) v = -v;
  if (v < 0) throw NegativeRegionCount("regions: (-1)^n chi(-1) = " + v.get_str() + " is negative");
  return v;
}

std::string charpoly_violation(const IntPolynomial& poly, int n, const BigInt& hyperplanes) {
  if (poly.degree() != n) return "degree " + std::to_string(poly.degree()) + " != " + std::to_string(n);
  if (poly.leading() != 1) return "leading coefficient " + poly.leading().get_str() + " != 1";
  if (n >= 1 && poly.coefficient(static_cast<std::size_t>(n - 1)) != -hyperplanes)
    return "coefficient of t^" + std::to_string(n - 1) + " is " +
           poly.coefficient(static_cast<std::size_t>(n - 1)).get_str() + ", expected -" + hyperplanes.get_str();
  for (int i = 0; i <= n; ++i) {
    BigInt c = poly.coefficient(static_cast<std::size_t>(n - i));
    if (i % 2 != 0) c = -c;
    if (c < 0) return "sign alternation fails at t^" + std::to_string(n - i);
  }
  return {};
}

CharPolyResult characteristic_polynomial(const ArrangementSpec& spec) {
  CharPolyResult out;
  out.spec = spec;
  out.reduced = reduce(spec);
  for (long t : sample_points(spec.n, out.reduced.k_eff))
    out.samples.push_back({BigInt(t), case_counts(out.reduced, t).total});

  const std::span<const SamplePoint> fit(out.samples.data(), out.samples.size() - 1);
  out.poly = interpolate(fit);
  const auto& holdout = out.samples.back();
  if (poly_eval(out.poly, holdout.t) != holdout.value)
    throw HoldoutMismatch("interpolant gives " + poly_eval(out.poly, holdout.t).get_str() + " at t = " +
                          holdout.t.get_str() + " but the count is " + holdout.value.get_str());
  if (const auto why = charpoly_violation(out.poly, spec.n, hyperplane_count(spec)); !why.empty())
    throw SanityCheckFailed("characteristic polynomial of T(" + std::to_string(spec.n) + "," +
                            std::to_string(spec.k) + "," + std::to_string(spec.l) + "): " + why);
  out.regions = regions(out.poly, spec.n);
  return out;
}

}  // namespace thr
