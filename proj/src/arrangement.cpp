#include "thr/arrangement.hpp"

#include <bit>
#include <stdexcept>

namespace thr {

std::string to_string(Family f) { return f == Family::ST ? "ST" : "CT"; }

Family family_from_string(const std::string& s) {
  if (s == "ST") return Family::ST;
  if (s == "CT") return Family::CT;
  throw std::invalid_argument("unknown family '" + s + "'");
}

ArrangementSpec::ArrangementSpec(int n_, int k_, int l_) : n(n_), k(k_), l(l_) {
  if (n < 1) throw std::invalid_argument("arrangement dimension n must be >= 1");
  if (k < 0 || l < 0) throw std::invalid_argument("arrangement constants k, l must be >= 0");
}

ReducedFamily reduce(const ArrangementSpec& spec) {
  if (spec.l % 2 == 0) return {Family::ST, spec.n, spec.k + spec.l};
  return {Family::CT, spec.n, spec.k + spec.l + 1};
}

BigInt hyperplane_count(const ArrangementSpec& spec) {
  return binomial(spec.n, 2) * (spec.k + spec.l + 1);
}

std::vector<long> forbidden_sums(const ReducedFamily& f) {
  std::vector<long> out;
  for (long c = (f.family == Family::ST ? 0 : 1); c <= f.k_eff; ++c) out.push_back(c);
  return out;
}

std::vector<long> forbidden_sums(const ArrangementSpec& spec) {
  std::vector<long> out;
  for (long c = -spec.l; c <= spec.k; ++c) out.push_back(c);
  return out;
}

SumGraph::SumGraph(int modulus, std::span<const long> forbidden) : m_(modulus), forbidden_(modulus, 0) {
  if (modulus < 3 || modulus % 2 == 0)
    throw std::invalid_argument("sum graph modulus must be odd and >= 3, got " + std::to_string(modulus));
  for (long c : forbidden) forbidden_[static_cast<std::size_t>(((c % m_) + m_) % m_)] = 1;
}

SumGraph SumGraph::for_family(const ReducedFamily& f, int modulus) {
  const auto sums = forbidden_sums(f);
  return SumGraph(modulus, sums);
}

SumGraph SumGraph::for_spec(const ArrangementSpec& spec, int modulus) {
  const auto sums = forbidden_sums(spec);
  return SumGraph(modulus, sums);
}

int SumGraph::normalize(long x) const {
  long v = ((x % m_) + m_) % m_;
  return static_cast<int>(v > radius() ? v - m_ : v);
}

bool SumGraph::is_forbidden_sum(long s) const {
  return forbidden_[static_cast<std::size_t>(((s % m_) + m_) % m_)] != 0;
}

std::vector<int> SumGraph::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int v = 0; v <= radius(); ++v) out.push_back(v);
  for (int v = -1; v >= -radius(); --v) out.push_back(v);
  return out;
}

std::vector<int> SumGraph::self_loop_vertices() const {
  std::vector<int> out;
  for (int v : vertices())
    if (has_self_loop(v)) out.push_back(v);
  return out;
}

bool is_edge(const SumGraph& g, int u, int v) { return g.is_edge(u, v); }

namespace {

using Word = std::uint64_t;

// Row x holds bit y iff x + y is an admissible (non-forbidden) sum.
struct CompatibilityRows {
  int m = 0;
  int words = 0;
  std::vector<Word> bits;

  explicit CompatibilityRows(const SumGraph& g) : m(g.modulus()), words((m + 63) / 64) {
    bits.assign(static_cast<std::size_t>(m) * words, 0);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (!g.is_forbidden_sum(static_cast<long>(x) + y)) row(x)[y / 64] |= Word{1} << (y % 64);
  }
  Word* row(int x) { return bits.data() + static_cast<std::size_t>(x) * words; }
  const Word* row(int x) const { return bits.data() + static_cast<std::size_t>(x) * words; }
};

class TupleCounter {
 public:
  TupleCounter(const SumGraph& g, int n, EnumerationBudget budget)
      : rows_(g), n_(n), budget_(budget), scratch_(static_cast<std::size_t>(n + 1) * rows_.words, 0) {}

  std::uint64_t run() {
    Word* all = level(0);
    for (int y = 0; y < rows_.m; ++y) all[y / 64] |= Word{1} << (y % 64);
    descend(0);
    return total_;
  }

 private:
  Word* level(int d) { return scratch_.data() + static_cast<std::size_t>(d) * rows_.words; }

  void descend(int depth) {
    if (++nodes_ > budget_.max_nodes)
      throw BudgetExceeded("tuple enumeration exceeded the budget of " +
                           std::to_string(budget_.max_nodes) + " search nodes");
    const Word* allowed = level(depth);
    if (depth == n_ - 1) {
      for (int w = 0; w < rows_.words; ++w) total_ += static_cast<std::uint64_t>(std::popcount(allowed[w]));
      return;
    }
    Word* next = level(depth + 1);
    for (int w = 0; w < rows_.words; ++w) {
      Word pending = allowed[w];
      while (pending) {
        const int x = w * 64 + std::countr_zero(pending);
        pending &= pending - 1;
        const Word* compat = rows_.row(x);
        for (int i = 0; i < rows_.words; ++i) next[i] = allowed[i] & compat[i];
        descend(depth + 1);
      }
    }
  }

  CompatibilityRows rows_;
  int n_;
  EnumerationBudget budget_;
  std::vector<Word> scratch_;
  std::uint64_t nodes_ = 0;
  std::uint64_t total_ = 0;
};

// Enumerates independent sets in increasing index order. `visit(depth)` sees
// chosen_[0..depth) as the current set.
class IndependentSetWalker {
 public:
  IndependentSetWalker(const SumGraph& g, int max_size, EnumerationBudget budget)
      : rows_(g), g_(g), max_size_(max_size), budget_(budget),
        scratch_(static_cast<std::size_t>(max_size + 1) * rows_.words, 0) {}

  template <class Visit>
  void run(Visit&& visit) {
    chosen_.assign(static_cast<std::size_t>(max_size_), 0);
    Word* all = level(0);
    for (int y = 0; y < rows_.m; ++y) all[y / 64] |= Word{1} << (y % 64);
    descend(0, visit);
  }

  std::span<const int> chosen(int depth) const { return {chosen_.data(), static_cast<std::size_t>(depth)}; }

 private:
  Word* level(int d) { return scratch_.data() + static_cast<std::size_t>(d) * rows_.words; }

  template <class Visit>
  void descend(int depth, Visit& visit) {
    if (++nodes_ > budget_.max_nodes)
      throw BudgetExceeded("independent set enumeration exceeded the budget of " +
                           std::to_string(budget_.max_nodes) + " search nodes");
    visit(depth);
    if (depth == max_size_) return;
    const Word* cand = level(depth);
    Word* next = level(depth + 1);
    for (int w = 0; w < rows_.words; ++w) {
      Word pending = cand[w];
      while (pending) {
        const int x = w * 64 + std::countr_zero(pending);
        pending &= pending - 1;
        const Word* compat = rows_.row(x);
        // Later candidates only: indices above x.
        for (int i = 0; i < rows_.words; ++i) {
          Word keep = cand[i] & compat[i];
          if (i < w) keep = 0;
          else if (i == w) keep &= (x % 64 == 63) ? Word{0} : (~Word{0} << (x % 64 + 1));
          next[i] = keep;
        }
        chosen_[static_cast<std::size_t>(depth)] = g_.vertex(x);
        descend(depth + 1, visit);
      }
    }
  }

  CompatibilityRows rows_;
  const SumGraph& g_;
  int max_size_;
  EnumerationBudget budget_;
  std::vector<Word> scratch_;
  std::vector<int> chosen_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

BigInt count_admissible_tuples(const SumGraph& g, int n, EnumerationBudget budget) {
  if (n < 1) throw std::invalid_argument("tuple length must be >= 1");
  TupleCounter counter(g, n, budget);
  BigInt out;
  const std::uint64_t c = counter.run();
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
  return out;
}

AdmissibleTupleCount brute_count_tuples(const ReducedFamily& f, long t, EnumerationBudget budget) {
  if (t < 3 || t % 2 == 0) throw std::invalid_argument("evaluation modulus must be odd and >= 3");
  const auto g = SumGraph::for_family(f, static_cast<int>(t));
  return {t, count_admissible_tuples(g, f.n, budget)};
}

void enum_independent_sets(const SumGraph& g, int max_size,
                           const std::function<void(std::span<const int>)>& visit) {
  if (max_size < 0) throw std::invalid_argument("max_size must be >= 0");
  IndependentSetWalker walker(g, max_size, EnumerationBudget{~std::uint64_t{0}});
  walker.run([&](int depth) { visit(walker.chosen(depth)); });
}

std::vector<std::vector<int>> independent_sets(const SumGraph& g, int max_size) {
  std::vector<std::vector<int>> out;
  enum_independent_sets(g, max_size, [&](std::span<const int> s) { out.emplace_back(s.begin(), s.end()); });
  return out;
}

BigInt count_tuples_via_independent_sets(const SumGraph& g, int n, EnumerationBudget budget) {
  if (n < 1) throw std::invalid_argument("tuple length must be >= 1");
  // by_shape[q][s]: independent sets of size q with s self-loop members.
  std::vector<std::vector<std::uint64_t>> by_shape(static_cast<std::size_t>(n + 1),
                                                   std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
  std::vector<int> loops_upto(static_cast<std::size_t>(n + 1), 0);
  IndependentSetWalker walker(g, n, budget);
  walker.run([&](int depth) {
    if (depth > 0)
      loops_upto[static_cast<std::size_t>(depth)] =
          loops_upto[static_cast<std::size_t>(depth - 1)] + (g.has_self_loop(walker.chosen(depth).back()) ? 1 : 0);
    ++by_shape[static_cast<std::size_t>(depth)][static_cast<std::size_t>(loops_upto[static_cast<std::size_t>(depth)])];
  });

  BigInt total = 0;
  for (int q = 0; q <= n; ++q) {
    for (int s = 0; s <= q; ++s) {
      const std::uint64_t sets = by_shape[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)];
      if (sets == 0) continue;
      BigInt count;
      mpz_import(count.get_mpz_t(), 1, 1, sizeof(sets), 0, 0, &sets);
      const BigInt weight = falling(BigInt(n), static_cast<unsigned>(s)) *
                            stirling2(static_cast<unsigned>(n - s), static_cast<unsigned>(q - s)) *
                            factorial(static_cast<unsigned>(q - s));
      total += count * weight;
    }
  }
  return total;
}

}  // namespace thr
