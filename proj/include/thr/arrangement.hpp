#pragma once

#include "thr/exact_arith.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace thr {

/// The two base families every T_{n,k,l} reduces to. ST forbids the sums
/// {0..k}, CT forbids {1..k}.
enum class Family { ST, CT };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

/// T_{n,k,l}: hyperplanes x_i + x_j = c for -l <= c <= k and all i < j.
struct ArrangementSpec {
  int n = 1;
  int k = 0;
  int l = 0;

  ArrangementSpec() = default;
  /// Throws std::invalid_argument unless n >= 1, k >= 0, l >= 0.
  ArrangementSpec(int n_, int k_, int l_);

  friend auto operator<=>(const ArrangementSpec&, const ArrangementSpec&) = default;
};

struct ReducedFamily {
  Family family = Family::ST;
  int n = 1;
  int k_eff = 0;

  friend bool operator==(const ReducedFamily&, const ReducedFamily&) = default;
};

/// Translate by l/2 (l even) or (l+1)/2 (l odd) to land on ST_{n,k+l} or
/// CT_{n,k+l+1}; both translations preserve the count over every Z_t with t odd.
ReducedFamily reduce(const ArrangementSpec& spec);

/// C(n,2) (k + l + 1).
BigInt hyperplane_count(const ArrangementSpec& spec);

/// Forbidden sums of the reduced family, as plain integers.
std::vector<long> forbidden_sums(const ReducedFamily& f);
std::vector<long> forbidden_sums(const ArrangementSpec& spec);

/// Graph on Z_m, m odd, with u ~ v iff u + v mod m is a forbidden sum.
///
/// Vertices are signed residues in [-r, r] with m = 2r + 1. A vertex v has a
/// self-loop iff 2v mod m is forbidden.
class SumGraph {
 public:
  SumGraph(int modulus, std::span<const long> forbidden);

  static SumGraph for_family(const ReducedFamily& f, int modulus);
  static SumGraph for_spec(const ArrangementSpec& spec, int modulus);

  int modulus() const { return m_; }
  int radius() const { return (m_ - 1) / 2; }

  /// Normalize any integer into the signed window [-r, r].
  int normalize(long x) const;
  /// Index in [0, m) of a signed residue.
  int index(int v) const { return v < 0 ? v + m_ : v; }
  int vertex(int idx) const { return idx > radius() ? idx - m_ : idx; }

  bool is_forbidden_sum(long s) const;
  bool is_edge(int u, int v) const { return is_forbidden_sum(static_cast<long>(u) + v); }
  bool has_self_loop(int v) const { return is_edge(v, v); }

  /// 0, 1, ..., r, -1, -2, ..., -r
  std::vector<int> vertices() const;
  std::vector<int> self_loop_vertices() const;

 private:
  int m_;
  std::vector<char> forbidden_;  // indexed by residue in [0, m)
};

bool is_edge(const SumGraph& g, int u, int v);

/// Work bound for the enumeration oracles, in visited search nodes.
struct EnumerationBudget {
  std::uint64_t max_nodes = 1'000'000'000;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct AdmissibleTupleCount {
  long t = 0;
  BigInt count;
};

/// Number of (x_1..x_n) in Z_m^n with x_i + x_j not forbidden for all i < j.
///
/// Depth-first over prefixes with the set of still-admissible values kept as
/// a bitset, so the last coordinate is counted with a popcount.
BigInt count_admissible_tuples(const SumGraph& g, int n, EnumerationBudget budget = {});

/// Throws std::invalid_argument unless t is odd and >= 3.
AdmissibleTupleCount brute_count_tuples(const ReducedFamily& f, long t,
                                        EnumerationBudget budget = {});

/// Visit every vertex set of size <= max_size with no edge between two
/// distinct members, each exactly once, members in increasing index order.
void enum_independent_sets(const SumGraph& g, int max_size,
                           const std::function<void(std::span<const int>)>& visit);

std::vector<std::vector<int>> independent_sets(const SumGraph& g, int max_size);

/// Sum over independent sets S (|S| = q <= n, s self-loop members) of
/// (n)_s * S(n - s, q - s) * (q - s)!. Equals count_admissible_tuples.
BigInt count_tuples_via_independent_sets(const SumGraph& g, int n, EnumerationBudget budget = {});

}  // namespace thr
