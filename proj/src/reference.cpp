#include "thr/reference.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace thr {

IntPolynomial chi_braid(int n) {
  if (n < 1) throw std::invalid_argument("chi_braid: n must be >= 1");
  return falling(IntPolynomial::variable(), static_cast<unsigned>(n));
}

IntPolynomial chi_shi(int n) {
  if (n < 1) throw std::invalid_argument("chi_shi: n must be >= 1");
  IntPolynomial out = IntPolynomial::variable();
  for (int i = 1; i < n; ++i) out *= IntPolynomial::linear(n);
  return out;
}

IntPolynomial chi_catalan(int n) {
  if (n < 1) throw std::invalid_argument("chi_catalan: n must be >= 1");
  IntPolynomial out = IntPolynomial::variable();
  for (int c = n + 1; c <= 2 * n - 1; ++c) out *= IntPolynomial::linear(c);
  return out;
}

IntPolynomial chi_seo_ST(int n) {
  if (n < 2) throw std::invalid_argument("chi_seo_ST: n must be >= 2");
  const auto t = IntPolynomial::variable();
  auto block = [&](int m, int offset) {
    IntPolynomial s;
    const auto row = stirling2_row(static_cast<unsigned>(m));
    for (int j = 0; j <= m; ++j)
      s += row[j] * falling(t - IntPolynomial::constant(j + offset), static_cast<unsigned>(j));
    return s;
  };
  return block(n, 1) + BigInt(2 * n) * block(n - 1, 2) + BigInt(n) * (n - 1) * block(n - 2, 3);
}

namespace {

// s_{n,k} = k!/n! S(n,k); zero outside 0 <= k <= n.
BigRational seo_s(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigRational v(factorial(static_cast<unsigned>(k)) * stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k)),
                factorial(static_cast<unsigned>(n)));
  v.canonicalize();
  return v;
}

using RationalPoly = std::vector<BigRational>;

void add_scaled(RationalPoly& acc, const IntPolynomial& p, const BigRational& scale) {
  if (acc.size() < p.coefficients().size()) acc.resize(p.coefficients().size(), 0);
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) acc[i] += BigRational(p.coefficients()[i]) * scale;
}

}  // namespace

BigRational seo_alpha(int n, int k, int l) {
  if (k == 0 && l == 0 && (n == 0 || n == 1)) return 1;
  BigRational a = BigRational(binomial(k - 1, l - 1)) * seo_s(n, k) +
                  BigRational(binomial(k - 2, l - 1)) * seo_s(n - 1, k - 1) +
                  BigRational(2 * binomial(k - 1, l)) * seo_s(n - 1, k - 1) +
                  BigRational(2 * binomial(k - 2, l)) * seo_s(n - 2, k - 2);
  a.canonicalize();
  return a;
}

IntPolynomial chi_seo_CT(int n) {
  if (n < 2) throw std::invalid_argument("chi_seo_CT: n must be >= 2");
  const auto t = IntPolynomial::variable();
  RationalPoly acc;
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= k; ++l) {
      const BigRational alpha = seo_alpha(n, k, l);
      if (alpha == 0) continue;
      const auto term = double_falling(t - IntPolynomial::constant(2 * k + 1), static_cast<unsigned>(l));
      add_scaled(acc, term, alpha / BigRational(factorial(static_cast<unsigned>(l))));
    }
  std::vector<BigInt> coeffs;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    BigRational c = acc[i] * BigRational(factorial(static_cast<unsigned>(n)));
    c.canonicalize();
    if (c.get_den() != 1)
      throw IntegralityViolation("chi_seo_CT(" + std::to_string(n) + "): coefficient of t^" + std::to_string(i) +
                                 " is " + c.get_str());
    coeffs.push_back(c.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

BigInt catalan_number(int n) { return binomial(2 * n, n) / (n + 1); }

std::optional<ReferenceFormula> reference_formula(const ReducedFamily& f) {
  if (f.n < 2) return std::nullopt;
  if (f.family == Family::ST && f.k_eff == 1) return ReferenceFormula{"seo_shi_threshold", chi_seo_ST(f.n)};
  if (f.family == Family::CT && f.k_eff == 3) return ReferenceFormula{"seo_catalan_threshold", chi_seo_CT(f.n)};
  return std::nullopt;
}

const FixtureEntry* PublishedTable::find(Family family, int n, int k) const {
  for (const auto& e : entries)
    if (e.family == family && e.n == n && e.k == k) return &e;
  return nullptr;
}

bool fixture_row_disputed(const IntPolynomial& poly, int n, int k) {
  const BigInt hyperplanes = binomial(n, 2) * (k + 1);
  if (poly.degree() != n || poly.leading() != 1) return true;
  return poly.coefficient(static_cast<std::size_t>(n - 1)) != -hyperplanes;
}

namespace {

BigInt parse_bigint(const nlohmann::json& v) {
  if (v.is_string()) return BigInt(v.get<std::string>());
  if (v.is_number_integer()) return BigInt(v.get<long>());
  throw Error("fixture: expected an integer or decimal string, got " + v.dump());
}

}  // namespace

PublishedTable parse_published_table(const std::string& json_text) {
  PublishedTable table;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    for (const auto& row : doc.at("entries")) {
      FixtureEntry e;
      e.family = family_from_string(row.at("family").get<std::string>());
      e.n = row.at("n").get<int>();
      e.k = row.at("k").get<int>();
      std::vector<BigInt> coeffs;
      for (const auto& c : row.at("coefficients")) coeffs.push_back(parse_bigint(c));
      e.poly = IntPolynomial(std::move(coeffs));
      e.source = row.value("source", "");
      e.disputed_in_file = row.value("disputed", false);
      e.disputed = fixture_row_disputed(e.poly, e.n, e.k);
      table.entries.push_back(std::move(e));
    }
    if (doc.contains("region_sequences")) {
      for (const auto& row : doc.at("region_sequences")) {
        RegionSequence s;
        s.family = family_from_string(row.at("family").get<std::string>());
        s.k = row.at("k").get<int>();
        s.l = row.value("l", 0);
        s.n_from = row.at("n_from").get<int>();
        for (const auto& v : row.at("values")) s.values.push_back(parse_bigint(v));
        s.source = row.value("source", "");
        table.sequences.push_back(std::move(s));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("fixture: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("fixture: ") + e.what());
  }
  return table;
}

PublishedTable load_published_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("fixture: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_published_table(buf.str());
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::AllAgree: return "AllAgree";
    case Verdict::FixtureDisputed: return "FixtureDisputed";
    case Verdict::EngineMismatch: return "EngineMismatch";
  }
  return "?";
}

namespace {

bool is_prime(long x) {
  if (x < 2) return false;
  for (long d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

}  // namespace

std::vector<long> odd_primes_from(long from, int count) {
  std::vector<long> out;
  for (long x = std::max(from, 3L) | 1L; static_cast<int>(out.size()) < count; x += 2)
    if (is_prime(x)) out.push_back(x);
  return out;
}

DiffReport adjudicate(const ArrangementSpec& spec, const PublishedTable* fixture, AdjudicateOptions options) {
  DiffReport report;
  report.spec = spec;
  report.reduced = reduce(spec);
  const auto chi = characteristic_polynomial(spec);
  report.engine_poly = chi.poly;
  report.engine_regions = chi.regions;
  report.samples = chi.samples;

  std::ostringstream notes;
  bool engine_ok = true;
  for (long p : odd_primes_from(validity_bound(spec.n, report.reduced.k_eff), options.primes)) {
    OracleCheck check;
    check.t = p;
    check.brute = brute_count_tuples(report.reduced, p, options.budget).count;
    check.engine_cases = case_counts(report.reduced, p).total;
    check.engine_poly = poly_eval(chi.poly, p);
    if (!check.agrees()) {
      engine_ok = false;
      notes << "engine disagrees with brute force at t=" << p << " (brute " << check.brute << ", cases "
            << check.engine_cases << ", polynomial " << check.engine_poly << "); ";
    }
    report.oracle_counts.push_back(std::move(check));
  }

  report.reference = reference_formula(report.reduced);
  if (!report.reference_agrees()) notes << "closed form " << report.reference->name << " differs from engine; ";

  if (fixture) {
    if (const auto* row = fixture->find(report.reduced.family, report.reduced.n, report.reduced.k_eff)) {
      report.fixture_poly = row->poly;
      if (row->disputed) notes << "fixture row fails the coefficient sanity check; ";
    }
  }

  if (!engine_ok) {
    report.verdict = Verdict::EngineMismatch;
  } else if (report.fixture_poly && *report.fixture_poly != report.engine_poly) {
    report.verdict = Verdict::FixtureDisputed;
    notes << "oracle-verified engine value replaces the fixture row; ";
  } else {
    report.verdict = Verdict::AllAgree;
  }
  report.notes = notes.str();
  if (!report.notes.empty()) report.notes.resize(report.notes.size() - 2);
  return report;
}

}  // namespace thr
