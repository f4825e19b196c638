#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thr/reference.hpp"

using namespace thr;

namespace {

bool alternates(const IntPolynomial& p) {
  const int n = p.degree();
  for (int i = 0; i <= n; ++i) {
    const BigInt c = p.coefficient(static_cast<std::size_t>(n - i));
    if ((i % 2 == 0 ? c : BigInt(-c)) < 0) return false;
  }
  return true;
}

BigInt power(long base, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

}  // namespace

TEST_CASE("braid, Shi and Catalan examples") {
  CHECK(chi_braid(3) == IntPolynomial{0, 2, -3, 1});
  CHECK(chi_braid(1) == IntPolynomial{0, 1});
  CHECK(regions(chi_braid(3), 3) == 6);
  CHECK(chi_shi(2) == IntPolynomial{0, -2, 1});
  CHECK(chi_shi(3) == IntPolynomial::variable() * IntPolynomial::linear(3) * IntPolynomial::linear(3));
  CHECK(regions(chi_shi(3), 3) == 16);
  CHECK(chi_catalan(2) == IntPolynomial{0, -3, 1});
  CHECK(regions(chi_catalan(2), 2) == 4);
  CHECK(chi_catalan(1) == IntPolynomial{0, 1});
}

TEST_CASE("Seo closed forms: examples") {
  CHECK(chi_seo_ST(2) == IntPolynomial{0, -2, 1});
  CHECK(chi_seo_ST(3) == IntPolynomial{-8, 12, -6, 1});
  CHECK(chi_seo_ST(4) == IntPolynomial{130, -142, 60, -12, 1});
  CHECK(chi_seo_CT(2) == IntPolynomial{0, -3, 1});
  CHECK(seo_alpha(0, 0, 0) == 1);
  CHECK(seo_alpha(1, 0, 0) == 1);
}

TEST_CASE("region identities") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(regions(chi_braid(n), n) == factorial(static_cast<unsigned>(n)));
    CHECK(regions(chi_shi(n), n) == power(n + 1, static_cast<unsigned long>(n - 1)));
    CHECK(regions(chi_catalan(n), n) == factorial(static_cast<unsigned>(n)) * catalan_number(n));
  }
}

TEST_CASE("reference polynomials are monic of degree n and alternate") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& p : {chi_braid(n), chi_shi(n), chi_catalan(n), chi_seo_ST(n), chi_seo_CT(n)}) {
      CHECK(p.degree() == n);
      CHECK(p.leading() == 1);
      CHECK(alternates(p));
    }
}

TEST_CASE("Seo closed forms equal the engine") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(chi_seo_ST(n) == characteristic_polynomial({n, 1, 0}).poly);
    CHECK(chi_seo_CT(n) == characteristic_polynomial({n, 1, 1}).poly);
  }
}

TEST_CASE("reference_formula selection") {
  CHECK(reference_formula({Family::ST, 3, 1})->name == "seo_shi_threshold");
  CHECK(reference_formula({Family::CT, 3, 3})->name == "seo_catalan_threshold");
  CHECK_FALSE(reference_formula({Family::ST, 3, 2}));
  CHECK_FALSE(reference_formula({Family::ST, 1, 1}));
}

TEST_CASE("fixture file: flags are the recomputed ones") {
  const auto table = load_published_table(THR_DEFAULT_FIXTURE);
  REQUIRE(table.entries.size() == 9);
  REQUIRE(table.sequences.size() == 2);
  for (const auto& e : table.entries) {
    CAPTURE(e.n);
    CAPTURE(e.k);
    CHECK(e.disputed == e.disputed_in_file);
    const bool expected = !(e.k == 1);
    CHECK(e.disputed == expected);
    CHECK(e.disputed == fixture_row_disputed(e.poly, e.n, e.k));
  }
  CHECK(table.find(Family::ST, 4, 3)->poly == IntPolynomial{740, 1240, -204, 0, 1});
}

TEST_CASE("parse_published_table rejects malformed input") {
  CHECK_THROWS_AS(parse_published_table("{}"), Error);
  CHECK_THROWS_AS(parse_published_table("not json"), Error);
  const auto t = parse_published_table(R"({"entries":[{"family":"ST","n":2,"k":1,"coefficients":[0,"-2",1]}]})");
  CHECK(t.entries.at(0).poly == IntPolynomial{0, -2, 1});
  CHECK_FALSE(t.entries.at(0).disputed);
}

TEST_CASE("adjudicate verdicts") {
  const auto table = load_published_table(THR_DEFAULT_FIXTURE);
  const auto a = adjudicate({3, 1, 0}, &table);
  CHECK(a.verdict == Verdict::AllAgree);
  CHECK(a.reference_agrees());
  CHECK(a.oracle_counts.size() == 2);
  const auto b = adjudicate({2, 1, 0}, &table);
  CHECK(b.verdict == Verdict::FixtureDisputed);
  CHECK(b.engine_poly == IntPolynomial{0, -2, 1});
  const auto c = adjudicate({3, 2, 0}, &table);
  CHECK(c.verdict == Verdict::FixtureDisputed);
  CHECK(c.engine_poly.coefficient(2) == -9);
  const auto d = adjudicate({3, 0, 2}, &table);
  CHECK(d.verdict == Verdict::FixtureDisputed);
  CHECK(adjudicate({3, 0, 3}, &table).verdict == Verdict::AllAgree);
  for (const auto& check : a.oracle_counts) CHECK(check.agrees());
}

TEST_CASE("odd_primes_from") {
  CHECK(odd_primes_from(25, 3) == std::vector<long>{29, 31, 37});
  CHECK(odd_primes_from(1, 2) == std::vector<long>{3, 5});
}
