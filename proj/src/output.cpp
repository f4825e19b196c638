#include "thr/output.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace thr {

std::string format_polynomial(const IntPolynomial& p, PolyFormat format) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const BigInt c = p.coefficient(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "t";
    if (i >= 2) out += format == PolyFormat::Latex ? "^{" + std::to_string(i) + "}" : "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial parse_polynomial(const std::string& text) {
  const std::string& s = text;
  std::map<int, BigInt> terms;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + text + "': " + why);
  };
  auto digits = [&]() {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };
  auto skip_space = [&]() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_space();
  if (pos == s.size()) fail("empty polynomial");
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
      skip_space();
    } else if (!first) {
      fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;
    const std::string coeff = digits();
    int power = 0;
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const bool braced = pos < s.size() && s[pos] == '{';
        if (braced) ++pos;
        const std::string e = digits();
        if (e.empty()) fail("missing exponent");
        if (braced) {
          if (pos >= s.size() || s[pos] != '}') fail("unclosed brace");
          ++pos;
        }
        power = std::stoi(e);
      }
    } else if (coeff.empty()) {
      fail("empty term at offset " + std::to_string(pos));
    }
    const BigInt c = coeff.empty() ? BigInt(1) : BigInt(coeff);
    terms[power] += sign * c;
    skip_space();
  }
  std::vector<BigInt> coeffs(static_cast<std::size_t>(terms.rbegin()->first + 1), 0);
  for (const auto& [power, c] : terms) coeffs[static_cast<std::size_t>(power)] = c;
  return IntPolynomial(std::move(coeffs));
}

Json bigint_array(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

std::vector<BigInt> bigint_array_values(const Json& array) {
  std::vector<BigInt> out;
  for (const auto& v : array) out.emplace_back(v.get<std::string>());
  return out;
}

Json chi_document(const CharPolyResult& result, std::optional<Verdict> verdict, long runtime_ms) {
  Json doc;
  doc["n"] = result.spec.n;
  doc["k"] = result.spec.k;
  doc["l"] = result.spec.l;
  doc["family"] = to_string(result.reduced.family);
  doc["k_eff"] = result.reduced.k_eff;
  doc["coefficients"] = bigint_array(result.poly.coefficients());
  doc["regions"] = result.regions.get_str();
  Json samples = Json::array();
  for (const auto& s : result.samples) {
    Json row;
    row["t"] = s.t.get_str();
    row["count"] = s.value.get_str();
    samples.push_back(std::move(row));
  }
  doc["samples"] = std::move(samples);
  doc["verdict"] = verdict ? Json(to_string(*verdict)) : Json(nullptr);
  doc["runtime_ms"] = runtime_ms;
  return doc;
}

namespace {

void strip_runtime(Json& doc) {
  if (doc.is_object()) {
    doc.erase("runtime_ms");
    for (auto& [key, value] : doc.items()) strip_runtime(value);
  } else if (doc.is_array()) {
    for (auto& value : doc) strip_runtime(value);
  }
}

}  // namespace

std::string canonical_dump(const Json& doc) {
  Json copy = doc;
  strip_runtime(copy);
  return copy.dump();
}

}  // namespace thr
