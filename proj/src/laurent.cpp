#include "polyknot/laurent.hpp"

#include <cctype>
#include <cmath>

#include "polyknot/error.hpp"

namespace polyknot {

LaurentInt::LaurentInt(char var, std::map<int, BigInt> terms) : var_(var), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentInt LaurentInt::monomial(char var, int exponent, BigInt coeff) {
  return LaurentInt(var, {{exponent, std::move(coeff)}});
}

BigInt LaurentInt::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentInt::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

int LaurentInt::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

double LaurentInt::evaluate(double x) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) acc += c.convert_to<double>() * std::pow(x, e);
  return acc;
}

std::string LaurentInt::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (neg)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += var_;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

LaurentInt LaurentInt::parse(std::string_view text, char var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw DataError("laurent parse: empty text");
  if (s == "0") return LaurentInt(var);

  std::map<int, BigInt> terms;
  std::size_t i = 0;
  auto fail = [&](const char* why) {
    throw DataError(std::string("laurent parse: ") + why + " in '" + std::string(text) + "'");
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected sign");
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    BigInt c = digits.empty() ? BigInt(1) : BigInt(digits);
    int e = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ex;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ex += s[i++];
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ex += s[i++];
        if (ex.empty() || ex == "-" || ex == "+") fail("missing exponent");
        e = std::stoi(ex);
      }
    } else if (digits.empty()) {
      fail("missing term");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') fail("unexpected character");
    terms[e] += sign * c;
  }
  return LaurentInt(var, std::move(terms));
}

namespace {
void require_same(const LaurentInt& a, const LaurentInt& b) {
  if (a.variable() != b.variable()) throw DomainError("laurent: variable mismatch");
}
}  // namespace

LaurentInt add(const LaurentInt& a, const LaurentInt& b) {
  require_same(a, b);
  std::map<int, BigInt> t = a.terms();
  for (const auto& [e, c] : b.terms()) t[e] += c;
  return LaurentInt(a.variable(), std::move(t));
}

LaurentInt mul(const LaurentInt& a, const LaurentInt& b) {
  require_same(a, b);
  std::map<int, BigInt> t;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) t[ea + eb] += ca * cb;
  return LaurentInt(a.variable(), std::move(t));
}

LaurentInt operator+(const LaurentInt& a, const LaurentInt& b) { return add(a, b); }

LaurentInt operator-(const LaurentInt& a) {
  std::map<int, BigInt> t = a.terms();
  for (auto& kv : t) kv.second = -kv.second;
  return LaurentInt(a.variable(), std::move(t));
}

LaurentInt operator-(const LaurentInt& a, const LaurentInt& b) { return add(a, -b); }

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) { return mul(a, b); }

LaurentInt delta_power(int k) {
  if (k < 0) throw DomainError("delta_power: negative exponent");
  const LaurentInt delta('A', {{2, -1}, {-2, -1}});
  LaurentInt out = LaurentInt::one('A');
  for (int i = 0; i < k; ++i) out = out * delta;
  return out;
}

LaurentInt mirror_variable(const LaurentInt& a) {
  std::map<int, BigInt> t;
  for (const auto& [e, c] : a.terms()) t[-e] = c;
  return LaurentInt(a.variable(), std::move(t));
}

LaurentInt substitute_quarter(const LaurentInt& f) {
  std::map<int, BigInt> t;
  for (const auto& [e, c] : f.terms()) {
    if (e % 4 != 0)
      throw DomainError("substitute_quarter: exponent " + std::to_string(e) + " is not a multiple of 4");
    t[-e / 4] = c;
  }
  return LaurentInt('q', std::move(t));
}

}  // namespace polyknot
