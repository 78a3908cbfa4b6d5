#pragma once

// Exact integer Laurent polynomials in one formal variable: the coefficient
// ring of the Kauffman bracket (variable A) and Jones polynomial (variable q).

#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyknot {

using BigInt = boost::multiprecision::cpp_int;

class LaurentInt {
 public:
  /// The zero polynomial in `var`.
  explicit LaurentInt(char var = 'A') : var_(var) {}
  LaurentInt(char var, std::map<int, BigInt> terms);

  static LaurentInt one(char var = 'A') { return monomial(var, 0, 1); }
  static LaurentInt monomial(char var, int exponent, BigInt coeff = 1);

  /// Parses the canonical rendering, e.g. "-A^11+A^7-2A^3+A^-1". Spaces are
  /// ignored; "0" is the zero polynomial. Throws DataError on bad input.
  static LaurentInt parse(std::string_view text, char var);

  char variable() const { return var_; }
  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// Floating evaluation at a nonzero real value of the variable.
  double evaluate(double x) const;

  /// Descending exponents, e.g. "q-q^2+2q^3" comes out as "2q^3-q^2+q".
  std::string to_string() const;

  friend bool operator==(const LaurentInt& a, const LaurentInt& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

 private:
  char var_;
  std::map<int, BigInt> terms_;  // no zero coefficients
};

/// Both operands must share the variable; DomainError otherwise.
LaurentInt add(const LaurentInt& a, const LaurentInt& b);
LaurentInt mul(const LaurentInt& a, const LaurentInt& b);
LaurentInt operator+(const LaurentInt& a, const LaurentInt& b);
LaurentInt operator-(const LaurentInt& a);
LaurentInt operator-(const LaurentInt& a, const LaurentInt& b);
LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);

/// (-A^2 - A^-2)^k in variable A.
LaurentInt delta_power(int k);

/// Substitutes var -> var^-1.
LaurentInt mirror_variable(const LaurentInt& a);

/// A^e -> q^(-e/4). Throws DomainError when some exponent is not a multiple of 4.
LaurentInt substitute_quarter(const LaurentInt& f);

}  // namespace polyknot
