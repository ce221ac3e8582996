#pragma once

// Laurent polynomials in v = q^(1/2) with arbitrary-precision integer
// coefficients. Kazhdan-Lusztig polynomials (polynomials in q) live in the same
// type with even, nonnegative exponents only.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2kl/weyl.hpp"

namespace g2kl {

class LaurentPoly {
 public:
  struct Term {
    int exponent;
    Integer coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(Integer constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}  // NOLINT

  static LaurentPoly monomial(Integer coeff, int exponent);
  static LaurentPoly v() { return monomial(1, 1); }
  static LaurentPoly q_power(int k) { return monomial(1, 2 * k); }
  // [2] = v + v^-1.
  static LaurentPoly two();
  static LaurentPoly two_power(unsigned k);
  // Sum of c_k [2]^k for the given coefficient list (index = power of [2]).
  static LaurentPoly from_two_basis(const std::vector<Integer>& coeffs);

  bool is_zero() const noexcept { return terms_.empty(); }
  // Ascending by exponent; never contains zero coefficients.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  int degree() const;     // requires nonzero
  int valuation() const;  // requires nonzero
  Integer coeff(int exponent) const;

  LaurentPoly bar() const;
  LaurentPoly scaled(const Integer& c) const;
  LaurentPoly shifted(int by) const;  // multiply by v^by
  bool is_bar_invariant() const { return *this == bar(); }
  bool has_only_even_exponents() const;
  bool has_nonnegative_coefficients() const;

  // Writes a bar-invariant polynomial as a polynomial in [2].
  std::vector<Integer> to_two_basis() const;

  // Text form: c*v^k terms with descending exponents, e.g. "v^2+2-3*v^-1".
  std::string str() const;
  static LaurentPoly parse(std::string_view text);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator-(const LaurentPoly& x) { return x.scaled(-1); }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_scaled(const LaurentPoly& other, int sign);
  std::vector<Term> terms_;
};

LaurentPoly pow(const LaurentPoly& x, unsigned n);

// Polynomial-in-q view used by the KL engine.
void require_q_polynomial(const LaurentPoly& p, const std::string& context);
int q_degree(const LaurentPoly& p);  // -1 for the zero polynomial
// Coefficient of q^k.
Integer q_coeff(const LaurentPoly& p, int k);
// e.g. "q^2+3*q+1"; "0" for zero.
std::string q_str(const LaurentPoly& p);

// Polynomial in [2], e.g. "[2]^6-4[2]^4+3[2]^2"; requires bar invariance.
std::string two_str(const LaurentPoly& p);

}  // namespace g2kl

template <>
struct std::hash<g2kl::LaurentPoly> {
  std::size_t operator()(const g2kl::LaurentPoly& p) const noexcept;
};
