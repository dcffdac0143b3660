#ifndef OLIGO_POLYNOMIAL_HPP
#define OLIGO_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "oligo/limits.hpp"

namespace oligo
{

/// Dense univariate polynomial in z with arbitrary-precision integer
/// coefficients. coefficients()[i] is the coefficient of z^i; the zero
/// polynomial has no coefficients.
class Polynomial
{
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long> coefficients);
  explicit Polynomial(std::vector<BigInt> coefficients);

  static Polynomial constant(BigInt c);
  static Polynomial monomial(BigInt c, int degree);
  /// 1 - z^d
  static Polynomial one_minus_power(int d);
  /// 1 + z^d
  static Polynomial one_plus_power(int d);
  /// The n-th cyclotomic polynomial.
  static Polynomial cyclotomic(int n);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::vector<BigInt> const &coefficients() const { return c_; }
  BigInt coefficient(int i) const;

  Polynomial operator+(Polynomial const &o) const;
  Polynomial operator-(Polynomial const &o) const;
  Polynomial operator*(Polynomial const &o) const;
  Polynomial operator-() const;
  Polynomial &operator+=(Polynomial const &o);
  Polynomial &operator*=(Polynomial const &o);

  /// Exact division by a polynomial with leading coefficient +-1.
  /// Returns false (leaving quotient unspecified) if a remainder remains.
  bool divides_into(Polynomial const &divisor, Polynomial &quotient) const;
  /// Throws FalsifiedPropertyError when the division is not exact.
  Polynomial exact_div(Polynomial const &divisor) const;
  /// Divides every coefficient by d; throws unless exact.
  Polynomial exact_div(BigInt const &d) const;

  /// First n+1 Taylor coefficients of this / denominator. The denominator
  /// must have constant term +-1.
  std::vector<BigInt> series(Polynomial const &denominator, int n) const;

  std::string str() const;

  bool operator==(Polynomial const &) const = default;

private:
  void trim();
  std::vector<BigInt> c_;
};

/// numerator / denominator with integer coefficients.
class RationalFunction
{
public:
  RationalFunction(Polynomial numerator, Polynomial denominator);

  Polynomial const &numerator() const { return num_; }
  Polynomial const &denominator() const { return den_; }
  bool reduced() const { return reduced_; }

  /// Cancels the common factors. Valid when the denominator is a product of
  /// cyclotomic polynomials (always the case for Hilbert series here); the
  /// result has denominator constant term 1 and gcd(num, den) = 1.
  RationalFunction reduce() const;

  /// Multiplicity of the pole at z = 1 (of the reduced form).
  int pole_order_at_one() const;

  std::vector<BigInt> taylor(int n) const { return num_.series(den_, n); }

  /// Equality as functions (cross multiplication).
  bool same_function(RationalFunction const &o) const;

  RationalFunction operator*(RationalFunction const &o) const;

private:
  Polynomial num_;
  Polynomial den_;
  bool reduced_ = false;
};

} // namespace oligo

#endif // OLIGO_POLYNOMIAL_HPP
