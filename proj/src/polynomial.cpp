#include "oligo/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "oligo/error.hpp"

namespace oligo
{

Polynomial::Polynomial(std::initializer_list<long> coefficients)
{
  for (long v : coefficients)
    c_.emplace_back(v);
  trim();
}

Polynomial::Polynomial(std::vector<BigInt> coefficients)
: c_(std::move(coefficients))
{
  trim();
}

void Polynomial::trim()
{
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

Polynomial Polynomial::constant(BigInt c)
{
  return Polynomial(std::vector<BigInt>{std::move(c)});
}

Polynomial Polynomial::monomial(BigInt c, int degree)
{
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::one_minus_power(int d)
{
  return constant(1) - monomial(1, d);
}

Polynomial Polynomial::one_plus_power(int d)
{
  return constant(1) + monomial(1, d);
}

Polynomial Polynomial::cyclotomic(int n)
{
  // z^n - 1 = prod_{d | n} Phi_d
  static std::map<int, Polynomial> cache;
  static std::recursive_mutex guard;
  std::lock_guard lock(guard);
  if (auto it = cache.find(n); it != cache.end())
    return it->second;
  Polynomial p = monomial(1, n) - constant(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0)
      p = p.exact_div(cyclotomic(d));
  cache.emplace(n, p);
  return p;
}

BigInt Polynomial::coefficient(int i) const
{
  if (i < 0 || i >= static_cast<int>(c_.size()))
    return 0;
  return c_[i];
}

Polynomial Polynomial::operator+(Polynomial const &o) const
{
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    r[i] += o.c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const
{
  std::vector<BigInt> r = c_;
  for (auto &x : r)
    x = -x;
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(Polynomial const &o) const
{
  return *this + (-o);
}

Polynomial Polynomial::operator*(Polynomial const &o) const
{
  if (is_zero() || o.is_zero())
    return {};
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial &Polynomial::operator+=(Polynomial const &o)
{
  return *this = *this + o;
}

Polynomial &Polynomial::operator*=(Polynomial const &o)
{
  return *this = *this * o;
}

bool Polynomial::divides_into(Polynomial const &divisor, Polynomial &quotient) const
{
  if (divisor.is_zero())
    throw DomainError("division by the zero polynomial");
  BigInt const lead = divisor.c_.back();
  if (lead != 1 && lead != -1)
    throw DomainError("divisor must have leading coefficient +-1");
  std::vector<BigInt> rem = c_;
  int const dd = divisor.degree();
  int const qd = degree() - dd;
  if (qd < 0) {
    quotient = Polynomial();
    return is_zero();
  }
  std::vector<BigInt> q(static_cast<std::size_t>(qd) + 1, 0);
  for (int i = qd; i >= 0; --i) {
    BigInt const coeff = rem[i + dd] * lead; // lead is its own inverse
    q[i] = coeff;
    if (coeff == 0)
      continue;
    for (int j = 0; j <= dd; ++j)
      rem[i + j] -= coeff * divisor.c_[j];
  }
  quotient = Polynomial(std::move(q));
  return std::all_of(rem.begin(), rem.end(), [](BigInt const &x) { return x == 0; });
}

Polynomial Polynomial::exact_div(Polynomial const &divisor) const
{
  Polynomial q;
  if (!divides_into(divisor, q))
    throw FalsifiedPropertyError("polynomial division " + str() + " / " +
                                 divisor.str() + " is not exact");
  return q;
}

Polynomial Polynomial::exact_div(BigInt const &d) const
{
  std::vector<BigInt> r = c_;
  for (auto &x : r) {
    if (x % d != 0)
      throw FalsifiedPropertyError("coefficient " + x.str() +
                                   " is not divisible by " + d.str());
    x /= d;
  }
  return Polynomial(std::move(r));
}

std::vector<BigInt> Polynomial::series(Polynomial const &denominator, int n) const
{
  BigInt const c0 = denominator.coefficient(0);
  if (c0 != 1 && c0 != -1)
    throw DomainError("series expansion needs a denominator with constant term +-1");
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) {
    BigInt acc = coefficient(i);
    for (int j = 1; j <= std::min(i, denominator.degree()); ++j)
      acc -= denominator.c_[j] * out[i - j];
    out[i] = acc * c0;
  }
  return out;
}

std::string Polynomial::str() const
{
  if (is_zero())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    BigInt v = c_[i];
    bool const neg = v < 0;
    if (neg)
      v = -v;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (v != 1 || i == 0)
      out += v.str();
    if (i >= 1)
      out += "z";
    if (i >= 2)
      out += "^" + std::to_string(i);
  }
  return out;
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
: num_(std::move(numerator)),
  den_(std::move(denominator))
{
  if (den_.is_zero())
    throw DomainError("rational function with zero denominator");
}

RationalFunction RationalFunction::reduce() const
{
  Polynomial num = num_;
  Polynomial den = den_;
  // Peel cyclotomic factors off the denominator; cancel those shared with
  // the numerator.
  Polynomial remaining = den;
  Polynomial kept = Polynomial::constant(1);
  for (int n = 1; remaining.degree() > 0; ++n) {
    if (n > 4 * (den_.degree() + 1) + 4)
      throw DomainError("denominator is not a product of cyclotomic polynomials");
    Polynomial const phi = Polynomial::cyclotomic(n);
    Polynomial q;
    while (remaining.degree() >= phi.degree() && remaining.divides_into(phi, q)) {
      remaining = q;
      Polynomial nq;
      if (!num.is_zero() && num.divides_into(phi, nq))
        num = nq;
      else
        kept *= phi;
    }
  }
  // remaining is now a constant +-c; fold it into the numerator sign.
  BigInt const unit = remaining.coefficient(0);
  if (unit != 1 && unit != -1)
    throw DomainError("denominator content is not a unit");
  if (num.is_zero())
    kept = Polynomial::constant(1);
  Polynomial rden = kept * Polynomial::constant(unit);
  if (rden.coefficient(0) < 0) {
    rden = -rden;
    num = -num;
  }
  RationalFunction r(num, rden);
  r.reduced_ = true;
  return r;
}

int RationalFunction::pole_order_at_one() const
{
  RationalFunction r = reduced_ ? *this : reduce();
  Polynomial d = r.den_;
  Polynomial const phi1 = Polynomial::cyclotomic(1);
  int order = 0;
  Polynomial q;
  while (d.degree() > 0 && d.divides_into(phi1, q)) {
    d = q;
    ++order;
  }
  return order;
}

bool RationalFunction::same_function(RationalFunction const &o) const
{
  return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::operator*(RationalFunction const &o) const
{
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

} // namespace oligo
