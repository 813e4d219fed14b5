#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "cswhit/cartan.hpp"

namespace cswhit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense integer-coefficient polynomial in the formal variable v, stored in
// ascending degree with no trailing zero coefficient (zero = empty vector).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Int constant);
  explicit Poly(long constant) : Poly(Int(constant)) {}
  Poly(std::initializer_list<Int> ascending_coeffs);

  static Poly monomial(Int coeff, int degree);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int k) const;
  const Int& leading() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  bool operator==(const Poly&) const = default;

  // Positive gcd of the coefficients; content of zero is 0.
  Int content() const;
  // this / content, keeping the leading sign. Zero stays zero.
  Poly primitive_part() const;
  // Primitive gcd with positive leading coefficient; gcd(0, b) = |b| primitive.
  static Poly gcd(const Poly& a, const Poly& b);
  // Exact division in Z[v]; returns false when b does not divide a exactly.
  static bool divide(const Poly& a, const Poly& b, Poly& quotient);

  Rational eval(const Rational& x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

  // Canonical human/machine form, descending powers: "2*v^3 - v + 5".
  std::string to_string() const;
  static Poly parse(const std::string& s);

 private:
  std::vector<Int> c_;
  void trim();
};

// The scalar field Q(v): a reduced fraction of integer-coefficient
// polynomials in v, with q = v^2. Canonical form: numerator and denominator
// have no common polynomial factor and no common integer content, the
// denominator is nonzero with positive leading coefficient, and zero is 0/1.
// Equality of canonical forms is structural, and all arithmetic is exact.
class Scalar {
 public:
  Scalar() : num_(), den_(Int(1)) {}
  explicit Scalar(Int n) : num_(std::move(n)), den_(Int(1)) { reduce(); }
  explicit Scalar(long n) : Scalar(Int(n)) {}
  explicit Scalar(const Rational& r);
  Scalar(Poly num, Poly den);

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(Int(1)); }
  // v^k for any integer k (negative powers are fractions).
  static Scalar v_power(long k);
  // q^k = v^{2k}.
  static Scalar q_power(long k) { return v_power(2 * k); }
  static Scalar q() { return q_power(1); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);  // throws DomainError on /0
  Scalar operator-() const;
  Scalar inverse() const;  // throws DomainError on 0
  bool operator==(const Scalar&) const = default;

  Scalar pow(long k) const;  // negative k inverts; 0^0 = 1

  // True when the value is a constant (no v), i.e. both parts have degree <= 0.
  bool is_constant() const;
  // The constant value; throws DomainError when not constant.
  Rational to_rational() const;
  // True when a nonnegative integer constant.
  bool is_nonnegative_integer() const;

  // Substitute a rational value for v. Throws DomainError when the
  // denominator vanishes at v0.
  Rational specialize(const Rational& v0) const;
  std::complex<double> specialize(const std::complex<double>& v0) const;

  // "p" when the denominator is 1, otherwise "(p)/(q)".
  std::string to_string() const;
  static Scalar parse(const std::string& num, const std::string& den);

 private:
  Poly num_, den_;
  void reduce();
};

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace cswhit
