#include "cswhit/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cswhit {

namespace {

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (!b.is_zero()) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(Int constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::initializer_list<Int> ascending_coeffs) : c_(ascending_coeffs) { trim(); }

Poly Poly::monomial(Int coeff, int degree) {
  Poly p;
  if (!coeff.is_zero()) {
    p.c_.assign(static_cast<size_t>(degree) + 1, Int(0));
    p.c_.back() = std::move(coeff);
  }
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Int Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Int(0);
  return c_[static_cast<size_t>(k)];
}

const Int& Poly::leading() const { return c_.back(); }

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Int Poly::content() const {
  Int g(0);
  for (const auto& x : c_) {
    g = int_gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return Poly();
  Int g = content();
  Poly r = *this;
  for (auto& x : r.c_) x /= g;
  return r;
}

bool Poly::divide(const Poly& a, const Poly& b, Poly& quotient) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    quotient = Poly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  Poly r = a;
  std::vector<Int> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Int(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    if (r.leading() % b.leading() != 0) return false;
    Int c = r.leading() / b.leading();
    int d = r.degree() - b.degree();
    q[static_cast<size_t>(d)] = c;
    // r -= c * v^d * b
    for (size_t i = 0; i < b.c_.size(); ++i)
      r.c_[i + static_cast<size_t>(d)] -= c * b.c_[i];
    r.trim();
  }
  if (!r.is_zero()) return false;
  quotient.c_ = std::move(q);
  quotient.trim();
  return true;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  // Primitive remainder sequence; degrees stay small in this library.
  Poly x = a.primitive_part();
  Poly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = x;
    while (!r.is_zero() && r.degree() >= y.degree()) {
      Int lr = r.leading();
      int d = r.degree() - y.degree();
      // r = lc(y)*r - lc(r)*v^d*y kills the leading term of r.
      for (auto& c : r.c_) c *= y.leading();
      for (size_t i = 0; i < y.c_.size(); ++i)
        r.c_[i + static_cast<size_t>(d)] -= lr * y.c_[i];
      r.trim();
    }
    x = y;
    y = r.primitive_part();
  }
  if (x.is_zero()) return x;
  if (x.leading() < 0) return -x;
  return x;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + std::complex<double>(it->convert_to<double>(), 0.0);
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Int c = coeff(k);
    if (c.is_zero()) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << "v";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

namespace {

// Scanner for the canonical polynomial form; also accepts the same grammar
// without spaces.
struct PolyParser {
  const std::string& s;
  size_t i = 0;

  explicit PolyParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  Int parse_uint() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i)
      throw ParseError("expected integer at position " + std::to_string(start) + " in '" + s + "'");
    return Int(s.substr(start, i - start));
  }

  // term := uint ['*' 'v' ['^' uint]] | 'v' ['^' uint]
  void parse_term(int sign, Poly& acc) {
    skip_ws();
    Int coeff(1);
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = parse_uint();
      have_coeff = true;
    }
    int deg = 0;
    bool star = eat('*');
    skip_ws();
    if (i < s.size() && s[i] == 'v') {
      ++i;
      deg = 1;
      if (eat('^')) deg = static_cast<int>(parse_uint().convert_to<long>());
    } else if (star || !have_coeff) {
      throw ParseError("expected 'v' at position " + std::to_string(i) + " in '" + s + "'");
    }
    if (sign < 0) coeff = -coeff;
    acc = acc + Poly::monomial(coeff, deg);
  }

  Poly parse() {
    Poly acc;
    skip_ws();
    if (i == s.size()) throw ParseError("empty polynomial string");
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    parse_term(sign, acc);
    while (true) {
      skip_ws();
      if (i >= s.size()) break;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else throw ParseError("unexpected character '" + std::string(1, s[i]) + "' in '" + s + "'");
      parse_term(sign, acc);
    }
    return acc;
  }
};

}  // namespace

Poly Poly::parse(const std::string& s) {
  PolyParser p(s);
  return p.parse();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const Rational& r)
    : num_(Int(boost::multiprecision::numerator(r))),
      den_(Int(boost::multiprecision::denominator(r))) {
  reduce();
}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("scalar with zero denominator");
  reduce();
}

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(Int(1));
    return;
  }
  if (den_.degree() > 0) {
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      Int cn = num_.content(), cd = den_.content();
      Poly qn, qd;
      if (!Poly::divide(num_.primitive_part(), g, qn) ||
          !Poly::divide(den_.primitive_part(), g, qd))
        throw DomainError("internal: polynomial gcd division failed");
      num_ = qn * Poly(cn);
      den_ = qd * Poly(cd);
    }
  }
  Int g2 = int_gcd(num_.content(), den_.content());
  if (g2 > 1) {
    Poly qn, qd;
    Poly::divide(num_, Poly(g2), qn);
    Poly::divide(den_, Poly(g2), qd);
    num_ = std::move(qn);
    den_ = std::move(qd);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::v_power(long k) {
  if (k >= 0) return Scalar(Poly::monomial(Int(1), static_cast<int>(k)), Poly(Int(1)));
  return Scalar(Poly(Int(1)), Poly::monomial(Int(1), static_cast<int>(-k)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
  return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.den_ == b.den_) return Scalar(a.num_ - b.num_, a.den_);
  return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DomainError("division by zero scalar");
  return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar acc = Scalar::one();
  Scalar base = *this;
  unsigned long e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

Rational Scalar::to_rational() const {
  if (!is_constant()) throw DomainError("scalar is not constant: " + to_string());
  if (is_zero()) return Rational(0);
  return Rational(num_.coeff(0)) / Rational(den_.coeff(0));
}

bool Scalar::is_nonnegative_integer() const {
  if (is_zero()) return true;
  return num_.degree() == 0 && den_.is_one() && num_.coeff(0) >= 0;
}

Rational Scalar::specialize(const Rational& v0) const {
  Rational d = den_.eval(v0);
  if (d == 0)
    throw DomainError("denominator " + den_.to_string() + " vanishes at v = " + cswhit::to_string(v0));
  return num_.eval(v0) / d;
}

std::complex<double> Scalar::specialize(const std::complex<double>& v0) const {
  std::complex<double> d = den_.eval(v0);
  if (d == std::complex<double>(0.0, 0.0))
    throw DomainError("denominator " + den_.to_string() + " vanishes at the given v");
  return num_.eval(v0) / d;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Scalar Scalar::parse(const std::string& num, const std::string& den) {
  return Scalar(Poly::parse(num), Poly::parse(den));
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

Rational parse_rational(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d.is_zero()) throw ParseError("zero denominator in rational '" + s + "'");
    return Rational(n) / Rational(d);
  } catch (const ParseError&) {
    throw;
  } catch (const std::runtime_error&) {
    throw ParseError("cannot parse rational '" + s + "'");
  }
}

}  // namespace cswhit
