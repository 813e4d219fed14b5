#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cswhit/scalar.hpp"

using namespace cswhit;

TEST_CASE("poly arithmetic and normalization") {
  Poly a({Int(1), Int(2)});           // 1 + 2v
  Poly b({Int(-1), Int(0), Int(3)});  // -1 + 3v^2
  CHECK((a + b) == Poly({Int(0), Int(2), Int(3)}));
  CHECK((a * b) == Poly({Int(-1), Int(-2), Int(3), Int(6)}));
  CHECK((a - a).is_zero());
  CHECK(Poly(Int(0)).is_zero());
  CHECK(Poly(Int(0)).degree() == -1);
  CHECK((a * Poly()).is_zero());
}

TEST_CASE("poly gcd and exact division") {
  Poly a = Poly({Int(-1), Int(0), Int(1)});  // v^2 - 1
  Poly b = Poly({Int(1), Int(1)});           // v + 1
  CHECK(Poly::gcd(a, b) == b);
  Poly q;
  REQUIRE(Poly::divide(a, b, q));
  CHECK(q == Poly({Int(-1), Int(1)}));  // v - 1
  CHECK_FALSE(Poly::divide(b, a, q));
  // non-monic divisor that divides exactly: (1+2v)(2+3v) = 2+7v+6v^2
  Poly f = Poly({Int(2), Int(7), Int(6)});
  Poly g = Poly({Int(1), Int(2)});
  REQUIRE(Poly::divide(f, g, q));
  CHECK(q == Poly({Int(2), Int(3)}));
  Poly common = Poly::gcd(f * a, a);
  CHECK(common == a.primitive_part());
}

TEST_CASE("poly string round trip") {
  for (const Poly& p : {Poly({Int(2), Int(-1), Int(0), Int(5)}), Poly(Int(-7)), Poly(),
                        Poly::monomial(Int(1), 3), Poly({Int(0), Int(-1)})}) {
    CHECK(Poly::parse(p.to_string()) == p);
  }
  CHECK(Poly::parse("v^2+2*v+1") == Poly({Int(1), Int(2), Int(1)}));
  CHECK(Poly::parse("-v") == Poly({Int(0), Int(-1)}));
  CHECK_THROWS_AS(Poly::parse("2*"), ParseError);
  CHECK_THROWS_AS(Poly::parse(""), ParseError);
  CHECK_THROWS_AS(Poly::parse("x+1"), ParseError);
}

TEST_CASE("scalar field axioms and canonical form") {
  const Scalar q = Scalar::q();
  CHECK(q == Scalar::v_power(2));
  CHECK(Scalar::v_power(-2) * q == Scalar::one());
  CHECK((q - Scalar::one()) + (Scalar::one() - q) == Scalar::zero());

  // cancellation to a canonical reduced fraction
  Scalar a(Poly({Int(-1), Int(0), Int(1)}), Poly({Int(1), Int(1)}));  // (v^2-1)/(v+1)
  CHECK(a == Scalar(Poly({Int(-1), Int(1)}), Poly(Int(1))));
  CHECK(a.to_string() == "v - 1");
}

TEST_CASE("scalar reduction of integer content and sign") {
  Scalar b(Poly({Int(2)}), Poly({Int(4)}));
  CHECK(b == Scalar(Rational(1) / 2));
  CHECK(b.to_string() == "(1)/(2)");
  Scalar c(Poly({Int(0), Int(2)}), Poly({Int(-4)}));  // 2v / -4 = -v/2
  CHECK(c.den().leading() > 0);
  CHECK(c == Scalar(Poly({Int(0), Int(-1)}), Poly(Int(2))));
}

TEST_CASE("scalar inverse, division and errors") {
  const Scalar q = Scalar::q();
  CHECK(q.inverse() == Scalar::q_power(-1));
  CHECK_THROWS_AS(Scalar::zero().inverse(), DomainError);
  CHECK_THROWS_AS(q / Scalar::zero(), DomainError);
  CHECK(q.pow(-3) == Scalar::q_power(-3));
  CHECK(Scalar::zero().pow(0) == Scalar::one());
}

TEST_CASE("scalar specialization") {
  const Scalar f = (Scalar::q() - Scalar::one()) / (Scalar::v_power(1) - Scalar::one());
  // (v^2-1)/(v-1) reduces to v+1, so specializing at v = 1 is legal
  CHECK(f.specialize(Rational(1)) == Rational(2));
  CHECK(f.specialize(Rational(3)) == Rational(4));

  const Scalar g = Scalar::one() / (Scalar::v_power(1) - Scalar::one());
  CHECK_THROWS_AS(g.specialize(Rational(1)), DomainError);
  CHECK(g.specialize(Rational(2)) == Rational(1));

  const std::complex<double> z = Scalar::q().specialize(std::complex<double>(3.0, 0.0));
  CHECK(std::abs(z - std::complex<double>(9.0, 0.0)) < 1e-12);
}

TEST_CASE("scalar constants and integrality tests") {
  CHECK(Scalar(Rational(5) / 3).is_constant());
  CHECK(Scalar(Rational(5) / 3).to_rational() == Rational(5) / 3);
  CHECK_FALSE(Scalar::q().is_constant());
  CHECK_THROWS_AS(Scalar::q().to_rational(), DomainError);
  CHECK(Scalar(7L).is_nonnegative_integer());
  CHECK(Scalar::zero().is_nonnegative_integer());
  CHECK_FALSE(Scalar(-7L).is_nonnegative_integer());
  CHECK_FALSE(Scalar(Rational(1) / 2).is_nonnegative_integer());
}

TEST_CASE("scalar json string pair round trip") {
  const Scalar f = (Scalar::q() - Scalar(3L)) / (Scalar::v_power(3) + Scalar(2L));
  const Scalar back = Scalar::parse(f.num().to_string(), f.den().to_string());
  CHECK(back == f);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-3/6") == Rational(-1) / 2);
  CHECK(parse_rational("42") == Rational(42));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}
