#include <doctest.h>

#include <random>

#include "support.hpp"
#include "symfock/error.hpp"
#include "symfock/exact.hpp"

using namespace symfock;
using symfock::test::poly;
using symfock::test::random_trational;

namespace {

const TRational t = TRational::t();

TRational frac(const TPolynomial& n, const TPolynomial& d) { return TRational::make(n, d); }

}  // namespace

TEST_CASE("rational literals are canonical") {
  CHECK(rational(2, 4) == rational(1, 2));
  CHECK(rational(3, -6).get_den() == 2);
  CHECK(parse_rational("-6/4") == rational(-3, 2));
  CHECK(parse_rational("+5") == 5);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("polynomials strip trailing zeros and share one representation") {
  TPolynomial p(std::vector<BigRational>{1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(p.coeffs() == std::vector<BigRational>{1, 2});
  CHECK(TPolynomial(std::vector<BigRational>{0, 0}).is_zero());
  CHECK(TPolynomial().degree() == -1);
  CHECK(poly({rational(1, 2), rational(1, 3)}) == poly({rational(3, 6), rational(2, 6)}));
  CHECK(poly({rational(1, 2), rational(1, 3)}).common_den() == 6);
  const TPolynomial q = TPolynomial::from_integers({BigInteger(2), BigInteger(4), BigInteger(0)}, BigInteger(6));
  CHECK(q == poly({rational(1, 3), rational(2, 3)}));
  CHECK(q.integer_coeffs() == std::vector<BigInteger>{1, 2});
  CHECK(q.common_den() == 3);
}

TEST_CASE("polynomial division and gcd") {
  const TPolynomial x2m1 = poly({-1, 0, 1});
  const TPolynomial xm1 = poly({-1, 1});
  const auto dm = TPolynomial::divmod(x2m1, xm1);
  CHECK(dm.quotient == poly({1, 1}));
  CHECK(dm.remainder.is_zero());
  CHECK(TPolynomial::gcd(x2m1, poly({-2, 2})) == xm1);
  CHECK(TPolynomial::gcd(TPolynomial(), TPolynomial()).is_zero());
  CHECK_THROWS_AS(TPolynomial::divmod(x2m1, TPolynomial()), DivisionByZero);
  CHECK_THROWS(TPolynomial::exact_quotient(x2m1, poly({0, 1})));
  const auto r = TPolynomial::divmod(poly({1, 0, 0, 2}), poly({1, 1}));
  CHECK(r.quotient * poly({1, 1}) + r.remainder == poly({1, 0, 0, 2}));
  CHECK(r.remainder.degree() < 1);
}

TEST_CASE("normalization examples") {
  // (t^2 - 1)/(t - 1) = t + 1
  TRational a = frac(poly({-1, 0, 1}), poly({-1, 1}));
  CHECK(a.num() == poly({1, 1}));
  CHECK(a.den() == poly({1}));
  // 0/t^3 = 0/1
  TRational b = frac(TPolynomial(), poly({0, 0, 0, 1}));
  CHECK(b.is_zero());
  CHECK(b.den().is_one());
  // 2t/2 = t
  TRational c = frac(poly({0, 2}), poly({2}));
  CHECK(c == t);
  // den made monic: 1/(2 - 2t) = (-1/2)/(t - 1)
  TRational d = frac(poly({1}), poly({2, -2}));
  CHECK(d.den() == poly({-1, 1}));
  CHECK(d.num() == poly({rational(-1, 2)}));
  CHECK_THROWS_AS(frac(poly({1}), TPolynomial()), DivisionByZero);
}

TEST_CASE("field operation examples") {
  const TRational one_minus_t = 1 - t;
  const TRational one_plus_t = 1 + t;
  CHECK(TRational(1) / one_minus_t + TRational(1) / one_plus_t == TRational(2) / (1 - t * t));
  CHECK(one_minus_t * (TRational(1) / one_minus_t) == 1);
  CHECK((1 - t * t) / one_minus_t == one_plus_t);
  CHECK_THROWS_AS(TRational(1) / TRational(0), DivisionByZero);
  CHECK_THROWS_AS(TRational(0).inverse(), DivisionByZero);
  CHECK(t.pow(-2) * t.pow(3) == t);
  CHECK(one_minus_t_pow(3) == 1 - t.pow(3));
}

TEST_CASE("evaluation examples") {
  const TRational g = TRational(1) / (1 - t);
  CHECK(g.eval_at(0) == 1);
  CHECK_THROWS_AS(g.eval_at(1), PoleError);
  CHECK(((1 - t * t) / (1 - t)).eval_at(2) == 3);
  CHECK(poly({1, 2, 3}).eval(rational(1, 2)) == rational(11, 4));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 150; ++trial) {
    const TRational x = random_trational(rng), y = random_trational(rng), z = random_trational(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x - x == 0);
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == 1);
      CHECK((y / x) * x == y);
    }
    TRational acc = z;
    acc.add_product(x, y);
    CHECK(acc == z + x * y);
  }
}

TEST_CASE("normalization is idempotent and value equality is representation equality") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const TRational x = random_trational(rng);
    const TRational again = TRational::make(x.num(), x.den());
    CHECK(again.num() == x.num());
    CHECK(again.den() == x.den());
    // Multiply numerator and denominator by a common factor: same value, same form.
    const TPolynomial f = poly({rational(trial % 5 + 1, 3), -1, 1});
    const TRational scaled = TRational::make(x.num() * f, x.den() * f);
    CHECK(scaled.num() == x.num());
    CHECK(scaled.den() == x.den());
  }
}

TEST_CASE("evaluation is a ring homomorphism where defined") {
  std::mt19937 rng(99);
  const BigRational points[] = {0, 2, rational(-1, 3), rational(5, 7)};
  for (int trial = 0; trial < 80; ++trial) {
    const TRational x = random_trational(rng), y = random_trational(rng);
    for (const auto& t0 : points) {
      try {
        const BigRational xv = x.eval_at(t0), yv = y.eval_at(t0);
        CHECK((x + y).eval_at(t0) == xv + yv);
        CHECK((x * y).eval_at(t0) == xv * yv);
      } catch (const PoleError&) {
      }
    }
  }
}

TEST_CASE("to_string is readable") {
  CHECK(TRational(0).to_string() == "0");
  CHECK(TRational(rational(-3, 2)).to_string() == "-3/2");
  CHECK_FALSE((TRational(1) / (1 - t)).to_string().empty());
}
