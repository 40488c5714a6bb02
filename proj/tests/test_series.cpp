#include <doctest.h>

#include <random>

#include "renorm/errors.hpp"
#include "renorm/fixtures.hpp"
#include "renorm/laurent.hpp"

using namespace renorm;

namespace {

LaurentSeries eps(int k, const Rational& c = 1, int cap = LaurentSeries::kExact) {
  return LaurentSeries::monomial(c, k, cap);
}

// Dense Cauchy product of two Laurent polynomials, coefficient by coefficient.
std::map<int, Rational> naive_product(const LaurentSeries& a, const LaurentSeries& b) {
  std::map<int, Rational> out;
  for (int i = -20; i <= 20; ++i) {
    for (int j = -20; j <= 20; ++j) {
      const Rational x = a.coeff(i) * b.coeff(j);
      if (x != 0) out[i + j] += x;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_SUITE("series-core") {
  TEST_CASE("rationals are canonical") {
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK(to_string(parse_rational("-3/6")) == "-1/2");
    CHECK_THROWS_AS(parse_rational("3/-6"), ParseError);
    CHECK(to_string(parse_rational("10/5")) == "2");
    CHECK(to_string(parse_rational("+7")) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
  }

  TEST_CASE("addition") {
    CHECK(eps(-1) + eps(0) + (eps(-1, -1) + eps(1)) == eps(0) + eps(1));
    const LaurentSeries x = eps(-2, 3) + eps(4);
    CHECK(LaurentSeries() + x == x);
    const LaurentSeries a = LaurentSeries(Rational(3), 2);
    const LaurentSeries b = eps(2, 1, 5);
    const LaurentSeries sum = a + b;
    CHECK(sum.cap() == 2);
    CHECK(sum.terms() == std::map<int, Rational>{{0, 3}});
  }

  TEST_CASE("multiplication") {
    CHECK((eps(-1) + eps(0)) * (eps(-1) - eps(0)) == eps(-2) - eps(0));
    const LaurentSeries a = LaurentSeries({{0, 2}, {1, 5}}, 3);
    const LaurentSeries shifted = eps(-1) * a;
    CHECK(shifted.cap() == 2);
    CHECK(shifted.coeff(-1) == 2);
    CHECK(shifted.coeff(0) == 5);
    const LaurentSeries x = eps(-3, Rational(1, 7)) + eps(2, -4);
    CHECK(LaurentSeries(Rational(1)) * x == x);
  }

  TEST_CASE("product matches a dense Cauchy product") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const LaurentSeries a = random_laurent(rng, -5, 5);
      const LaurentSeries b = random_laurent(rng, -5, 5);
      CHECK((a * b).terms() == naive_product(a, b));
      CHECK((a * b).is_exact());
    }
  }

  TEST_CASE("truncated products only report exact coefficients") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const LaurentSeries a = random_laurent(rng, -4, 6);
      const LaurentSeries b = random_laurent(rng, -4, 6);
      const int ca = 1 + static_cast<int>(rng() % 5);
      const int cb = 1 + static_cast<int>(rng() % 5);
      const LaurentSeries p = a.truncated(ca) * b.truncated(cb);
      // Every coefficient below the cap must agree with the untruncated product.
      const LaurentSeries full = a * b;
      for (int k = -10; k < p.cap(); ++k) CHECK(p.coeff(k) == full.coeff(k));
    }
  }

  TEST_CASE("pole bound") {
    ScopedPoleBound bound(4);
    CHECK_NOTHROW(eps(-2) * eps(-2));
    CHECK_THROWS_AS(eps(-3) * eps(-2), FloorExceeded);
  }

  TEST_CASE("equality on disjoint windows is an error") {
    const LaurentSeries a({{-5, 1}}, -5, -3);
    const LaurentSeries b({{2, 1}}, 2, 4);
    CHECK_THROWS_AS((void)(a == b), IncomparableWindows);
  }

  TEST_CASE("minimal subtraction") {
    const LaurentSeries x = eps(-2, 2) + eps(0, 3) + eps(1);
    CHECK(r_minus(x) == eps(-2, 2));
    CHECK(r_plus(x) == eps(0, 3) + eps(1));
    CHECK(r_minus(eps(0, 5) + eps(3)).is_zero());
    const LaurentSeries polar = eps(-1) + eps(-3, -7);
    CHECK(r_minus(polar) == polar);
    CHECK(r_plus(polar).is_zero());
    CHECK(r_minus(x) + r_plus(x) == x);
    CHECK(r_minus(LaurentSeries({{-2, 1}, {1, 1}}, 3)).is_exact());
  }

  TEST_CASE("rota-baxter examples") {
    CHECK(rb_check(eps(-1), eps(-1)));
    CHECK(r_minus(eps(-1)) * r_minus(eps(-1)) == eps(-2));
    CHECK(rb_check(eps(1), eps(1)));
    CHECK(rb_check(eps(-1), eps(1)));
  }

  TEST_CASE("rota-baxter identity on random pairs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      const LaurentSeries x = random_laurent(rng, -5, 5, 6);
      const LaurentSeries y = random_laurent(rng, -5, 5, 6);
      CHECK(rb_check(x, y));
    }
  }

  TEST_CASE("projector identities and subalgebras") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const LaurentSeries x = random_laurent(rng, -5, 5, 6);
      const LaurentSeries y = random_laurent(rng, -5, 5, 6);
      CHECK(r_minus(r_minus(x)) == r_minus(x));
      CHECK(r_plus(r_plus(x)) == r_plus(x));
      CHECK(r_minus(r_plus(x)).is_zero());
      CHECK(r_minus(x) + r_plus(x) == x);
      CHECK((r_minus(x) * r_minus(y)).is_polar());
      CHECK((r_plus(x) * r_plus(y)).is_holomorphic());
    }
  }

  TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
      const LaurentSeries a = random_laurent(rng, -3, 4, 5);
      const LaurentSeries b = random_laurent(rng, -3, 4, 6);
      const LaurentSeries c = random_laurent(rng, -3, 4, 7);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
    }
  }

  TEST_CASE("text form") {
    CHECK((eps(-2, Rational(1, 2)) - eps(0, 3) + LaurentSeries(Rational(0), 2)).to_string() ==
          "1/2*eps^-2 - 3 + O(eps^2)");
    CHECK(LaurentSeries().to_string() == "0");
  }
}
