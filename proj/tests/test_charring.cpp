#include <doctest.h>

#include "oracles.hpp"
#include "weylkit/charring.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/parse.hpp"
#include "weylkit/selftest.hpp"

using namespace weylkit;
using oracle::x;

TEST_CASE("ring basics") {
  CHECK(monomial(Weight{1, 2}) * monomial(Weight{-3, 1}) == monomial(Weight{-2, 3}));
  const CharElt u = x(3) + x(-1) * 4;
  CHECK(add(u, scale(-1, u)).is_zero());
  CHECK((x(1) + x(-1)) * (x(1) - x(-1)) == x(2) - x(-2));
  CHECK(u.augmentation() == 5);
  CHECK(to_string(CharElt{}) == "0");
}

TEST_CASE("coefficients are arbitrary precision") {
  CharElt u = x(1) + x(0);
  CharElt p = power(u, 80, 1);
  // central binomial coefficient C(80,40) > 2^64
  CHECK(p.coefficient(Weight{40}) == Integer("107507208733336176461620"));
  CHECK(power(x(2) * Integer(-1), -1, 1) == x(-2) * Integer(-1));
  CHECK_THROWS(power(u, -1, 1));
}

TEST_CASE("Weyl action") {
  const WeylGroup a1(build_root_datum("A1"));
  CHECK(weyl_act(a1, a1.identity(), x(3) + x(-2)) == x(3) + x(-2));
  CHECK(weyl_act(a1, a1.simple_reflection(0), x(1)) == x(-1));
  const WeylGroup a2(build_root_datum("A2"));
  CHECK(reflect_simple(a2.datum(), 0, monomial(Weight{1, 0})) == monomial(Weight{-1, 1}));
  RandomSource rnd(3);
  for (int k = 0; k < 20; ++k) {
    const CharElt u = rnd.element(2, 5), v = rnd.element(2, 5);
    for (const auto& w1 : a2.elements()) {
      CHECK(weyl_act(a2, w1, u * v) == weyl_act(a2, w1, u) * weyl_act(a2, w1, v));
      for (const auto& w2 : a2.elements()) {
        CHECK(weyl_act(a2, w1, weyl_act(a2, w2, u)) == weyl_act(a2, a2.multiply(w1, w2), u));
      }
    }
  }
}

TEST_CASE("exact division") {
  const RootDatum a1 = build_root_datum("A1");
  const Root& alpha = a1.simple_root(0);
  CHECK(divide_exact(x(0) - x(-2), alpha) == x(0));
  CHECK(divide_exact(x(1) - x(-3), alpha) == x(1) + x(-1));
  CHECK_THROWS_AS(divide_exact(x(1), alpha), NotDivisible);
  CHECK_THROWS_AS(divide_exact(x(1) + x(0), alpha), NotDivisible);

  RandomSource rnd(11);
  for (const char* t : {"A2", "B2", "G2", "B3"}) {
    const RootDatum d = build_root_datum(t);
    for (int k = 0; k < 20; ++k) {
      const CharElt q = rnd.element(d.rank(), 10);
      for (const auto& a : d.positive_roots()) {
        CHECK(divide_exact(q * one_minus_exp_neg(a), a) == q);
        CHECK(divide_exact(q * one_minus_exp_neg(a.negated()), a.negated()) == q);
      }
    }
  }
}

TEST_CASE("Weyl denominator and antisymmetrizer") {
  const WeylGroup a1(build_root_datum("A1"));
  CHECK(weyl_denominator(a1.datum()) == x(0) - x(-2));
  CHECK(antisymmetrize(a1, x(0)) == x(0) - x(-2));
  CHECK(antisymmetrize(a1, x(-1)).is_zero());

  for (const char* t : {"A1", "A2", "B2", "G2", "B3"}) {
    CAPTURE(t);
    const WeylGroup g(build_root_datum(t));
    const auto& d = g.datum();
    const CharElt den = weyl_denominator(d);
    CHECK(den.coefficient(Weight(d.rank())) == 1);
    CHECK(antisymmetrize(g, CharElt::constant(d.rank(), 1)) == den);
    for (std::size_t j = 0; j < d.rank(); ++j) {
      CHECK(reflect_simple(d, j, den) == -(den.shifted(d.simple_root(j).weight)));
    }
    RandomSource rnd(5);
    const CharElt u = rnd.element(d.rank(), 6);
    const CharElt shifted = antisymmetrize(g, u).shifted(d.weyl_vector());
    for (std::size_t j = 0; j < d.rank(); ++j) CHECK(reflect_simple(d, j, shifted) == -shifted);
  }
}

TEST_CASE("adjoint character of A2 through the antisymmetrizer") {
  const WeylGroup a2(build_root_datum("A2"));
  CharElt q = antisymmetrize(a2, monomial(Weight{1, 1}));
  for (const auto& a : a2.datum().positive_roots()) q = divide_exact(q, a);
  CHECK(q.size() == 7);
  CHECK(q.augmentation() == 8);
  CHECK(q.coefficient(Weight{0, 0}) == 2);
}

TEST_CASE("text form") {
  CHECK(to_string(x(2) + x(0) + x(-2)) == "e[2] + e[0] + e[-2]");
  const CharElt u = parse_char("2*e[1,0] - e[-1,2]");
  CHECK(u.size() == 2);
  CHECK(to_string(u) == "2*e[1,0] - e[-1,2]");
  CHECK(to_string(-u) == "-2*e[1,0] + e[-1,2]");
}
