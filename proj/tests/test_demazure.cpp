#include <doctest.h>

#include "oracles.hpp"
#include "weylkit/demazure.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/repring.hpp"
#include "weylkit/selftest.hpp"

using namespace weylkit;
using oracle::x;

namespace {
constexpr PartialOptions kStrict{true};
}

TEST_CASE("rank one closed forms") {
  const RootDatum a1 = build_root_datum("A1");
  CHECK(delta(a1, 0, x(0)) == x(0));
  CHECK(delta_prime(a1, 0, x(0)).is_zero());
  CHECK(delta(a1, 0, x(1)) == x(1) + x(-1));
  CHECK(delta(a1, 0, x(2)) == x(2) + x(0) + x(-2));
  CHECK(delta_prime(a1, 0, x(1)) == x(1));
  for (std::int64_t n = -9; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(delta(a1, 0, x(n)) == oracle::delta_a1(n));
    CHECK(delta_prime(a1, 0, x(n)) == oracle::delta_prime_a1(n));
  }
  CHECK_THROWS_AS(delta(a1, 1, x(0)), IndexOutOfRange);
}

TEST_CASE("idempotence and delta = delta' + s") {
  RandomSource rnd(17);
  for (const char* t : {"A1", "A2", "B2", "G2", "C3"}) {
    const RootDatum d = build_root_datum(t);
    for (int k = 0; k < 15; ++k) {
      const CharElt u = rnd.element(d.rank(), 8);
      for (std::size_t j = 0; j < d.rank(); ++j) {
        const CharElt a = delta(d, j, u), b = delta_prime(d, j, u);
        CHECK(delta(d, j, a) == a);
        CHECK(delta_prime(d, j, b) == b);
        CHECK(a == b + reflect_simple(d, j, u));
        // invariant input is killed by delta'
        const CharElt inv = u + reflect_simple(d, j, u);
        CHECK(delta_prime(d, j, inv).is_zero());
      }
    }
  }
}

TEST_CASE("partial along reduced words") {
  const WeylGroup a2(build_root_datum("A2"));
  RandomSource rnd(23);
  for (int k = 0; k < 20; ++k) {
    const CharElt u = rnd.element(2, 6);
    CHECK(partial(a2, a2.identity(), u, kStrict) == u);
    CHECK(partial_word(a2.datum(), {0, 1, 0}, u) == partial_word(a2.datum(), {1, 0, 1}, u));
    CHECK(partial_prime_word(a2.datum(), {0, 1, 0}, u) ==
          partial_prime_word(a2.datum(), {1, 0, 1}, u));
  }
  const WeylGroup a1(build_root_datum("A1"));
  CHECK(partial_prime(a1, a1.simple_reflection(0), x(1), kStrict) == x(1));
}

TEST_CASE("strict mode over B2 and G2") {
  RandomSource rnd(29);
  for (const char* t : {"B2", "G2"}) {
    const WeylGroup g(build_root_datum(t));
    for (const auto& w : g.elements()) {
      const CharElt u = rnd.element(2, 5);
      CHECK_NOTHROW(partial(g, w, u, kStrict));
      CHECK_NOTHROW(partial_prime(g, w, u, kStrict));
    }
  }
}

TEST_CASE("partial_all matches individual compositions") {
  RandomSource rnd(31);
  for (const char* t : {"A2", "B2", "G2", "A3"}) {
    const WeylGroup g(build_root_datum(t));
    const CharElt u = rnd.element(g.rank(), 6);
    const auto all = partial_all(g, u);
    REQUIRE(all.size() == g.order());
    for (const auto& w : g.elements()) CHECK(all[w.index] == partial_word(g.datum(), w.word, u));
  }
}

TEST_CASE("top") {
  const WeylGroup a1(build_root_datum("A1"));
  CHECK(top(a1, x(0)) == x(0));
  CHECK(top(a1, x(2)) == x(2) + x(0) + x(-2));
  CHECK(top(a1, x(-2)) == -x(0));
  CHECK(sigma(a1, x(1)) == x(1) + x(-1));

  RandomSource rnd(37);
  for (const char* t : {"A2", "B2", "G2"}) {
    CAPTURE(t);
    const WeylGroup g(build_root_datum(t));
    for (int k = 0; k < 8; ++k) {
      const CharElt u = rnd.element(g.rank(), 6, 4);
      const CharElt tu = top(g, u, kStrict);
      CHECK(tu == top_via_antisymmetrizer(g, u));
      CHECK(is_w_invariant(g.datum(), tu));
      CHECK(top(g, tu) == tu);
      const CharElt chi = top(g, rnd.element(g.rank(), 3, 2));
      CHECK(top(g, chi * u) == chi * tu);
    }
  }
}

TEST_CASE("conjugation between partial and partial'") {
  // partial'_w(u) = e^rho partial_w(e^{-rho} u)
  RandomSource rnd(41);
  for (const char* t : {"A1", "A2", "B2"}) {
    const WeylGroup g(build_root_datum(t));
    const Weight rho = g.datum().weyl_vector();
    for (const auto& w : g.elements()) {
      for (int k = 0; k < 5; ++k) {
        const CharElt u = rnd.element(g.rank(), 5);
        CHECK(partial_prime(g, w, u) == partial(g, w, u.shifted(-rho)).shifted(rho));
      }
    }
  }
  // the form e^{-rho} partial_w(e^{-rho} u) fails already in rank one
  const WeylGroup a1(build_root_datum("A1"));
  const auto& s = a1.simple_reflection(0);
  CHECK(partial_prime(a1, s, x(1)) == x(1));
  CHECK(partial(a1, s, x(0)).shifted(Weight{-1}) == x(-1));
}
