#include <doctest.h>

#include <optional>
#include <set>

#include "oracles.hpp"
#include "weylkit/demazure.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/repring.hpp"
#include "weylkit/selftest.hpp"

using namespace weylkit;
using oracle::x;

namespace {

IrredDecomp dec(std::initializer_list<std::pair<Weight, long>> e) {
  IrredDecomp d;
  for (const auto& [w, m] : e) d.entries[w] = m;
  return d;
}

std::vector<Weight> box(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  std::vector<Weight> out;
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = lo;
  for (;;) {
    out.push_back(w);
    std::size_t k = 0;
    while (k < rank && ++w[k] > hi) w[k++] = lo;
    if (k == rank) return out;
  }
}

}  // namespace

TEST_CASE("irreducible characters") {
  const WeylGroup a1(build_root_datum("A1"));
  CHECK(irreducible_character(a1, Weight{2}) == x(2) + x(0) + x(-2));
  CHECK(irreducible_character(a1, Weight{-2}) == -x(0));
  CHECK(irreducible_character(a1, Weight{-2}, CharMethod::Weyl) == -x(0));
  const WeylGroup a2(build_root_datum("A2"));
  CHECK(irreducible_character(a2, Weight{1, 0}) ==
        monomial(Weight{1, 0}) + monomial(Weight{-1, 1}) + monomial(Weight{0, -1}));
}

TEST_CASE("both routes and the dimension oracle") {
  for (const char* t : {"A1", "A2", "B2", "C2", "G2", "A3"}) {
    CAPTURE(t);
    const WeylGroup g(build_root_datum(t));
    for (const Weight& lam : box(g.rank(), 0, g.rank() > 2 ? 1 : 2)) {
      CAPTURE(to_string(lam));
      const CharElt chi = irreducible_character(g, lam, CharMethod::Demazure);
      CHECK(chi == irreducible_character(g, lam, CharMethod::Weyl));
      const Integer dim = oracle::weyl_dimension(g.datum().cartan(), lam);
      CHECK(chi.augmentation() == dim);
      CHECK(weyl_dimension(g.datum(), lam) == dim);
      CHECK(chi.coefficient(lam) == 1);
    }
  }
  CHECK(weyl_dimension(build_root_datum("A2"), Weight{1, 1}) == 8);
  CHECK(weyl_dimension(build_root_datum("B2"), Weight{1, 0}) == 5);
  CHECK(weyl_dimension(build_root_datum("B2"), Weight{0, 1}) == 4);
  CHECK(weyl_dimension(build_root_datum("G2"), Weight{1, 0}) == 7);
  CHECK(weyl_dimension(build_root_datum("G2"), Weight{0, 1}) == 14);
}

TEST_CASE("orbit sums and dominant conjugates") {
  const WeylGroup g(build_root_datum("B2"));
  CHECK(orbit_sum(g, Weight{1, 0}).size() == 4);
  CHECK(orbit_sum(g, Weight{1, 1}).size() == 8);
  CHECK(orbit_sum(g, Weight{0, 0}) == CharElt::constant(2, 1));
  for (const auto& w : g.elements()) CHECK(dominant_conjugate(g.datum(), g.act(w, Weight{2, 1})) == Weight{2, 1});
}

TEST_CASE("decomposition into irreducibles") {
  const WeylGroup a1(build_root_datum("A1"));
  CHECK(decompose_into_irreducibles(a1, CharElt{}).empty());
  CHECK(decompose_into_irreducibles(a1, x(2) + x(0) + x(-2)) == dec({{Weight{2}, 1}}));
  const CharElt sq = (x(1) + x(-1)) * (x(1) + x(-1));
  CHECK(decompose_into_irreducibles(a1, sq) == dec({{Weight{2}, 1}, {Weight{0}, 1}}));
  CHECK_THROWS_AS(decompose_into_irreducibles(a1, x(1)), NotInvariant);

  // A2: V(1,0) x V(0,1) = V(1,1) + V(0,0); V(1,0)^2 = V(2,0) + V(0,1)
  const WeylGroup a2(build_root_datum("A2"));
  const CharElt v10 = irreducible_character(a2, Weight{1, 0});
  const CharElt v01 = irreducible_character(a2, Weight{0, 1});
  CHECK(decompose_into_irreducibles(a2, v10 * v01) == dec({{Weight{1, 1}, 1}, {Weight{0, 0}, 1}}));
  CHECK(decompose_into_irreducibles(a2, v10 * v10) == dec({{Weight{2, 0}, 1}, {Weight{0, 1}, 1}}));
  // virtual characters
  CHECK(decompose_into_irreducibles(a2, v10 - v01 * Integer(3)) ==
        dec({{Weight{0, 1}, -3}, {Weight{1, 0}, 1}}));
}

TEST_CASE("decomposition agrees with peeling off highest weights") {
  for (const char* t : {"B2", "G2", "A3", "B3"}) {
    const WeylGroup g(build_root_datum(t));
    RandomSource rnd(71);
    for (int k = 0; k < 4; ++k) {
      const CharElt u = top(g, rnd.element(g.rank(), 3, 2));
      // The dominant support weight of largest height (ties by lex) is a
      // highest weight of the remainder, so peeling its character is exact.
      IrredDecomp peeled;
      CharElt rem = u;
      while (!rem.is_zero()) {
        std::optional<Weight> best;
        for (const auto& [w, c] : rem.terms()) {
          if (!w.is_dominant()) continue;
          if (!best || std::pair(g.datum().scaled_height(w), w) >
                           std::pair(g.datum().scaled_height(*best), *best)) {
            best = w;
          }
        }
        REQUIRE(best);
        const Integer c = rem.coefficient(*best);
        rem -= c * irreducible_character(g, *best, CharMethod::Weyl);
        peeled.entries[*best] += c;
      }
      CHECK(decompose_into_irreducibles(g, u) == peeled);
    }
  }
}

TEST_CASE("restrict and induce") {
  const WeylGroup a1(build_root_datum("A1"));
  CHECK(induce(a1, restrict(a1, dec({{Weight{2}, 1}}))) == dec({{Weight{2}, 1}}));
  CHECK(induce(a1, x(1)) == dec({{Weight{1}, 1}}));
  CHECK(induce(a1, x(-1)).empty());

  RandomSource rnd(53);
  for (const char* t : {"A2", "B2", "G2"}) {
    const WeylGroup g(build_root_datum(t));
    for (int k = 0; k < 6; ++k) {
      const CharElt u = rnd.element(g.rank(), 5, 3);
      CHECK(restrict(g, induce(g, u)) == top(g, u));
      const IrredDecomp d = induce(g, u);
      CHECK(induce(g, restrict(g, d)) == d);
    }
  }
}

TEST_CASE("Steinberg basis") {
  const WeylGroup a1(build_root_datum("A1"));
  const SteinbergBasis b1 = steinberg_basis(a1);
  CHECK(b1.elements[a1.identity().index] == x(0));
  CHECK(b1.elements[a1.simple_reflection(0).index] == x(1));
  CHECK(b1.verified_radius == 1);

  const auto minus = decompose_over_invariants(a1, x(-1), b1);
  CHECK(minus[a1.identity().index] == dec({{Weight{1}, 1}}));
  CHECK(minus[a1.simple_reflection(0).index] == dec({{Weight{0}, -1}}));
  const auto sq = decompose_over_invariants(a1, x(2), b1);
  CHECK(sq[a1.identity().index] == dec({{Weight{0}, -1}}));
  CHECK(sq[a1.simple_reflection(0).index] == dec({{Weight{1}, 1}}));

  const WeylGroup a2(build_root_datum("A2"));
  const SteinbergBasis b2 = steinberg_basis(a2);
  std::set<Weight> weights(b2.weights.begin(), b2.weights.end());
  CHECK(weights == std::set<Weight>{{0, 0}, {1, -1}, {-1, 1}, {1, 0}, {0, 1}, {1, 1}});
  for (const auto& w : a2.elements()) {
    const auto c = decompose_over_invariants(a2, b2.elements[w.index], b2);
    for (const auto& v : a2.elements()) {
      CHECK(c[v.index] == (v == w ? dec({{Weight{0, 0}, 1}}) : IrredDecomp{}));
    }
  }
  for (const Weight& mu : box(2, -3, 3)) {
    const CharElt u = monomial(mu);
    CHECK(reassemble(a2, decompose_over_invariants(a2, u, b2), b2) == u);
  }
}

TEST_CASE("left-descent weights are not a basis") {
  const WeylGroup a2(build_root_datum("A2"));
  CHECK_THROWS_AS(steinberg_basis(a2, {SteinbergConvention::LeftDescent, 1}), FreenessCheckFailed);
  const WeylGroup a1(build_root_datum("A1"));
  CHECK_NOTHROW(steinberg_basis(a1, {SteinbergConvention::LeftDescent, 1}));
}

TEST_CASE("Steinberg basis in higher types") {
  for (const char* t : {"B2", "G2", "A3", "B3", "C3", "D4"}) {
    const WeylGroup g(build_root_datum(t));
    const SteinbergBasis b = steinberg_basis(g);
    RandomSource rnd(59);
    for (int k = 0; k < 5; ++k) {
      const CharElt u = rnd.element(g.rank(), 3, 2);
      CHECK(reassemble(g, decompose_over_invariants(g, u, b), b) == u);
    }
  }
}

TEST_CASE("Weyl denominator is not a zero divisor") {
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    CHECK(weyl_denominator_is_regular(WeylGroup(build_root_datum(t)), 2));
  }
}
