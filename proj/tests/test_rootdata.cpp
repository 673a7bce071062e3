#include <doctest.h>

#include "oracles.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/rootdata.hpp"
#include "weylkit/weyl.hpp"

using namespace weylkit;

namespace {

std::vector<std::vector<std::int64_t>> library_roots(const RootDatum& d) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& a : d.positive_roots()) out.push_back(a.root_coords);
  std::sort(out.begin(), out.end());
  return out;
}

const char* const kTypes[] = {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"};

}  // namespace

TEST_CASE("named Cartan matrices") {
  CHECK(named_cartan("B2") == IntMatrix{{2, -1}, {-2, 2}});
  CHECK(named_cartan("C2") == IntMatrix{{2, -2}, {-1, 2}});
  CHECK(named_cartan("G2") == IntMatrix{{2, -3}, {-1, 2}});
  CHECK(named_cartan("D4") == IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
}

TEST_CASE("rank one") {
  const RootDatum d = build_root_datum("A1");
  CHECK(d.positive_roots().size() == 1);
  CHECK(d.weyl_vector() == Weight{1});
  CHECK(d.simple_root(0).weight == Weight{2});
}

TEST_CASE("A2 positive roots") {
  const RootDatum d = build_root_datum("A2");
  CHECK(library_roots(d) == std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("positive roots match the lattice-norm oracle") {
  for (const char* t : kTypes) {
    CAPTURE(t);
    const RootDatum d = build_root_datum(t);
    CHECK(library_roots(d) == oracle::positive_roots(d.cartan()));
    for (const auto& a : d.positive_roots()) {
      CHECK(a.weight == oracle::to_weight(d.cartan(), a.root_coords));
      CHECK(a.pair(a.weight) == 2);
    }
  }
}

TEST_CASE("root counts and l(w0)") {
  const std::pair<const char*, std::size_t> expected[] = {
      {"A1", 1}, {"A2", 3}, {"A3", 6}, {"B2", 4}, {"B3", 9},
      {"C2", 4}, {"C3", 9}, {"D4", 12}, {"G2", 6}};
  for (const auto& [t, n] : expected) {
    CAPTURE(t);
    const RootDatum d = build_root_datum(t);
    CHECK(d.positive_roots().size() == n);
    CHECK(WeylGroup(d).longest().length == n);
  }
}

TEST_CASE("simple reflections") {
  const RootDatum a1 = build_root_datum("A1");
  CHECK(reflect_simple(a1, 0, Weight{1}) == Weight{-1});
  const RootDatum a2 = build_root_datum("A2");
  CHECK(reflect_simple(a2, 0, Weight{1, 0}) == Weight{-1, 1});
  for (const char* t : kTypes) {
    const RootDatum d = build_root_datum(t);
    for (std::size_t j = 0; j < d.rank(); ++j) {
      CHECK(reflect_simple(d, j, d.weyl_vector()) == d.weyl_vector() - d.simple_root(j).weight);
      const std::int64_t raw[] = {3, -2, 5, 1};
      const Weight lam(std::span<const std::int64_t>(raw, d.rank()));
      CHECK(reflect_simple(d, j, reflect_simple(d, j, lam)) == lam);
      Weight wall = lam;
      wall[j] = 0;
      CHECK(reflect_simple(d, j, wall) == wall);
    }
  }
  CHECK_THROWS_AS(reflect_simple(a2, 2, Weight{1, 0}), IndexOutOfRange);
}

TEST_CASE("pairing") {
  const RootDatum a2 = build_root_datum("A2");
  CHECK(pairing(a2.weyl_vector(), 0) == 1);
  CHECK(pairing(a2.weyl_vector(), 1) == 1);
  CHECK(pairing(a2.simple_root(0).weight, 0) == 2);
  CHECK(pairing(a2.simple_root(1).weight, 0) == -1);
}

TEST_CASE("2 rho is the sum of positive roots") {
  for (const char* t : kTypes) {
    const RootDatum d = build_root_datum(t);
    CHECK(two_rho_check(d));
    Weight sum(d.rank());
    for (const auto& c : oracle::positive_roots(d.cartan())) sum += oracle::to_weight(d.cartan(), c);
    CHECK(sum == d.weyl_vector().scaled(2));
  }
}

TEST_CASE("explicit Cartan matrices") {
  const RootDatum d = build_root_datum(IntMatrix{{2, -1}, {-1, 2}});
  CHECK(d.positive_roots().size() == 3);
  CHECK_THROWS_AS(build_root_datum(IntMatrix{{2, -2}, {-2, 2}}), NotFiniteType);  // affine A1
  CHECK_THROWS_AS(build_root_datum(IntMatrix{{2, -1, 0}, {-1, 2, -1}, {-1, -1, 2}}), NotFiniteType);
  CHECK_THROWS_AS(build_root_datum(IntMatrix{{2, -1}, {0, 2}}), NotFiniteType);  // not symmetrizable
  CHECK_THROWS_AS(build_root_datum("E9"), NotFiniteType);
}
