#include <doctest.h>

#include "weylkit/covers.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/selftest.hpp"

using namespace weylkit;

namespace {
CharElt e(std::int64_t n) { return CharElt::monomial(Weight{n}); }

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}
}  // namespace

TEST_CASE("Smith normal form") {
  for (const IntMatrix& m : {IntMatrix{{2, 4}, {6, 8}}, IntMatrix{{2, -1}, {-1, 2}},
                             IntMatrix{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}, IntMatrix{{0, 3}, {2, 0}}}) {
    const SmithForm s = smith_normal_form(m);
    CHECK(mat_mul(mat_mul(s.u, m), s.v) == s.d);
    const std::size_t n = m.size();
    IntMatrix id(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    CHECK(mat_mul(s.u, s.u_inv) == id);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(s.d[i][i] > 0);
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(s.d[i][j] == 0);
      if (i + 1 < n) CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
    }
  }
  CHECK_THROWS_AS(build_cover(IntMatrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST_CASE("coset representatives") {
  CHECK(build_cover(IntMatrix{{1, 0}, {0, 1}}).index() == 1);
  const CoverDatum c2 = build_cover(IntMatrix{{2}});
  CHECK(c2.coset_reps() == std::vector<Weight>{Weight{0}, Weight{1}});
  const CoverDatum c3 = build_cover(IntMatrix{{3}});
  CHECK(c3.coset_reps() == std::vector<Weight>{Weight{0}, Weight{1}, Weight{2}});
  const CoverDatum a2 = build_cover(IntMatrix{{2, -1}, {-1, 2}});
  CHECK(a2.index() == 3);
}

TEST_CASE("pullback") {
  const CoverDatum c = build_cover(IntMatrix{{2}});
  CHECK(pullback(c, CharElt::constant(1, 1)) == CharElt::constant(1, 1));
  CHECK(pullback(c, e(1)) == e(2));
  CHECK(pullback(c, e(1) + e(-1)) == e(2) + e(-2));
}

TEST_CASE("decompose_cover") {
  const CoverDatum c2 = build_cover(IntMatrix{{2}});
  auto parts = decompose_cover(c2, CharElt::constant(1, 1));
  CHECK(parts.at(0) == CharElt::constant(1, 1));
  CHECK(parts.at(1).is_zero());
  parts = decompose_cover(c2, e(1) + e(2) * Integer(3));
  CHECK(parts.at(0) == e(1) * Integer(3));
  CHECK(parts.at(1) == CharElt::constant(1, 1));
  const CoverDatum c3 = build_cover(IntMatrix{{3}});
  parts = decompose_cover(c3, e(4));
  CHECK(parts.at(0).is_zero());
  CHECK(parts.at(1) == e(1));
  CHECK(parts.at(2).is_zero());
}

TEST_CASE("round trip and partition") {
  RandomSource rnd(61);
  for (const IntMatrix& m : {IntMatrix{{2}}, IntMatrix{{3}}, IntMatrix{{2, 0}, {0, 2}},
                             IntMatrix{{2, -1}, {-1, 2}}, IntMatrix{{1, 2}, {3, -1}}}) {
    const CoverDatum c = build_cover(m);
    for (int k = 0; k < 30; ++k) {
      const CharElt v = rnd.element(c.rank(), 10, 6);
      const auto parts = decompose_cover(c, v);
      CHECK(parts.size() == c.index());
      CHECK(reassemble_cover(c, parts) == v);
      std::size_t total = 0;
      for (const auto& [idx, u] : parts) total += u.size();
      CHECK(total == v.size());
    }
  }
}
