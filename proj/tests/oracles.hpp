// Independent reference computations used by the tests. Nothing here calls
// into the library beyond reading the Cartan matrix.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "weylkit/charring.hpp"
#include "weylkit/rootdata.hpp"

namespace oracle {

using weylkit::CharElt;
using weylkit::IntMatrix;
using weylkit::Weight;

// d_i with d_i A_ij = d_j A_ji, smallest positive integers, found by
// propagating ratios along the Dynkin diagram.
inline std::vector<mpq_class> symmetrizer(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<mpq_class> d(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || a[i][j] == 0 || d[j] != 0) continue;
        d[j] = d[i] * mpq_class(a[i][j]) / mpq_class(a[j][i]);
        stack.push_back(j);
      }
    }
  }
  return d;
}

// (x, y) for x, y in simple-root coordinates.
inline mpq_class form(const IntMatrix& a, const std::vector<mpq_class>& d,
                      const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) s += mpq_class(x[i] * y[j] * a[i][j]) * d[i];
  }
  return s;
}

// Positive roots as the nonzero nonnegative root-lattice vectors whose norm
// equals that of some simple root. Valid for the named types of rank <= 4
// (C_n needs n < 4 so that 2e_i are the only norm-4 vectors).
inline std::vector<std::vector<std::int64_t>> positive_roots(const IntMatrix& a, int bound = 4) {
  const std::size_t n = a.size();
  const auto d = symmetrizer(a);
  std::vector<mpq_class> norms;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    norms.push_back(form(a, d, e, e));
  }
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> c(n, 0);
  for (;;) {
    std::size_t k = 0;
    while (k < n && ++c[k] > bound) c[k++] = 0;
    if (k == n) break;
    const mpq_class q = form(a, d, c, c);
    if (std::find(norms.begin(), norms.end(), q) != norms.end()) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Weight coordinates of a root-lattice element: column j of A is alpha_j.
inline Weight to_weight(const IntMatrix& a, const std::vector<std::int64_t>& c) {
  Weight w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[i][j] * c[j];
    w[i] = s;
  }
  return w;
}

// prod over positive roots of (lambda + rho, alpha) / (rho, alpha), with the
// form evaluated through the pairing (varpi_i, alpha_j) = d_j delta_ij.
inline mpz_class weyl_dimension(const IntMatrix& a, const Weight& lambda) {
  const auto d = symmetrizer(a);
  mpq_class num = 1, den = 1;
  for (const auto& c : positive_roots(a)) {
    mpq_class p = 0, q = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      p += mpq_class((lambda[j] + 1) * c[j]) * d[j];
      q += mpq_class(c[j]) * d[j];
    }
    num *= p;
    den *= q;
  }
  mpq_class r = num / den;
  r.canonicalize();
  return r.get_num();
}

// Rank-one helpers, x = e^varpi.
inline CharElt x(std::int64_t n) { return CharElt::monomial(Weight{n}); }

// delta(x^n) by the closed form: the string x^n + x^{n-2} + ... + x^{-n} for
// n >= 0, zero for n = -1 and minus the string of x^{-n-2} for n <= -2.
inline CharElt delta_a1(std::int64_t n) {
  CharElt r;
  if (n >= 0) {
    for (std::int64_t k = n; k >= -n; k -= 2) r += x(k);
  } else if (n <= -2) {
    for (std::int64_t k = -n - 2; k >= n + 2; k -= 2) r -= x(k);
  }
  return r;
}

// delta'(x^n): x^n + ... + x^{-n+2} for n >= 1, 0 for n = 0, and
// -(x^{-n} + ... + x^{n+2}) for n < 0.
inline CharElt delta_prime_a1(std::int64_t n) {
  CharElt r;
  if (n >= 1) {
    for (std::int64_t k = n; k >= -n + 2; k -= 2) r += x(k);
  } else if (n < 0) {
    for (std::int64_t k = -n; k >= n + 2; k -= 2) r -= x(k);
  }
  return r;
}

}  // namespace oracle
