#include "weylkit/linalg.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>

namespace weylkit {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(r >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const Integer& v) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(kPrime));
}

Integer lift(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  if (v > kPrime / 2) {
    Integer p;
    std::uint64_t pp = kPrime;
    mpz_import(p.get_mpz_t(), 1, -1, sizeof(pp), 0, 0, &pp);
    r -= p;
  }
  return r;
}

// In-place Gauss-Jordan over Z/p on the first `cols` columns; returns the
// pivot column of each pivot row.
std::vector<std::size_t> rref_mod_p(std::vector<std::vector<std::uint64_t>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const std::uint64_t inv = powmod(m[row][c], kPrime - 2);
    for (auto& v : m[row]) v = mulmod(v, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const std::uint64_t f = m[r][c];
      for (std::size_t k = c; k < m[r].size(); ++k) {
        if (m[row][k] != 0) m[r][k] = submod(m[r][k], mulmod(f, m[row][k]));
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<std::size_t> rref_exact(std::vector<std::vector<mpq_class>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const mpq_class inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const mpq_class f = m[r][c];
      for (std::size_t k = c; k < m[r].size(); ++k) {
        if (m[row][k] != 0) m[r][k] -= f * m[row][k];
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<mpq_class>> to_rational(const IntegerMatrix& a, std::size_t cols,
                                                const IntegerVector* b) {
  std::vector<std::vector<mpq_class>> m;
  m.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<mpq_class> row(cols + (b ? 1 : 0));
    for (std::size_t j = 0; j < cols && j < a[i].size(); ++j) row[j] = a[i][j];
    if (b) row[cols] = (*b)[i];
    m.push_back(std::move(row));
  }
  return m;
}

SolveResult solve_exact(const IntegerMatrix& a, const IntegerVector& b, std::size_t cols) {
  auto m = to_rational(a, cols, &b);
  auto pivots = rref_exact(m, cols);
  SolveResult res;
  if (pivots.size() < cols) {
    res.status = SolveStatus::Underdetermined;
    return res;
  }
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    if (m[r][cols] != 0) {
      res.status = SolveStatus::Inconsistent;
      return res;
    }
  }
  res.x.resize(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    mpq_class v = m[r][cols];
    v.canonicalize();
    if (v.get_den() != 1) {
      res.status = SolveStatus::NonIntegral;
      res.x.clear();
      return res;
    }
    res.x[pivots[r]] = v.get_num();
  }
  res.status = SolveStatus::Unique;
  return res;
}

}  // namespace

std::size_t rank_exact(const IntegerMatrix& a) {
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  auto m = to_rational(a, cols, nullptr);
  return rref_exact(m, cols).size();
}

std::size_t rank_mod_p(const IntegerMatrix& a) {
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  std::vector<std::vector<std::uint64_t>> m(a.size(), std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = reduce(a[i][j]);
  }
  return rref_mod_p(m, cols).size();
}

std::vector<IntegerVector> kernel_basis(const IntegerMatrix& a, std::size_t cols) {
  auto m = to_rational(a, cols, nullptr);
  auto pivots = rref_exact(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<IntegerVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    Integer den = 1;
    for (auto& q : v) {
      q.canonicalize();
      den = lcm(den, Integer(q.get_den()));
    }
    IntegerVector iv(cols);
    Integer g = 0;
    for (std::size_t k = 0; k < cols; ++k) {
      mpq_class s = v[k] * den;
      s.canonicalize();
      iv[k] = s.get_num();
      g = gcd(g, iv[k]);
    }
    if (g > 1) {
      for (auto& x : iv) x /= g;
    }
    basis.push_back(std::move(iv));
  }
  return basis;
}

IntegerVector multiply(const IntegerMatrix& a, const IntegerVector& x) {
  IntegerVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < x.size() && j < a[i].size(); ++j) {
      if (a[i][j] != 0 && x[j] != 0) s += a[i][j] * x[j];
    }
    r[i] = s;
  }
  return r;
}

SolveResult solve_integer(const IntegerMatrix& a, const IntegerVector& b, std::size_t cols) {
  std::vector<std::vector<std::uint64_t>> m(a.size(), std::vector<std::uint64_t>(cols + 1, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols && j < a[i].size(); ++j) {
      if (a[i][j] != 0) m[i][j] = reduce(a[i][j]);
    }
    m[i][cols] = reduce(b[i]);
  }
  auto pivots = rref_mod_p(m, cols);
  if (pivots.size() == cols) {
    bool consistent = true;
    for (std::size_t r = cols; r < m.size(); ++r) consistent &= m[r][cols] == 0;
    // Full column rank mod p forces full rank over Q, so an inconsistency
    // seen mod p is an inconsistency over Q as well.
    if (!consistent) return {SolveStatus::Inconsistent, {}};
    IntegerVector x(cols);
    for (std::size_t r = 0; r < cols; ++r) x[pivots[r]] = lift(m[r][cols]);
    if (multiply(a, x) == b) return {SolveStatus::Unique, std::move(x)};
  }
  return solve_exact(a, b, cols);
}

}  // namespace weylkit
