#include "weylkit/covers.hpp"

#include <cstdlib>
#include <utility>

#include "weylkit/errors.hpp"

namespace weylkit {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw SingularMatrix("cover matrix must be square");
  }
  SmithForm s{identity(n), identity(n), identity(n), m};
  auto& a = s.d;

  // Row operations are mirrored on U (left) and U^{-1} (right); column
  // operations on V.
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(s.u[i], s.u[j]);
    for (auto& row : s.u_inv) std::swap(row[i], row[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, std::int64_t q) {  // row_dst += q row_src
    for (std::size_t k = 0; k < n; ++k) {
      a[dst][k] += q * a[src][k];
      s.u[dst][k] += q * s.u[src][k];
    }
    for (auto& row : s.u_inv) row[src] -= q * row[dst];
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t k = 0; k < n; ++k) {
      a[i][k] = -a[i][k];
      s.u[i][k] = -s.u[i][k];
    }
    for (auto& row : s.u_inv) row[i] = -row[i];
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : s.v) std::swap(row[i], row[j]);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t q) {  // col_dst += q col_src
    for (auto& row : a) row[dst] += q * row[src];
    for (auto& row : s.v) row[dst] += q * row[src];
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (a[i][j] != 0 && (pi == n || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == n) throw SingularMatrix("cover matrix is singular (det = 0)");
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        add_row(i, t, -floor_div(a[i][t], a[t][t]));
        clean &= a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        add_col(j, t, -floor_div(a[t][j], a[t][t]));
        clean &= a[t][j] == 0;
      }
      if (!clean) continue;

      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == n) break;
      add_row(t, bad, 1);
    }
    if (a[t][t] < 0) negate_row(t);
  }
  return s;
}

CoverDatum build_cover(const IntMatrix& m) {
  if (m.empty() || m.size() > kMaxRank) throw SingularMatrix("cover matrix has unsupported rank");
  CoverDatum c;
  c.matrix_ = m;
  c.smith_ = smith_normal_form(m);
  const std::size_t n = m.size();

  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= static_cast<std::size_t>(c.smith_.d[i][i]);

  // Mixed-radix enumeration of prod Z/d_i, last digit fastest, mapped back
  // through U^{-1}.
  std::vector<std::int64_t> digit(n, 0);
  for (std::size_t k = 0; k < count; ++k) {
    Weight x(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += c.smith_.u_inv[i][j] * digit[j];
      x[i] = s;
    }
    c.reps_.push_back(x);
    for (std::size_t i = n; i-- > 0;) {
      if (++digit[i] < c.smith_.d[i][i]) break;
      digit[i] = 0;
    }
  }
  return c;
}

std::size_t CoverDatum::coset_of(const Weight& x) const {
  const std::size_t n = rank();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t y = 0;
    for (std::size_t j = 0; j < n; ++j) y += smith_.u[i][j] * x[j];
    const std::int64_t d = smith_.d[i][i];
    idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(floor_mod(y, d));
  }
  return idx;
}

Weight CoverDatum::quotient(const Weight& x) const {
  const std::size_t n = rank();
  const Weight diff = x - reps_[coset_of(x)];
  std::vector<std::int64_t> z(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) z[i] += smith_.u[i][j] * diff[j];
    if (z[i] % smith_.d[i][i] != 0) throw InvariantViolation("coset reduction is not exact");
    z[i] /= smith_.d[i][i];
  }
  Weight lambda(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += smith_.v[i][j] * z[j];
    lambda[i] = s;
  }
  return lambda;
}

Weight CoverDatum::embed(const Weight& lambda) const {
  const std::size_t n = rank();
  if (lambda.rank() != n) throw RankMismatch("weight rank differs from cover rank");
  Weight r(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += matrix_[i][j] * lambda[j];
    r[i] = s;
  }
  return r;
}

CharElt pullback(const CoverDatum& cover, const CharElt& u) {
  CharElt::Terms terms;
  for (const auto& [lambda, c] : u.terms()) terms.emplace(cover.embed(lambda), c);
  return CharElt(std::move(terms));
}

std::map<std::size_t, CharElt> decompose_cover(const CoverDatum& cover, const CharElt& v) {
  std::map<std::size_t, CharElt> parts;
  for (std::size_t k = 0; k < cover.index(); ++k) parts.emplace(k, CharElt{});
  for (const auto& [x, c] : v.terms()) {
    if (x.rank() != cover.rank()) throw RankMismatch("character rank differs from cover rank");
    parts[cover.coset_of(x)].add_term(cover.quotient(x), c);
  }
  return parts;
}

CharElt reassemble_cover(const CoverDatum& cover, const std::map<std::size_t, CharElt>& parts) {
  CharElt v;
  for (const auto& [k, u] : parts) v += pullback(cover, u).shifted(cover.coset_reps().at(k));
  return v;
}

}  // namespace weylkit
