#include "weylkit/hecke.hpp"

#include <algorithm>

#include "weylkit/demazure.hpp"
#include "weylkit/errors.hpp"

namespace weylkit {

// ------------------------------------------------------------- OpExpr

std::string to_string(const OpExpr& op) {
  if (op.terms.empty()) return "0";
  std::string s;
  for (std::size_t t = 0; t < op.terms.size(); ++t) {
    const OpTerm& term = op.terms[t];
    const bool neg = term.coeff < 0;
    const Integer mag = abs(term.coeff);
    if (t == 0) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    if (term.factors.empty()) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_str() + "*";
    for (std::size_t k = 0; k < term.factors.size(); ++k) {
      if (k) s += '*';
      const OpFactor& f = term.factors[k];
      const std::string j = std::to_string(f.index + 1);
      switch (f.kind) {
        case OpFactor::Kind::Delta: s += "d[" + j + "]"; break;
        case OpFactor::Kind::DeltaPrime: s += "dp[" + j + "]"; break;
        case OpFactor::Kind::Reflect: s += "w[" + j + "]"; break;
        case OpFactor::Kind::Top: s += "top"; break;
        case OpFactor::Kind::Multiply: s += "m[" + to_string(f.multiplier) + "]"; break;
      }
    }
  }
  return s;
}

namespace {

CharElt apply_factor(const WeylGroup& group, const OpFactor& f, const CharElt& u) {
  const RootDatum& datum = group.datum();
  switch (f.kind) {
    case OpFactor::Kind::Delta: return delta(datum, f.index, u);
    case OpFactor::Kind::DeltaPrime: return delta_prime(datum, f.index, u);
    case OpFactor::Kind::Reflect:
      if (f.index >= datum.rank()) {
        throw IndexOutOfRange("reflection index " + std::to_string(f.index + 1) + " out of range");
      }
      return reflect_simple(datum, f.index, u);
    case OpFactor::Kind::Top: return top(group, u);
    case OpFactor::Kind::Multiply: return f.multiplier * u;
  }
  return u;
}

}  // namespace

CharElt evaluate(const WeylGroup& group, const OpExpr& op, const CharElt& u) {
  CharElt total;
  for (const OpTerm& term : op.terms) {
    CharElt v = u;
    for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
      v = apply_factor(group, *it, v);
    }
    total += term.coeff * v;
  }
  return total;
}

// ------------------------------------------------------------ HeckeOp

HeckeOp HeckeOp::basis_element(const WeylElt& w, std::size_t rank) {
  HeckeOp op;
  op.set(w, CharElt::constant(rank, 1));
  return op;
}

void HeckeOp::set(const WeylElt& w, CharElt u) {
  if (u.is_zero()) {
    coeffs.erase(w.index);
  } else {
    coeffs[w.index] = std::move(u);
  }
}

std::string to_string(const WeylGroup& group, const HeckeOp& op) {
  std::string s = "{";
  bool first = true;
  for (const auto& [idx, u] : op.coeffs) {
    if (!first) s += ", ";
    s += format_word(group[idx].word) + " -> " + to_string(u);
    first = false;
  }
  return s + "}";
}

CharElt apply(const WeylGroup& group, const HeckeOp& op, const CharElt& u) {
  CharElt total;
  if (op.coeffs.size() > 2) {
    const auto all = partial_all(group, u);
    for (const auto& [idx, c] : op.coeffs) total += c * all[idx];
    return total;
  }
  for (const auto& [idx, c] : op.coeffs) total += c * partial(group, group[idx], u);
  return total;
}

bool in_augmentation_ideal(const WeylGroup& group, const HeckeOp& op) {
  return apply(group, op, CharElt::constant(group.rank(), 1)).is_zero();
}

// ----------------------------------------------------------- to_basis

namespace {

// Exact quotient a / b in R(T) using the lexicographic term order, which is
// a group order on the weight lattice, so leading terms multiply. Returns
// nullopt when b does not divide a.
std::optional<CharElt> exact_quotient(const CharElt& a, const CharElt& b) {
  if (b.is_zero()) throw SolveFailed("division by zero in fraction-free elimination");
  if (a.is_zero()) return CharElt{};
  const auto& [lead_b, lead_c] = *b.terms().rbegin();
  // Coordinatewise extremes add under multiplication, which confines the
  // quotient to a finite box and makes the loop terminate.
  const std::size_t rank = a.rank();
  Weight lo(rank), hi(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    auto extent = [i](const CharElt& u) {
      std::int64_t mn = u.terms().begin()->first[i], mx = mn;
      for (const auto& [w, c] : u.terms()) {
        mn = std::min(mn, w[i]);
        mx = std::max(mx, w[i]);
      }
      return std::pair{mn, mx};
    };
    auto [amin, amax] = extent(a);
    auto [bmin, bmax] = extent(b);
    lo[i] = amin - bmin;
    hi[i] = amax - bmax;
  }
  CharElt q;
  CharElt r = a;
  Integer quot, rem;
  while (!r.is_zero()) {
    const auto& [lead_r, lead_rc] = *r.terms().rbegin();
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), lead_rc.get_mpz_t(), lead_c.get_mpz_t());
    if (rem != 0) return std::nullopt;
    const Weight shift = lead_r - lead_b;
    for (std::size_t i = 0; i < rank; ++i) {
      if (shift[i] < lo[i] || shift[i] > hi[i]) return std::nullopt;
    }
    q.add_term(shift, quot);
    r -= b.shifted(shift) * quot;
  }
  return q;
}

CharElt exact_or_fail(const CharElt& a, const CharElt& b) {
  auto q = exact_quotient(a, b);
  if (!q) throw SolveFailed("inexact division during fraction-free elimination");
  return std::move(*q);
}

}  // namespace

HeckeOp to_basis(const WeylGroup& group, const OpExpr& op, const SteinbergBasis& basis) {
  const std::size_t n = group.order();
  if (basis.elements.size() != n) throw SolveFailed("Steinberg basis has the wrong size");

  // Augmented system: row v is  sum_w u_w partial_w(e_v) = op(e_v).
  std::vector<std::vector<CharElt>> m(n, std::vector<CharElt>(n + 1));
  for (std::size_t v = 0; v < n; ++v) {
    auto values = partial_all(group, basis.elements[v]);
    for (std::size_t w = 0; w < n; ++w) m[v][w] = std::move(values[w]);
    m[v][n] = evaluate(group, op, basis.elements[v]);
  }

  // Bareiss elimination; the pivot with fewest terms is preferred.
  CharElt prev = CharElt::constant(group.rank(), 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      if (best == n || m[i][k].size() < m[best][k].size()) best = i;
    }
    if (best == n) throw SolveFailed("Steinberg evaluation matrix is singular");
    std::swap(m[k], m[best]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        m[i][j] = exact_or_fail(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = CharElt{};
    }
    prev = m[k][k];
  }

  // Fraction-free back substitution: y_i = det * u_i lies in R(T).
  const CharElt det = m[n - 1][n - 1];
  std::vector<CharElt> y(n);
  for (std::size_t ii = n; ii-- > 0;) {
    CharElt acc = det * m[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= m[ii][j] * y[j];
    y[ii] = exact_or_fail(acc, m[ii][ii]);
  }

  HeckeOp out;
  for (std::size_t w = 0; w < n; ++w) {
    auto u = exact_quotient(y[w], det);
    if (!u) {
      throw SolveFailed("coordinate of partial_" + format_word(group[w].word) +
                        " does not lie in R(T)");
    }
    out.set(group[w], std::move(*u));
  }
  return out;
}

HeckeOp to_basis(const WeylGroup& group, const OpExpr& op) {
  return to_basis(group, op, steinberg_basis(group, {.verify_radius = -1}));
}

// ---------------------------------------------------------- invariance

InvarianceResult is_ideal_invariant(const RootDatum& datum, const CharElt& u) {
  for (std::size_t j = 0; j < datum.rank(); ++j) {
    CharElt v = delta_prime(datum, j, u);
    if (!v.is_zero()) return {false, InvarianceWitness{j, std::move(v)}};
  }
  return {};
}

InvarianceResult is_weyl_invariant(const RootDatum& datum, const CharElt& u) {
  for (std::size_t j = 0; j < datum.rank(); ++j) {
    CharElt v = reflect_simple(datum, j, u);
    if (v != u) return {false, InvarianceWitness{j, std::move(v)}};
  }
  return {};
}

}  // namespace weylkit
