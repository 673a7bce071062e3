#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>

#include "weylkit/rootdata.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

using Integer = mpz_class;

/// An element of the character ring R(T): a finite integer combination of
/// monomials e^lambda. Zero coefficients are never stored, so equality is
/// plain map equality. The zero element carries no rank.
class CharElt {
 public:
  using Terms = std::map<Weight, Integer>;

  CharElt() = default;
  explicit CharElt(Terms terms);

  static CharElt monomial(const Weight& lambda, const Integer& c = 1);
  /// c * e^0 in the given rank.
  static CharElt constant(std::size_t rank, const Integer& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Rank of the weights in the support, 0 for the zero element.
  std::size_t rank() const noexcept;
  const Terms& terms() const noexcept { return terms_; }
  Integer coefficient(const Weight& lambda) const;

  void add_term(const Weight& lambda, const Integer& c);

  /// Sum of coefficients: the value at the identity of T, i.e. the dimension.
  Integer augmentation() const;
  /// e^lambda * u
  CharElt shifted(const Weight& lambda) const;

  CharElt& operator+=(const CharElt& o);
  CharElt& operator-=(const CharElt& o);
  CharElt& operator*=(const Integer& k);
  CharElt operator-() const;
  friend CharElt operator+(CharElt a, const CharElt& b) { return a += b; }
  friend CharElt operator-(CharElt a, const CharElt& b) { return a -= b; }
  friend CharElt operator*(const CharElt& a, const CharElt& b);
  friend CharElt operator*(CharElt a, const Integer& k) { return a *= k; }
  friend CharElt operator*(const Integer& k, CharElt a) { return a *= k; }
  bool operator==(const CharElt& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

inline CharElt monomial(const Weight& lambda) { return CharElt::monomial(lambda); }
inline CharElt add(const CharElt& u, const CharElt& v) { return u + v; }
inline CharElt mul(const CharElt& u, const CharElt& v) { return u * v; }
inline CharElt scale(const Integer& n, const CharElt& u) { return n * u; }

/// u^k for k >= 0; negative k is accepted only for +-monomials.
CharElt power(const CharElt& u, long k, std::size_t rank);

/// w(u), acting term by term: w(e^lambda) = e^{w lambda}.
CharElt weyl_act(const WeylGroup& group, const WeylElt& w, const CharElt& u);
/// s_j(u) for a simple reflection.
CharElt reflect_simple(const RootDatum& datum, std::size_t j, const CharElt& u);
/// s_alpha(u) for an arbitrary root.
CharElt reflect(const Root& alpha, const CharElt& u);

/// Exact quotient u / (1 - e^{-alpha}). Terms are processed per line
/// mu + Z alpha, from the highest value of <mu, alpha^vee> downwards; the
/// remainder must vanish by the lowest support point of each line, otherwise
/// NotDivisible is thrown.
CharElt divide_exact(const CharElt& u, const Root& alpha);

/// 1 - e^{-alpha}
CharElt one_minus_exp_neg(const Root& alpha);

/// d = prod over positive roots of (1 - e^{-alpha}).
CharElt weyl_denominator(const RootDatum& datum);

/// A(u) = sum over w of (-1)^{l(w)} e^{-rho} w(e^{rho} u).
CharElt antisymmetrize(const WeylGroup& group, const CharElt& u);

/// Canonical text form, e.g. "2*e[1,0] - e[-1,2]"; terms in descending
/// lexicographic order of weights, "0" for the zero element.
std::string to_string(const CharElt& u);

std::string to_string(const Integer& n);

}  // namespace weylkit
