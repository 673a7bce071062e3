#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/charring.hpp"
#include "weylkit/repring.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

/// One factor of an operator word.
struct OpFactor {
  enum class Kind { Delta, DeltaPrime, Reflect, Top, Multiply };
  Kind kind = Kind::Delta;
  std::size_t index = 0;  // simple root, 0-based; unused for Top/Multiply
  CharElt multiplier;     // Multiply only

  bool operator==(const OpFactor&) const = default;
};

/// coeff * f_1 * f_2 * ... * f_k, composed left to right as written, so
/// f_k acts first.
struct OpTerm {
  Integer coeff = 1;
  std::vector<OpFactor> factors;

  bool operator==(const OpTerm&) const = default;
};

/// A Z-linear combination of operator words built from d[j], dp[j], w[j],
/// top and multiplication operators m[u].
struct OpExpr {
  std::vector<OpTerm> terms;

  bool operator==(const OpExpr&) const = default;
};

/// Text form accepted by parse_operator.
std::string to_string(const OpExpr& op);

/// Evaluates the operator expression directly on u.
CharElt evaluate(const WeylGroup& group, const OpExpr& op, const CharElt& u);

/// An element sum_w u_w partial_w of the Hecke algebra, stored by its
/// coordinates in the (partial_w) basis. Keys are WeylElt::index; zero
/// coefficients are never stored.
struct HeckeOp {
  std::map<std::size_t, CharElt> coeffs;

  static HeckeOp basis_element(const WeylElt& w, std::size_t rank);
  void set(const WeylElt& w, CharElt u);
  bool operator==(const HeckeOp&) const = default;
};

/// "{[] -> e[2], [1] -> e[0] - e[2]}" with 1-based reduced words.
std::string to_string(const WeylGroup& group, const HeckeOp& op);

/// sum_w u_w * partial_w(u)
CharElt apply(const WeylGroup& group, const HeckeOp& op, const CharElt& u);

/// Coordinates of `op` in the (partial_w) basis, found by matching its
/// values on the Steinberg basis: the |W| x |W| system
/// sum_w u_w partial_w(e_v) = op(e_v) is solved by fraction-free elimination
/// over R(T) and every coordinate must divide out exactly (SolveFailed
/// otherwise).
HeckeOp to_basis(const WeylGroup& group, const OpExpr& op, const SteinbergBasis& basis);
/// Same, with an unverified Steinberg basis built on the fly.
HeckeOp to_basis(const WeylGroup& group, const OpExpr& op);

/// op(1) == 0, i.e. op lies in the augmentation ideal.
bool in_augmentation_ideal(const WeylGroup& group, const HeckeOp& op);

struct InvarianceWitness {
  std::size_t simple_index = 0;  // 0-based
  CharElt value;                 // delta'_j(u), or s_j(u) for the W test
};

struct InvarianceResult {
  bool invariant = true;
  std::optional<InvarianceWitness> witness;
};

/// Annihilated by the augmentation ideal. It suffices to test delta'_j for
/// simple j: any partial'_w with w != 1 ends (on the right) in some delta'_j,
/// and each delta'_j is itself a partial'_{s_j}.
InvarianceResult is_ideal_invariant(const RootDatum& datum, const CharElt& u);

/// s_j(u) = u for every simple j.
InvarianceResult is_weyl_invariant(const RootDatum& datum, const CharElt& u);

}  // namespace weylkit
