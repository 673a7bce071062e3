#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "weylkit/charring.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

/// An element of R(G) written in the basis of irreducible characters:
/// dominant highest weight -> multiplicity (virtual characters allowed).
struct IrredDecomp {
  std::map<Weight, Integer> entries;

  bool empty() const noexcept { return entries.empty(); }
  bool operator==(const IrredDecomp&) const = default;
};

/// "chi[1,0] + 2*chi[0,0]"; "0" when empty.
std::string to_string(const IrredDecomp& d);

enum class CharMethod { Demazure, Weyl };

/// chi_lambda = partial_{w0}(e^lambda) (Demazure) or A(e^lambda)/d (Weyl).
/// For non-dominant lambda the result is 0 or +-chi_mu.
CharElt irreducible_character(const WeylGroup& group, const Weight& lambda,
                              CharMethod method = CharMethod::Demazure);

/// Sum of e^mu over the W-orbit of lambda.
CharElt orbit_sum(const WeylGroup& group, const Weight& lambda);

/// Dominant representative of the W-orbit of lambda.
Weight dominant_conjugate(const RootDatum& datum, const Weight& lambda);

/// Weyl dimension formula: prod over positive roots of
/// <lambda + rho, alpha^vee> / <rho, alpha^vee>.
Integer weyl_dimension(const RootDatum& datum, const Weight& lambda);

/// True when s_j(u) = u for every simple j.
bool is_w_invariant(const RootDatum& datum, const CharElt& u);

/// Multiplicities of the irreducible characters in a W-invariant element,
/// read off from u * A_rho as the coefficients of e^{lambda + rho}. Throws
/// NotInvariant for non-invariant input.
IrredDecomp decompose_into_irreducibles(const WeylGroup& group, const CharElt& u);

/// sum of mult * chi_lambda
CharElt restrict(const WeylGroup& group, const IrredDecomp& dec);

/// decompose_into_irreducibles(top(u))
IrredDecomp induce(const WeylGroup& group, const CharElt& u);

/// Which descent set enters the Steinberg weight lambda_w.
enum class SteinbergConvention {
  /// lambda_w = w(-sum of varpi_j over j with w(alpha_j) < 0)
  RightDescent,
  /// lambda_w = w(-sum of varpi_j over j with w^{-1}(alpha_j) < 0); not free
  /// in rank >= 2, kept so the freeness check can be exercised.
  LeftDescent,
};

struct SteinbergOptions {
  SteinbergConvention convention = SteinbergConvention::RightDescent;
  /// Freeness is checked on every e^mu with mu in [-r, r]^rank; negative
  /// disables the check.
  int verify_radius = 1;
};

/// Monomial basis {e_w} of R(T) as an R(G)-module, indexed by WeylElt::index.
struct SteinbergBasis {
  std::vector<Weight> weights;
  std::vector<CharElt> elements;
  std::string formula_tag;
  int verified_radius = -1;
};

/// Throws FreenessCheckFailed if the weights repeat or some monomial with
/// coordinates in [-verify_radius, verify_radius] fails to decompose and
/// reassemble.
SteinbergBasis steinberg_basis(const WeylGroup& group, SteinbergOptions opts = {});

/// Coordinates c_w in R(G) with u = sum_w c_w e_w, indexed by WeylElt::index.
/// Weights are peeled orbit by orbit, ordered by the height of dom(-mu):
/// with lambda_w = w(-a_w), each product e_w * m_nu stays at or below the
/// orbit it is chosen for, so every orbit is a small square system. A system
/// without a unique integral solution raises FreenessCheckFailed.
std::vector<IrredDecomp> decompose_over_invariants(const WeylGroup& group, const CharElt& u,
                                                   const SteinbergBasis& basis);

/// sum_w restrict(c_w) * e_w
CharElt reassemble(const WeylGroup& group, const std::vector<IrredDecomp>& coords,
                   const SteinbergBasis& basis);

/// Multiplication by the Weyl denominator, restricted to characters
/// supported in [-radius, radius]^rank, has full column rank.
bool weyl_denominator_is_regular(const WeylGroup& group, int radius);

}  // namespace weylkit
