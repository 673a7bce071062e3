#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "weylkit/charring.hpp"
#include "weylkit/rootdata.hpp"

namespace weylkit {

/// Smith normal form U * M * V = D with U, V unimodular and D diagonal,
/// d_1 | d_2 | ... , all d_i > 0.
struct SmithForm {
  IntMatrix u, u_inv, v, d;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// A finite covering of tori T~ -> T seen on weight lattices: the columns of
/// `matrix` span X(T) inside X(T~) = Z^rank. SU(2) -> SO(3) is matrix (2).
class CoverDatum {
 public:
  std::size_t rank() const noexcept { return matrix_.size(); }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  const SmithForm& smith() const noexcept { return smith_; }
  /// One representative per coset of Z^rank / M Z^rank; coset_reps()[0] is 0.
  const std::vector<Weight>& coset_reps() const noexcept { return reps_; }
  std::size_t index() const noexcept { return reps_.size(); }

  /// Index into coset_reps() of the coset containing x.
  std::size_t coset_of(const Weight& x) const;
  /// The lambda with M lambda = x - tau(coset_of(x)).
  Weight quotient(const Weight& x) const;
  /// M lambda
  Weight embed(const Weight& lambda) const;

  friend CoverDatum build_cover(const IntMatrix& m);

 private:
  IntMatrix matrix_;
  SmithForm smith_;
  std::vector<Weight> reps_;
};

/// Throws SingularMatrix when det M = 0.
CoverDatum build_cover(const IntMatrix& m);

/// e^lambda -> e^{M lambda}
CharElt pullback(const CoverDatum& cover, const CharElt& u);

/// Coset index -> u_c with v = sum_c e^{tau(c)} pullback(u_c). Every coset is
/// present in the result, with zero components included.
std::map<std::size_t, CharElt> decompose_cover(const CoverDatum& cover, const CharElt& v);

/// Inverse of decompose_cover.
CharElt reassemble_cover(const CoverDatum& cover, const std::map<std::size_t, CharElt>& parts);

}  // namespace weylkit
