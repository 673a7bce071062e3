#pragma once

#include <cstddef>
#include <vector>

#include "weylkit/charring.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

/// Isobaric divided difference along the simple root alpha_j:
///   delta_j(u) = (u - e^{-alpha_j} s_j(u)) / (1 - e^{-alpha_j}).
/// Only simple roots are exposed; general elements go through `partial`.
CharElt delta(const RootDatum& datum, std::size_t j, const CharElt& u);

/// delta'_j(u) = (u - s_j(u)) / (1 - e^{-alpha_j}).
CharElt delta_prime(const RootDatum& datum, std::size_t j, const CharElt& u);

struct PartialOptions {
  /// Recompute along every reduced word and throw WordMismatch on any
  /// disagreement.
  bool strict = false;
};

/// The composition delta_{b1} ... delta_{bl} along a reduced word of w
/// (rightmost operator applied first).
CharElt partial(const WeylGroup& group, const WeylElt& w, const CharElt& u,
                PartialOptions opts = {});
CharElt partial_prime(const WeylGroup& group, const WeylElt& w, const CharElt& u,
                      PartialOptions opts = {});

/// Composition along an explicit word, reduced or not.
CharElt partial_word(const RootDatum& datum, const Word& word, const CharElt& u);
CharElt partial_prime_word(const RootDatum& datum, const Word& word, const CharElt& u);

/// partial_w(u) for every element of the group, indexed by WeylElt::index.
/// Shares work along the BFS tree, so it costs one delta per element.
std::vector<CharElt> partial_all(const WeylGroup& group, const CharElt& u);

/// The top operator partial_{w0}: the projection of R(T) onto the
/// W-invariants (Demazure character formula).
CharElt top(const WeylGroup& group, const CharElt& u, PartialOptions opts = {});
inline CharElt sigma(const WeylGroup& group, const CharElt& u) { return top(group, u); }

/// A(u) / d, dividing by one factor (1 - e^{-alpha}) at a time. Used as the
/// independent route for `top`.
CharElt top_via_antisymmetrizer(const WeylGroup& group, const CharElt& u);

}  // namespace weylkit
