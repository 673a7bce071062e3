#pragma once

#include <json.hpp>

#include <map>

#include "weylkit/charring.hpp"
#include "weylkit/covers.hpp"
#include "weylkit/hecke.hpp"
#include "weylkit/repring.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

/// Insertion-ordered JSON; every array below is emitted in ascending
/// lexicographic weight order so the output is canonical.
using Json = nlohmann::ordered_json;

/// Coefficients that fit in 64 bits are JSON integers, larger ones decimal
/// strings.
Json to_json(const Integer& n);
Json to_json(const Weight& w);
/// 1-based simple indices.
Json word_to_json(const Word& w);
/// {"terms":[{"w":[...],"c":n}, ...]}
Json to_json(const CharElt& u);
/// {"irreducibles":[{"w":[...],"mult":n}, ...]}
Json to_json(const IrredDecomp& d);
/// {"coeffs":[{"word":[...],"u":{...}}, ...]} in BFS order of the elements.
Json to_json(const WeylGroup& group, const HeckeOp& op);
/// {"formula":"...","verified_radius":r,"elements":[{"word":[...],"weight":[...]}, ...]}
Json to_json(const WeylGroup& group, const SteinbergBasis& basis);
/// {"cosets":[{"index":k,"rep":[...],"u":{...}}, ...]}
Json to_json(const CoverDatum& cover, const std::map<std::size_t, CharElt>& parts);

/// Reads the {"terms":[...]} form; throws ParseError on malformed input.
CharElt char_from_json(const Json& j);

}  // namespace weylkit
