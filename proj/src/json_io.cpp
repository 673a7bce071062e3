#include "weylkit/json_io.hpp"

#include <string>
#include <vector>

#include "weylkit/errors.hpp"

namespace weylkit {

Json to_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(static_cast<std::int64_t>(n.get_si()));
  return Json(n.get_str());
}

Json to_json(const Weight& w) {
  Json a = Json::array();
  for (auto c : w.coords()) a.push_back(c);
  return a;
}

Json word_to_json(const Word& w) {
  Json a = Json::array();
  for (int j : w) a.push_back(j + 1);
  return a;
}

Json to_json(const CharElt& u) {
  Json terms = Json::array();
  for (const auto& [w, c] : u.terms()) {
    Json t;
    t["w"] = to_json(w);
    t["c"] = to_json(c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const IrredDecomp& d) {
  Json list = Json::array();
  for (const auto& [w, m] : d.entries) {
    Json t;
    t["w"] = to_json(w);
    t["mult"] = to_json(m);
    list.push_back(std::move(t));
  }
  Json j;
  j["irreducibles"] = std::move(list);
  return j;
}

Json to_json(const WeylGroup& group, const HeckeOp& op) {
  Json list = Json::array();
  for (const auto& [idx, u] : op.coeffs) {
    Json t;
    t["word"] = word_to_json(group[idx].word);
    t["u"] = to_json(u);
    list.push_back(std::move(t));
  }
  Json j;
  j["coeffs"] = std::move(list);
  return j;
}

Json to_json(const WeylGroup& group, const SteinbergBasis& basis) {
  Json list = Json::array();
  for (std::size_t i = 0; i < basis.weights.size(); ++i) {
    Json t;
    t["word"] = word_to_json(group[i].word);
    t["weight"] = to_json(basis.weights[i]);
    list.push_back(std::move(t));
  }
  Json j;
  j["formula"] = basis.formula_tag;
  j["verified_radius"] = basis.verified_radius;
  j["elements"] = std::move(list);
  return j;
}

Json to_json(const CoverDatum& cover, const std::map<std::size_t, CharElt>& parts) {
  Json list = Json::array();
  for (const auto& [k, u] : parts) {
    Json t;
    t["index"] = k;
    t["rep"] = to_json(cover.coset_reps().at(k));
    t["u"] = to_json(u);
    list.push_back(std::move(t));
  }
  Json j;
  j["cosets"] = std::move(list);
  return j;
}

CharElt char_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw ParseError("expected an object with a \"terms\" array");
  }
  CharElt u;
  std::size_t rank = 0;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("w") || !t.contains("c") || !t["w"].is_array()) {
      throw ParseError("expected a term {\"w\":[...],\"c\":n}");
    }
    std::vector<Weight::value_type> coords;
    for (const auto& x : t["w"]) {
      if (!x.is_number_integer()) throw ParseError("weight coordinates must be integers");
      coords.push_back(x.get<std::int64_t>());
    }
    if (coords.empty() || coords.size() > kMaxRank) throw ParseError("weight has unsupported rank");
    if (rank == 0) rank = coords.size();
    if (coords.size() != rank) throw ParseError("weights of different ranks in one element");
    Integer c;
    if (t["c"].is_number_integer()) {
      c = Integer(std::to_string(t["c"].get<std::int64_t>()));
    } else if (t["c"].is_string()) {
      if (c.set_str(t["c"].get<std::string>(), 10) != 0) throw ParseError("bad coefficient");
    } else {
      throw ParseError("coefficient must be an integer or a decimal string");
    }
    u.add_term(Weight(std::span<const Weight::value_type>(coords)), c);
  }
  return u;
}

}  // namespace weylkit
