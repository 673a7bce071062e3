#include "weylkit/repring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>

#include "weylkit/demazure.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/linalg.hpp"

namespace weylkit {

std::string to_string(const IrredDecomp& d) {
  if (d.entries.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = d.entries.rbegin(); it != d.entries.rend(); ++it) {
    const auto& [w, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += mag.get_str() + "*";
    s += "chi" + to_string(w);
    first = false;
  }
  return s;
}

CharElt irreducible_character(const WeylGroup& group, const Weight& lambda, CharMethod method) {
  const CharElt e = CharElt::monomial(lambda);
  return method == CharMethod::Weyl ? top_via_antisymmetrizer(group, e) : top(group, e);
}

CharElt orbit_sum(const WeylGroup& group, const Weight& lambda) {
  std::set<Weight> orbit;
  for (const auto& w : group.elements()) orbit.insert(group.act(w, lambda));
  CharElt r;
  for (const auto& mu : orbit) r.add_term(mu, 1);
  return r;
}

Weight dominant_conjugate(const RootDatum& datum, const Weight& lambda) {
  Weight mu = lambda;
  for (;;) {
    std::size_t j = 0;
    while (j < datum.rank() && mu[j] >= 0) ++j;
    if (j == datum.rank()) return mu;
    mu = reflect_simple(datum, j, mu);
  }
}

Integer weyl_dimension(const RootDatum& datum, const Weight& lambda) {
  mpq_class prod = 1;
  const Weight shifted = lambda + datum.weyl_vector();
  for (const auto& alpha : datum.positive_roots()) {
    prod *= mpq_class(alpha.pair(shifted), alpha.pair(datum.weyl_vector()));
  }
  prod.canonicalize();
  if (prod.get_den() != 1) throw InvariantViolation("Weyl dimension is not an integer");
  return prod.get_num();
}

bool is_w_invariant(const RootDatum& datum, const CharElt& u) {
  for (std::size_t j = 0; j < datum.rank(); ++j) {
    if (reflect_simple(datum, j, u) != u) return false;
  }
  return true;
}

IrredDecomp decompose_into_irreducibles(const WeylGroup& group, const CharElt& u) {
  const RootDatum& datum = group.datum();
  if (!is_w_invariant(datum, u)) {
    throw NotInvariant("character is not W-invariant: " + to_string(u));
  }
  // u * A_rho = sum_lambda m_lambda A_{lambda + rho}, and e^{lambda + rho} is the
  // only strictly dominant term of A_{lambda + rho}.
  const Weight rho = datum.weyl_vector();
  std::vector<std::pair<Weight, int>> alternant;
  for (const auto& w : group.elements()) alternant.emplace_back(group.act(w, rho), sign(w));
  IrredDecomp out;
  for (const auto& [mu, c] : u.terms()) {
    for (const auto& [wr, sg] : alternant) {
      Weight lambda = mu + wr;
      bool regular = true;
      for (std::size_t i = 0; i < lambda.rank() && regular; ++i) regular = lambda[i] > 0;
      if (!regular) continue;
      lambda -= rho;
      Integer& m = out.entries[lambda];
      if (sg > 0) m += c; else m -= c;
    }
  }
  std::erase_if(out.entries, [](const auto& e) { return e.second == 0; });
  return out;
}

// chi_lambda = top(e^lambda) and top is linear, so one pass suffices.
CharElt restrict(const WeylGroup& group, const IrredDecomp& dec) {
  CharElt hw;
  for (const auto& [lambda, c] : dec.entries) hw.add_term(lambda, c);
  return top(group, hw);
}

IrredDecomp induce(const WeylGroup& group, const CharElt& u) {
  return decompose_into_irreducibles(group, top(group, u));
}

// ------------------------------------------------------------ Steinberg

namespace {

Weight steinberg_weight(const WeylGroup& group, const WeylElt& w, SteinbergConvention conv) {
  const std::size_t n = group.rank();
  Weight sum(n);
  for (std::size_t j = 0; j < n; ++j) {
    const WeylElt& nb =
        conv == SteinbergConvention::RightDescent ? group.right_mul(w, j) : group.left_mul(j, w);
    if (nb.length < w.length) sum[j] -= 1;
  }
  return group.act(w, sum);
}

// Position of a weight in the peel: larger (height, lex) first.
struct LevelKey {
  std::int64_t height;
  Weight eta;
  auto operator<=>(const LevelKey&) const = default;
};

}  // namespace

std::vector<IrredDecomp> decompose_over_invariants(const WeylGroup& group, const CharElt& u,
                                                   const SteinbergBasis& basis) {
  const RootDatum& datum = group.datum();
  const std::size_t nw = group.order();
  if (basis.weights.size() != nw) throw FreenessCheckFailed("basis size differs from |W|");

  // lambda_w = w(-a_w) with a_w dominant.
  std::vector<Weight> shift(nw);
  for (std::size_t w = 0; w < nw; ++w) shift[w] = dominant_conjugate(datum, -basis.weights[w]);

  auto key_of = [&](const Weight& mu) {
    Weight eta = dominant_conjugate(datum, -mu);
    return LevelKey{datum.scaled_height(eta), eta};
  };

  // Every term of e_w * m_nu with nu = dom(-(eta - a_w)) has key <= eta in
  // dominance order, and the orbit W(-eta) is hit. So the peel solves one
  // square system per orbit, from the top level down.
  std::map<Weight, CharElt> orbit_cache;
  auto orbit_of = [&](const Weight& nu) -> const CharElt& {
    auto it = orbit_cache.find(nu);
    if (it == orbit_cache.end()) it = orbit_cache.emplace(nu, orbit_sum(group, nu)).first;
    return it->second;
  };

  std::vector<std::size_t> by_length(nw);
  std::iota(by_length.begin(), by_length.end(), std::size_t{0});
  std::ranges::stable_sort(by_length, {}, [&](std::size_t w) { return group[w].length; });

  std::vector<CharElt> coords(nw);
  CharElt rest = u;
  std::set<LevelKey> pending;
  for (const auto& [mu, c] : rest.terms()) pending.insert(key_of(mu));
  std::size_t guard = 0;
  while (!pending.empty()) {
    if (++guard > 1'000'000) throw NonTermination("Steinberg peel does not terminate");
    const LevelKey top_key = *pending.rbegin();
    pending.erase(std::prev(pending.end()));
    const Weight& eta = top_key.eta;

    std::unordered_map<Weight, std::size_t, WeightHash> row_of;
    for (const auto& mu : orbit_of(-eta).terms()) row_of.try_emplace(mu.first, row_of.size());
    IntegerVector b(row_of.size());
    bool empty = true;
    for (const auto& [mu, r] : row_of) {
      b[r] = rest.coefficient(mu);
      if (b[r] != 0) empty = false;
    }
    if (empty) continue;

    // Column w meets its own row w(-eta) with coefficient 1 and otherwise only
    // rows v(-eta) with v longer, so one pass by length usually solves the
    // level; the general integer solve is the fallback.
    std::vector<std::size_t> cols;
    std::vector<Weight> col_nu;
    for (std::size_t w : by_length) {
      const Weight nu = eta - shift[w];
      if (!nu.is_dominant()) continue;
      cols.push_back(w);
      col_nu.push_back(dominant_conjugate(datum, -nu));
    }
    auto column = [&](std::size_t k) {
      return orbit_of(col_nu[k]).shifted(basis.weights[cols[k]]);
    };

    IntegerVector x(cols.size());
    IntegerVector level = b;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      auto own = row_of.find(group.act(group[cols[k]], -eta));
      if (own == row_of.end() || level[own->second] == 0) continue;
      x[k] = level[own->second];
      const CharElt col = column(k);
      for (const auto& [mu, c] : col.terms()) {
        auto it = row_of.find(mu);
        if (it != row_of.end()) level[it->second] -= x[k] * c;
      }
    }
    if (!std::ranges::all_of(level, [](const Integer& v) { return v == 0; })) {
      IntegerMatrix a(row_of.size(), IntegerVector(cols.size()));
      for (std::size_t k = 0; k < cols.size(); ++k) {
        const CharElt col = column(k);
        for (const auto& [mu, c] : col.terms()) {
          auto it = row_of.find(mu);
          if (it != row_of.end()) a[it->second][k] = c;
        }
      }
      const SolveResult res = solve_integer(a, b, cols.size());
      if (res.status != SolveStatus::Unique) {
        const char* why = res.status == SolveStatus::Inconsistent     ? "has no solution"
                          : res.status == SolveStatus::Underdetermined ? "is not unique"
                                                                       : "is not integral";
        throw FreenessCheckFailed("Steinberg decomposition on the orbit of " + to_string(-eta) +
                                  " " + why + " under " + basis.formula_tag);
      }
      x = res.x;
    }
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (x[k] == 0) continue;
      const CharElt col = column(k);
      for (const auto& [mu, c] : col.terms()) {
        rest.add_term(mu, -x[k] * c);
        if (!row_of.contains(mu)) pending.insert(key_of(mu));
      }
      for (const auto& [mu, c] : orbit_of(col_nu[k]).terms()) coords[cols[k]].add_term(mu, x[k] * c);
    }
    for (const auto& [mu, r] : row_of) {
      if (rest.coefficient(mu) != 0) throw InvariantViolation("Steinberg peel left a leading term");
    }
  }
  if (!rest.is_zero()) throw InvariantViolation("Steinberg peel left a remainder");

  std::vector<IrredDecomp> out(nw);
  for (std::size_t w = 0; w < nw; ++w) {
    if (!coords[w].is_zero()) out[w] = decompose_into_irreducibles(group, coords[w]);
  }
  return out;
}

CharElt reassemble(const WeylGroup& group, const std::vector<IrredDecomp>& coords,
                   const SteinbergBasis& basis) {
  CharElt r;
  for (std::size_t w = 0; w < coords.size(); ++w) {
    if (!coords[w].empty()) r += restrict(group, coords[w]).shifted(basis.weights[w]);
  }
  return r;
}

SteinbergBasis steinberg_basis(const WeylGroup& group, SteinbergOptions opts) {
  SteinbergBasis basis;
  basis.formula_tag = opts.convention == SteinbergConvention::RightDescent
                          ? "lambda_w = w(-sum{varpi_j : w(alpha_j) < 0})"
                          : "lambda_w = w(-sum{varpi_j : w^-1(alpha_j) < 0})";
  for (const auto& w : group.elements()) {
    basis.weights.push_back(steinberg_weight(group, w, opts.convention));
    basis.elements.push_back(CharElt::monomial(basis.weights.back()));
  }
  if (opts.verify_radius < 0) return basis;

  std::set<Weight> distinct(basis.weights.begin(), basis.weights.end());
  if (distinct.size() != basis.weights.size()) {
    throw FreenessCheckFailed("Steinberg weights are not distinct under " + basis.formula_tag);
  }
  const std::size_t n = group.rank();
  const auto r = static_cast<std::int64_t>(opts.verify_radius);
  Weight mu(n);
  for (std::size_t i = 0; i < n; ++i) mu[i] = -r;
  for (;;) {
    const CharElt e = CharElt::monomial(mu);
    auto coords = decompose_over_invariants(group, e, basis);
    if (reassemble(group, coords, basis) != e) {
      throw FreenessCheckFailed("Steinberg decomposition of e" + to_string(mu) +
                                " does not reassemble");
    }
    std::size_t i = 0;
    while (i < n && mu[i] == r) mu[i++] = -r;
    if (i == n) break;
    ++mu[i];
  }
  basis.verified_radius = opts.verify_radius;
  return basis;
}

bool weyl_denominator_is_regular(const WeylGroup& group, int radius) {
  const std::size_t n = group.rank();
  const CharElt d = weyl_denominator(group.datum());
  std::vector<CharElt> cols;
  Weight mu(n);
  for (std::size_t i = 0; i < n; ++i) mu[i] = -radius;
  for (;;) {
    cols.push_back(d.shifted(mu));
    std::size_t i = 0;
    while (i < n && mu[i] == radius) mu[i++] = -radius;
    if (i == n) break;
    ++mu[i];
  }
  std::unordered_map<Weight, std::size_t, WeightHash> row_of;
  for (const auto& c : cols) {
    for (const auto& [w, x] : c.terms()) row_of.try_emplace(w, row_of.size());
  }
  IntegerMatrix a(row_of.size(), IntegerVector(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [w, x] : cols[c].terms()) a[row_of.at(w)][c] = x;
  }
  if (rank_mod_p(a) == cols.size()) return true;
  return rank_exact(a) == cols.size();
}

}  // namespace weylkit
