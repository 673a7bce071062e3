#include "weylkit/selftest.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "weylkit/covers.hpp"
#include "weylkit/demazure.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/repring.hpp"

namespace weylkit {

std::int64_t RandomSource::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Weight RandomSource::weight(std::size_t rank, std::int64_t radius) {
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = uniform(-radius, radius);
  return w;
}

CharElt RandomSource::element(std::size_t rank, std::size_t terms, std::int64_t radius,
                              std::int64_t coeff) {
  CharElt u;
  for (std::size_t k = 0; k < terms; ++k) {
    Weight w = weight(rank, radius);
    std::int64_t c = 0;
    while (c == 0) c = uniform(-coeff, coeff);
    u.add_term(w, c);
  }
  return u;
}

OpExpr RandomSource::operator_expr(std::size_t rank) {
  OpExpr op;
  const auto nterms = uniform(1, 3);
  for (std::int64_t t = 0; t < nterms; ++t) {
    OpTerm term;
    term.coeff = uniform(-3, 3);
    if (term.coeff == 0) term.coeff = 1;
    const auto nf = uniform(1, 3);
    for (std::int64_t f = 0; f < nf; ++f) {
      OpFactor factor;
      switch (uniform(0, 3)) {
        case 0: factor.kind = OpFactor::Kind::Delta; break;
        case 1: factor.kind = OpFactor::Kind::DeltaPrime; break;
        case 2: factor.kind = OpFactor::Kind::Reflect; break;
        default:
          factor.kind = OpFactor::Kind::Multiply;
          factor.multiplier = CharElt::monomial(weight(rank, 1));
          break;
      }
      factor.index = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(rank) - 1));
      term.factors.push_back(std::move(factor));
    }
    op.terms.push_back(std::move(term));
  }
  return op;
}

namespace {

class Suite {
 public:
  Suite(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) r_.failures.push_back(what);
  }

 private:
  SuiteResult& r_;
};

void rootdata_suite(const WeylGroup& g, Suite& s) {
  const auto& d = g.datum();
  s.check(two_rho_check(d), "2 rho equals the sum of positive roots");
  s.check(d.longest_length() == g.longest().length, "|R+| equals l(w0)");
  s.check(d.cartan_determinant() > 0, "Cartan determinant is positive");
  for (std::size_t j = 0; j < d.rank(); ++j) {
    // s_j permutes R+ \ {alpha_j}
    std::size_t neg = 0;
    for (const auto& a : d.positive_roots()) {
      const Weight img = reflect_simple(d, j, a.weight);
      bool found = false, found_neg = false;
      for (const auto& b : d.positive_roots()) {
        found |= b.weight == img;
        found_neg |= b.weight == -img;
      }
      s.check(found || found_neg, "s_j maps roots to roots");
      neg += found_neg ? 1 : 0;
    }
    s.check(neg == 1, "s_j makes exactly one positive root negative");
    s.check(d.simple_root(j).pair(d.simple_root(j).weight) == 2, "<alpha_j, alpha_j^vee> = 2");
  }
  for (const auto& a : d.positive_roots()) {
    s.check(a.pair(a.weight) == 2, "<alpha, alpha^vee> = 2");
    s.check(a.pair(d.weyl_vector()) > 0, "rho is regular dominant");
  }
}

void weyl_suite(const WeylGroup& g, Suite& s) {
  std::size_t longest_count = 0;
  for (const auto& w : g.elements()) {
    s.check(g.multiply(g.inverse(w), w) == g.identity(), "w^{-1} w = 1");
    s.check(g.inverse(w).length == w.length, "l(w^{-1}) = l(w)");
    s.check(g.act(w, g.datum().weyl_vector()) == w.key, "key is w(rho)");
    longest_count += w.length == g.longest().length ? 1 : 0;
    for (std::size_t j = 0; j < g.rank(); ++j) {
      const auto& ws = g.right_mul(w, j);
      s.check(ws.length + 1 == w.length || ws.length == w.length + 1, "l(ws_j) = l(w) +- 1");
    }
  }
  s.check(longest_count == 1, "unique longest element");
  for (const auto& word : g.all_reduced_words(g.longest())) {
    s.check(g.from_word(word) == g.longest(), "every reduced word of w0 evaluates to w0");
  }
}

void charring_suite(const WeylGroup& g, RandomSource& rnd, std::size_t n, Suite& s) {
  const auto& d = g.datum();
  const std::size_t r = g.rank();
  for (std::size_t k = 0; k < n; ++k) {
    const CharElt a = rnd.element(r, 6), b = rnd.element(r, 6), c = rnd.element(r, 4);
    s.check(a * b == b * a, "commutativity");
    s.check((a * b) * c == a * (b * c), "associativity");
    s.check(a * (b + c) == a * b + a * c, "distributivity");
    s.check((a * b).augmentation() == a.augmentation() * b.augmentation(),
            "augmentation is multiplicative");
    const auto& w = g[static_cast<std::size_t>(rnd.uniform(0, static_cast<std::int64_t>(g.order()) - 1))];
    s.check(weyl_act(g, w, a * b) == weyl_act(g, w, a) * weyl_act(g, w, b), "W acts by ring maps");
    for (const auto& alpha : d.positive_roots()) {
      s.check(divide_exact(a * one_minus_exp_neg(alpha), alpha) == a, "exact division round trip");
    }
  }
}

void demazure_suite(const WeylGroup& g, RandomSource& rnd, std::size_t n, Suite& s) {
  const auto& d = g.datum();
  const std::size_t r = g.rank();
  const CharElt one = CharElt::constant(r, 1);
  std::vector<WeylElt> short_elts;
  for (const auto& w : g.elements()) {
    if (w.length <= 6) short_elts.push_back(w);
  }
  for (std::size_t j = 0; j < r; ++j) {
    s.check(delta(d, j, one) == one, "delta_j(1) = 1");
    s.check(delta_prime(d, j, one).is_zero(), "delta'_j(1) = 0");
  }
  const std::int64_t radius = r <= 2 ? 5 : 2;  // top grows fast with the rank
  for (std::size_t k = 0; k < n; ++k) {
    const CharElt u = rnd.element(r, 8, radius);
    for (std::size_t j = 0; j < r; ++j) {
      const CharElt dj = delta(d, j, u);
      const CharElt dpj = delta_prime(d, j, u);
      s.check(delta(d, j, dj) == dj, "delta_j^2 = delta_j");
      s.check(delta_prime(d, j, dpj) == dpj, "delta'_j^2 = delta'_j");
      s.check(dj == dpj + reflect_simple(d, j, u), "delta_j = delta'_j + s_j");
    }
    // Short elements only: the strict route walks every reduced word.
    const auto& w = short_elts[static_cast<std::size_t>(
        rnd.uniform(0, static_cast<std::int64_t>(short_elts.size()) - 1))];
    try {
      partial(g, w, u, {true});
      partial_prime(g, w, u, {true});
      s.check(true, "reduced-word independence");
    } catch (const WordMismatch&) {
      s.check(false, "reduced-word independence");
    }
    const CharElt t = top(g, u);
    s.check(top(g, t) == t, "top is idempotent");
    s.check(is_w_invariant(d, t), "top lands in the invariants");
    s.check(t == top_via_antisymmetrizer(g, u), "top agrees with A(u)/d");
  }
}

void hecke_suite(const WeylGroup& g, RandomSource& rnd, std::size_t n, Suite& s) {
  const std::size_t r = g.rank();
  for (std::size_t j = 0; j < r; ++j) {
    OpExpr op{{OpTerm{1, {OpFactor{OpFactor::Kind::DeltaPrime, j, {}}}}}};
    if (g.order() <= 24) {
      s.check(in_augmentation_ideal(g, to_basis(g, op)), "delta'_j lies in the augmentation ideal");
    } else {
      s.check(evaluate(g, op, CharElt::constant(r, 1)).is_zero(), "delta'_j kills 1");
    }
  }
  for (const auto& w : g.elements()) {
    const CharElt u = rnd.element(r, 5);
    s.check(apply(g, HeckeOp::basis_element(w, r), u) == partial_word(g.datum(), w.word, u),
            "basis element acts as partial_w");
  }
  if (g.order() > 6) return;  // the full basis change is exercised on small groups only
  const SteinbergBasis basis = steinberg_basis(g, {SteinbergConvention::RightDescent, -1});
  for (std::size_t k = 0; k < n; ++k) {
    const OpExpr op = rnd.operator_expr(r);
    const HeckeOp h = to_basis(g, op, basis);
    for (int t = 0; t < 3; ++t) {
      const CharElt v = rnd.element(r, 4, 3);
      s.check(apply(g, h, v) == evaluate(g, op, v), "to_basis reproduces the operator");
    }
  }
}

void repring_suite(const WeylGroup& g, RandomSource& rnd, std::size_t n, Suite& s) {
  const auto& d = g.datum();
  const std::size_t r = g.rank();
  for (std::size_t k = 0; k < n; ++k) {
    Weight lambda(r);
    for (std::size_t i = 0; i < r; ++i) lambda[i] = rnd.uniform(0, 2);
    const CharElt chi = irreducible_character(g, lambda, CharMethod::Demazure);
    s.check(chi == irreducible_character(g, lambda, CharMethod::Weyl), "Demazure = Weyl character");
    s.check(chi.augmentation() == weyl_dimension(d, lambda), "dimension formula");
    IrredDecomp single;
    single.entries[lambda] = 1;
    s.check(decompose_into_irreducibles(g, chi) == single, "chi_lambda decomposes to itself");

    const CharElt u = rnd.element(r, 3, 2);
    const CharElt prod = chi * top(g, u);
    s.check(restrict(g, decompose_into_irreducibles(g, prod)) == prod, "decomposition round trip");
  }
  const SteinbergBasis basis = steinberg_basis(g, {SteinbergConvention::RightDescent, -1});
  const std::int64_t radius = r <= 2 ? 2 : 1;
  for (std::size_t k = 0; k < n; ++k) {
    const CharElt u = rnd.element(r, 3, radius);
    s.check(reassemble(g, decompose_over_invariants(g, u, basis), basis) == u,
            "Steinberg decomposition round trip");
  }
}

void covers_suite(const WeylGroup& g, RandomSource& rnd, std::size_t n, Suite& s) {
  const std::size_t r = g.rank();
  std::vector<IntMatrix> matrices{g.datum().cartan()};
  IntMatrix twice(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) twice[i][i] = 2;
  matrices.push_back(twice);
  for (const auto& m : matrices) {
    const CoverDatum cover = build_cover(m);
    s.check(cover.coset_reps().front().is_zero(), "first coset representative is 0");
    for (std::size_t k = 0; k < n; ++k) {
      const CharElt v = rnd.element(r, 6);
      s.check(reassemble_cover(cover, decompose_cover(cover, v)) == v, "cover round trip");
      const CharElt u = rnd.element(r, 6);
      const auto parts = decompose_cover(cover, pullback(cover, u));
      s.check(parts.at(0) == u, "pullback lands in the trivial coset");
    }
  }
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts) {
  using Clock = std::chrono::steady_clock;
  std::vector<SuiteResult> out;
  for (const auto& type : opts.types) {
    RandomSource rnd(opts.seed);
    std::optional<WeylGroup> group;
    auto run = [&](const char* name, const std::function<void(Suite&)>& body) {
      SuiteResult res;
      res.type = type;
      res.suite = name;
      Suite s(res);
      const auto t0 = Clock::now();
      try {
        body(s);
      } catch (const Error& e) {
        res.failures.push_back(std::string(e.name()) + ": " + e.what());
      }
      res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      out.push_back(std::move(res));
    };
    run("rootdata", [&](Suite& s) {
      group.emplace(build_root_datum(type));
      rootdata_suite(*group, s);
    });
    if (!group) continue;
    const std::size_t n = opts.samples;
    run("weyl", [&](Suite& s) { weyl_suite(*group, s); });
    run("charring", [&](Suite& s) { charring_suite(*group, rnd, n, s); });
    run("demazure", [&](Suite& s) { demazure_suite(*group, rnd, n, s); });
    run("hecke", [&](Suite& s) { hecke_suite(*group, rnd, n, s); });
    run("repring", [&](Suite& s) { repring_suite(*group, rnd, n, s); });
    run("covers", [&](Suite& s) { covers_suite(*group, rnd, n, s); });
  }
  return out;
}

std::string format_report(const std::vector<SuiteResult>& results, std::uint64_t seed) {
  std::ostringstream os;
  os << "selftest seed " << seed << "\n";
  std::size_t failed = 0;
  for (const auto& r : results) {
    os << r.type << " " << r.suite << ": " << (r.failures.empty() ? "PASS" : "FAIL") << " ("
       << r.checks << " checks";
    if (!r.failures.empty()) os << ", " << r.failures.size() << " failed";
    os << ")\n";
    for (const auto& f : r.failures) os << "  " << f << "\n";
    failed += r.failures.empty() ? 0 : 1;
  }
  os << results.size() << " suites, " << failed << " failed\n";
  return os.str();
}

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const auto& r : results) {
    if (!r.failures.empty()) return false;
  }
  return true;
}

}  // namespace weylkit
