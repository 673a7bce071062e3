// weylkit command-line front end.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/charring.hpp"
#include "weylkit/config.hpp"
#include "weylkit/covers.hpp"
#include "weylkit/demazure.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/hecke.hpp"
#include "weylkit/json_io.hpp"
#include "weylkit/parse.hpp"
#include "weylkit/repring.hpp"
#include "weylkit/selftest.hpp"

using namespace weylkit;

namespace {

struct Globals {
  bool json = false;
  bool strict = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t threads = 1;
};

IntMatrix parse_matrix(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("matrix is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("matrix must be a JSON array of arrays");
  IntMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix must be a JSON array of arrays");
    std::vector<std::int64_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ParseError("matrix entries must be integers");
      r.push_back(x.get<std::int64_t>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

WeylGroup load_group(const std::string& type) {
  if (!type.empty() && type.front() == '[') return WeylGroup(build_root_datum(parse_matrix(type)));
  return WeylGroup(build_root_datum(type));
}

Json matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int cmd_info(const Globals& g, const std::string& type) {
  const WeylGroup group = load_group(type);
  const auto& d = group.datum();
  if (g.json) {
    Json j;
    j["type"] = d.name();
    j["rank"] = d.rank();
    j["order"] = group.order();
    j["cartan"] = matrix_json(d.cartan());
    Json roots = Json::array();
    for (const auto& a : d.positive_roots()) roots.push_back(to_json(a.weight));
    j["positive_roots"] = roots;
    j["rho"] = to_json(d.weyl_vector());
    j["longest_word"] = word_to_json(group.longest().word);
    emit(j);
    return 0;
  }
  std::cout << "type " << d.name() << "\n"
            << "rank " << d.rank() << "\n"
            << "|W| " << group.order() << "\n"
            << "positive roots " << d.positive_roots().size() << "\n";
  for (const auto& a : d.positive_roots()) std::cout << "  " << to_string(a.weight) << "\n";
  std::cout << "rho " << to_string(d.weyl_vector()) << "\n"
            << "w0 " << format_word(group.longest().word) << "\n";
  return 0;
}

int cmd_apply(const Globals& g, const std::string& type, const std::string& op_text,
              const std::optional<std::string>& expr, bool as_basis) {
  const WeylGroup group = load_group(type);
  const OpExpr op = parse_operator(op_text, group.rank());
  if (!expr && !as_basis) throw ParseError("apply needs a character argument or --to-basis");
  std::optional<HeckeOp> basis_form;
  if (as_basis) basis_form = to_basis(group, op);
  std::optional<CharElt> value;
  if (expr) value = evaluate(group, op, parse_char(*expr, group.rank()));

  if (g.json) {
    Json j;
    if (basis_form) j["basis"] = to_json(group, *basis_form);
    if (value) j["result"] = to_json(*value);
    emit(j);
  } else {
    if (basis_form) std::cout << to_string(group, *basis_form) << "\n";
    if (value) std::cout << to_string(*value) << "\n";
  }
  return 0;
}

int cmd_char(const Globals& g, const std::string& type, const std::string& weight,
             const std::string& method) {
  const WeylGroup group = load_group(type);
  const Weight lambda = parse_weight(weight, group.rank());
  const bool dem = method != "weyl", wey = method != "demazure";
  std::optional<CharElt> a, b;
  if (dem) a = top(group, CharElt::monomial(lambda), {g.strict});
  if (wey) b = irreducible_character(group, lambda, CharMethod::Weyl);
  const bool agree = !(a && b) || *a == *b;
  if (g.json) {
    Json j;
    if (a) j["demazure"] = to_json(*a);
    if (b) j["weyl"] = to_json(*b);
    if (a && b) j["agree"] = agree;
    emit(j);
  } else {
    if (a) std::cout << to_string(*a) << "\n";
    if (b) std::cout << to_string(*b) << "\n";
    if (a && b) std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
  }
  if (!agree) {
    std::cerr << "InvariantViolation: Demazure and Weyl characters differ\n";
    return 2;
  }
  return 0;
}

int cmd_decompose(const Globals& g, const std::string& type, const std::string& expr, bool induce_first) {
  const WeylGroup group = load_group(type);
  const CharElt u = parse_char(expr, group.rank());
  const IrredDecomp d =
      induce_first ? decompose_into_irreducibles(group, top(group, u, {g.strict}))
                   : decompose_into_irreducibles(group, u);
  if (g.json) {
    emit(to_json(d));
  } else {
    std::cout << to_string(d) << "\n";
  }
  return 0;
}

int cmd_invariant(const Globals& g, const std::string& type, const std::string& expr) {
  const WeylGroup group = load_group(type);
  const CharElt u = parse_char(expr, group.rank());
  const InvarianceResult w = is_weyl_invariant(group.datum(), u);
  const InvarianceResult i = is_ideal_invariant(group.datum(), u);
  if (g.json) {
    Json j;
    j["weyl"] = w.invariant;
    j["ideal"] = i.invariant;
    auto witness = [](const InvarianceWitness& x) {
      Json o;
      o["index"] = x.simple_index + 1;
      o["value"] = to_json(x.value);
      return o;
    };
    if (w.witness) j["weyl_witness"] = witness(*w.witness);
    if (i.witness) j["ideal_witness"] = witness(*i.witness);
    emit(j);
  } else {
    std::cout << "weyl " << (w.invariant ? "true" : "false") << "\n";
    if (w.witness) {
      std::cout << "  s[" << w.witness->simple_index + 1 << "](u) = " << to_string(w.witness->value)
                << "\n";
    }
    std::cout << "ideal " << (i.invariant ? "true" : "false") << "\n";
    if (i.witness) {
      std::cout << "  dp[" << i.witness->simple_index + 1 << "](u) = " << to_string(i.witness->value)
                << "\n";
    }
  }
  return 0;
}

int cmd_steinberg(const Globals& g, const std::string& type, const std::optional<std::string>& expr) {
  const WeylGroup group = load_group(type);
  const SteinbergBasis basis = steinberg_basis(group);
  std::optional<std::vector<IrredDecomp>> coords;
  if (expr) coords = decompose_over_invariants(group, parse_char(*expr, group.rank()), basis);
  if (g.json) {
    Json j = to_json(group, basis);
    if (coords) {
      Json list = Json::array();
      for (std::size_t i = 0; i < coords->size(); ++i) {
        Json t;
        t["word"] = word_to_json(group[i].word);
        t["coeff"] = to_json((*coords)[i]);
        list.push_back(std::move(t));
      }
      j["decomposition"] = std::move(list);
    }
    emit(j);
    return 0;
  }
  std::cout << "formula " << basis.formula_tag << "\n";
  for (std::size_t i = 0; i < basis.weights.size(); ++i) {
    std::cout << format_word(group[i].word) << " " << to_string(basis.elements[i]);
    if (coords) std::cout << " : " << to_string((*coords)[i]);
    std::cout << "\n";
  }
  return 0;
}

int cmd_cover(const Globals& g, const std::string& matrix, const std::string& action,
              const std::string& expr) {
  const CoverDatum cover = build_cover(parse_matrix(matrix));
  const CharElt u = parse_char(expr, cover.rank());
  if (action == "pullback") {
    const CharElt v = pullback(cover, u);
    if (g.json) {
      emit(to_json(v));
    } else {
      std::cout << to_string(v) << "\n";
    }
    return 0;
  }
  const auto parts = decompose_cover(cover, u);
  if (g.json) {
    emit(to_json(cover, parts));
  } else {
    for (const auto& [k, p] : parts) {
      std::cout << "coset " << k << " " << to_string(cover.coset_reps()[k]) << ": " << to_string(p)
                << "\n";
    }
  }
  return 0;
}

int cmd_selftest(const Globals& g, std::vector<std::string> types) {
  if (types.empty()) types = {"A1", "A2", "B2", "G2"};
  SelftestOptions opts;
  opts.types = types;
  opts.seed = g.seed;
  const auto results = run_selftest(opts);
  std::cout << format_report(results, g.seed);
  for (const auto& r : results) {
    std::fprintf(stderr, "%s %s %.3f s\n", r.type.c_str(), r.suite.c_str(), r.seconds);
  }
  return all_passed(results) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divided differences, Hecke operators and characters of compact Lie groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_flag("--strict", g.strict, "Verify every reduced word");
  app.add_option("--seed", g.seed, "Seed for randomized suites");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::string type, expr, op_text, weight, method = "demazure", matrix, action;
  std::optional<std::string> opt_expr;
  bool as_basis = false;
  std::vector<std::string> types;
  std::function<int()> run;

  auto* info = app.add_subcommand("info", "Root system summary");
  info->add_option("type", type, "Type name (A2, B3, ...) or JSON Cartan matrix")->required();
  info->callback([&] { run = [&] { return cmd_info(g, type); }; });

  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator expression");
  apply_cmd->add_option("type", type)->required();
  apply_cmd->add_option("operator", op_text, "e.g. d[1]*d[2]*d[1]")->required();
  apply_cmd->add_option("expr", opt_expr, "Character to act on");
  apply_cmd->add_flag("--to-basis", as_basis, "Print coordinates in the partial_w basis");
  apply_cmd->callback([&] { run = [&] { return cmd_apply(g, type, op_text, opt_expr, as_basis); }; });

  auto* char_cmd = app.add_subcommand("char", "Irreducible character of highest weight lambda");
  char_cmd->add_option("type", type)->required();
  char_cmd->add_option("weight", weight, "e.g. 1,0")->required();
  char_cmd->add_option("--method", method)->check(CLI::IsMember({"weyl", "demazure", "both"}));
  char_cmd->callback([&] { run = [&] { return cmd_char(g, type, weight, method); }; });

  auto* dec = app.add_subcommand("decompose", "Decompose a W-invariant character");
  dec->add_option("type", type)->required();
  dec->add_option("expr", expr)->required();
  dec->callback([&] { run = [&] { return cmd_decompose(g, type, expr, false); }; });

  auto* inv = app.add_subcommand("invariant-check", "W- and augmentation-ideal invariance");
  inv->add_option("type", type)->required();
  inv->add_option("expr", expr)->required();
  inv->callback([&] { run = [&] { return cmd_invariant(g, type, expr); }; });

  auto* st = app.add_subcommand("steinberg", "Steinberg basis of R(T) over R(G)");
  st->add_option("type", type)->required();
  st->add_option("--decompose", opt_expr, "Character to decompose");
  st->callback([&] { run = [&] { return cmd_steinberg(g, type, opt_expr); }; });

  auto* ind = app.add_subcommand("induce", "Holomorphic induction top(u) in irreducibles");
  ind->add_option("type", type)->required();
  ind->add_option("expr", expr)->required();
  ind->callback([&] { run = [&] { return cmd_decompose(g, type, expr, true); }; });

  auto* cov = app.add_subcommand("cover", "Finite covers of tori");
  cov->add_option("--matrix", matrix, "JSON integer matrix, e.g. [[2]]")->required();
  cov->add_option("action", action)->required()->check(CLI::IsMember({"decompose", "pullback"}));
  cov->add_option("expr", expr)->required();
  cov->callback([&] { run = [&] { return cmd_cover(g, matrix, action, expr); }; });

  auto* self = app.add_subcommand("selftest", "Run the property suites");
  self->add_option("types", types, "Types to test (default A1 A2 B2 G2)");
  self->callback([&] { run = [&] { return cmd_selftest(g, types); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  g.strict = g.strict || strict_from_environment();
  set_thread_count(g.threads);
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return e.internal() ? 2 : 1;
  }
}
