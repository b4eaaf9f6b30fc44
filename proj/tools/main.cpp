#include <CLI11.hpp>
#include <fstream>
#include <random>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ribbonforge/br_poly.hpp"
#include "ribbonforge/corpus.hpp"
#include "ribbonforge/io.hpp"
#include "ribbonforge/laurent.hpp"
#include "ribbonforge/links.hpp"
#include "ribbonforge/medial.hpp"
#include "ribbonforge/transition.hpp"

using namespace ribbonforge;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCounterexample = 3;

struct OutputOptions {
  std::string format = "text";
  std::string vars;   // comma-separated rename, positional
  std::string point;  // x=2,y=3 rational evaluation
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return doc;
}

RibbonGraph read_graph(const std::string& path, int* free_loops = nullptr) {
  return io::graph_from_json(read_json_file(path), free_loops);
}

LaurentPoly rename_vars(const LaurentPoly& p, const std::string& spec) {
  std::vector<std::string> names;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) names.push_back(item);
  if (static_cast<int>(names.size()) != p.table().size()) {
    throw std::invalid_argument("--vars needs exactly " + std::to_string(p.table().size()) + " names");
  }
  std::vector<std::string> idem;
  for (int i = 0; i < p.table().size(); ++i) {
    if (p.table().idempotent(i)) idem.push_back(names[i]);
  }
  VarTable t(names, idem);
  LaurentPoly out(t);
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

void emit_poly(const LaurentPoly& poly, const OutputOptions& opt) {
  LaurentPoly p = opt.vars.empty() ? poly : rename_vars(poly, opt.vars);
  if (!opt.point.empty()) {
    std::map<std::string, Rational> point;
    std::stringstream ss(opt.point);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--point entries look like x=2");
      point[item.substr(0, eq)] = rational_from_string(item.substr(eq + 1));
    }
    std::cout << p.eval(point).get_str() << "\n";
    return;
  }
  if (opt.format == "json") {
    std::cout << io::poly_to_json(p).dump(2) << "\n";
  } else {
    std::cout << p.text() << "\n";
  }
}

void emit_doc(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void add_output_flags(CLI::App* cmd, OutputOptions& opt) {
  cmd->add_option("--format", opt.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--vars", opt.vars, "rename output variables, comma-separated");
  cmd->add_option("--point", opt.point, "evaluate at rationals, e.g. x=2,y=3");
}

struct VerifyOptions {
  int max_edges = 3;
  bool exhaustive = false;
  std::uint64_t seed = 1;
  int count = 25;
};

std::vector<RibbonGraph> verify_corpus(const VerifyOptions& v) {
  if (v.exhaustive) return exhaustive_corpus(v.max_edges);
  return random_corpus(v.max_edges, v.seed, v.count);
}

int run_verify(const std::string& suite, const VerifyOptions& vopt) {
  auto fail = [](const std::string& what) {
    std::cout << "counterexample found\n" << what << "\n";
    return kExitCounterexample;
  };
  if (suite == "statesum-vs-delcon") {
    for (const auto& g : verify_corpus(vopt)) {
      if (r_state_sum(g) != r_delcon(g)) return fail(g.serialize());
    }
  } else if (suite == "canonical-product") {
    int bound = std::max(1, vopt.max_edges);
    for (int i = 0; i <= bound; ++i) {
      for (int k = 0; k <= 2; ++k) {
        for (int j = 0; 2 * j + k <= i; ++j) {
          CanonicalForm f{i, j, k};
          if (bouquet_eval(canonical_diagram(f)) != canonical_product(f)) {
            return fail("D_" + std::to_string(i) + std::to_string(j) + std::to_string(k));
          }
        }
      }
    }
  } else if (suite == "move-invariance") {
    // the deletion-contraction identities across single moves
    std::mt19937_64 rng(vopt.seed);
    const VarTable& T = r_table();
    LaurentPoly x = LaurentPoly::variable(T, "x");
    LaurentPoly one = LaurentPoly::constant(T, 1);
    for (int trial = 0; trial < vopt.count; ++trial) {
      int m = 1 + static_cast<int>(rng() % 6);
      std::vector<int> word;
      for (int c = 0; c < m; ++c) {
        word.push_back(c);
        word.push_back(c);
      }
      std::shuffle(word.begin(), word.end(), rng);
      std::vector<int> signs(m);
      for (int c = 0; c < m; ++c) signs[c] = (rng() & 1ULL) ? -1 : 1;
      ChordDiagram d(word, signs);
      for (int c = 0; c < m; ++c) {
        ChordDiagram moved = d.sign(c) > 0 ? rotate_move(d, c) : twist_move(d, c);
        LaurentPoly mu = move_mu_is_one(d, c) ? one : x;
        LaurentPoly lhs = bouquet_eval(d) - mu * bouquet_eval(d.without_chord(c));
        LaurentPoly rhs = bouquet_eval(moved) - mu * bouquet_eval(moved.without_chord(c));
        if (lhs != rhs) return fail(d.text() + " pivot " + d.chord_id(c));
      }
    }
  } else if (suite == "recipe-identity") {
    RecipeSpec id = identity_recipe_spec();
    for (const auto& g : verify_corpus(vopt)) {
      if (recipe_evaluate(g, id) != r_state_sum(g)) return fail(g.serialize());
    }
  } else if (suite == "recipe-c") {
    RecipeSpec c = c_polynomial_recipe_spec();
    LaurentPoly half_z = LaurentPoly::variable(r_table(), "z", 1);
    for (const auto& g : random_corpus(vopt.max_edges, vopt.seed, vopt.count, /*all_positive=*/true)) {
      if (recipe_evaluate(g, c) != r_state_sum(g).substitute({{"z", half_z}})) {
        return fail(g.serialize());
      }
    }
  } else if (suite == "transpoly") {
    for (const auto& g : verify_corpus(vopt)) {
      auto r = verify_transpoly(g);
      if (!r.ok) return fail(r.detail);
    }
  } else if (suite == "duality") {
    for (const auto& g : verify_corpus(vopt)) {
      auto r = verify_duality(g);
      if (!r.ok) return fail(r.detail);
    }
  } else if (suite == "transitiondual") {
    const VarTable& T = transition_table();
    LaurentPoly a = LaurentPoly::variable(T, "alpha");
    LaurentPoly b = LaurentPoly::variable(T, "beta");
    for (const auto& g : verify_corpus(vopt)) {
      MedialGraph m = medial(g);
      MedialGraph md = medial(g.dual());
      LaurentPoly lhs = q_transition(md, medial_weights(md, a, b), "t");
      LaurentPoly rhs = q_transition(m, dual_weights(medial_weights(m, a, b)), "t");
      if (lhs != rhs) return fail(g.serialize());
    }
  } else if (suite == "martutte") {
    VarTable xt({"x"});
    LaurentPoly x = LaurentPoly::variable(xt, "x");
    LaurentPoly xp1 = x + LaurentPoly::constant(xt, 1);
    for (const auto& g : verify_corpus(vopt)) {
      auto st = g.stats();
      if (st.eg != 0 || st.t != 0) continue;  // plane graphs only
      LaurentPoly j = circuit_partition(g);
      LaurentPoly expect = x.pow(st.k) * classical_tutte(g).substitute({{"x", xp1}, {"y", xp1}}, xt);
      if (j != expect) return fail(g.serialize());
    }
  } else if (suite == "chmutov-pak") {
    int crossings = std::min(vopt.max_edges, 4);
    for (const auto& u : exhaustive_universes(crossings)) {
      if (!try_checkerboard_color(u)) continue;
      auto r = verify_chmutov_pak(u);
      if (!r.ok) return fail(r.detail);
    }
  } else {
    throw CLI::ValidationError("unknown verify suite: " + suite);
  }
  std::cout << "verify " << suite << ": ok\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ribbonforge: exact polynomial invariants of ribbon graphs"};
  app.require_subcommand(1);

  std::string input;
  OutputOptions out;
  VerifyOptions vopt;
  std::string suite, spec_name = "identity";

  auto* compute_r = app.add_subcommand("compute-r", "ribbon graph polynomial R(G; x, y, z, w)");
  compute_r->add_option("--input", input)->required();
  add_output_flags(compute_r, out);

  auto* compute_q = app.add_subcommand("compute-q", "transition polynomial of the medial graph");
  compute_q->add_option("--input", input)->required();
  add_output_flags(compute_q, out);

  auto* medial_cmd = app.add_subcommand("medial", "topological medial graph");
  medial_cmd->add_option("--input", input)->required();

  auto* dual_cmd = app.add_subcommand("dual", "dual ribbon graph");
  dual_cmd->add_option("--input", input)->required();

  auto* tutte_cmd = app.add_subcommand("tutte", "classical Tutte polynomial T(G; x, y)");
  tutte_cmd->add_option("--input", input)->required();
  add_output_flags(tutte_cmd, out);

  auto* canonical_cmd = app.add_subcommand("canonical", "canonical diagram class of a bouquet");
  canonical_cmd->add_option("--input", input)->required();

  auto* bracket_cmd = app.add_subcommand("bracket", "generalized Kauffman bracket of a universe");
  bracket_cmd->add_option("--input", input)->required();
  add_output_flags(bracket_cmd, out);

  auto* green_cmd = app.add_subcommand("green-face", "signed green-face graph of a universe");
  green_cmd->add_option("--input", input)->required();

  auto* recipe_cmd = app.add_subcommand("recipe", "evaluate a recipe-theorem specialization");
  recipe_cmd->add_option("--input", input)->required();
  recipe_cmd->add_option("--spec", spec_name, "identity | c-poly | path to a JSON spec");
  add_output_flags(recipe_cmd, out);

  auto* verify_cmd = app.add_subcommand("verify", "run an identity-verification suite");
  verify_cmd->add_option("suite", suite,
                         "statesum-vs-delcon | canonical-product | move-invariance | recipe-identity | "
                         "recipe-c | transpoly | duality | transitiondual | martutte | chmutov-pak")
      ->required();
  verify_cmd->add_option("--max-edges", vopt.max_edges);
  verify_cmd->add_flag("--exhaustive", vopt.exhaustive);
  verify_cmd->add_option("--seed", vopt.seed);
  verify_cmd->add_option("--count", vopt.count);

  auto* corpus_cmd = app.add_subcommand("corpus", "emit a graph corpus as JSON lines");
  corpus_cmd->add_option("--max-edges", vopt.max_edges);
  corpus_cmd->add_flag("--exhaustive", vopt.exhaustive);
  corpus_cmd->add_option("--seed", vopt.seed);
  corpus_cmd->add_option("--count", vopt.count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (compute_r->parsed()) {
      emit_poly(r_state_sum(read_graph(input)), out);
    } else if (compute_q->parsed()) {
      const VarTable& T = transition_table();
      int free_loops = 0;
      RibbonGraph g = read_graph(input, &free_loops);
      MedialGraph m = medial(g);
      m.free_loops += free_loops;
      emit_poly(q_transition(m, medial_weights(m, LaurentPoly::variable(T, "alpha"),
                                               LaurentPoly::variable(T, "beta")),
                             "t"),
                out);
    } else if (medial_cmd->parsed()) {
      MedialGraph m = medial(read_graph(input));
      emit_doc(io::graph_to_json(m.graph, m.free_loops));
    } else if (dual_cmd->parsed()) {
      emit_doc(io::graph_to_json(read_graph(input).dual()));
    } else if (tutte_cmd->parsed()) {
      emit_poly(classical_tutte(read_graph(input)), out);
    } else if (canonical_cmd->parsed()) {
      CanonicalForm f = canonical_form(to_chord_diagram(read_graph(input)));
      json doc = {{"i", f.i}, {"j", f.j}, {"k", f.k}, {"product", canonical_product(f).text()}};
      emit_doc(doc);
    } else if (bracket_cmd->parsed()) {
      emit_poly(kauffman_bracket(io::universe_from_json(read_json_file(input))), out);
    } else if (green_cmd->parsed()) {
      LinkUniverse u = io::universe_from_json(read_json_file(input));
      emit_doc(io::signed_graph_to_json(green_face_graph(u, checkerboard_color(u))));
    } else if (recipe_cmd->parsed()) {
      RecipeSpec spec;
      if (spec_name == "identity") {
        spec = identity_recipe_spec();
      } else if (spec_name == "c-poly") {
        spec = c_polynomial_recipe_spec();
      } else {
        json doc = read_json_file(spec_name);
        std::vector<std::string> names = doc.at("vars").get<std::vector<std::string>>();
        std::vector<std::string> idem;
        if (doc.contains("idempotent")) idem = doc.at("idempotent").get<std::vector<std::string>>();
        VarTable T(names, idem);
        auto get = [&](const char* key) { return parse_poly(T, doc.at(key).get<std::string>()); };
        spec = {get("alpha"), get("x"), get("q"), get("r"), get("s"), get("u"), get("v")};
      }
      emit_poly(recipe_evaluate(read_graph(input), spec), out);
    } else if (verify_cmd->parsed()) {
      return run_verify(suite, vopt);
    } else if (corpus_cmd->parsed()) {
      for (const auto& g : verify_corpus(vopt)) std::cout << io::graph_to_json(g).dump() << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
