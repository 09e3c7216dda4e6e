#include "ct/cli_run.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ct/bounds.hpp"
#include "ct/burning.hpp"
#include "ct/classify.hpp"
#include "ct/families.hpp"
#include "ct/tree_throttle.hpp"

namespace ct {

namespace {

using nlohmann::json;

json steps_json(Steps s) {
  if (s.is_inf()) return json("inf");
  return json(s.value());
}

json set_json(VertexSet s) { return json(s.to_vector()); }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream iss(text);
  while (std::getline(iss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

struct GraphSource {
  std::string graph6;
  std::string file;
  std::vector<std::string> family;

  Graph load(std::istream& in) const {
    if (!graph6.empty()) return parse_graph6(graph6);
    if (!family.empty()) return make_family(parse_family_spec(family));
    if (!file.empty()) {
      std::ifstream f(file);
      if (!f) throw std::runtime_error("cannot open " + file);
      std::stringstream buf;
      buf << f.rdbuf();
      std::string text = buf.str();
      return text.find(' ') == std::string::npos ? parse_graph6(text) : parse_edge_list(text);
    }
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("no graph on stdin");
    return parse_graph6(line);
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph6", graph6, "graph6 string");
    cmd->add_option("--file", file, "file with graph6 or an edge list");
    cmd->add_option("--family", family, "family spec, e.g. --family path n=10")
        ->expected(-1);
  }
};

void emit(const json& j, bool table, std::ostream& out) {
  if (!table) {
    out << j.dump() << "\n";
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it)
    out << it.key() << " = " << it.value().dump() << "\n";
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("COPTHROTTLE_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return SolveOptions{}.state_budget;
}

json per_k_json(const CopThrottleResult& res) {
  json arr = json::array();
  for (const auto& e : res.per_k) {
    json row{{"k", e.k}, {"radk_bound", steps_json(e.k_radius_bound)}};
    if (e.computed) {
      row["capt"] = steps_json(e.capture);
      row["witness"] = e.witness;
    } else {
      row["pruned"] = true;
    }
    arr.push_back(row);
  }
  return arr;
}

int compute_invariant(const std::string& which, const Graph& g, SolveOptions solve, int karg,
                      const std::vector<int>& cops, bool table, std::ostream& out) {
  json j;
  if (which == "thc") {
    Pursuit solver(g, solve);
    auto res = solver.cop_throttle();
    j = {{"thc", steps_json(res.value)},
         {"k", res.k},
         {"capture_time", steps_json(res.value + (-res.k))},
         {"witness", res.witness},
         {"per_k", per_k_json(res)}};
  } else if (which == "thplus" || which == "th") {
    auto rule = which == "thplus" ? ForcingRule::psd : ForcingRule::standard;
    auto res = forcing_throttle(g, rule);
    j = {{which, steps_json(res.value)},
         {"witness", set_json(res.witness)},
         {"propagation", steps_json(res.propagation)}};
  } else if (which == "copnumber") {
    Pursuit solver(g, solve);
    j = {{"copnumber", solver.cop_number()}};
  } else if (which == "captk") {
    if (karg < 1) throw CLI::ValidationError("captk needs --k");
    Pursuit solver(g, solve);
    auto res = solver.k_capture_time(karg);
    j = {{"captk", steps_json(res.rounds)}, {"k", karg}, {"witness", res.witness}};
  } else if (which == "captset") {
    if (cops.empty()) throw CLI::ValidationError("captset needs --cops");
    Pursuit solver(g, solve);
    auto cfg = make_cop_config(cops);
    j = {{"captset", steps_json(solver.capture_time_of_set(cfg))}, {"cops", cfg}};
  } else if (which == "z" || which == "zplus") {
    auto rule = which == "z" ? ForcingRule::standard : ForcingRule::psd;
    auto res = forcing_number(g, rule);
    j = {{which, res.number}, {"witness", set_json(res.witness)}};
  } else if (which == "gamma") {
    auto res = domination_number(g);
    j = {{"gamma", res.gamma}, {"witness", set_json(res.witness)}};
  } else if (which == "girth") {
    j = {{"girth", steps_json(girth(g))}};
  } else if (which == "radk") {
    if (karg < 1) throw CLI::ValidationError("radk needs --k");
    auto res = k_center(g, karg);
    j = {{"radk", steps_json(res.radius)}, {"k", karg}, {"witness", set_json(res.witness)}};
  } else if (which == "burn") {
    auto res = burning_number(g);
    j = {{"burn", res.number}, {"witness", res.witness}};
  } else if (which == "copwin") {
    auto res = is_cop_win(g);
    j = {{"copwin", res.cop_win}, {"order", res.order}};
  } else {
    throw CLI::ValidationError("unknown invariant: " + which);
  }
  emit(j, table, out);
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact cops-and-robbers and zero-forcing invariants on small graphs"};
  app.require_subcommand(1);

  std::uint64_t budget = default_budget();
  int threads = 1;
  app.add_option("--budget", budget, "game state budget")->capture_default_str();
  app.add_option("--threads", threads, "worker threads for subset and state sweeps");

  // compute
  auto* compute = app.add_subcommand("compute", "compute one invariant");
  std::string invariant;
  compute->add_option("invariant", invariant,
                      "thc|thplus|th|copnumber|captk|captset|z|zplus|gamma|girth|radk|burn|copwin")
      ->required();
  GraphSource compute_src;
  compute_src.attach(compute);
  int karg = 0;
  std::string cops_arg;
  bool table = false;
  bool sets_only = false;
  compute->add_option("--k", karg, "cop count / set size for captk and radk");
  compute->add_option("--cops", cops_arg, "comma-separated cop placement for captset");
  compute->add_flag("--table", table, "text output instead of JSON");
  compute->add_flag("--sets-only", sets_only, "skip repeated-vertex placements in searches");

  // family
  auto* family = app.add_subcommand("family", "generate a named family member");
  std::vector<std::string> family_tokens;
  family->add_option("spec", family_tokens, "e.g. stellated_wheel m=10")->required()->expected(-1);
  std::string emit_format = "graph6";
  family->add_option("--emit", emit_format, "graph6 or edges")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "replay formula and inequality suites");
  std::string verify_what;
  verify->add_option("what", verify_what, "formulas|inequalities|all")->required();
  int random_graphs = 200;
  std::uint64_t seed = 0;
  bool verify_table = false;
  verify->add_option("--random", random_graphs, "random corpus size")->capture_default_str();
  verify->add_option("--seed", seed, "corpus seed")->capture_default_str();
  verify->add_flag("--table", verify_table, "text table instead of JSON");

  // classify
  auto* classify = app.add_subcommand("classify", "low throttling classification");
  GraphSource classify_src;
  classify_src.attach(classify);
  bool classify_table = false;
  classify->add_flag("--table", classify_table, "text output instead of JSON");

  // trace
  auto* trace = app.add_subcommand("trace", "export a forcing or game transcript");
  std::string trace_kind;
  trace->add_option("kind", trace_kind, "forcing|game")->required();
  GraphSource trace_src;
  trace_src.attach(trace);
  std::string trace_out, trace_set, trace_rule = "psd", trace_cops;
  trace->add_option("--out", trace_out, "output file (stdout when omitted)");
  trace->add_option("--set", trace_set, "comma-separated forcing set");
  trace->add_option("--rule", trace_rule, "psd or standard")->capture_default_str();
  trace->add_option("--cops", trace_cops, "comma-separated cop placement");

  // explore
  auto* explore = app.add_subcommand("explore", "search for trees with large throttling");
  int explore_max_n = 24, explore_samples = 400;
  std::uint64_t explore_seed = 0;
  explore->add_option("--max-n", explore_max_n)->capture_default_str();
  explore->add_option("--samples", explore_samples)->capture_default_str();
  explore->add_option("--seed", explore_seed)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  set_global_threads(threads);
  SolveOptions solve;
  solve.state_budget = budget;
  solve.sets_only = sets_only;

  try {
    if (*compute) {
      Graph g = compute_src.load(in);
      return compute_invariant(invariant, g, solve, karg, parse_int_list(cops_arg), table, out);
    }
    if (*family) {
      Graph g = make_family(parse_family_spec(family_tokens));
      if (emit_format == "graph6") {
        out << encode_graph6(g) << "\n";
      } else if (emit_format == "edges") {
        for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
      } else {
        err << "unknown emit format: " << emit_format << "\n";
        return 2;
      }
      return 0;
    }
    if (*verify) {
      HarnessOptions hopts;
      hopts.solve = solve;
      hopts.seed = seed;
      std::vector<CheckRow> rows;
      auto append = [&rows](std::vector<CheckRow> more) {
        rows.insert(rows.end(), more.begin(), more.end());
      };
      if (verify_what == "formulas") {
        append(verify_formula_suite(hopts));
      } else if (verify_what == "inequalities") {
        append(verify_default_corpus(random_graphs, hopts));
      } else if (verify_what == "all") {
        append(verify_formula_suite(hopts));
        append(verify_default_corpus(random_graphs, hopts));
        append(verify_clique_sum_suite(50, hopts));
        append(verify_tree_suite(40, 100, hopts));
        append(verify_sqrt_construction_suite(500, 200, hopts));
      } else {
        err << "unknown verify target: " << verify_what << "\n";
        return 2;
      }
      out << (verify_table ? render_table(rows) : render_json(rows)) << "\n";
      return all_pass(rows) ? 0 : 1;
    }
    if (*classify) {
      Graph g = classify_src.load(in);
      auto res = classify_low_throttle(g, solve);
      json j{{"class", res.value}, {"trigger", res.trigger}, {"fired", res.fired}};
      emit(j, classify_table, out);
      return 0;
    }
    if (*trace) {
      Graph g = trace_src.load(in);
      json j;
      if (trace_kind == "forcing") {
        if (trace_set.empty()) throw CLI::ValidationError("trace forcing needs --set");
        VertexSet s;
        for (int v : parse_int_list(trace_set)) {
          g.check_vertex(v);
          s.add(v);
        }
        auto rule = trace_rule == "standard" ? ForcingRule::standard : ForcingRule::psd;
        auto prop = propagation_time(g, s, rule);
        json steps = json::array();
        for (std::size_t t = 0; t < prop.record.steps.size(); ++t) {
          json forces = json::array();
          for (const Force& f : prop.record.steps[t]) {
            json fj{{"from", f.from}, {"to", f.to}};
            if (f.component >= 0) fj["component"] = f.component;
            forces.push_back(fj);
          }
          steps.push_back({{"step", t + 1}, {"forces", forces}});
        }
        j = {{"rule", rule_name(rule)},
             {"initial", set_json(s)},
             {"propagation", steps_json(prop.time)},
             {"steps", steps}};
      } else if (trace_kind == "game") {
        if (trace_cops.empty()) throw CLI::ValidationError("trace game needs --cops");
        Pursuit solver(g, solve);
        auto tr = solver.replay(make_cop_config(parse_int_list(trace_cops)));
        if (tr.rounds.is_inf()) {
          j = {{"cops", tr.initial_cops}, {"result", "evasion"}};
        } else {
          json play = json::array();
          for (const auto& round : tr.play)
            play.push_back(
                {{"cops", round.cops}, {"robber", round.robber}, {"captured", round.captured}});
          j = {{"cops", tr.initial_cops},
               {"robber", tr.initial_robber},
               {"rounds", steps_json(tr.rounds)},
               {"play", play}};
        }
      } else {
        err << "unknown trace kind: " << trace_kind << "\n";
        return 2;
      }
      if (trace_out.empty()) {
        out << j.dump(2) << "\n";
      } else {
        std::ofstream f(trace_out);
        if (!f) throw std::runtime_error("cannot write " + trace_out);
        f << j.dump(2) << "\n";
      }
      return 0;
    }
    if (*explore) {
      std::mt19937_64 rng(explore_seed);
      json best;
      double best_ratio = -1;
      for (int i = 0; i < explore_samples; ++i) {
        int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(explore_max_n - 1));
        Graph t = random_tree(n, rng());
        auto res = tree_cop_throttle(t);
        double ratio = res.value.value() / std::sqrt(static_cast<double>(n));
        if (ratio > best_ratio) {
          best_ratio = ratio;
          best = {{"graph6", encode_graph6(t)},
                  {"n", n},
                  {"thc", res.value.value()},
                  {"thc_over_sqrt_n", ratio},
                  {"path_value", path_throttling_formula(n)}};
        }
      }
      out << best.dump(2) << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ct
