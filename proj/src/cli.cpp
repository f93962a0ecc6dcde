#include "sscnet/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sscnet/io.hpp"
#include "sscnet/numeric.hpp"
#include "sscnet/symbolic.hpp"

namespace sscnet {

namespace {

using json = nlohmann::ordered_json;

struct LoadedInput {
  std::string path;
  std::string text;
  ParsedDocument doc;
};

LoadedInput load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::ValidationError, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  LoadedInput li{path, buf.str(), parse_network(buf.str())};
  return li;
}

json set_json(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

json placement_json(const PlacementResult& res) {
  json r;
  r["attachments"] = json::array();
  for (const auto& [u, t] : res.attachments) {
    r["attachments"].push_back({{"input", u}, {"target", t}});
  }
  r["component_inputs"] = json::array();
  for (const auto& s : res.component_inputs) r["component_inputs"].push_back(set_json(s));
  r["m"] = res.m;
  r["p"] = res.p;
  r["c"] = res.c;
  r["per_step_kind"] = json::array();
  for (ComponentKind k : res.per_step_kind) r["per_step_kind"].push_back(to_string(k));
  r["per_step_ssc_nodes"] = json::array();
  for (const auto& s : res.per_step_ssc_nodes) {
    r["per_step_ssc_nodes"].push_back(set_json(s));
  }
  r["iterations"] = res.iterations;
  return r;
}

json sample_json(const WeightSample& ws) {
  return json{{"edge_weights", ws.edge_weights}, {"input_gains", ws.input_gains}};
}

WeightSample sample_from_json(const json& j) {
  WeightSample ws;
  ws.edge_weights = j.at("edge_weights").get<std::vector<double>>();
  ws.input_gains = j.at("input_gains").get<std::vector<double>>();
  return ws;
}

PactusDecomposition require_decomposition(const LoadedInput& li, std::ostream& err) {
  if (li.doc.decomposition) return *li.doc.decomposition;
  auto dec = auto_decompose(li.doc.net);
  if (!dec) {
    throw Error(ErrorKind::NotAPactus,
                "document has no decomposition and none was found automatically");
  }
  err << "note: using automatically detected decomposition with "
      << dec->components.size() << " components\n";
  return *dec;
}

void emit(std::ostream& out, const std::vector<std::string>& args,
          const LoadedInput& li, json result, double wall_ms,
          std::optional<std::uint64_t> seed = std::nullopt) {
  json rec;
  rec["command"] = args;
  rec["input"] = {{"path", li.path}, {"digest", digest(li.text)}};
  if (seed) rec["seed"] = *seed;
  rec["wall_ms"] = wall_ms;
  rec["result"] = std::move(result);
  out << rec.dump(2) << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"strong sign controllability toolkit"};
  app.require_subcommand(1);

  std::string path;
  int ground_cap = 30;

  auto* check = app.add_subcommand("check", "decide SSC and report a witness");
  check->add_option("file", path)->required();
  check->add_option("--cap", ground_cap, "ground set size cap");

  auto* nodes_cmd = app.add_subcommand("ssc-nodes", "compute the SSC state nodes");
  nodes_cmd->add_option("file", path)->required();
  nodes_cmd->add_option("--cap", ground_cap);

  auto* classify = app.add_subcommand("classify", "component kinds of the chain");
  classify->add_option("file", path)->required();

  int algorithm = 1;
  auto* place = app.add_subcommand("place", "place external inputs on the chain");
  place->add_option("file", path)->required();
  place->add_option("--algorithm", algorithm, "1 or 2")->check(CLI::Range(1, 2));

  bool exhaustive = false;
  int max_inputs = 0;
  double budget = ExhaustiveOptions{}.budget;
  auto* mininp = app.add_subcommand("min-inputs", "minimum input count, brute force");
  mininp->add_option("file", path)->required();
  mininp->add_flag("--exhaustive", exhaustive, "search every attachment set");
  mininp->add_option("--max-inputs", max_inputs, "largest k to try");
  mininp->add_option("--budget", budget, "subset-check budget");

  std::string mode = "numeric";
  int samples = 1000;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  bool sign_definite = false;
  bool fix_b = false;
  std::size_t term_cap = SymbolicOptions{}.term_cap;
  std::string inject_path;
  auto* verify = app.add_subcommand("verify", "Gramian rank verification");
  verify->add_option("file", path)->required();
  verify->add_option("--mode", mode)->check(CLI::IsMember({"symbolic", "numeric"}));
  verify->add_option("--samples", samples);
  verify->add_option("--seed", seed);
  verify->add_option("--tol", tol);
  verify->add_flag("--sign-definite-pivots", sign_definite);
  verify->add_flag("--fix-b-magnitudes", fix_b);
  verify->add_option("--term-cap", term_cap, "symbolic term budget");
  verify->add_option("--inject", inject_path,
                     "JSON file with weight samples to evaluate first");

  std::string annotate = "none";
  auto* dot = app.add_subcommand("export-dot", "graph description output");
  dot->add_option("file", path)->required();
  dot->add_option("--annotate", annotate)
      ->check(CLI::IsMember({"none", "check", "place1", "place2"}));

  std::vector<const char*> argv;
  std::string prog = "sscnet";
  argv.push_back(prog.c_str());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  auto wall_ms = [&] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - started)
        .count();
  };

  try {
    LoadedInput li = load(path);
    SscOptions sopts;
    sopts.max_ground_bits = ground_cap;

    if (*check) {
      SsccReport rep = check_ssc(li.doc.net, sopts);
      json r;
      r["is_ssc"] = rep.is_ssc;
      r["witness_alpha"] = rep.witness_alpha ? set_json(*rep.witness_alpha) : json();
      r["alphas_checked"] = rep.alphas_checked;
      r["ssc_state_nodes"] = set_json(rep.ssc_state_nodes);
      emit(out, args, li, r, wall_ms());
      return rep.is_ssc ? 0 : 1;
    }

    if (*nodes_cmd) {
      SsccReport rep = check_ssc(li.doc.net, sopts);
      json r;
      r["ssc_state_nodes"] = set_json(rep.ssc_state_nodes);
      r["all_ssc"] = rep.is_ssc;
      emit(out, args, li, r, wall_ms());
      return rep.is_ssc ? 0 : 1;
    }

    if (*classify) {
      PactusDecomposition dec = require_decomposition(li, err);
      json r;
      r["components"] = dec.components;
      r["kinds"] = json::array();
      for (ComponentKind k : dec.kinds) r["kinds"].push_back(to_string(k));
      r["source"] = li.doc.decomposition ? "document" : "auto";
      emit(out, args, li, r, wall_ms());
      return 0;
    }

    if (*place) {
      PactusDecomposition dec = require_decomposition(li, err);
      PlacementResult res = algorithm == 1 ? algorithm1(dec) : algorithm2(dec);
      json r = placement_json(res);
      r["assembled_ssc"] = true;  // both algorithms verify before returning
      r["assembled_document"] = json::parse(serialize_network(res.assembled()));
      emit(out, args, li, r, wall_ms());
      return 0;
    }

    if (*mininp) {
      (void)exhaustive;  // the brute-force search is the only engine
      ExhaustiveOptions eopts;
      eopts.budget = budget;
      eopts.ssc = sopts;
      int cap = max_inputs > 0 ? max_inputs : li.doc.net.state_count();
      auto found = exhaustive_min_inputs(li.doc.net, cap, eopts);
      json r;
      if (found) {
        r["min_inputs"] = found->first;
        r["attachment_targets"] = found->second;
      } else {
        r["min_inputs"] = json();
        r["max_inputs_tried"] = cap;
      }
      emit(out, args, li, r, wall_ms());
      return found ? 0 : 1;
    }

    if (*verify) {
      const int n = li.doc.net.state_count();
      if (mode == "symbolic") {
        SymbolicOptions symopts;
        symopts.sign_definite_pivots = sign_definite;
        symopts.term_cap = term_cap;
        auto [full, rep] = verify_ssc_symbolic(li.doc.net, symopts);
        SymbolTable symbols(li.doc.net);
        auto name = [&](int id) { return symbols.name(id); };
        json r;
        r["mode"] = "symbolic";
        r["rank"] = rep.rank;
        r["n"] = n;
        r["full_rank"] = full;
        r["pivot_log"] = json::array();
        for (size_t i = 0; i < rep.pivot_log.size(); ++i) {
          const PivotStep& ps = rep.pivot_log[i];
          r["pivot_log"].push_back(
              {{"step", i + 1},
               {"row", ps.row + 1},
               {"col", ps.col + 1},
               {"pivot", ps.pivot.to_string(name)},
               {"action", ps.action == PivotAction::Used ? "used" : "zeroed"}});
        }
        r["audit"] = pivot_log_text(rep, symbols);
        emit(out, args, li, r, wall_ms());
        return full ? 0 : 1;
      }
      MonteCarloOptions mopts;
      mopts.fix_b_magnitudes = fix_b;
      if (!inject_path.empty()) {
        std::ifstream in(inject_path);
        if (!in) {
          throw Error(ErrorKind::ValidationError, "cannot open " + inject_path);
        }
        json samples_doc = json::parse(in, nullptr, true);
        for (const auto& s : samples_doc.at("samples")) {
          mopts.initial_samples.push_back(sample_from_json(s));
        }
      }
      NumericReport rep = monte_carlo_sc(li.doc.net, samples, seed, tol, mopts);
      json r;
      r["mode"] = "numeric";
      r["samples_run"] = rep.samples_run;
      r["min_rank_seen"] = rep.min_rank_seen;
      r["full_rank_count"] = rep.full_rank_count;
      r["n"] = n;
      r["rank_tolerance"] = rep.rank_tolerance;
      r["counterexample"] =
          rep.counterexample ? sample_json(*rep.counterexample) : json();
      if (rep.counterexample) r["counterexample_index"] = rep.counterexample_index;
      emit(out, args, li, r, wall_ms(), seed);
      return rep.full_rank_count == rep.samples_run ? 0 : 1;
    }

    if (*dot) {
      if (annotate == "check") {
        SsccReport rep = check_ssc(li.doc.net, sopts);
        out << export_dot(li.doc.net, &rep, nullptr);
      } else if (annotate == "place1" || annotate == "place2") {
        PactusDecomposition dec = require_decomposition(li, err);
        PlacementResult res = annotate == "place1" ? algorithm1(dec) : algorithm2(dec);
        out << export_dot(li.doc.net, nullptr, &res);
      } else {
        out << export_dot(li.doc.net, nullptr, nullptr);
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::BudgetExceeded:
      case ErrorKind::PolynomialBudgetExceeded:
      case ErrorKind::GroundSetTooLarge:
        return 3;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand executed\n";
  return 2;
}

}  // namespace sscnet
