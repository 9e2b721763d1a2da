// Command-line front end: classical game analysis, quantized payoffs,
// equilibrium search, joint-payoff maximization and the claim battery.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qog/claims.hpp"
#include "qog/equilibrium.hpp"

using json = nlohmann::ordered_json;
using namespace qog;

namespace {

enum class Model { kGm1, kGm2, kGm3 };

struct Options {
  std::string model = "gm1";
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  double d = 1.0;
  std::string state;
  double pa = -1.0;
  double pa1 = 0.0;
  double qb = -1.0;
  double qb1 = 0.0;
  int grid = 10;
  int samples = 0;
  std::uint64_t seed = kDefaultSeed;
  bool as_json = false;
  bool normalize = false;
  // which flags were given explicitly
  bool has_pa = false, has_qb = false, has_c = false, has_d = false;
};

Model parse_model(const std::string& name) {
  if (name == "gm1" || name == "GM1") return Model::kGm1;
  if (name == "gm2" || name == "GM2") return Model::kGm2;
  if (name == "gm3" || name == "GM3") return Model::kGm3;
  throw std::invalid_argument("unknown model '" + name + "' (expected gm1, gm2 or gm3)");
}

int model_dim(Model m) { return m == Model::kGm1 ? 2 : 3; }

const char* model_name(Model m) {
  switch (m) {
    case Model::kGm1: return "gm1";
    case Model::kGm2: return "gm2";
    default: return "gm3";
  }
}

BimatrixGame build_table(Model m, const GameParams& p) {
  switch (m) {
    case Model::kGm1: return build_gm1(p);
    case Model::kGm2: return build_gm2(p);
    default: return build_gm3(p);
  }
}

std::vector<std::string> ignored_params(Model m, const Options& o) {
  std::vector<std::string> out;
  if (m == Model::kGm1) {
    if (o.has_c) out.push_back("c");
    if (o.has_d) out.push_back("d");
  } else if (m == Model::kGm2) {
    if (o.has_d) out.push_back("d");
  }
  return out;
}

std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Presets: basis-ij, entangled-11-33, uniform, random (seeded); anything else
// is read as a JSON file holding dim*dim [re, im] pairs in row-major order.
StateVector load_state(const std::string& spec, int dim, bool normalize, Rng& rng) {
  if (spec.empty()) throw std::invalid_argument("--state is required for this command");
  if (spec == "uniform") return StateVector::uniform(dim);
  if (spec == "random") return random_state(rng, dim);
  if (spec == "entangled-11-33") {
    if (dim != 3) throw std::invalid_argument("entangled-11-33 needs a 3x3 model");
    return StateVector::entangled_11_33();
  }
  if (spec.rfind("basis-", 0) == 0) {
    const std::string tail = spec.substr(6);
    if (tail.size() != 2 || !std::isdigit(static_cast<unsigned char>(tail[0])) ||
        !std::isdigit(static_cast<unsigned char>(tail[1]))) {
      throw std::invalid_argument("basis preset must look like basis-11, basis-23, ...");
    }
    return StateVector::basis(dim, tail[0] - '0', tail[1] - '0');
  }

  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open state file '" + spec + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument("state file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_array() || doc.size() != static_cast<std::size_t>(dim * dim)) {
    throw std::invalid_argument("state file must hold " + std::to_string(dim * dim) +
                                " [re, im] pairs");
  }
  std::vector<Complex> amps;
  double norm2 = 0.0;
  for (const auto& cell : doc) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
      throw std::invalid_argument("each amplitude must be a [re, im] pair");
    }
    amps.emplace_back(cell[0].get<double>(), cell[1].get<double>());
    norm2 += std::norm(amps.back());
  }
  if (!normalize && std::abs(norm2 - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "amplitudes are not normalized within 1e-9; pass --normalize to rescale");
  }
  return StateVector::normalized(dim, dim, std::move(amps));
}

MixedStrategy make_strategy(int dim, double p, double p1) {
  if (dim == 2) return MixedStrategy2(p);
  return MixedStrategy3(p, p1);
}

bool is_entangled_11_33(const StateVector& s) {
  if (s.dim_a() != 3) return false;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const double want = (i == j && i != 2) ? 0.5 : 0.0;
      if (std::abs(s.prob(i, j) - want) > 1e-12) return false;
    }
  }
  return true;
}

json state_to_json(const StateVector& s) {
  json arr = json::array();
  for (const Complex& u : s.amplitudes()) {
    arr.push_back({round_12_sig(u.real()), round_12_sig(u.imag())});
  }
  return arr;
}

json strategy_to_json(const MixedStrategy& s) {
  json out;
  if (const auto* s2 = std::get_if<MixedStrategy2>(&s)) {
    out["p"] = round_12_sig(s2->p());
  } else {
    const auto& s3 = std::get<MixedStrategy3>(s);
    out["p"] = round_12_sig(s3.p());
    out["p1"] = round_12_sig(s3.p1());
  }
  return out;
}

void print_table(const BimatrixGame& g) {
  const int n = g.n_strategies();
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(n + 1));
  cells[0].push_back("");
  for (int c = 0; c < n; ++c) cells[0].push_back(g.strategy_name(c));
  for (int r = 0; r < n; ++r) {
    auto& row = cells[static_cast<std::size_t>(r + 1)];
    row.push_back(g.strategy_name(r));
    for (int c = 0; c < n; ++c) {
      row.push_back("(" + fmt6(g.payoff_a(r, c)) + ", " + fmt6(g.payoff_b(r, c)) + ")");
    }
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(n + 1), 0);
  for (const auto& row : cells) {
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      line += row[k];
      line.append(width[k] - row[k].size() + 2, ' ');
    }
    std::cout << "  " << line << "\n";
  }
}

json params_to_json(Model m, const GameParams& p) {
  json out;
  out["a"] = round_12_sig(p.a);
  out["b"] = round_12_sig(p.b);
  if (m != Model::kGm1) out["c"] = round_12_sig(p.c);
  if (m == Model::kGm3) out["d"] = round_12_sig(p.d);
  return out;
}

int cmd_classical(const Options& o) {
  const Model m = parse_model(o.model);
  const GameParams params{o.a, o.b, o.c, o.d};
  const BimatrixGame g = build_table(m, params);
  const auto ne = pure_nash_equilibria(g);
  const auto pareto = pareto_optimal_pure(g);
  const bool zs = is_zero_sum(g);
  const auto ignored = ignored_params(m, o);

  if (o.as_json) {
    json doc;
    doc["command"] = "classical";
    doc["model"] = model_name(m);
    doc["params"] = params_to_json(m, params);
    doc["ignored_params"] = ignored;
    const int n = g.n_strategies();
    json pa = json::array(), pb = json::array();
    for (int r = 0; r < n; ++r) {
      json ra = json::array(), rb = json::array();
      for (int c = 0; c < n; ++c) {
        ra.push_back(round_12_sig(g.payoff_a(r, c)));
        rb.push_back(round_12_sig(g.payoff_b(r, c)));
      }
      pa.push_back(ra);
      pb.push_back(rb);
    }
    doc["payoff_a"] = pa;
    doc["payoff_b"] = pb;
    doc["zero_sum"] = zs;
    doc["pure_nash_equilibria"] = json::array();
    for (const auto& pr : ne) {
      doc["pure_nash_equilibria"].push_back(
          {{"row", g.strategy_name(pr.row)},
           {"col", g.strategy_name(pr.col)},
           {"payoff_a", round_12_sig(g.payoff_a(pr.row, pr.col))},
           {"payoff_b", round_12_sig(g.payoff_b(pr.row, pr.col))},
           {"joint", round_12_sig(g.payoff_a(pr.row, pr.col) + g.payoff_b(pr.row, pr.col))}});
    }
    doc["pareto_optimal"] = json::array();
    for (const auto& pr : pareto) {
      doc["pareto_optimal"].push_back({{"row", g.strategy_name(pr.row)},
                                       {"col", g.strategy_name(pr.col)}});
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  std::cout << "Model " << model_name(m) << " (" << g.n_strategies() << "x" << g.n_strategies()
            << "), a=" << fmt6(params.a) << " b=" << fmt6(params.b);
  if (m != Model::kGm1) std::cout << " c=" << fmt6(params.c);
  if (m == Model::kGm3) std::cout << " d=" << fmt6(params.d);
  std::cout << "\n";
  for (const auto& name : ignored) std::cout << "  (parameter " << name << " ignored)\n";
  std::cout << "Payoff table (A, B):\n";
  print_table(g);
  std::cout << "Zero-sum: " << (zs ? "yes" : "no") << "\n";
  std::cout << "Pure Nash equilibria:\n";
  for (const auto& pr : ne) {
    const double ja = g.payoff_a(pr.row, pr.col);
    const double jb = g.payoff_b(pr.row, pr.col);
    std::cout << "  (" << g.strategy_name(pr.row) << ", " << g.strategy_name(pr.col)
              << ")  payoffs (" << fmt6(ja) << ", " << fmt6(jb) << ")  joint " << fmt6(ja + jb)
              << "\n";
  }
  std::cout << "Pareto-optimal pure profiles:\n  ";
  for (std::size_t k = 0; k < pareto.size(); ++k) {
    if (k > 0) std::cout << ", ";
    std::cout << "(" << g.strategy_name(pareto[k].row) << ", " << g.strategy_name(pareto[k].col)
              << ")";
  }
  std::cout << "\n";
  return 0;
}

int cmd_payoff(const Options& o) {
  const Model m = parse_model(o.model);
  const int dim = model_dim(m);
  const GameParams params{o.a, o.b, o.c, o.d};
  Rng rng(o.seed);
  const StateVector psi = load_state(o.state, dim, o.normalize, rng);

  MixedStrategy sa = make_strategy(dim, 0.0, 0.0);
  MixedStrategy sb = make_strategy(dim, 0.0, 0.0);
  if (o.has_pa && o.has_qb) {
    sa = make_strategy(dim, o.pa, o.pa1);
    sb = make_strategy(dim, o.qb, o.qb1);
  } else if (o.state == "random") {
    // Strategies drawn from the same seeded stream, after the state.
    sa = random_strategy(rng, dim);
    sb = random_strategy(rng, dim);
  } else {
    throw std::invalid_argument("strategies are required: --pa/--qb (and --pa1/--qb1 for 3x3)");
  }

  const QuantumGame game(build_table(m, params), psi);
  const auto pay = expected_payoffs(game, sa, sb);
  const double joint = pay.first + pay.second;

  std::optional<std::pair<double, double>> closed_pair;
  std::optional<double> closed_joint;
  if (m == Model::kGm1) {
    closed_pair = gm1_payoff_closed_form(params, psi, std::get<MixedStrategy2>(sa).p(),
                                         std::get<MixedStrategy2>(sb).p());
  } else if (m == Model::kGm3) {
    closed_joint = gm3_joint_payoff_closed_form(params, psi, std::get<MixedStrategy3>(sa).p(),
                                                std::get<MixedStrategy3>(sb).p());
    if (is_entangled_11_33(psi)) {
      closed_pair = gm3_entangled_payoffs_closed_form(params, std::get<MixedStrategy3>(sa),
                                                      std::get<MixedStrategy3>(sb));
    }
  }

  if (o.as_json) {
    json doc;
    doc["command"] = "payoff";
    doc["model"] = model_name(m);
    doc["params"] = params_to_json(m, params);
    doc["state"] = state_to_json(psi);
    doc["strategy_a"] = strategy_to_json(sa);
    doc["strategy_b"] = strategy_to_json(sb);
    doc["payoff_a"] = round_12_sig(pay.first);
    doc["payoff_b"] = round_12_sig(pay.second);
    doc["joint"] = round_12_sig(joint);
    if (closed_pair) {
      doc["closed_form"] = {{"payoff_a", round_12_sig(closed_pair->first)},
                            {"payoff_b", round_12_sig(closed_pair->second)}};
    }
    if (closed_joint) doc["closed_form_joint"] = round_12_sig(*closed_joint);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  std::cout << "Model " << model_name(m) << ", state " << o.state << "\n";
  std::cout << "A " << strategy_to_string(sa) << "  B " << strategy_to_string(sb) << "\n";
  std::cout << "Expected payoffs: A = " << fmt6(pay.first) << ", B = " << fmt6(pay.second)
            << ", joint = " << fmt6(joint) << "\n";
  if (closed_pair) {
    std::cout << "Closed form:      A = " << fmt6(closed_pair->first)
              << ", B = " << fmt6(closed_pair->second) << "  (gap "
              << fmt6(std::max(std::abs(closed_pair->first - pay.first),
                               std::abs(closed_pair->second - pay.second)))
              << ")\n";
  }
  if (closed_joint) {
    std::cout << "Closed-form joint = " << fmt6(*closed_joint) << "  (gap "
              << fmt6(std::abs(*closed_joint - joint)) << ")\n";
  }
  return 0;
}

int cmd_find_ne(const Options& o) {
  const Model m = parse_model(o.model);
  const int dim = model_dim(m);
  const GameParams params{o.a, o.b, o.c, o.d};
  Rng rng(o.seed);
  const StateVector psi = load_state(o.state, dim, o.normalize, rng);
  const QuantumGame game(build_table(m, params), psi);
  const auto equilibria = find_vertex_equilibria(game);

  if (o.as_json) {
    json doc;
    doc["command"] = "find-ne";
    doc["model"] = model_name(m);
    doc["params"] = params_to_json(m, params);
    doc["state"] = state_to_json(psi);
    doc["equilibria"] = json::array();
    for (const auto& v : equilibria) {
      const auto family = equilibrium_family(game, v.strategy_a, v.strategy_b);
      json e;
      e["strategy_a"] = strategy_to_json(v.strategy_a);
      e["strategy_b"] = strategy_to_json(v.strategy_b);
      e["payoff_a"] = round_12_sig(v.payoff_a);
      e["payoff_b"] = round_12_sig(v.payoff_b);
      e["joint"] = round_12_sig(v.payoff_a + v.payoff_b);
      e["deviation_gap_a"] = round_12_sig(v.deviation_gap_a);
      e["deviation_gap_b"] = round_12_sig(v.deviation_gap_b);
      e["family"] = family.describe();
      doc["equilibria"].push_back(std::move(e));
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  std::cout << "Model " << model_name(m) << ", state " << o.state << "\n";
  if (equilibria.empty()) {
    std::cout << "No vertex equilibria found.\n";
    return 0;
  }
  std::cout << "Vertex equilibria:\n";
  for (const auto& v : equilibria) {
    std::cout << "  A " << strategy_to_string(v.strategy_a) << "  B "
              << strategy_to_string(v.strategy_b) << "  payoffs (" << fmt6(v.payoff_a) << ", "
              << fmt6(v.payoff_b) << ")  joint " << fmt6(v.payoff_a + v.payoff_b) << "\n";
    const auto family = equilibrium_family(game, v.strategy_a, v.strategy_b);
    std::cout << "    family: " << family.describe() << "\n";
  }
  return 0;
}

int cmd_max_joint(const Options& o) {
  const Model m = parse_model(o.model);
  if (m != Model::kGm3) {
    throw std::invalid_argument("max-joint is defined for --model gm3 only");
  }
  const GameParams params{o.a, o.b, o.c, o.d};
  const auto analytic = maximize_joint_payoff_gm3(params, MaxMethod::kAnalytic);
  const auto grid = maximize_joint_payoff_gm3(params, MaxMethod::kGrid, o.grid);
  const double gap = analytic.max_value - grid.max_value;

  if (o.as_json) {
    json doc;
    doc["command"] = "max-joint";
    doc["model"] = model_name(m);
    doc["params"] = params_to_json(m, params);
    doc["analytic"] = {{"max_value", round_12_sig(analytic.max_value)},
                       {"state", state_to_json(analytic.arg_state)},
                       {"p", round_12_sig(analytic.arg_a.p())},
                       {"q", round_12_sig(analytic.arg_b.p())}};
    doc["grid"] = {{"resolution", o.grid},
                   {"max_value", round_12_sig(grid.max_value)},
                   {"state", state_to_json(grid.arg_state)},
                   {"p", round_12_sig(grid.arg_a.p())},
                   {"q", round_12_sig(grid.arg_b.p())}};
    doc["gap"] = round_12_sig(gap);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  std::cout << "Joint payoff maximum, d = " << fmt6(params.d) << "\n";
  std::cout << "  analytic: " << fmt6(analytic.max_value)
            << " (= 4/d) at p=" << fmt6(analytic.arg_a.p()) << ", q=" << fmt6(analytic.arg_b.p())
            << " on a basis state\n";
  std::cout << "  grid 1/" << o.grid << ":  " << fmt6(grid.max_value) << " (gap " << fmt6(gap)
            << ")\n";
  return 0;
}

int cmd_reproduce(const Options& o) {
  ClaimOptions copt;
  copt.min_samples = o.samples;
  const auto reports = run_all_claims(o.seed, copt);
  if (o.as_json) {
    std::cout << claims_to_json(reports, o.seed);
  } else {
    std::size_t width = 0;
    for (const auto& r : reports) width = std::max(width, r.claim_id.size());
    for (const auto& r : reports) {
      std::string id = r.claim_id;
      id.append(width - id.size() + 2, ' ');
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << id;
      double worst = 0.0;
      for (std::size_t k = 0; k < r.observed.size(); ++k) {
        worst = std::max(worst, std::abs(r.observed[k] - r.expected[k]));
      }
      std::cout << "worst deviation " << fmt6(worst) << " (tolerance " << fmt6(r.tolerance)
                << ")\n";
    }
    std::cout << (all_pass(reports) ? "All claims pass." : "Some claims FAILED.") << "\n";
  }
  return all_pass(reports) ? 0 : 1;
}

void add_param_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--a", o.a, "payoff unit a > 0");
  cmd->add_option("--b", o.b, "payoff unit b > 0");
  cmd->add_option("--c", o.c, "payoff unit c > 0");
  cmd->add_option("--d", o.d, "opinion distance d > 0");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Opinion-formation games, classical and quantized"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from an INI-style file");

  Options o;

  auto* classical =
      app.add_subcommand("classical", "payoff tables, pure NE, zero-sum and Pareto analysis");
  classical->add_option("--model", o.model, "gm1 | gm2 | gm3")->required();
  add_param_flags(classical, o);
  classical->add_flag("--json", o.as_json, "machine-readable output");

  auto* payoff = app.add_subcommand("payoff", "expected payoffs for one strategy profile");
  payoff->add_option("--model", o.model, "gm1 | gm2 | gm3")->required();
  add_param_flags(payoff, o);
  payoff
      ->add_option("--state", o.state,
                   "preset (basis-ij, entangled-11-33, uniform, random) or JSON file")
      ->required();
  payoff->add_option("--pa", o.pa, "A: identity weight p (2x2) / 1<->3 swap weight p (3x3)");
  payoff->add_option("--pa1", o.pa1, "A: 1<->2 swap weight p1 (3x3 only)");
  payoff->add_option("--qb", o.qb, "B: identity weight q (2x2) / 1<->3 swap weight q (3x3)");
  payoff->add_option("--qb1", o.qb1, "B: 1<->2 swap weight q1 (3x3 only)");
  payoff->add_option("--seed", o.seed, "seed for --state random");
  payoff->add_flag("--normalize", o.normalize, "rescale non-normalized state input");
  payoff->add_flag("--json", o.as_json, "machine-readable output");

  auto* find_ne = app.add_subcommand("find-ne", "vertex equilibria and their families");
  find_ne->add_option("--model", o.model, "gm1 | gm2 | gm3")->required();
  add_param_flags(find_ne, o);
  find_ne->add_option("--state", o.state, "initial state preset or JSON file")->required();
  find_ne->add_option("--seed", o.seed, "seed for --state random");
  find_ne->add_flag("--normalize", o.normalize, "rescale non-normalized state input");
  find_ne->add_flag("--json", o.as_json, "machine-readable output");

  auto* max_joint = app.add_subcommand("max-joint", "maximize the joint payoff of gm3");
  max_joint->add_option("--model", o.model, "must be gm3")->default_val("gm3");
  add_param_flags(max_joint, o);
  max_joint->add_option("--grid", o.grid, "grid oracle resolution (steps per unit)")
      ->check(CLI::PositiveNumber);
  max_joint->add_flag("--json", o.as_json, "machine-readable output");

  auto* reproduce = app.add_subcommand("reproduce-paper", "run the full claim battery");
  reproduce->add_option("--seed", o.seed, "seed for all randomized claims");
  reproduce->add_option("--samples", o.samples,
                        "raise randomized draw counts above the built-in minimums");
  reproduce->add_flag("--json", o.as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  o.has_pa = payoff->count("--pa") > 0;
  o.has_qb = payoff->count("--qb") > 0;
  for (CLI::App* cmd : {classical, payoff, find_ne, max_joint}) {
    if (cmd->parsed()) {
      o.has_c = o.has_c || cmd->count("--c") > 0;
      o.has_d = o.has_d || cmd->count("--d") > 0;
    }
  }

  try {
    if (classical->parsed()) return cmd_classical(o);
    if (payoff->parsed()) return cmd_payoff(o);
    if (find_ne->parsed()) return cmd_find_ne(o);
    if (max_joint->parsed()) return cmd_max_joint(o);
    if (reproduce->parsed()) return cmd_reproduce(o);
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
