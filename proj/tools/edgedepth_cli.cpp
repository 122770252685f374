// edgedepth: exact depth/projective-dimension computations for monomial
// ideals and edge ideals of graphs, plus named verification campaigns.
//
// Exit codes: 0 success, 1 mathematical disagreement, 2 input error,
// 3 infeasible instance.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "edgedepth/campaigns.hpp"
#include "edgedepth/formulas.hpp"
#include "edgedepth/homology.hpp"
#include "edgedepth/monomial.hpp"
#include "json.hpp"

using namespace edgedepth;

namespace {

constexpr int kExitDisagreement = 1;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw error("cannot open '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw error("cannot write '" + path + "'");
  f << content;
}

struct ParsedInput {
  std::optional<Graph> graph;  // set when the input was an edge list
  MonomialIdeal ideal;
};

ParsedInput parse_input(const std::string& text) {
  ParsedInput out;
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') {
    out.ideal = ideal_from_json_string(text);
  } else {
    out.graph = parse_graph(text);
    out.ideal = edge_ideal(*out.graph);
  }
  return out;
}

int cmd_depth(const std::string& input, int t, int field, const std::string& json_path,
              bool check) {
  ParsedInput in = parse_input(read_input(input));
  FieldSpec f{field};
  MonomialIdeal powered = power(in.ideal, t);
  DepthResult r = depth(powered, f);

  std::cout << "n=" << r.ambient_n << " variables, " << in.ideal.generator_count()
            << " generators, power t=" << t << "\n";
  std::cout << "depth = " << r.depth << ", pd = " << r.pd << "  (GF(" << field << "), "
            << r.method << ")\n";

  bool disagree = false;
  if (in.graph) {
    auto dec = recognize_cm_tree(*in.graph);
    if (dec) {
      int d = dec->base.vertex_count();
      int formula = cm_tree_depth_power({d, t});
      bool agrees = formula == r.depth;
      disagree = !agrees;
      std::cout << "Cohen-Macaulay tree of dimension " << d
                << ": formula max(d-t+1,1) = " << formula << " -- "
                << (agrees ? "agrees" : "DISAGREES") << "\n";
    }
  }
  if (!json_path.empty()) write_file(json_path, depth_result_json(r, t) + "\n");
  return (check && disagree) ? kExitDisagreement : 0;
}

int cmd_profile(const std::string& input, int t_max, int field, const std::string& json_path) {
  ParsedInput in = parse_input(read_input(input));
  if (!in.graph) throw error("profile needs an edge-list graph input");
  FieldSpec f{field};
  DepthProfile prof = depth_profile(*in.graph, t_max, f);

  std::cout << "t   depth  pd  method\n";
  for (const auto& [t, r] : prof.steps)
    std::cout << t << (t < 10 ? "   " : "  ") << r.depth << "      " << r.pd << "   "
              << r.method << "\n";
  if (prof.truncated) std::cout << "truncated: " << prof.truncation_reason << "\n";
  if (prof.stabilization) {
    std::cout << "stabilization: t = " << *prof.stabilization;
    if (is_tree(*in.graph)) {
      int expected = dstab_tree(*in.graph);
      std::cout << (prof.confirmed ? " (confirmed: n - eps0 = " : " (unconfirmed: n - eps0 = ")
                << expected << ")";
    } else {
      std::cout << " (unconfirmed: no tree cross-check)";
    }
    std::cout << "\n";
  }

  if (!json_path.empty()) {
    nlohmann::json j;
    j["schema"] = "1";
    j["char"] = field;
    j["source"] = prof.source;
    auto steps = nlohmann::json::array();
    for (const auto& [t, r] : prof.steps)
      steps.push_back(nlohmann::json::parse(depth_result_json(r, t)));
    j["steps"] = steps;
    if (prof.stabilization)
      j["stabilization"] = *prof.stabilization;
    else
      j["stabilization"] = nullptr;
    j["confirmed"] = prof.confirmed;
    j["truncated"] = prof.truncated;
    write_file(json_path, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_verify(const std::string& name, CampaignSpec spec, bool seed_given,
               const std::string& json_path) {
  spec.kind = campaign_from_name(name);
  if (campaign_needs_seed(spec.kind) && !seed_given)
    throw error("campaign '" + name + "' is randomized: --seed is mandatory");
  CampaignReport report = run_campaign(spec);
  std::cout << report_summary(report);
  if (!json_path.empty()) write_file(json_path, report_to_json_string(report) + "\n");
  return report.passed() ? 0 : kExitDisagreement;
}

int cmd_generate(const GenerateParams& params, const std::string& out_path) {
  Graph g = generate_instance(params);
  std::string text = to_edge_list(g);
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_file(out_path, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact depth of powers of monomial and edge ideals"};
  app.require_subcommand(1);

  auto* depth_cmd = app.add_subcommand("depth", "depth/pd of I^t for an ideal or graph");
  std::string depth_input;
  int depth_t = 1, depth_field = 2;
  std::string depth_json;
  bool depth_check = false;
  depth_cmd->add_option("input", depth_input, "edge-list or ideal-JSON file, '-' for stdin")
      ->required();
  depth_cmd->add_option("--t", depth_t, "power of the ideal (default 1)");
  depth_cmd->add_option("--field", depth_field, "prime field characteristic (default 2)");
  depth_cmd->add_option("--json", depth_json, "write the result JSON to this path");
  depth_cmd->add_flag("--check", depth_check,
                      "exit 1 if a recognized CM tree disagrees with the formula");

  auto* prof_cmd = app.add_subcommand("profile", "depth profile t = 1..t-max for a graph");
  std::string prof_input;
  int prof_tmax = 3, prof_field = 2;
  std::string prof_json;
  prof_cmd->add_option("input", prof_input, "edge-list file, '-' for stdin")->required();
  prof_cmd->add_option("--t-max", prof_tmax, "largest power (default 3)");
  prof_cmd->add_option("--field", prof_field, "prime field characteristic (default 2)");
  prof_cmd->add_option("--json", prof_json, "write the profile JSON to this path");

  auto* verify_cmd = app.add_subcommand("verify", "run a named verification campaign");
  std::string campaign;
  CampaignSpec spec;
  std::string verify_json;
  bool no_d5 = false;
  verify_cmd
      ->add_option("campaign", campaign, "one of: cm-tree, bm, two-drop, kimura, lemmas, dstab")
      ->required();
  auto* seed_opt = verify_cmd->add_option("--seed", spec.seed, "64-bit campaign seed");
  verify_cmd->add_option("--max-d", spec.max_d, "dimension bound (cm-tree, bm)");
  verify_cmd->add_option("--max-t", spec.max_power, "power bound (cm-tree: t, bm: s)");
  verify_cmd->add_option("--max-n", spec.max_n, "vertex bound (kimura, dstab)");
  verify_cmd->add_option("--samples", spec.samples, "randomized case count");
  verify_cmd->add_option("--squeeze-max-d", spec.squeeze_max_d,
                         "bound-squeeze phase dimension bound (cm-tree; 0 disables)");
  verify_cmd->add_flag("--no-d5", no_d5, "skip the fixed d=5 phase (cm-tree, bm)");
  verify_cmd->add_option("--field", spec.field_char, "prime field characteristic (default 2)");
  verify_cmd->add_option("--workers", spec.workers, "concurrent case workers (default 1)");
  verify_cmd->add_option("--json", verify_json, "write the campaign report JSON to this path");

  auto* gen_cmd = app.add_subcommand("generate", "emit a reproducible instance as an edge list");
  GenerateParams gen;
  std::string gen_out;
  gen_cmd->add_option("kind", gen.kind, "tree | cm-tree | whisker | bm | two-drop")->required();
  gen_cmd->add_option("--n", gen.n, "vertex count (tree, whisker)");
  gen_cmd->add_option("--d", gen.d, "dimension (cm-tree, bm, two-drop)");
  gen_cmd->add_option("--j", gen.j, "bm family index");
  gen_cmd->add_option("--a", gen.a, "two-drop split index");
  gen_cmd->add_option("--seed", gen.seed, "64-bit seed for the random kinds");
  gen_cmd->add_option("--output", gen_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (depth_cmd->parsed())
      return cmd_depth(depth_input, depth_t, depth_field, depth_json, depth_check);
    if (prof_cmd->parsed()) return cmd_profile(prof_input, prof_tmax, prof_field, prof_json);
    if (verify_cmd->parsed()) {
      spec.with_d5 = !no_d5;
      return cmd_verify(campaign, spec, seed_opt->count() > 0, verify_json);
    }
    if (gen_cmd->parsed()) return cmd_generate(gen, gen_out);
  } catch (const parse_error& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const infeasible_error& ex) {
    std::cerr << "infeasible: " << ex.what() << "\n";
    return kExitInfeasible;
  } catch (const error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInput;
  }
  return 0;
}
