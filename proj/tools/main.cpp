#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nest/canonical.hpp"
#include "nest/census.hpp"
#include "nest/graph.hpp"
#include "nest/nest_family.hpp"
#include "nest/symmetry.hpp"

namespace {

using nest::NestParams;

void write_output(const std::string &text, const std::string &out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error(out_path + ": cannot open for writing");
  out << text << '\n';
  if (!out)
    throw std::runtime_error(out_path + ": write failed");
}

nlohmann::ordered_json group_to_json(const nest::PermGroup &group) {
  nlohmann::ordered_json j;
  j["degree"] = group.degree();
  j["order"] = group.order_u64();
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const nest::Perm &g : group.generators())
    gens.push_back(g.images());
  j["generators"] = std::move(gens);
  return j;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Nest graph census: constructions, automorphism groups, "
               "block systems and the edge-transitive classification"};
  app.require_subcommand(1);

  std::string params_text, params_a_text, params_b_text;
  std::string out_path, census_path;
  int max_n = 50;
  int jobs = 1;
  bool resume = false;

  auto *construct = app.add_subcommand("construct", "Emit a Nest graph as JSON");
  construct->add_option("--params", params_text, "n,a,b,c,k")->required();
  construct->add_option("--out", out_path, "Output file (default: stdout)");

  auto *aut = app.add_subcommand(
      "aut", "Emit automorphism group generators and order as JSON");
  aut->add_option("--params", params_text, "n,a,b,c,k")->required();

  auto *check = app.add_subcommand(
      "check", "Emit the full census record for one parameter tuple");
  check->add_option("--params", params_text, "n,a,b,c,k")->required();

  auto *blocks = app.add_subcommand(
      "blocks", "Emit the minimal block systems of the automorphism group");
  blocks->add_option("--params", params_text, "n,a,b,c,k")->required();

  auto *iso = app.add_subcommand(
      "iso", "Emit an isomorphism witness between two Nest graphs");
  iso->add_option("--params-a", params_a_text, "n,a,b,c,k")->required();
  iso->add_option("--params-b", params_b_text, "n,a,b,c,k")->required();

  auto *census = app.add_subcommand("census", "Run the census up to --max-n");
  census->add_option("--max-n", max_n, "Largest modulus n")->required();
  census->add_option("--jobs", jobs, "Worker count (default 1)");
  census->add_option("--out", out_path, "Output JSONL file")
      ->default_str("census.jsonl");
  census->add_flag("--resume", resume,
                   "Reuse complete records from an interrupted run");

  auto *verify = app.add_subcommand(
      "verify-theorem", "Check the classification against a census file");
  verify->add_option("--census", census_path, "census JSONL file")->required();

  auto *invariants = app.add_subcommand(
      "invariants", "Run the census-wide invariant checks");
  invariants->add_option("--census", census_path, "census JSONL file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) {
      const NestParams p = NestParams::parse(params_text);
      write_output(nest::build_nest(p).to_json(), out_path);
      return 0;
    }
    if (aut->parsed()) {
      const NestParams p = NestParams::parse(params_text);
      const nest::PermGroup group =
          nest::automorphism_group(nest::build_nest(p));
      std::cout << group_to_json(group).dump() << '\n';
      return 0;
    }
    if (check->parsed()) {
      const NestParams p = NestParams::parse(params_text);
      std::cout << nest::profile(p).to_json_line() << '\n';
      return 0;
    }
    if (blocks->parsed()) {
      const NestParams p = NestParams::parse(params_text);
      const nest::PermGroup group =
          nest::automorphism_group(nest::build_nest(p));
      const auto systems = nest::minimal_block_systems(group, 0, p.n);
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const nest::BlockSystemInfo &info : systems) {
        nlohmann::ordered_json j;
        j["blocks"] = info.partition.classes();
        j["block_size"] = info.block_size;
        j["cyclic"] = info.cyclic ? nlohmann::ordered_json(*info.cyclic)
                                  : nlohmann::ordered_json(nullptr);
        j["normal"] = info.normal;
        j["kernel_order"] = nest::group_order_to_u64(info.kernel_order);
        out.push_back(std::move(j));
      }
      std::cout << out.dump() << '\n';
      return 0;
    }
    if (iso->parsed()) {
      const NestParams pa = NestParams::parse(params_a_text);
      const NestParams pb = NestParams::parse(params_b_text);
      const auto witness =
          nest::are_isomorphic(nest::build_nest(pa), nest::build_nest(pb));
      if (!witness) {
        std::cout << "non-isomorphic" << '\n';
        return 1;
      }
      std::cout << nlohmann::json(witness->images()).dump() << '\n';
      return 0;
    }
    if (census->parsed()) {
      if (out_path.empty())
        out_path = "census.jsonl";
      nest::CensusOptions options;
      options.jobs = jobs;
      options.resume = resume;
      const nest::CensusStats stats =
          nest::census_run(max_n, out_path, options);
      nlohmann::ordered_json j;
      j["max_n"] = max_n;
      j["out"] = out_path;
      j["tuples"] = stats.tuples;
      j["survivors"] = stats.survivors;
      j["reused"] = stats.reused;
      j["iso_classes"] = stats.iso_classes;
      std::cout << j.dump() << '\n';
      return 0;
    }
    if (verify->parsed()) {
      const nest::TheoremReport report = nest::verify_theorem(census_path);
      std::cout << report.to_json() << '\n';
      return report.exit_code();
    }
    if (invariants->parsed()) {
      const nest::InvariantReport report = nest::invariant_suite(census_path);
      std::cout << report.to_json() << '\n';
      return report.all_pass ? 0 : 1;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
