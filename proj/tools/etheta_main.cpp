#include <unistd.h>

#include <iostream>

#include <CLI11.hpp>

#include "etheta/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"finite-space laboratory for e*-theta open set theory"};
  app.require_subcommand(1);

  etheta::RunConfig config;
  config.format = isatty(fileno(stdout)) ? "table" : "json-lines";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"table", "json-lines"}));
    cmd->add_option("--workers", config.workers,
                    "worker threads (default: ETHETA_WORKERS or hardware)");
  };

  auto* analyze = app.add_subcommand("analyze", "operator values and family memberships");
  analyze->add_option("space", config.inputs, "space document")->required();
  analyze->add_option("--set", config.set_arg, "comma-joined labels, no braces")
      ->expected(0, 1);
  analyze->add_option("--op", config.op_arg, "operator selector, e.g. e*-cl_theta");
  analyze->add_option("--families", config.families_arg,
                      "comma-joined family kinds, or all");
  add_common(analyze);

  auto* axioms = app.add_subcommand("axioms", "separation-axiom table with witnesses");
  axioms->add_option("space", config.inputs, "space document")->required();
  add_common(axioms);

  auto* map = app.add_subcommand("map", "map property table");
  map->add_option("documents", config.inputs, "map document, or domain and codomain spaces")
      ->required();
  map->add_option("--map", config.map_arg, "label association a:c,b:c,...");
  add_common(map);

  auto* enumerate = app.add_subcommand("enumerate", "labelled topologies, one per line");
  enumerate->add_option("--points", config.points, "carrier size (1..5)")->required();
  enumerate->add_flag("--t0-only", config.t0_only, "restrict to partial orders");
  add_common(enumerate);

  auto* verify = app.add_subcommand("verify", "run the claim catalog");
  verify->add_option("--claim", config.claim_arg, "single claim id");
  verify->add_flag("--list", config.list_claims, "list the catalog and exit");
  verify->add_option("--max-points", config.max_points, "space bound (1..5)");
  verify->add_option("--max-map-points", config.max_map_points,
                     "map carrier bound (default min(3, max-points))");
  verify->add_option("--budget", config.budget, "instance budget; stops with a cursor");
  verify->add_option("--resume", config.resume_path, "cursor file to resume from / write to");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  for (auto* cmd : {analyze, axioms, map, enumerate, verify})
    if (cmd->parsed()) config.command = cmd->get_name();
  if (analyze->parsed() && analyze->count("--set")) config.set_given = true;

  return etheta::run_command(config, std::cout, std::cerr);
}
