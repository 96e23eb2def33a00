#include <iostream>

#include <CLI11.hpp>

#include "biplane/cli.hpp"

int main(int argc, char **argv)
{
  CLI::App app{"sieve and verification tool for 2-(v,k,2) designs with a "
               "sporadic point-primitive automorphism group"};
  app.require_subcommand(1);

  biplane::SieveOptions sieve_options;
  CLI::App *sieve = app.add_subcommand(
    "sieve", "list admissible (v,b,r,k,2) parameter rows from a catalog");
  sieve->add_option("--catalog", sieve_options.catalog_path,
                    "group/maximal-subgroup catalog file")
    ->required();
  sieve->add_option("--group", sieve_options.group_filter,
                    "restrict the listing to one group");

  biplane::VerifyOptions verify_options;
  CLI::App *verify = app.add_subcommand(
    "verify", "develop a base block under a group and test the result");
  verify->add_option("--gens", verify_options.gens_path,
                     "generator file for the group")
    ->required();
  verify->add_option("--block", verify_options.block_path,
                     "base-block fixture file (0-based points)")
    ->required();
  verify->add_option("--lambda", verify_options.lambda,
                     "declared pair-coverage count (default 2)");
  verify->add_flag("--check-flags", verify_options.check_flags,
                   "also test flag and antiflag transitivity");
  verify->add_flag("--check-primitivity", verify_options.check_primitivity,
                   "also test point primitivity");

  biplane::TableOptions table_options;
  CLI::App *table = app.add_subcommand(
    "table1", "render the full candidate table with per-case verdicts");
  table->add_option("--catalog", table_options.catalog_path,
                    "group/maximal-subgroup catalog file")
    ->required();
  table->add_option("--fixtures", table_options.fixtures_dir,
                    "directory of per-case fixture files");
  table->add_option("--tsv", table_options.tsv_path,
                    "also write the table as tab-separated values");

  biplane::StabOptions stab_options;
  CLI::App *stab = app.add_subcommand(
    "stab", "orbit and setwise stabilizer of a point set");
  stab->add_option("--gens", stab_options.gens_path,
                   "generator file for the group")
    ->required();
  stab->add_option("--set", stab_options.set_points,
                   "comma-separated 0-based points")
    ->required()
    ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e);
    return code == 0 ? biplane::exit_success : biplane::exit_input_error;
  }

  if (sieve->parsed())
    return biplane::cmd_sieve(sieve_options, std::cout, std::cerr);
  if (verify->parsed())
    return biplane::cmd_verify(verify_options, std::cout, std::cerr);
  if (table->parsed())
    return biplane::cmd_table1(table_options, std::cout, std::cerr);
  return biplane::cmd_stab(stab_options, std::cout, std::cerr);
}
