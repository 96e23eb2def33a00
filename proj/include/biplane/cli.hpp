#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace biplane {

// exit codes shared by all commands
int const exit_success = 0;
int const exit_input_error = 2;
int const exit_verification_failed = 3;

struct SieveOptions {
  std::string catalog_path;
  std::string group_filter; // empty: all sieved groups
};

struct VerifyOptions {
  std::string gens_path;
  std::string block_path;
  unsigned lambda = 2u;
  bool check_flags = false;
  bool check_primitivity = false;
};

struct TableOptions {
  std::string catalog_path;
  std::string fixtures_dir; // empty: catalog-level verdicts only
  std::string tsv_path;     // empty: no machine-readable copy
};

struct StabOptions {
  std::string gens_path;
  std::vector<unsigned> set_points;
};

int cmd_sieve(SieveOptions const &options, std::ostream &out,
              std::ostream &err);
int cmd_verify(VerifyOptions const &options, std::ostream &out,
               std::ostream &err);
int cmd_table1(TableOptions const &options, std::ostream &out,
               std::ostream &err);
int cmd_stab(StabOptions const &options, std::ostream &out,
             std::ostream &err);

} // namespace biplane
