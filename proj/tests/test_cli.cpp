#include <cstdio>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "biplane/cli.hpp"
#include "test_util.hpp"

using namespace biplane;
using testutil::source_path;

namespace {

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

std::string temp_path(std::string const &name)
{ return std::string("/tmp/biplane_test_") + name; }

struct CommandResult {
  int code = 0;
  std::string out;
  std::string err;
};

template <typename Command, typename Options>
CommandResult run(Command command, Options const &options)
{
  std::ostringstream out, err;
  int const code = command(options, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cmd_sieve lists candidate rows per group")
{
  std::string const catalog = source_path("data/atlas.dat");

  CommandResult const m11 = run(cmd_sieve, SieveOptions{catalog, "M11"});
  CHECK(m11.code == exit_success);
  CHECK(m11.out.find("5 candidate rows") != std::string::npos);
  CHECK(m11.out.find("M9:2") != std::string::npos);
  CHECK(m11.err.empty());

  CommandResult const j32 = run(cmd_sieve, SieveOptions{catalog, "J3:2"});
  CHECK(j32.code == exit_success);
  CHECK(j32.out.find("1 candidate row\n") != std::string::npos);
  CHECK(j32.out.find("174420") != std::string::npos);

  CommandResult const monster = run(cmd_sieve, SieveOptions{catalog, "Monster"});
  CHECK(monster.code == exit_success);
  CHECK(monster.out.find("0 candidate rows") != std::string::npos);
  CHECK(monster.out.find("incomplete") != std::string::npos);

  CommandResult const absent = run(cmd_sieve, SieveOptions{catalog, "A5"});
  CHECK(absent.code == exit_success);
  CHECK(absent.out.find("0 candidate rows") != std::string::npos);
  CHECK(absent.out.find("not in the catalog") != std::string::npos);

  CommandResult const unsieved = run(cmd_sieve, SieveOptions{catalog, "L2(11)"});
  CHECK(unsieved.code == exit_success);
  CHECK(unsieved.out.find("outside the sieved family") != std::string::npos);

  CommandResult const full = run(cmd_sieve, SieveOptions{catalog, ""});
  CHECK(full.code == exit_success);
  CHECK(full.out.find("61 candidate rows") != std::string::npos);

  CommandResult const bad = run(cmd_sieve, SieveOptions{"/no/such/file", ""});
  CHECK(bad.code == exit_input_error);
  CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("cmd_verify develops, verifies, and reports")
{
  CommandResult const hs = run(
    cmd_verify, VerifyOptions{source_path("fixtures/hs176.gens"),
                              source_path("fixtures/case31.block"), 2u, true,
                              true});
  CHECK(hs.code == exit_success);
  CHECK(hs.out.find("group HS (degree 176, order 44352000)") !=
        std::string::npos);
  CHECK(hs.out.find("block orbit: 1100 blocks") != std::string::npos);
  CHECK(hs.out.find("block stabilizer: order 40320, orbit lengths {8, 168}") !=
        std::string::npos);
  CHECK(hs.out.find("2-(176,8,2), b=1100, r=50, flag-transitive: yes, "
                    "antiflag-transitive: yes, primitive: yes") !=
        std::string::npos);

  CommandResult const biplane7 = run(
    cmd_verify, VerifyOptions{source_path("fixtures/c7.gens"),
                              source_path("fixtures/c7_biplane.block")});
  CHECK(biplane7.code == exit_success);
  CHECK(biplane7.out.find("2-(7,4,2), b=7, r=4") != std::string::npos);
  CHECK(biplane7.out.find("flag-transitive") == std::string::npos);

  CommandResult const fano = run(
    cmd_verify, VerifyOptions{source_path("fixtures/c7.gens"),
                              source_path("fixtures/c7_fano.block")});
  CHECK(fano.code == exit_verification_failed);
  CHECK(fano.out.find("not a 2-design") != std::string::npos);
  CHECK(fano.out.find("{1: 21}") != std::string::npos);

  CommandResult const fano_as_such = run(
    cmd_verify, VerifyOptions{source_path("fixtures/c7.gens"),
                              source_path("fixtures/c7_fano.block"), 1u});
  CHECK(fano_as_such.code == exit_success);
  CHECK(fano_as_such.out.find("2-(7,3,1), b=7, r=3") != std::string::npos);

  CommandResult const mismatch = run(
    cmd_verify, VerifyOptions{source_path("fixtures/m11.gens"),
                              source_path("fixtures/case31.block")});
  CHECK(mismatch.code == exit_input_error);
  CHECK(mismatch.err.find("error:") != std::string::npos);
}

TEST_CASE("cmd_table1 renders the candidate table")
{
  std::string const catalog = source_path("data/atlas.dat");
  std::string const tsv = temp_path("table1.tsv");

  CommandResult const plain = run(cmd_table1, TableOptions{catalog, "", tsv});
  CHECK(plain.code == exit_success);
  CHECK(read_file(tsv) == read_file(source_path("data/table1_golden.tsv")));
  CHECK(plain.out.find("the published table prints b = 17711") !=
        std::string::npos);
  CHECK(plain.out.find("the published prose reads b = 147720") !=
        std::string::npos);
  CHECK(plain.out.find("maximal subgroup list of Monster is incomplete") !=
        std::string::npos);
  std::remove(tsv.c_str());

  std::string const with_fixtures_tsv = temp_path("table1_fixtures.tsv");
  CommandResult const with_fixtures = run(
    cmd_table1,
    TableOptions{catalog, source_path("fixtures"), with_fixtures_tsv});
  CHECK(with_fixtures.code == exit_success);
  std::string const rows = read_file(with_fixtures_tsv);
  CHECK(rows.find("3\tM11\tM9:2\t55\t990\t54\t3\t2\tEliminated(orbit-length)") !=
        std::string::npos);
  CHECK(rows.find("4\tM11\tM9:2\t55\t495\t36\t4\t2\tEliminated(orbit-length)") !=
        std::string::npos);
  CHECK(rows.find("5\tM11\tM9:2\t55\t66\t12\t10\t2\tEliminated(two-design)") !=
        std::string::npos);
  CHECK(rows.find("31\tHS\tU3(5):2\t176\t1100\t50\t8\t2\tConstructed") !=
        std::string::npos);
  CHECK(rows.find("6\tM12\tM11\t12\t44\t11\t3\t2\tEliminated(divisibility)") !=
        std::string::npos);
  std::remove(with_fixtures_tsv.c_str());

  CommandResult const bad = run(cmd_table1, TableOptions{"/no/such/file", "", ""});
  CHECK(bad.code == exit_input_error);
}

TEST_CASE("cmd_table1 warns when a sieved group is missing from the catalog")
{
  // drop the HS record from a copy of the catalog
  std::string const content = read_file(source_path("data/atlas.dat"));
  std::size_t const start = content.find("group HS order");
  REQUIRE(start != std::string::npos);
  std::size_t const end = content.find("group ", start + 1u);
  REQUIRE(end != std::string::npos);

  std::string const reduced_path = temp_path("reduced.atlas");
  {
    std::ofstream reduced(reduced_path);
    reduced << content.substr(0u, start) << content.substr(end);
  }

  CommandResult const result = run(cmd_table1, TableOptions{reduced_path, "", ""});
  CHECK(result.code == exit_success);
  CHECK(result.out.find("catalog has no entry for HS") != std::string::npos);

  // the seven HS rows disappear and the numbering shifts accordingly
  std::size_t rows = 0u;
  std::istringstream lines(result.out);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty() && line.find_first_not_of("0123456789") != 0u)
      ++rows;
  CHECK(rows == 54u);
  std::remove(reduced_path.c_str());
}

TEST_CASE("cmd_stab prints the set orbit and stabilizer shape")
{
  CommandResult const result = run(
    cmd_stab, StabOptions{source_path("fixtures/m11.gens"), {0u, 1u, 2u}});
  CHECK(result.code == exit_success);
  CHECK(result.out ==
        "set orbit size: 165\n"
        "stabilizer order: 48\n"
        "stabilizer orbit lengths: {3, 8}\n");

  CommandResult const bad = run(
    cmd_stab, StabOptions{source_path("fixtures/m11.gens"), {0u, 99u}});
  CHECK(bad.code == exit_input_error);
  CHECK(bad.err.find("error:") != std::string::npos);
}
