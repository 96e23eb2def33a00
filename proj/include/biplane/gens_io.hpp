#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "biplane/perm.hpp"
#include "biplane/word.hpp"

namespace biplane {

// `.gens` file:
//   degree <n>
//   name <identifier>
//   gen <name> <i0> <i1> ... <i(n-1)>     (0-based images)
// Comment lines start with '#'.  ASCII, LF line endings.
GeneratorSet parse_generator_file(std::istream &in);
GeneratorSet load_generator_file(std::string const &path);

// `.sub` fixture file:
//   subgroup <name> of <groupname>
//   word <word-text>                       (one line per subgroup generator)
struct SubgroupFixture {
  std::string name;
  std::string group_name;
  std::vector<GroupWord> words;
};

SubgroupFixture parse_sub_file(std::istream &in);
SubgroupFixture load_sub_file(std::string const &path);

// `.block` fixture file:
//   v <n>
//   block <i0> <i1> ...                    (0-based sorted points)
struct BlockFixture {
  unsigned v = 0;
  std::vector<unsigned> block;
};

BlockFixture parse_block_file(std::istream &in);
BlockFixture load_block_file(std::string const &path);

// `.orbits` fixture file: orbit lengths of a candidate block stabilizer
// recorded without permutations (for groups with no generator fixture):
//   case <n>
//   group <name>
//   subgroup <name>
//   order <decimal>
//   lengths <l0> <l1> ...
//   complete <yes|no>      (no = only the smallest lengths are listed)
struct OrbitFixture {
  unsigned case_number = 0;
  std::string group_name;
  std::string subgroup_name;
  std::string order;            // decimal, may exceed 64 bits
  std::vector<unsigned> lengths;
  bool complete = true;
};

OrbitFixture parse_orbits_file(std::istream &in);
OrbitFixture load_orbits_file(std::string const &path);

// Evaluates the fixture's words in the named group's generators.
GeneratorSet subgroup_generators(SubgroupFixture const &fixture,
                                 GeneratorSet const &group);

} // namespace biplane
