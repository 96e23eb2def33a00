#pragma once

#include <map>
#include <string>
#include <vector>

#include "biplane/gens_io.hpp"
#include "biplane/perm.hpp"
#include "biplane/sieve.hpp"

namespace biplane {

// fixtures bound to one case of the candidate table, in filename order
struct CaseFixtures {
  std::vector<std::pair<std::string, SubgroupFixture>> subgroups;
  std::vector<std::pair<std::string, OrbitFixture>> orbit_lists;
  std::vector<std::pair<std::string, BlockFixture>> block_fixtures;
};

// Scans a directory once:
//   *.gens            group generator files, keyed by their declared name
//   case<N>*.sub      candidate block-stabilizer subgroups for case N
//   case<N>*.block    explicit base blocks for case N
//   *.orbits          stabilizer orbit-length lists (case number from content)
// Files that fail to parse are reported through warnings() and skipped.
class FixtureStore {
public:
  FixtureStore() = default;
  explicit FixtureStore(std::string const &directory);

  bool empty() const
  { return _cases.empty() && _groups.empty(); }

  CaseFixtures const *fixtures_for(unsigned case_number) const;
  GeneratorSet const *group(std::string const &name) const;

  std::vector<std::string> const &warnings() const
  { return _warnings; }

private:
  std::map<unsigned, CaseFixtures> _cases;
  std::map<std::string, GeneratorSet> _groups;
  std::vector<std::string> _warnings;
};

struct CaseVerdict {
  enum class Kind { constructed, eliminated, data_required };

  Kind kind = Kind::data_required;
  std::string reason; // for eliminated: orbit-sum, orbit-length, two-design
  std::vector<std::string> notes;
};

// "Constructed", "DataRequired", or "Eliminated(<reason>)"
std::string to_string(CaseVerdict const &verdict);

// Runs the per-case pipeline against every fixture bound to the case:
// stabilizer orbit partition, orbit-sum test for k, development of each
// candidate orbit union with a block-count check, and the 2-design test.
// The case is eliminated only when every usable fixture eliminates it;
// a verified construction wins over everything else.
CaseVerdict run_case(CandidateCase const &candidate,
                     unsigned case_number,
                     FixtureStore const &store);

} // namespace biplane
