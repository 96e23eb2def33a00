#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biplane/chain.hpp"
#include "biplane/perm.hpp"
#include "biplane/sieve.hpp"

namespace biplane {

// A block system on the points {0, ..., v-1}.  Blocks are distinct
// k-subsets with 2 < k < v, each stored sorted ascending.
struct IncidenceStructure {
  unsigned v = 0u;
  std::vector<std::vector<unsigned>> blocks;
  unsigned declared_lambda = 2u;
};

struct VerificationReport {
  bool is_two_design = false;
  std::string failure; // set when the pair-coverage test fails

  std::optional<DesignParameters> params;
  // pair coverage count -> number of unordered point pairs with that count;
  // the structure is a 2-design iff the single key equals declared_lambda
  std::map<unsigned long long, unsigned long long> pair_coverage_histogram;
  std::optional<unsigned long long> replication; // r, when constant

  std::optional<bool> block_transitive;
  std::optional<bool> flag_transitive;
  std::optional<bool> antiflag_transitive;
  std::optional<bool> point_primitive;
};

// blocks = set orbit of 'base' under the group; block-transitive by
// construction
IncidenceStructure develop_block(GeneratorSet const &gens,
                                 StabilizerChain const &chain,
                                 std::vector<unsigned> const &base,
                                 unsigned declared_lambda = 2u);

// counts, for every unordered point pair, the blocks containing it
VerificationReport verify_two_design(IncidenceStructure const &s);

// true iff the incident (point, block) pairs form one orbit under the
// simultaneous action; requires s developed from gens
bool flag_transitivity(GeneratorSet const &gens,
                       StabilizerChain const &chain,
                       IncidenceStructure const &s);

// true iff the non-incident (point, block) pairs form one orbit
bool antiflag_transitivity(GeneratorSet const &gens,
                           StabilizerChain const &chain,
                           IncidenceStructure const &s);

} // namespace biplane
