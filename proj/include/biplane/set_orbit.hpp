#pragma once

#include <vector>

#include "biplane/bigint.hpp"
#include "biplane/chain.hpp"
#include "biplane/perm.hpp"

namespace biplane {

// Orbit of a point set under a group, with transversal words and the
// setwise stabilizer of the seed.
struct SetOrbitResult {
  // canonical sorted sets in BFS discovery order; orbit[0] is the seed
  std::vector<std::vector<unsigned>> orbit;
  // BFS tree: orbit[i] = image of orbit[parent[i]] under
  // generators[via_generator[i]]; the seed has parent 0, via -1
  std::vector<size_t> parent;
  std::vector<int> via_generator;
  GeneratorSet stabilizer;
  Bigint stabilizer_order;

  // left-to-right generator-index word mapping the seed to orbit[i]
  std::vector<unsigned> word_for(size_t i) const;
};

// BFS over set images with Schreier-lemma stabilizer generators, reduced
// by sifting against the stabilizer chain built so far.  `chain` must be
// a chain for `gens`; it supplies the group order for the early exit
// |orbit| * |stabilizer| = |G|.
SetOrbitResult set_orbit_and_stabilizer(GeneratorSet const &gens,
                                        StabilizerChain const &chain,
                                        std::vector<unsigned> const &seed,
                                        size_t orbit_limit = 10000000);

} // namespace biplane
