#pragma once

#include <vector>

#include "biplane/perm.hpp"

namespace biplane {

// The orbits of a group on its domain: disjoint sorted classes covering
// {0,...,degree-1}, ordered by (size, smallest point), plus the sorted
// multiset of class sizes.
struct OrbitPartition {
  unsigned degree = 0;
  std::vector<std::vector<unsigned>> classes;
  std::vector<unsigned> lengths;
};

// Smallest generator-closed set containing `point`, sorted ascending.
std::vector<unsigned> orbit(GeneratorSet const &gens, unsigned point);

OrbitPartition orbit_partition(GeneratorSet const &gens);

bool is_transitive(GeneratorSet const &gens);

// Minimal-block refinement: true iff for every point b != 0 the minimal
// block system containing {0,b} is the trivial one.  Throws NotTransitive
// on intransitive input.
bool is_primitive(GeneratorSet const &gens);

// Action on k-subsets of the domain, points labeled by the lexicographic
// rank of the sorted subset.  Generator names carry over.
GeneratorSet induced_subset_action(GeneratorSet const &gens, unsigned k,
                                   unsigned long long degree_bound = 1000000);

// All group elements by breadth-first closure, deterministic order, the
// identity first.  The group order is checked against `bound` via a
// stabilizer chain before any enumeration happens.
std::vector<Perm> enumerate_elements(GeneratorSet const &gens,
                                     unsigned long long bound);

} // namespace biplane
