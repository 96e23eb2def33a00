#pragma once

#include <vector>

#include "biplane/bigint.hpp"
#include "biplane/perm.hpp"

namespace biplane {

// Base and strong generating set built by a deterministic Schreier-Sims
// procedure: base points are the smallest points moved by the offending
// elements, and every candidate strong generator is verified bottom-up
// through Schreier generators, so `order()` is the exact group order.
class StabilizerChain {
public:
  StabilizerChain() = default;

  unsigned degree() const { return _degree; }
  Bigint const &order() const { return _order; }
  std::vector<unsigned> const &base() const { return _base; }

  // residue of p after sifting through every level
  Perm sift(Perm const &p) const;

  // true iff p sifts to the identity
  bool contains(Perm const &p) const;

  // strong generators fixing base[0..level), i.e. a generating set for the
  // pointwise stabilizer of the first `level` base points
  GeneratorSet level_generators(size_t level) const;

  // number of levels (= base length)
  size_t depth() const { return _levels.size(); }

  // fundamental orbit length at a level
  size_t orbit_length(size_t level) const
  { return _levels[level].orbit.size(); }

  friend StabilizerChain build_chain(GeneratorSet const &gens);
  friend StabilizerChain build_chain_with_base(
    GeneratorSet const &gens, std::vector<unsigned> const &base_prefix);

private:
  struct Level {
    unsigned beta = 0;
    std::vector<Perm> gens;          // strong generators fixing earlier base points
    std::vector<int> slot;           // point -> index into transversal, or -1
    std::vector<Perm> transversal;   // u with u(beta) = point
    std::vector<unsigned> orbit;     // discovery order, orbit[0] = beta
  };

  explicit StabilizerChain(unsigned degree) : _degree(degree) {}

  void append_level(unsigned beta);
  size_t fixed_prefix(Perm const &p) const;
  void install(Perm const &p);
  void rebuild_orbit(size_t level);
  // sift starting at `start`; returns the residue and the level at which
  // sifting stopped (depth() if the residue fixes every base point)
  std::pair<Perm, size_t> sift_from(size_t start, Perm p) const;
  void verify();
  void finish();

  unsigned _degree = 0;
  Bigint _order = 1;
  std::vector<unsigned> _base;
  std::vector<Level> _levels;
};

// Deterministic Schreier-Sims over the generators.
StabilizerChain build_chain(GeneratorSet const &gens);

// Same, but the given points are installed as the leading base points, so
// level k is the pointwise stabilizer of base_prefix[0..k) for k up to the
// prefix length.
StabilizerChain build_chain_with_base(GeneratorSet const &gens,
                                      std::vector<unsigned> const &base_prefix);

// Generators of the stabilizer of `point`, obtained from a chain rebuilt
// with `point` leading the base.
GeneratorSet point_stabilizer(StabilizerChain const &chain, unsigned point);

} // namespace biplane
