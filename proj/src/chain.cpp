#include "biplane/chain.hpp"

#include <algorithm>
#include <cassert>

namespace biplane {

void StabilizerChain::append_level(unsigned beta)
{
  Level level;
  level.beta = beta;
  level.slot.assign(_degree, -1);
  level.slot[beta] = 0;
  level.transversal.emplace_back(_degree);
  level.orbit.push_back(beta);
  _levels.push_back(std::move(level));
  _base.push_back(beta);
}

size_t StabilizerChain::fixed_prefix(Perm const &p) const
{
  size_t m = 0;
  while (m < _base.size() && p[_base[m]] == _base[m])
    ++m;
  return m;
}

void StabilizerChain::install(Perm const &p)
{
  if (p.is_identity())
    return;
  size_t m = fixed_prefix(p);
  if (m == _base.size()) {
    unsigned moved = 0;
    while (p[moved] == moved)
      ++moved;
    append_level(moved);
  }
  size_t top = std::min(m, _levels.size() - 1);
  for (size_t l = 0; l <= top; ++l) {
    auto &gens = _levels[l].gens;
    if (std::find(gens.begin(), gens.end(), p) == gens.end())
      gens.push_back(p);
  }
}

void StabilizerChain::rebuild_orbit(size_t li)
{
  Level &level = _levels[li];
  level.slot.assign(_degree, -1);
  level.transversal.clear();
  level.orbit.clear();
  level.slot[level.beta] = 0;
  level.transversal.emplace_back(_degree);
  level.orbit.push_back(level.beta);
  for (size_t head = 0; head < level.orbit.size(); ++head) {
    unsigned x = level.orbit[head];
    Perm const ux = level.transversal[level.slot[x]];
    for (Perm const &g : level.gens) {
      unsigned y = g[x];
      if (level.slot[y] < 0) {
        level.slot[y] = static_cast<int>(level.orbit.size());
        level.orbit.push_back(y);
        level.transversal.push_back(compose(ux, g));
      }
    }
  }
}

std::pair<Perm, size_t> StabilizerChain::sift_from(size_t start, Perm p) const
{
  for (size_t i = start; i < _levels.size(); ++i) {
    Level const &level = _levels[i];
    unsigned x = p[level.beta];
    if (level.slot[x] < 0)
      return {std::move(p), i};
    p = compose(p, inverse(level.transversal[level.slot[x]]));
  }
  return {std::move(p), _levels.size()};
}

void StabilizerChain::verify()
{
  for (size_t l = 0; l < _levels.size(); ++l)
    rebuild_orbit(l);

  // Bottom-up Schreier-generator verification: at each level every
  // Schreier generator must sift to the identity through the deeper
  // levels; failures extend the deeper levels and verification resumes
  // from the repaired level.  Deeper-level repairs may grow `_levels`,
  // so this loop uses indices and copies, never references across
  // mutations.
  long i = static_cast<long>(_levels.size()) - 1;
  while (i >= 0) {
    size_t const li = static_cast<size_t>(i);
    rebuild_orbit(li);
    size_t const orbit_size = _levels[li].orbit.size();
    size_t const gen_count = _levels[li].gens.size();
    long deeper = -1;
    for (size_t oi = 0; oi < orbit_size && deeper < 0; ++oi) {
      unsigned x = _levels[li].orbit[oi];
      Perm const ux = _levels[li].transversal[_levels[li].slot[x]];
      for (size_t gi = 0; gi < gen_count; ++gi) {
        Perm const g = _levels[li].gens[gi];
        Perm const v = _levels[li].transversal[_levels[li].slot[g[x]]];
        Perm schreier = compose(compose(ux, g), inverse(v));
        if (schreier.is_identity())
          continue;
        auto [residue, j] = sift_from(li + 1, std::move(schreier));
        if (residue.is_identity())
          continue;
        if (j == _levels.size()) {
          unsigned moved = 0;
          while (residue[moved] == moved)
            ++moved;
          append_level(moved);
        }
        for (size_t l = li + 1; l <= j; ++l) {
          _levels[l].gens.push_back(residue);
          rebuild_orbit(l);
        }
        deeper = static_cast<long>(j);
        break;
      }
    }
    if (deeper >= 0)
      i = deeper;
    else
      --i;
  }
}

void StabilizerChain::finish()
{
  _order = 1;
  for (Level const &level : _levels)
    _order *= static_cast<unsigned long long>(level.orbit.size());
}

Perm StabilizerChain::sift(Perm const &p) const
{
  if (p.degree() != _degree)
    throw Error(ErrorKind::degree_mismatch,
                std::to_string(p.degree()) + " vs chain degree " +
                std::to_string(_degree));
  return sift_from(0, p).first;
}

bool StabilizerChain::contains(Perm const &p) const
{
  return sift(p).is_identity();
}

GeneratorSet StabilizerChain::level_generators(size_t level) const
{
  std::vector<Perm> gens;
  if (level < _levels.size())
    gens = _levels[level].gens;
  return make_generator_set(_degree, std::move(gens));
}

StabilizerChain build_chain(GeneratorSet const &gens)
{
  return build_chain_with_base(gens, {});
}

StabilizerChain build_chain_with_base(GeneratorSet const &gens,
                                      std::vector<unsigned> const &base_prefix)
{
  StabilizerChain chain(gens.degree);
  for (unsigned beta : base_prefix) {
    if (beta >= gens.degree)
      throw Error(ErrorKind::out_of_range,
                  "base point " + std::to_string(beta) + " exceeds degree");
    chain.append_level(beta);
  }
  for (Perm const &g : gens.generators) {
    if (g.degree() != gens.degree)
      throw Error(ErrorKind::degree_mismatch, "generator degree mismatch");
    chain.install(g);
  }
  chain.verify();
  chain.finish();

  // every strong generator sifts to the identity
  assert(std::all_of(gens.generators.begin(), gens.generators.end(),
                     [&](Perm const &p) { return chain.contains(p); }));
  return chain;
}

GeneratorSet point_stabilizer(StabilizerChain const &chain, unsigned point)
{
  if (point >= chain.degree())
    throw Error(ErrorKind::out_of_range,
                "point " + std::to_string(point) + " exceeds degree " +
                std::to_string(chain.degree()));

  StabilizerChain rebased =
    build_chain_with_base(chain.level_generators(0), {point});
  GeneratorSet stab = rebased.level_generators(1);
  stab.name = "stab";
  return stab;
}

} // namespace biplane
