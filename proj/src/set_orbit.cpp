#include "biplane/set_orbit.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace biplane {

namespace {

struct SetHash {
  size_t operator()(std::vector<unsigned> const &v) const
  {
    size_t h = 1469598103934665603ull;
    for (unsigned x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<unsigned> apply_to_set(Perm const &g,
                                   std::vector<unsigned> const &s)
{
  std::vector<unsigned> image;
  image.reserve(s.size());
  for (unsigned x : s)
    image.push_back(g[x]);
  std::sort(image.begin(), image.end());
  return image;
}

} // namespace

std::vector<unsigned> SetOrbitResult::word_for(size_t i) const
{
  std::vector<unsigned> word;
  while (i != 0) {
    word.push_back(static_cast<unsigned>(via_generator[i]));
    i = parent[i];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

SetOrbitResult set_orbit_and_stabilizer(GeneratorSet const &gens,
                                        StabilizerChain const &chain,
                                        std::vector<unsigned> const &seed,
                                        size_t orbit_limit)
{
  if (seed.empty())
    throw Error(ErrorKind::domain_error, "seed set is empty");
  for (unsigned x : seed)
    if (x >= gens.degree)
      throw Error(ErrorKind::out_of_range,
                  "seed point " + std::to_string(x) + " exceeds degree " +
                  std::to_string(gens.degree));

  SetOrbitResult result;
  std::vector<unsigned> canonical(seed);
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()),
                  canonical.end());

  std::unordered_map<std::vector<unsigned>, size_t, SetHash> index;
  index.emplace(canonical, 0);
  result.orbit.push_back(std::move(canonical));
  result.parent.push_back(0);
  result.via_generator.push_back(-1);

  for (size_t head = 0; head < result.orbit.size(); ++head) {
    for (size_t gi = 0; gi < gens.generators.size(); ++gi) {
      std::vector<unsigned> image =
        apply_to_set(gens.generators[gi], result.orbit[head]);
      auto [it, inserted] = index.emplace(image, result.orbit.size());
      if (inserted) {
        if (result.orbit.size() >= orbit_limit)
          throw Error(ErrorKind::orbit_limit_exceeded,
                      "set orbit exceeds the cap of " +
                      std::to_string(orbit_limit) + " members");
        result.orbit.push_back(std::move(image));
        result.parent.push_back(head);
        result.via_generator.push_back(static_cast<int>(gi));
      }
    }
  }

  // transversal representatives along the BFS tree
  std::vector<Perm> reps;
  reps.reserve(result.orbit.size());
  reps.emplace_back(gens.degree);
  for (size_t i = 1; i < result.orbit.size(); ++i)
    reps.push_back(compose(reps[result.parent[i]],
                           gens.generators[result.via_generator[i]]));

  // Schreier generators of the setwise stabilizer, discarding those that
  // sift to the identity through the stabilizer chain built so far
  Bigint const orbit_size = result.orbit.size();
  std::vector<Perm> stab_gens;
  StabilizerChain stab_chain = build_chain(
    make_generator_set(gens.degree, {}));
  bool complete = stab_chain.order() * orbit_size == chain.order();
  for (size_t i = 0; i < result.orbit.size() && !complete; ++i) {
    for (size_t gi = 0; gi < gens.generators.size() && !complete; ++gi) {
      std::vector<unsigned> image =
        apply_to_set(gens.generators[gi], result.orbit[i]);
      size_t j = index.at(image);
      Perm schreier = compose(compose(reps[i], gens.generators[gi]),
                              inverse(reps[j]));
      if (schreier.is_identity() || stab_chain.contains(schreier))
        continue;
      assert(apply_to_set(schreier, result.orbit[0]) == result.orbit[0]);
      stab_gens.push_back(std::move(schreier));
      stab_chain = build_chain(make_generator_set(gens.degree, stab_gens));
      complete = stab_chain.order() * orbit_size == chain.order();
    }
  }
  assert(stab_chain.order() * orbit_size == chain.order());

  result.stabilizer = make_generator_set(gens.degree, std::move(stab_gens),
                                         {}, "set_stabilizer");
  result.stabilizer_order = stab_chain.order();
  return result;
}

} // namespace biplane
