#include "biplane/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace biplane {

Perm::Perm(unsigned degree) : _images(degree)
{
  std::iota(_images.begin(), _images.end(), 0u);
}

bool Perm::is_identity() const
{
  for (unsigned x = 0; x < degree(); ++x)
    if (_images[x] != x)
      return false;
  return true;
}

Perm from_images(unsigned degree, std::vector<unsigned> const &images)
{
  if (degree == 0)
    throw Error(ErrorKind::domain_error, "degree must be positive");
  if (images.size() != degree)
    throw Error(ErrorKind::length_mismatch,
                "expected " + std::to_string(degree) + " images, got " +
                std::to_string(images.size()));

  std::vector<bool> seen(degree, false);
  for (unsigned x = 0; x < degree; ++x) {
    unsigned y = images[x];
    if (y >= degree)
      throw Error(ErrorKind::out_of_range,
                  "image " + std::to_string(y) + " of point " +
                  std::to_string(x) + " exceeds degree " +
                  std::to_string(degree));
    if (seen[y])
      throw Error(ErrorKind::duplicate_image,
                  "image " + std::to_string(y) + " appears twice");
    seen[y] = true;
  }

  return Perm(std::vector<unsigned>(images));
}

Perm compose(Perm const &p, Perm const &q)
{
  if (p.degree() != q.degree())
    throw Error(ErrorKind::degree_mismatch,
                std::to_string(p.degree()) + " vs " +
                std::to_string(q.degree()));

  std::vector<unsigned> images(p.degree());
  for (unsigned x = 0; x < p.degree(); ++x)
    images[x] = q._images[p._images[x]];
  return Perm(std::move(images));
}

Perm inverse(Perm const &p)
{
  std::vector<unsigned> images(p.degree());
  for (unsigned x = 0; x < p.degree(); ++x)
    images[p._images[x]] = x;
  return Perm(std::move(images));
}

GeneratorSet make_generator_set(unsigned degree, std::vector<Perm> generators,
                                std::vector<std::string> names,
                                std::string group_name)
{
  if (degree == 0)
    throw Error(ErrorKind::domain_error, "degree must be positive");
  for (Perm const &g : generators)
    if (g.degree() != degree)
      throw Error(ErrorKind::degree_mismatch,
                  "generator degree " + std::to_string(g.degree()) +
                  " differs from declared degree " + std::to_string(degree));
  if (!names.empty()) {
    if (names.size() != generators.size())
      throw Error(ErrorKind::length_mismatch,
                  "generator names not aligned with generators");
    std::set<std::string> distinct(names.begin(), names.end());
    if (distinct.size() != names.size())
      throw Error(ErrorKind::domain_error, "generator names not distinct");
  }
  if (generators.empty()) {
    generators.emplace_back(degree);
    if (!names.empty())
      names.clear();
  }

  GeneratorSet gens;
  gens.degree = degree;
  gens.name = std::move(group_name);
  gens.generators = std::move(generators);
  gens.names = std::move(names);
  return gens;
}

} // namespace biplane
