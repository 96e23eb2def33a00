#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "biplane/error.hpp"

namespace biplane {

// A permutation of {0,...,degree-1} stored as an image array.
// Composition is left-to-right throughout: (p * q)(x) = q(p(x)).
class Perm {
public:
  Perm() = default;

  // identity on `degree` points
  explicit Perm(unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(_images.size()); }
  unsigned operator[](unsigned x) const { return _images[x]; }
  std::vector<unsigned> const &images() const { return _images; }

  bool is_identity() const;

  friend bool operator==(Perm const &p, Perm const &q)
  { return p._images == q._images; }
  friend bool operator!=(Perm const &p, Perm const &q)
  { return p._images != q._images; }
  friend bool operator<(Perm const &p, Perm const &q)
  { return p._images < q._images; }

  friend Perm from_images(unsigned degree, std::vector<unsigned> const &images);
  friend Perm compose(Perm const &p, Perm const &q);
  friend Perm inverse(Perm const &p);

private:
  explicit Perm(std::vector<unsigned> &&images) : _images(std::move(images)) {}

  std::vector<unsigned> _images;
};

// Validates that `images` is a bijection on {0,...,degree-1}.
Perm from_images(unsigned degree, std::vector<unsigned> const &images);

// (p * q)(x) = q(p(x))
Perm compose(Perm const &p, Perm const &q);

Perm inverse(Perm const &p);

// A named group given by generating permutations of equal degree.
struct GeneratorSet {
  unsigned degree = 0;
  std::string name;                   // group name, may be empty
  std::vector<Perm> generators;       // nonempty
  std::vector<std::string> names;     // empty, or aligned with generators
};

// Validates degrees and name alignment; an empty generator list becomes
// the trivial group <identity>.
GeneratorSet make_generator_set(unsigned degree, std::vector<Perm> generators,
                                std::vector<std::string> names = {},
                                std::string group_name = "");

} // namespace biplane
