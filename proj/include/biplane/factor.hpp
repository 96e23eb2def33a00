#pragma once

#include <map>
#include <vector>

#include "biplane/bigint.hpp"

namespace biplane {

// Miller-Rabin with a fixed base set (deterministic behavior; the bases
// cover every candidate arising from the catalog data to far beyond any
// known pseudoprime).
bool is_probable_prime(Bigint const &n);

// prime -> multiplicity, via trial division and Brent's variant of the
// Pollard rho method with deterministic parameters
std::map<Bigint, unsigned> factorize(Bigint n);

// all positive divisors, sorted ascending
std::vector<Bigint> divisors(Bigint const &n);

} // namespace biplane
