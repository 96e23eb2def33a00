#include "biplane/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "biplane/chain.hpp"

namespace biplane {

namespace {

struct ImageHash {
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

} // namespace

std::vector<unsigned> orbit(GeneratorSet const &gens, unsigned point)
{
  if (point >= gens.degree)
    throw Error(ErrorKind::out_of_range,
                "point " + std::to_string(point) + " exceeds degree " +
                std::to_string(gens.degree));

  std::vector<bool> seen(gens.degree, false);
  seen[point] = true;
  std::vector<unsigned> frontier{point};
  std::vector<unsigned> result{point};
  while (!frontier.empty()) {
    std::vector<unsigned> next;
    for (unsigned x : frontier) {
      for (Perm const &g : gens.generators) {
        unsigned y = g[x];
        if (!seen[y]) {
          seen[y] = true;
          next.push_back(y);
          result.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

OrbitPartition orbit_partition(GeneratorSet const &gens)
{
  OrbitPartition part;
  part.degree = gens.degree;

  std::vector<bool> done(gens.degree, false);
  for (unsigned x = 0; x < gens.degree; ++x) {
    if (done[x])
      continue;
    std::vector<unsigned> cls = orbit(gens, x);
    for (unsigned y : cls)
      done[y] = true;
    part.classes.push_back(std::move(cls));
  }

  std::sort(part.classes.begin(), part.classes.end(),
            [](std::vector<unsigned> const &a, std::vector<unsigned> const &b) {
              if (a.size() != b.size())
                return a.size() < b.size();
              return a < b;
            });
  for (auto const &cls : part.classes)
    part.lengths.push_back(static_cast<unsigned>(cls.size()));
  return part;
}

bool is_transitive(GeneratorSet const &gens)
{
  return orbit(gens, 0).size() == gens.degree;
}

namespace {

unsigned uf_find(std::vector<unsigned> &parent, unsigned x)
{
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

} // namespace

bool is_primitive(GeneratorSet const &gens)
{
  if (!is_transitive(gens))
    throw Error(ErrorKind::not_transitive,
                "primitivity is defined for transitive groups only");

  unsigned n = gens.degree;
  if (n == 1)
    return true;

  for (unsigned beta = 1; beta < n; ++beta) {
    // minimal block system whose block contains {0, beta}
    std::vector<unsigned> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    std::vector<std::pair<unsigned, unsigned>> queue{{0, beta}};
    parent[uf_find(parent, beta)] = uf_find(parent, 0);
    unsigned merges = 1;
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      for (Perm const &g : gens.generators) {
        unsigned a = uf_find(parent, g[x]);
        unsigned b = uf_find(parent, g[y]);
        if (a != b) {
          parent[b] = a;
          ++merges;
          queue.emplace_back(g[x], g[y]);
        }
      }
    }
    if (merges < n - 1)
      return false;   // proper block system: the block of 0 is nontrivial
  }
  return true;
}

namespace {

// C(n, k) clipped at `cap` to avoid overflow.
unsigned long long binomial_clipped(unsigned n, unsigned k,
                                    unsigned long long cap)
{
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  unsigned long long result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step
    unsigned long long next = result * (n - k + i) / i;
    if (next > cap || result > cap)
      return cap + 1;
    result = next;
  }
  return result;
}

} // namespace

GeneratorSet induced_subset_action(GeneratorSet const &gens, unsigned k,
                                   unsigned long long degree_bound)
{
  unsigned n = gens.degree;
  if (k < 1 || k > n)
    throw Error(ErrorKind::domain_error,
                "subset size " + std::to_string(k) + " out of range");
  unsigned long long m = binomial_clipped(n, k, degree_bound);
  if (m > degree_bound)
    throw Error(ErrorKind::degree_overflow,
                "C(" + std::to_string(n) + "," + std::to_string(k) +
                ") exceeds the configured bound " +
                std::to_string(degree_bound));

  // binom[i][j] = C(i, j) for ranking, clipped (values used are < m)
  std::vector<std::vector<unsigned long long>> binom(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    binom[i].resize(k + 1);
    binom[i][0] = 1;
    for (unsigned j = 1; j <= k && j <= i; ++j)
      binom[i][j] = binomial_clipped(i, j, m + 1);
  }

  auto rank_of = [&](std::vector<unsigned> const &subset) {
    unsigned long long rank = 0;
    unsigned prev = 0;
    for (unsigned i = 0; i < k; ++i) {
      for (unsigned j = prev; j < subset[i]; ++j)
        rank += binom[n - 1 - j][k - 1 - i];
      prev = subset[i] + 1;
    }
    return rank;
  };

  unsigned degree = static_cast<unsigned>(m);
  std::vector<Perm> induced;
  for (Perm const &g : gens.generators) {
    std::vector<unsigned> images(degree);
    // iterate all k-subsets in lexicographic order
    std::vector<unsigned> subset(k);
    std::iota(subset.begin(), subset.end(), 0u);
    std::vector<unsigned> mapped(k);
    for (unsigned long long r = 0; r < m; ++r) {
      for (unsigned i = 0; i < k; ++i)
        mapped[i] = g[subset[i]];
      std::sort(mapped.begin(), mapped.end());
      images[static_cast<unsigned>(r)] =
        static_cast<unsigned>(rank_of(mapped));
      // advance to the next subset
      if (r + 1 < m) {
        int i = static_cast<int>(k) - 1;
        while (subset[i] == n - k + i)
          --i;
        ++subset[i];
        for (unsigned j = i + 1; j < k; ++j)
          subset[j] = subset[j - 1] + 1;
      }
    }
    induced.push_back(from_images(degree, images));
  }

  return make_generator_set(degree, std::move(induced), gens.names,
                            gens.name);
}

std::vector<Perm> enumerate_elements(GeneratorSet const &gens,
                                     unsigned long long bound)
{
  StabilizerChain chain = build_chain(gens);
  if (chain.order() > bound)
    throw Error(ErrorKind::bound_exceeded,
                "group order " + chain.order().str() +
                " exceeds the bound " + std::to_string(bound));

  std::unordered_set<std::vector<unsigned>, ImageHash> seen;
  std::vector<Perm> elements{Perm(gens.degree)};
  seen.insert(elements[0].images());
  size_t head = 0;
  while (head < elements.size()) {
    Perm p = elements[head++];
    for (Perm const &g : gens.generators) {
      Perm q = compose(p, g);
      if (seen.insert(q.images()).second)
        elements.push_back(q);
    }
  }
  return elements;
}

} // namespace biplane
