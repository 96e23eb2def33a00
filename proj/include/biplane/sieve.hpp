#pragma once

#include <string>
#include <variant>
#include <vector>

#include "biplane/bigint.hpp"
#include "biplane/catalog.hpp"

namespace biplane {

struct DesignParameters {
  Bigint v;
  Bigint b;
  Bigint r;
  Bigint k;
  unsigned lambda = 2u;
};

// names the first violated admissibility condition
struct Inadmissible {
  std::string condition;
};

using CompletionResult = std::variant<DesignParameters, Inadmissible>;

// derive r and b from (v, k, lambda) and check the arithmetic constraints
CompletionResult complete_parameters(Bigint const &v,
                                     Bigint const &k,
                                     unsigned lambda);

// all k with 2 < k < v such that, with lambda = 2,
//   * k - 1 divides 2(v - 1),
//   * b = 2v(v - 1) / (k(k - 1)) is an integer,
//   * b >= v,
//   * b divides group_order;
// results are sorted by ascending k
std::vector<DesignParameters> admissible_parameters(Bigint const &v,
                                                    Bigint const &group_order);

// one admissible row of the candidate table
struct CandidateCase {
  std::string group;
  std::string point_stabilizer;
  std::size_t entry_index = 0u; // into Catalog::entries
  DesignParameters params;
  Bigint stabilizer_order; // |G| / b, the order a block stabilizer must have
};

// true iff some maximal subgroup M of 'entry' satisfies stab_order | |M|
// and, when depth > 0, M's own catalog entry passes at depth - 1; subgroups
// without a catalog entry of their own pass conservatively with a warning
bool maximal_divisibility_filter(Bigint const &stab_order,
                                 CatalogEntry const &entry,
                                 Catalog const &catalog,
                                 unsigned depth,
                                 std::vector<std::string> *warnings = nullptr);

struct SumDecision {
  bool representable = false;
  // sub-multisets of 'lengths' summing exactly to k, each sorted ascending,
  // listed in lexicographic order; every witness is minimal because the
  // lengths are positive
  std::vector<std::vector<unsigned long long>> witnesses;
  bool witnesses_truncated = false;
};

SumDecision orbit_sum_representable(std::vector<unsigned long long> lengths,
                                    unsigned long long k,
                                    std::size_t witness_cap = 64u);

// true for the groups the candidate table ranges over (the sporadic simple
// groups and their index-2 extensions present in the catalog)
bool is_sieved_group(std::string const &name);

// every admissible (group, maximal subgroup, parameters) triple, in catalog
// order; entries with an incomplete maximal-subgroup list add a warning
std::vector<CandidateCase> sieve_catalog(Catalog const &catalog,
                                         std::vector<std::string> *warnings = nullptr);

} // namespace biplane
