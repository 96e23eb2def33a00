#include "biplane/sieve.hpp"

#include <algorithm>
#include <cassert>

#include <boost/integer/common_factor_rt.hpp>
#include <boost/multiprecision/integer.hpp>

#include "biplane/error.hpp"
#include "biplane/factor.hpp"

namespace biplane {

CompletionResult complete_parameters(Bigint const &v,
                                     Bigint const &k,
                                     unsigned lambda)
{
  if (v < 3 || lambda == 0u)
    throw Error(ErrorKind::domain_error,
                "complete_parameters requires v >= 3 and lambda >= 1");
  if (k <= 2 || k >= v)
    return Inadmissible{"2 < k < v fails"};

  Bigint const rnum = lambda * (v - 1);
  if (rnum % (k - 1) != 0)
    return Inadmissible{"r = lambda(v-1)/(k-1) is not an integer"};
  Bigint const r = rnum / (k - 1);

  Bigint const bnum = v * r;
  if (bnum % k != 0)
    return Inadmissible{"b = vr/k is not an integer"};
  Bigint const b = bnum / k;

  if (b < v)
    return Inadmissible{"b < v (Fisher's inequality fails)"};

  return DesignParameters{v, b, r, k, lambda};
}

namespace {

// largest divisor of n coprime to m
Bigint coprime_part(Bigint n, Bigint const &m)
{
  Bigint g = boost::integer::gcd(n, m);
  while (g > 1) {
    n /= g;
    g = boost::integer::gcd(n, g);
  }
  return n;
}

// divisors of the number with the given factorization, capped at 'limit'
void capped_divisors(std::vector<std::pair<Bigint, unsigned>> const &factors,
                     Bigint const &limit,
                     std::size_t index,
                     Bigint const &prefix,
                     std::vector<Bigint> &out)
{
  if (index == factors.size()) {
    out.push_back(prefix);
    if (out.size() > 10000000u)
      throw Error(ErrorKind::size_limit_exceeded,
                  "divisor enumeration exceeds 10^7 entries");
    return;
  }
  Bigint value = prefix;
  for (unsigned e = 0u; e <= factors[index].second; ++e) {
    if (value > limit)
      break;
    capped_divisors(factors, limit, index + 1u, value, out);
    value *= factors[index].first;
  }
}

} // namespace

std::vector<DesignParameters> admissible_parameters(Bigint const &v,
                                                    Bigint const &group_order)
{
  if (v < 3 || group_order < v)
    throw Error(ErrorKind::domain_error,
                "admissible_parameters requires v >= 3 and group order >= v");

  // The constraints pin down k(k-1) almost completely: b = 2v(v-1)/(k(k-1))
  // must divide the group order, so any prime power of 2v(v-1) coprime to
  // the order has to be absorbed by k(k-1) in full.  Writing 2v(v-1) = S*W
  // with S the order-coprime part, the candidates are exactly
  // k(k-1) = S*t for divisors t of W, and Fisher's inequality (b >= v,
  // i.e. k(k-1) <= 2(v-1)) caps t.  This sidesteps factoring S, which for
  // large point counts may have no small prime factors at all.
  Bigint const target = 2 * (v - 1);
  Bigint const m = v * target;
  Bigint const s = coprime_part(m, group_order);
  if (s > target)
    return {};

  Bigint w = m / s;
  std::vector<std::pair<Bigint, unsigned>> factors;
  for (auto const &[p, e] : factorize(group_order)) {
    (void)e;
    unsigned mult = 0u;
    while (w % p == 0) {
      w /= p;
      ++mult;
    }
    if (mult > 0u)
      factors.emplace_back(p, mult);
  }
  assert(w == 1); // every prime of W divides the group order

  std::vector<Bigint> ts;
  capped_divisors(factors, target / s, 0u, Bigint(1), ts);

  std::vector<DesignParameters> out;
  for (Bigint const &t : ts) {
    Bigint const n = s * t; // candidate value of k(k-1)
    Bigint const disc = 4 * n + 1;
    Bigint const root = boost::multiprecision::sqrt(disc);
    if (root * root != disc || (root + 1) % 2 != 0)
      continue;
    Bigint const k = (root + 1) / 2;

    if (k <= 2 || k >= v)
      continue;
    if (target % (k - 1) != 0)
      continue;
    Bigint const b = m / n; // integral since n = s*t divides m = s*W
    if (group_order % b != 0)
      continue;

    out.push_back(DesignParameters{v, b, target / (k - 1), k, 2u});
  }

  std::sort(out.begin(), out.end(),
            [](DesignParameters const &x, DesignParameters const &y)
            { return x.k < y.k; });
  return out;
}

bool maximal_divisibility_filter(Bigint const &stab_order,
                                 CatalogEntry const &entry,
                                 Catalog const &catalog,
                                 unsigned depth,
                                 std::vector<std::string> *warnings)
{
  if (stab_order < 1)
    throw Error(ErrorKind::domain_error,
                "maximal_divisibility_filter requires a positive order");

  for (MaximalRecord const &m : entry.maximal_subgroups) {
    if (m.order % stab_order != 0)
      continue;
    if (depth == 0u)
      return true;

    CatalogEntry const *nested = catalog.find(m.name);
    if (!nested) {
      if (warnings)
        warnings->push_back("no catalog entry for " + m.name +
                            " (maximal in " + entry.name +
                            "); treated as passing");
      return true;
    }
    if (maximal_divisibility_filter(stab_order, *nested, catalog, depth - 1u,
                                    warnings))
      return true;
  }

  return false;
}

SumDecision orbit_sum_representable(std::vector<unsigned long long> lengths,
                                    unsigned long long k,
                                    std::size_t witness_cap)
{
  std::size_t const max_lengths = 64u;
  unsigned long long const max_sum = 1000000u;

  if (lengths.size() > max_lengths)
    throw Error(ErrorKind::size_limit_exceeded,
                "more than " + std::to_string(max_lengths) + " orbit lengths");
  if (k > max_sum)
    throw Error(ErrorKind::size_limit_exceeded,
                "target sum exceeds " + std::to_string(max_sum));
  for (unsigned long long l : lengths)
    if (l == 0u)
      throw Error(ErrorKind::domain_error, "orbit lengths must be positive");

  std::sort(lengths.begin(), lengths.end());

  SumDecision decision;

  // subset-sum over the multiset, each element usable at most once
  {
    std::vector<bool> reachable(k + 1u, false);
    reachable[0] = true;
    for (unsigned long long l : lengths) {
      if (l > k)
        break;
      for (unsigned long long s = k; s >= l; --s)
        if (reachable[s - l])
          reachable[s] = true;
    }
    decision.representable = reachable[k];
  }

  if (!decision.representable)
    return decision;

  // enumerate the distinct witnesses in lexicographic order; equal lengths
  // are skipped at the same recursion level so each sub-multiset appears once
  std::vector<unsigned long long> suffix(lengths.size() + 1u, 0u);
  for (std::size_t i = lengths.size(); i-- > 0u;)
    suffix[i] = suffix[i + 1u] + lengths[i];

  std::vector<unsigned long long> current;
  auto dfs = [&](auto &&self, std::size_t from, unsigned long long remaining) -> void {
    if (remaining == 0u) {
      if (decision.witnesses.size() < witness_cap)
        decision.witnesses.push_back(current);
      else
        decision.witnesses_truncated = true;
      return;
    }
    for (std::size_t i = from; i < lengths.size(); ++i) {
      if (decision.witnesses_truncated)
        return;
      if (i > from && lengths[i] == lengths[i - 1u])
        continue;
      if (lengths[i] > remaining)
        break;
      if (suffix[i] < remaining)
        break;
      current.push_back(lengths[i]);
      self(self, i + 1u, remaining - lengths[i]);
      current.pop_back();
    }
  };
  dfs(dfs, 0u, k);

  assert(!decision.witnesses.empty());
  return decision;
}

namespace {

// sporadic simple groups and their automorphism extensions, the family
// the sieve classifies over
std::vector<std::string> const &sieved_names()
{
  static std::vector<std::string> const names{
    "M11",   "M12",   "M22",   "M23",  "M24",  "J1",    "J2",    "J3",
    "J4",    "Co1",   "Co2",   "Co3",  "Fi22", "Fi23",  "Fi24'", "HS",
    "McL",   "He",    "Ru",    "Suz",  "O'N",  "HN",    "Ly",    "Th",
    "B",     "Monster",
    "M12:2", "M22:2", "J2:2",  "J3:2", "HS:2", "McL:2", "Suz:2", "He:2",
    "HN:2",  "Fi22:2", "Fi24", "O'N:2"};
  return names;
}

} // namespace

bool is_sieved_group(std::string const &name)
{
  auto const &names = sieved_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CandidateCase> sieve_catalog(Catalog const &catalog,
                                         std::vector<std::string> *warnings)
{
  std::vector<CandidateCase> out;

  if (warnings) {
    for (std::string const &name : sieved_names())
      if (!catalog.find(name))
        warnings->push_back("catalog has no entry for " + name +
                            "; its rows are missing from the table");
  }

  for (std::size_t ei = 0u; ei < catalog.entries.size(); ++ei) {
    CatalogEntry const &entry = catalog.entries[ei];
    if (!is_sieved_group(entry.name))
      continue;
    if (!entry.complete_list && warnings)
      warnings->push_back("maximal subgroup list of " + entry.name +
                          " is incomplete; its rows are not a classification");

    for (MaximalRecord const &m : entry.maximal_subgroups) {
      Bigint const v = entry.order / m.order;
      if (v < 3)
        continue;

      for (DesignParameters const &p : admissible_parameters(v, entry.order)) {
        CandidateCase c;
        c.group = entry.name;
        c.point_stabilizer = m.name;
        c.entry_index = ei;
        c.params = p;
        c.stabilizer_order = entry.order / p.b;
        out.push_back(std::move(c));
      }
    }
  }

  return out;
}

} // namespace biplane
