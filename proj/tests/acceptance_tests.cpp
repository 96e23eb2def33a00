// Acceptance harness: six end-to-end criteria, one pass/fail line each.
// Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "biplane/chain.hpp"
#include "biplane/cli.hpp"
#include "biplane/design.hpp"
#include "biplane/gens_io.hpp"
#include "biplane/group.hpp"
#include "biplane/run_case.hpp"
#include "biplane/set_orbit.hpp"
#include "biplane/sieve.hpp"
#include "test_util.hpp"

using namespace biplane;
using testutil::source_path;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds = 0.0;
  std::function<void(std::ostream &)> body; // throws std::runtime_error on failure
};

void expect(bool condition, std::string const &what)
{
  if (!condition)
    throw std::runtime_error(what);
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  expect(in.good(), "cannot open " + path);
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

// ---- criterion 1: full candidate table, byte-identical machine output ----

void criterion_table(std::ostream &log)
{
  std::string const tsv_path = "/tmp/biplane_acceptance_table1.tsv";
  std::ostringstream out, err;
  TableOptions options;
  options.catalog_path = source_path("data/atlas.dat");
  options.tsv_path = tsv_path;

  expect(cmd_table1(options, out, err) == exit_success, "cmd_table1 failed");

  std::string const tsv = read_file(tsv_path);
  std::remove(tsv_path.c_str());
  expect(tsv == read_file(source_path("data/table1_golden.tsv")),
         "TSV output differs from the golden file");
  expect(std::count(tsv.begin(), tsv.end(), '\n') == 61, "expected 61 rows");
  expect(tsv.find("21\tM23\t2^4:(3xA5):2\t1771\t1771\t60\t60\t2\t") !=
           std::string::npos,
         "case 21 must report b = 1771");
  expect(out.str().find("the published table prints b = 17711") !=
           std::string::npos,
         "case 21 discrepancy annotation missing");
  log << "61 rows byte-identical, case 21 annotated";
}

// ---- criterion 2: 176-point biplane end to end ----

void criterion_hs(std::ostream &log)
{
  std::ostringstream out, err;
  VerifyOptions options;
  options.gens_path = source_path("fixtures/hs176.gens");
  options.block_path = source_path("fixtures/case31.block");
  options.check_flags = true;
  options.check_primitivity = true;

  expect(cmd_verify(options, out, err) == exit_success, "cmd_verify failed");
  for (std::string const needle :
       {"block orbit: 1100 blocks",
        "block stabilizer: order 40320, orbit lengths {8, 168}",
        "2-(176,8,2), b=1100, r=50, flag-transitive: yes, "
        "antiflag-transitive: yes, primitive: yes"})
    expect(out.str().find(needle) != std::string::npos,
           "verify output missing \"" + needle + "\"");
  log << "2-(176,8,2) constructed and fully verified";
}

// ---- criterion 3: degree-55 case eliminations ----

void criterion_m11_cases(std::ostream &log)
{
  Catalog const catalog = load_catalog_file(source_path("data/atlas.dat"));
  std::vector<CandidateCase> const cases = sieve_catalog(catalog);
  FixtureStore const store(source_path("fixtures"));

  auto note_contains = [](CaseVerdict const &verdict, std::string const &text) {
    return std::any_of(verdict.notes.begin(), verdict.notes.end(),
                       [&](std::string const &note)
                       { return note.find(text) != std::string::npos; });
  };

  CaseVerdict const case3 = run_case(cases.at(2), 3u, store);
  expect(case3.kind == CaseVerdict::Kind::eliminated &&
           case3.reason == "orbit-length",
         "case 3 must fall to the block-orbit length test");
  expect(note_contains(case3, "165 blocks, b = 990"),
         "case 3 must develop 165 blocks against b = 990");

  CaseVerdict const case4 = run_case(cases.at(3), 4u, store);
  expect(case4.kind == CaseVerdict::Kind::eliminated &&
           case4.reason == "orbit-length",
         "case 4 must fall to the block-orbit length test");
  expect(note_contains(case4, "165 blocks, b = 495"),
         "case 4 must develop 165 blocks against b = 495");

  CaseVerdict const case5 = run_case(cases.at(4), 5u, store);
  expect(case5.kind == CaseVerdict::Kind::eliminated &&
           case5.reason == "two-design",
         "case 5 must fall to the pair-coverage test");
  expect(note_contains(case5, "66 blocks") &&
           note_contains(case5, "pair coverage is not constant"),
         "case 5 must reach 66 blocks and fail the pair count");

  log << "cases 3, 4 eliminated by orbit length; case 5 by pair coverage";
}

// ---- criterion 4: orbit-sum eliminations against fixtures and oracle ----

void criterion_orbit_sums(std::ostream &log)
{
  OrbitFixture const blocked =
    load_orbits_file(source_path("fixtures/case49_l1.orbits"));
  std::vector<unsigned long long> const blocked_lengths(
    blocked.lengths.begin(), blocked.lengths.end());
  expect(blocked_lengths ==
           std::vector<unsigned long long>{144u, 288u, 288u, 288u, 288u, 288u,
                                           576u},
         "stored orbit fixture drifted");
  expect(!orbit_sum_representable(blocked_lengths, 480u).representable,
         "480 must not be a sum of {144, 288x5, 576}");

  OrbitFixture const open =
    load_orbits_file(source_path("fixtures/case61_n2.orbits"));
  std::vector<unsigned long long> const open_lengths(open.lengths.begin(),
                                                     open.lengths.end());
  expect(open_lengths ==
           std::vector<unsigned long long>{16u, 48u, 48u, 72u, 72u},
         "stored orbit fixture drifted");
  SumDecision const witness = orbit_sum_representable(open_lengths, 88u);
  expect(witness.representable &&
           witness.witnesses ==
             std::vector<std::vector<unsigned long long>>{{16u, 72u}},
         "88 must decompose exactly as 16 + 72");

  // exhaustive sub-multiset oracle on randomized instances
  std::mt19937 rng(480u);
  std::uniform_int_distribution<int> pick_size(0, 14);
  std::uniform_int_distribution<unsigned long long> pick_length(1u, 60u);
  std::uniform_int_distribution<unsigned long long> pick_k(0u, 300u);

  for (int trial = 0; trial < 400; ++trial) {
    std::vector<unsigned long long> lengths;
    int const size = pick_size(rng);
    for (int i = 0; i < size; ++i)
      lengths.push_back(pick_length(rng));
    unsigned long long const k = pick_k(rng);

    std::set<std::vector<unsigned long long>> expected;
    std::vector<unsigned long long> sorted = lengths;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t mask = 0u; mask < (std::size_t{1} << size); ++mask) {
      unsigned long long sum = 0u;
      std::vector<unsigned long long> subset;
      for (int i = 0; i < size; ++i)
        if (mask & (std::size_t{1} << i)) {
          sum += sorted[i];
          subset.push_back(sorted[i]);
        }
      if (sum == k)
        expected.insert(subset);
    }

    SumDecision const decision = orbit_sum_representable(lengths, k);
    expect(decision.representable == !expected.empty(),
           "representability disagrees with the exhaustive oracle");
    if (!decision.witnesses_truncated) {
      std::set<std::vector<unsigned long long>> const got(
        decision.witnesses.begin(), decision.witnesses.end());
      expect(got == expected,
             "witness list disagrees with the exhaustive oracle");
    }
    for (auto const &w : decision.witnesses)
      expect(std::accumulate(w.begin(), w.end(), 0ull) == k,
             "witness does not sum to k");
  }
  log << "fixture sums and 400 oracle rounds agree";
}

// ---- criterion 5: divisibility filter anchors ----

void criterion_divisibility(std::ostream &log)
{
  Catalog const catalog = load_catalog_file(source_path("data/atlas.dat"));

  CatalogEntry const *fi24 = catalog.find("Fi24'");
  expect(fi24 != nullptr, "Fi24' entry missing");
  expect(!maximal_divisibility_filter(Bigint("658917237384806400"), *fi24,
                                      catalog, 0u),
         "the Fi24' stabilizer order must be rejected at depth 0");

  CatalogEntry const *j1 = catalog.find("J1");
  expect(j1 != nullptr, "J1 entry missing");
  expect(maximal_divisibility_filter(44, *j1, catalog, 0u),
         "44 divides the order-660 maximal subgroup of J1");
  expect(!maximal_divisibility_filter(44, *j1, catalog, 1u),
         "44 must be rejected inside the order-660 subgroup at depth 1");

  CatalogEntry const *m11 = catalog.find("M11");
  expect(m11 != nullptr && maximal_divisibility_filter(1, *m11, catalog, 0u),
         "order 1 must always pass");

  log << "published rejections reproduced at both depths";
}

// ---- criterion 6: property suites ----

std::vector<GeneratorSet> small_group_corpus()
{
  std::vector<GeneratorSet> corpus;
  for (unsigned n = 2u; n <= 12u; ++n)
    corpus.push_back(testutil::cyclic_group(n));
  for (unsigned n = 3u; n <= 8u; ++n)
    corpus.push_back(testutil::dihedral_group(n));
  for (unsigned n = 3u; n <= 7u; ++n)
    corpus.push_back(testutil::symmetric_group(n));
  for (unsigned n = 4u; n <= 7u; ++n)
    corpus.push_back(testutil::alternating_group(n));
  corpus.push_back(make_generator_set(
    4u,
    {testutil::cycle_perm(4u, {{0u, 1u}, {2u, 3u}}),
     testutil::cycle_perm(4u, {{0u, 2u}, {1u, 3u}})},
    {"a", "b"}, "V4"));
  return corpus;
}

void property_chain_order_vs_closure(std::ostream &log)
{
  std::vector<GeneratorSet> const corpus = small_group_corpus();
  expect(corpus.size() >= 20u, "corpus must contain at least 20 groups");
  for (GeneratorSet const &gens : corpus) {
    Bigint const order = build_chain(gens).order();
    expect(order <= 5040, "corpus group order exceeds 5040");
    expect(Bigint(enumerate_elements(gens, 5040u).size()) == order,
           "chain order differs from closure count for " + gens.name);
  }
  log << corpus.size() << " groups, ";
}

void property_orbit_stabilizer(std::ostream &log, std::mt19937 &rng)
{
  std::vector<GeneratorSet> const pool = {
    testutil::symmetric_group(5u), testutil::symmetric_group(6u),
    testutil::alternating_group(6u), testutil::dihedral_group(9u),
    testutil::cyclic_group(12u),
    load_generator_file(source_path("fixtures/m11.gens"))};
  std::vector<StabilizerChain> chains;
  for (GeneratorSet const &gens : pool)
    chains.push_back(build_chain(gens));

  std::uniform_int_distribution<std::size_t> pick_group(0u, pool.size() - 1u);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t const g = pick_group(rng);
    std::uniform_int_distribution<unsigned> pick_point(0u, pool[g].degree - 1u);

    unsigned const point = pick_point(rng);
    Bigint const stab_order =
      build_chain(point_stabilizer(chains[g], point)).order();
    expect(Bigint(orbit(pool[g], point).size()) * stab_order ==
             chains[g].order(),
           "orbit-stabilizer identity fails on a point");
  }
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t const g = pick_group(rng);
    std::uniform_int_distribution<unsigned> pick_point(0u, pool[g].degree - 1u);
    std::uniform_int_distribution<int> pick_size(1, 4);

    std::set<unsigned> seed;
    int const size = pick_size(rng);
    while (static_cast<int>(seed.size()) < size)
      seed.insert(pick_point(rng));
    SetOrbitResult const result = set_orbit_and_stabilizer(
      pool[g], chains[g], {seed.begin(), seed.end()});
    expect(Bigint(result.orbit.size()) * result.stabilizer_order ==
             chains[g].order(),
           "orbit-stabilizer identity fails on a set");
  }
  log << "1000 orbit-stabilizer instances, ";
}

void property_verify_vs_brute_force(std::ostream &log, std::mt19937 &rng)
{
  auto brute_histogram = [](IncidenceStructure const &s) {
    std::map<unsigned long long, unsigned long long> histogram;
    for (unsigned i = 0u; i < s.v; ++i)
      for (unsigned j = i + 1u; j < s.v; ++j) {
        unsigned long long count = 0u;
        for (auto const &block : s.blocks)
          if (std::binary_search(block.begin(), block.end(), i) &&
              std::binary_search(block.begin(), block.end(), j))
            ++count;
        ++histogram[count];
      }
    return histogram;
  };

  std::vector<IncidenceStructure> structures;

  IncidenceStructure triples;
  triples.v = 4u;
  triples.blocks = {{0u, 1u, 2u}, {0u, 1u, 3u}, {0u, 2u, 3u}, {1u, 2u, 3u}};
  structures.push_back(triples);

  GeneratorSet const c7 = testutil::cyclic_group(7u);
  structures.push_back(develop_block(c7, build_chain(c7), {0u, 3u, 5u, 6u}));

  GeneratorSet const hs = load_generator_file(source_path("fixtures/hs176.gens"));
  structures.push_back(
    develop_block(hs, build_chain(hs),
                  load_block_file(source_path("fixtures/case31.block")).block));

  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<unsigned> pick_v(5u, 300u);
    unsigned const v = pick_v(rng);
    std::uniform_int_distribution<unsigned> pick_k(3u, std::min(v - 1u, 12u));
    unsigned const k = pick_k(rng);
    std::uniform_int_distribution<unsigned> pick_b(1u, 80u);

    std::vector<unsigned> points(v);
    for (unsigned i = 0u; i < v; ++i)
      points[i] = i;
    std::set<std::vector<unsigned>> blocks;
    unsigned const want = static_cast<unsigned>(std::min<unsigned long long>(
      pick_b(rng), testutil::capped_binomial(v, k, 80u)));
    while (blocks.size() < want) {
      std::shuffle(points.begin(), points.end(), rng);
      std::vector<unsigned> block(points.begin(), points.begin() + k);
      std::sort(block.begin(), block.end());
      blocks.insert(block);
    }
    IncidenceStructure s;
    s.v = v;
    s.blocks.assign(blocks.begin(), blocks.end());
    structures.push_back(std::move(s));
  }

  for (IncidenceStructure const &s : structures) {
    VerificationReport const report = verify_two_design(s);
    auto const expected = brute_histogram(s);
    expect(report.pair_coverage_histogram == expected,
           "histogram differs from the brute-force pair counter");
    bool const uniform =
      expected.size() == 1u && expected.begin()->first == s.declared_lambda;
    expect(report.is_two_design == uniform,
           "verdict differs from the brute-force pair counter");
  }
  log << structures.size() << " structures vs brute force, ";
}

void property_admissible_vs_naive(std::ostream &log, std::mt19937 &rng)
{
  std::uniform_int_distribution<unsigned> pick_v(3u, 10000u);
  std::uniform_int_distribution<unsigned long long> pick_m(1u, 1000000u);

  for (int trial = 0; trial < 1000; ++trial) {
    Bigint const v = pick_v(rng);
    Bigint order = v * Bigint(pick_m(rng));
    if (trial % 4 == 0)
      order += pick_m(rng) % 1000u; // not necessarily a multiple of v

    std::vector<DesignParameters> naive;
    for (Bigint k = 3; k < v; ++k) {
      Bigint const rnum = 2 * (v - 1);
      if (rnum % (k - 1) != 0)
        continue;
      Bigint const r = rnum / (k - 1);
      if ((v * r) % k != 0)
        continue;
      Bigint const b = v * r / k;
      if (b < v || order % b != 0)
        continue;
      naive.push_back(DesignParameters{v, b, r, k, 2u});
    }

    std::vector<DesignParameters> const fast = admissible_parameters(v, order);
    expect(fast.size() == naive.size(),
           "admissible_parameters row count differs from the naive loop");
    for (std::size_t i = 0u; i < fast.size(); ++i)
      expect(fast[i].v == naive[i].v && fast[i].b == naive[i].b &&
               fast[i].r == naive[i].r && fast[i].k == naive[i].k,
             "admissible_parameters row differs from the naive loop");
  }
  log << "1000 admissible-parameter draws";
}

void criterion_properties(std::ostream &log)
{
  std::mt19937 rng(20260814u);
  property_chain_order_vs_closure(log);
  property_orbit_stabilizer(log, rng);
  property_verify_vs_brute_force(log, rng);
  property_admissible_vs_naive(log, rng);
}

} // namespace

int main()
{
  std::vector<Criterion> const criteria = {
    {"candidate table reproduction", 5.0, criterion_table},
    {"176-point biplane end to end", 60.0, criterion_hs},
    {"degree-55 case eliminations", 120.0, criterion_m11_cases},
    {"orbit-sum eliminations", 600.0, criterion_orbit_sums},
    {"divisibility eliminations", 600.0, criterion_divisibility},
    {"property suites", 600.0, criterion_properties},
  };

  int failures = 0;
  for (std::size_t i = 0u; i < criteria.size(); ++i) {
    Criterion const &criterion = criteria[i];
    std::ostringstream detail;
    auto const start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      criterion.body(detail);
    } catch (std::exception const &e) {
      failure = e.what();
    }
    double const seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
    if (failure.empty() && seconds > criterion.budget_seconds)
      failure = "exceeded the " + std::to_string(criterion.budget_seconds) +
                " s budget";

    std::cout << "criterion " << i + 1u << " (" << criterion.name << "): ";
    if (failure.empty()) {
      std::cout << "PASS [" << detail.str() << "] ";
    } else {
      std::cout << "FAIL [" << failure << "] ";
      ++failures;
    }
    std::cout << std::fixed;
    std::cout.precision(2);
    std::cout << seconds << " s" << std::endl;
  }

  if (failures != 0)
    std::cout << failures << " criterion(s) failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
