#include <algorithm>

#include <doctest.h>

#include "biplane/run_case.hpp"
#include "biplane/sieve.hpp"
#include "test_util.hpp"

using namespace biplane;
using testutil::source_path;

namespace {

struct Pipeline {
  Catalog catalog;
  std::vector<CandidateCase> cases;
  FixtureStore store;

  Pipeline()
    : catalog(load_catalog_file(source_path("data/atlas.dat"))),
      cases(sieve_catalog(catalog)),
      store(source_path("fixtures"))
  {}

  CaseVerdict run(unsigned case_number) const
  { return run_case(cases.at(case_number - 1u), case_number, store); }
};

bool any_note_contains(CaseVerdict const &verdict, std::string const &text)
{
  return std::any_of(verdict.notes.begin(), verdict.notes.end(),
                     [&](std::string const &note)
                     { return note.find(text) != std::string::npos; });
}

} // namespace

TEST_CASE("FixtureStore binds files to cases")
{
  FixtureStore const store(source_path("fixtures"));
  CHECK_FALSE(store.empty());
  CHECK(store.warnings().empty());

  REQUIRE(store.group("M11") != nullptr);
  CHECK(store.group("M11")->degree == 11u);
  REQUIRE(store.group("HS") != nullptr);
  CHECK(store.group("HS")->degree == 176u);
  CHECK(store.group("C7") != nullptr);
  CHECK(store.group("C4") != nullptr);
  CHECK(store.group("X9") == nullptr);

  CaseFixtures const *case3 = store.fixtures_for(3u);
  REQUIRE(case3 != nullptr);
  REQUIRE(case3->subgroups.size() == 3u);
  CHECK(case3->subgroups[0].first == "case3_c8.sub");
  CHECK(case3->subgroups[1].first == "case3_d8.sub");
  CHECK(case3->subgroups[2].first == "case3_q8.sub");

  CaseFixtures const *case31 = store.fixtures_for(31u);
  REQUIRE(case31 != nullptr);
  CHECK(case31->block_fixtures.size() == 1u);

  CaseFixtures const *case49 = store.fixtures_for(49u);
  REQUIRE(case49 != nullptr);
  CHECK(case49->orbit_lists.size() == 2u);

  CHECK(store.fixtures_for(2u) == nullptr);

  CHECK(FixtureStore().empty());
  CHECK_ERROR_KIND(FixtureStore(source_path("no_such_dir")), io_error);
}

TEST_CASE("verdicts render as table cells")
{
  CHECK(to_string({CaseVerdict::Kind::constructed, "", {}}) == "Constructed");
  CHECK(to_string({CaseVerdict::Kind::data_required, "", {}}) == "DataRequired");
  CHECK(to_string({CaseVerdict::Kind::eliminated, "orbit-sum", {}}) ==
        "Eliminated(orbit-sum)");
}

TEST_CASE("run_case reproduces the fixture-backed verdicts")
{
  Pipeline const pipeline;

  SUBCASE("a point stabilizer with orbits 1 + 10 cannot carry a 5-point block")
  {
    CaseVerdict const verdict = pipeline.run(1u);
    CHECK(verdict.kind == CaseVerdict::Kind::eliminated);
    CHECK(verdict.reason == "orbit-sum");
  }

  SUBCASE("cases without fixtures stay open")
  {
    CaseVerdict const verdict = pipeline.run(2u);
    CHECK(verdict.kind == CaseVerdict::Kind::data_required);
  }

  SUBCASE("all three order-8 stabilizer classes develop 165-block orbits, "
          "never 990")
  {
    CaseVerdict const verdict = pipeline.run(3u);
    CHECK(verdict.kind == CaseVerdict::Kind::eliminated);
    CHECK(verdict.reason == "orbit-length");
    CHECK(any_note_contains(verdict, "165"));
  }

  SUBCASE("the order-16 stabilizer class develops 165 blocks, not 495")
  {
    CaseVerdict const verdict = pipeline.run(4u);
    CHECK(verdict.kind == CaseVerdict::Kind::eliminated);
    CHECK(verdict.reason == "orbit-length");
    CHECK(any_note_contains(verdict, "165"));
  }

  SUBCASE("the order-120 class hits b = 66 blocks but fails the pair count")
  {
    CaseVerdict const verdict = pipeline.run(5u);
    CHECK(verdict.kind == CaseVerdict::Kind::eliminated);
    CHECK(verdict.reason == "two-design");
    CHECK(any_note_contains(verdict, "66"));
  }

  SUBCASE("the 176-point base block builds the biplane")
  {
    CaseVerdict const verdict = pipeline.run(31u);
    CHECK(verdict.kind == CaseVerdict::Kind::constructed);
    CHECK(any_note_contains(verdict, "1100"));
    CHECK(any_note_contains(verdict, "{8, 168}"));
  }

  SUBCASE("incomplete orbit lists eliminate when no unlisted length fits")
  {
    CaseVerdict const case49 = pipeline.run(49u);
    CHECK(case49.kind == CaseVerdict::Kind::eliminated);
    CHECK(case49.reason == "orbit-sum");

    CaseVerdict const case51 = pipeline.run(51u);
    CHECK(case51.kind == CaseVerdict::Kind::eliminated);
    CHECK(case51.reason == "orbit-sum");
  }

  SUBCASE("a representable orbit list keeps the case open")
  {
    CaseVerdict const verdict = pipeline.run(61u);
    CHECK(verdict.kind == CaseVerdict::Kind::data_required);
    CHECK(any_note_contains(verdict, "16"));
    CHECK(any_note_contains(verdict, "72"));
  }
}
