#include "biplane/run_case.hpp"

#include <algorithm>
#include <cassert>
#include <filesystem>
#include <optional>
#include <sstream>

#include "biplane/chain.hpp"
#include "biplane/design.hpp"
#include "biplane/error.hpp"
#include "biplane/factor.hpp"
#include "biplane/group.hpp"
#include "biplane/set_orbit.hpp"

namespace biplane {

namespace {

// number N from a "case<N>..." filename, 0 when the prefix is absent
unsigned case_prefix(std::string const &filename)
{
  std::string const prefix = "case";
  if (filename.compare(0u, prefix.size(), prefix) != 0)
    return 0u;
  unsigned value = 0u;
  std::size_t i = prefix.size();
  for (; i < filename.size() && filename[i] >= '0' && filename[i] <= '9'; ++i)
    value = value * 10u + static_cast<unsigned>(filename[i] - '0');
  return i == prefix.size() ? 0u : value;
}

} // namespace

FixtureStore::FixtureStore(std::string const &directory)
{
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory))
    throw Error(ErrorKind::io_error, "not a directory: " + directory);

  std::vector<fs::path> paths;
  for (auto const &entry : fs::directory_iterator(directory))
    if (entry.is_regular_file())
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());

  for (auto const &path : paths) {
    std::string const ext = path.extension().string();
    std::string const name = path.filename().string();
    try {
      if (ext == ".gens") {
        GeneratorSet gens = load_generator_file(path.string());
        std::string const declared = gens.name;
        auto const inserted = _groups.emplace(declared, std::move(gens)).second;
        if (!inserted)
          _warnings.push_back(name + ": duplicate generator set for " +
                              declared + "; keeping the first");
      } else if (ext == ".sub") {
        unsigned const n = case_prefix(name);
        if (n == 0u) {
          _warnings.push_back(name + ": subgroup fixture without case<N> prefix");
          continue;
        }
        _cases[n].subgroups.emplace_back(name, load_sub_file(path.string()));
      } else if (ext == ".block") {
        unsigned const n = case_prefix(name);
        if (n == 0u)
          continue; // standalone block fixtures bind to no case
        _cases[n].block_fixtures.emplace_back(name, load_block_file(path.string()));
      } else if (ext == ".orbits") {
        OrbitFixture fixture = load_orbits_file(path.string());
        unsigned const n = fixture.case_number;
        _cases[n].orbit_lists.emplace_back(name, std::move(fixture));
      }
    } catch (Error const &e) {
      _warnings.push_back(name + ": " + e.what());
    }
  }
}

CaseFixtures const *FixtureStore::fixtures_for(unsigned case_number) const
{
  auto const it = _cases.find(case_number);
  return it == _cases.end() ? nullptr : &it->second;
}

GeneratorSet const *FixtureStore::group(std::string const &name) const
{
  auto const it = _groups.find(name);
  return it == _groups.end() ? nullptr : &it->second;
}

std::string to_string(CaseVerdict const &verdict)
{
  switch (verdict.kind) {
  case CaseVerdict::Kind::constructed:
    return "Constructed";
  case CaseVerdict::Kind::eliminated:
    return "Eliminated(" + verdict.reason + ")";
  case CaseVerdict::Kind::data_required:
    return "DataRequired";
  }
  assert(false);
  return {};
}

namespace {

std::string format_multiset(std::vector<unsigned long long> const &values)
{
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0u; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i])
      ++j;
    if (i > 0u)
      out << ", ";
    out << values[i];
    if (j - i > 1u)
      out << " x " << j - i;
    i = j;
  }
  out << '}';
  return out.str();
}

std::string format_lengths(std::vector<unsigned> const &lengths)
{
  return format_multiset(
    std::vector<unsigned long long>(lengths.begin(), lengths.end()));
}

// the group acting on the candidate's v points: the natural action when the
// degrees agree, or the induced action on unordered pairs when C(d,2) = v
struct CaseAction {
  GeneratorSet gens;
  StabilizerChain chain;

  explicit CaseAction(GeneratorSet g)
  : gens(std::move(g)),
    chain(build_chain(gens))
  {}
};

struct FixtureOutcome {
  CaseVerdict::Kind kind = CaseVerdict::Kind::data_required;
  std::string reason;
};

class CaseRunner {
public:
  CaseRunner(CandidateCase const &candidate, FixtureStore const &store,
             CaseVerdict &verdict)
  : _candidate(candidate),
    _store(store),
    _verdict(verdict)
  {}

  FixtureOutcome run_subgroup(std::string const &label,
                              SubgroupFixture const &fixture);
  FixtureOutcome run_block(std::string const &label,
                           BlockFixture const &fixture);
  FixtureOutcome run_orbits(std::string const &label,
                            OrbitFixture const &fixture);

private:
  void note(std::string const &text)
  { _verdict.notes.push_back(text); }

  bool small_v(unsigned &v) const;
  bool small_k(unsigned long long &k) const;
  bool small_b(unsigned long long &b) const;

  CaseAction const *action(std::string const &label);
  FixtureOutcome evaluate_stabilizer(std::string const &label,
                                     GeneratorSet const &stabilizer,
                                     CaseAction const &action);

  CandidateCase const &_candidate;
  FixtureStore const &_store;
  CaseVerdict &_verdict;
  std::optional<CaseAction> _action;
  bool _action_failed = false;
};

bool CaseRunner::small_v(unsigned &v) const
{
  if (_candidate.params.v > 1000000u)
    return false;
  v = _candidate.params.v.convert_to<unsigned>();
  return true;
}

bool CaseRunner::small_k(unsigned long long &k) const
{
  if (_candidate.params.k > 1000000u)
    return false;
  k = _candidate.params.k.convert_to<unsigned long long>();
  return true;
}

bool CaseRunner::small_b(unsigned long long &b) const
{
  if (_candidate.params.b > Bigint("1000000000000000000"))
    return false;
  b = _candidate.params.b.convert_to<unsigned long long>();
  return true;
}

CaseAction const *CaseRunner::action(std::string const &label)
{
  if (_action)
    return &*_action;
  if (_action_failed)
    return nullptr;
  _action_failed = true; // until proven otherwise

  unsigned v = 0u;
  if (!small_v(v)) {
    note(label + ": point count too large to realize as a permutation action");
    return nullptr;
  }

  GeneratorSet const *natural = _store.group(_candidate.group);
  if (!natural) {
    note(label + ": no generator file for " + _candidate.group);
    return nullptr;
  }

  if (natural->degree == v) {
    _action.emplace(*natural);
  } else if (std::size_t{natural->degree} * (natural->degree - 1u) / 2u == v) {
    _action.emplace(induced_subset_action(*natural, 2u));
  } else {
    note(label + ": no degree-" + std::to_string(v) + " action derivable from " +
         _candidate.group + " of degree " + std::to_string(natural->degree));
    return nullptr;
  }

  _action_failed = false;
  return &*_action;
}

FixtureOutcome CaseRunner::evaluate_stabilizer(std::string const &label,
                                               GeneratorSet const &stabilizer,
                                               CaseAction const &action)
{
  unsigned long long k = 0u, b = 0u;
  if (!small_k(k) || !small_b(b)) {
    note(label + ": parameters too large to develop");
    return {};
  }

  OrbitPartition const partition = orbit_partition(stabilizer);
  note(label + ": orbit lengths " + format_lengths(partition.lengths));

  std::vector<unsigned long long> lengths(partition.lengths.begin(),
                                          partition.lengths.end());
  SumDecision const decision = orbit_sum_representable(lengths, k);
  if (!decision.representable) {
    note(label + ": k = " + std::to_string(k) +
         " is not a sum of stabilizer orbit lengths");
    return {CaseVerdict::Kind::eliminated, "orbit-sum"};
  }

  // all unions of distinct orbits with total size k, capped
  std::size_t const union_cap = 64u;
  std::vector<std::vector<std::size_t>> unions;
  bool truncated = false;
  std::vector<std::size_t> current;
  std::vector<unsigned long long> suffix(partition.classes.size() + 1u, 0u);
  for (std::size_t i = partition.classes.size(); i-- > 0u;)
    suffix[i] = suffix[i + 1u] + partition.lengths[i];
  auto dfs = [&](auto &&self, std::size_t from,
                 unsigned long long remaining) -> void {
    if (truncated)
      return;
    if (remaining == 0u) {
      if (unions.size() < union_cap)
        unions.push_back(current);
      else
        truncated = true;
      return;
    }
    for (std::size_t i = from; i < partition.classes.size(); ++i) {
      if (partition.lengths[i] > remaining || suffix[i] < remaining)
        continue;
      current.push_back(i);
      self(self, i + 1u, remaining - partition.lengths[i]);
      current.pop_back();
      if (truncated)
        return;
    }
  };
  dfs(dfs, 0u, k);
  if (truncated) {
    note(label + ": more than 64 candidate orbit unions; not decided");
    return {};
  }
  assert(!unions.empty());

  bool reached_design_test = false;
  for (auto const &idx : unions) {
    std::vector<unsigned> base;
    std::vector<unsigned long long> sizes;
    for (std::size_t i : idx) {
      base.insert(base.end(), partition.classes[i].begin(),
                  partition.classes[i].end());
      sizes.push_back(partition.lengths[i]);
    }
    std::sort(base.begin(), base.end());

    IncidenceStructure const structure =
      develop_block(action.gens, action.chain, base,
                    _candidate.params.lambda);
    if (structure.blocks.size() != b) {
      note(label + ": union " + format_multiset(sizes) + " develops to " +
           std::to_string(structure.blocks.size()) + " blocks, b = " +
           std::to_string(b));
      continue;
    }

    VerificationReport const report = verify_two_design(structure);
    if (report.is_two_design) {
      std::ostringstream line;
      line << label << ": union " << format_multiset(sizes)
           << " develops to a 2-(" << report.params->v << ','
           << report.params->k << ',' << report.params->lambda
           << ") design, b = " << report.params->b << ", r = "
           << report.params->r;
      note(line.str());
      return {CaseVerdict::Kind::constructed, {}};
    }

    reached_design_test = true;
    std::ostringstream line;
    line << label << ": union " << format_multiset(sizes) << " develops to "
         << b << " blocks but " << report.failure << " (coverage";
    for (auto const &[count, pairs] : report.pair_coverage_histogram)
      line << ' ' << count << ":" << pairs;
    line << ')';
    note(line.str());
  }

  return {CaseVerdict::Kind::eliminated,
          reached_design_test ? "two-design" : "orbit-length"};
}

FixtureOutcome CaseRunner::run_subgroup(std::string const &label,
                                        SubgroupFixture const &fixture)
{
  GeneratorSet const *natural = _store.group(fixture.group_name);
  if (!natural) {
    note(label + ": no generator file for " + fixture.group_name);
    return {};
  }

  CaseAction const *act = action(label);
  if (!act)
    return {};

  GeneratorSet stabilizer = subgroup_generators(fixture, *natural);
  if (natural->degree != act->gens.degree)
    stabilizer = induced_subset_action(stabilizer, 2u);

  note(label + ": subgroup " + fixture.name + " of " + fixture.group_name +
       ", order " + build_chain(stabilizer).order().str());
  return evaluate_stabilizer(label, stabilizer, *act);
}

FixtureOutcome CaseRunner::run_block(std::string const &label,
                                     BlockFixture const &fixture)
{
  unsigned v = 0u;
  if (!small_v(v) || fixture.v != v) {
    note(label + ": block fixture degree differs from the case");
    return {};
  }

  CaseAction const *act = action(label);
  if (!act)
    return {};

  SetOrbitResult result =
    set_orbit_and_stabilizer(act->gens, act->chain, fixture.block);
  note(label + ": base-block stabilizer order " +
       result.stabilizer_order.str());
  return evaluate_stabilizer(label, result.stabilizer, *act);
}

FixtureOutcome CaseRunner::run_orbits(std::string const &label,
                                      OrbitFixture const &fixture)
{
  unsigned long long k = 0u;
  if (!small_k(k)) {
    note(label + ": k too large for the orbit-sum test");
    return {};
  }

  Bigint const order(fixture.order);
  std::vector<unsigned long long> lengths(fixture.lengths.begin(),
                                          fixture.lengths.end());
  std::sort(lengths.begin(), lengths.end());
  for (unsigned long long l : lengths) {
    if (l == 0u || order % l != 0) {
      note(label + ": listed length " + std::to_string(l) +
           " does not divide the subgroup order; fixture unusable");
      return {};
    }
  }

  note(label + ": " + fixture.subgroup_name + " <= " + fixture.group_name +
       ", order " + fixture.order + ", smallest orbit lengths " +
       format_multiset(lengths) + (fixture.complete ? "" : " (incomplete)"));

  SumDecision const decision = orbit_sum_representable(lengths, k);
  if (decision.representable) {
    std::ostringstream line;
    line << label << ": k = " << k << " = ";
    for (std::size_t i = 0u; i < decision.witnesses[0].size(); ++i)
      line << (i ? " + " : "") << decision.witnesses[0][i];
    line << "; no permutation data to develop the union";
    note(line.str());
    return {};
  }

  if (!fixture.complete) {
    // The fixture lists only the smallest orbit lengths.  An unlisted orbit
    // is at least as long as the largest listed one and its length divides
    // the subgroup order, so check that no sum of listed lengths plus any
    // combination of such candidate lengths can reach k either.
    unsigned long long const longest = lengths.back();
    std::vector<unsigned long long> candidates;
    for (Bigint const &d : divisors(order))
      if (d >= longest && d <= k)
        candidates.push_back(d.convert_to<unsigned long long>());

    std::vector<bool> listed(k + 1u, false);
    listed[0] = true;
    for (unsigned long long l : lengths)
      if (l <= k)
        for (unsigned long long s = k; s >= l; --s)
          if (listed[s - l])
            listed[s] = true;

    std::vector<bool> unlisted(k + 1u, false);
    unlisted[0] = true;
    for (unsigned long long c : candidates)
      for (unsigned long long s = c; s <= k; ++s)
        if (unlisted[s - c])
          unlisted[s] = true;

    for (unsigned long long s = 0u; s < k; ++s) {
      if (listed[s] && unlisted[k - s]) {
        note(label + ": k = " + std::to_string(k) +
             " could be completed by unlisted orbits; not decided");
        return {};
      }
    }
    note(label + ": k = " + std::to_string(k) +
         " is unreachable even allowing unlisted orbit lengths (each >= " +
         std::to_string(longest) + " and dividing the order)");
  } else {
    note(label + ": k = " + std::to_string(k) +
         " is not a sum of stabilizer orbit lengths");
  }

  return {CaseVerdict::Kind::eliminated, "orbit-sum"};
}

} // namespace

CaseVerdict run_case(CandidateCase const &candidate,
                     unsigned case_number,
                     FixtureStore const &store)
{
  CaseVerdict verdict;
  CaseFixtures const *fixtures = store.fixtures_for(case_number);
  if (!fixtures) {
    verdict.notes.push_back("no fixtures for this case");
    return verdict;
  }

  CaseRunner runner(candidate, store, verdict);
  std::vector<FixtureOutcome> outcomes;
  auto guarded = [&](std::string const &label, auto &&evaluate) {
    try {
      outcomes.push_back(evaluate());
    } catch (Error const &e) {
      verdict.notes.push_back(label + ": " + e.what());
      outcomes.push_back({});
    }
  };

  for (auto const &[label, fixture] : fixtures->subgroups)
    guarded(label, [&] { return runner.run_subgroup(label, fixture); });
  for (auto const &[label, fixture] : fixtures->block_fixtures)
    guarded(label, [&] { return runner.run_block(label, fixture); });
  for (auto const &[label, fixture] : fixtures->orbit_lists)
    guarded(label, [&] { return runner.run_orbits(label, fixture); });

  if (outcomes.empty()) {
    verdict.notes.push_back("no usable fixtures for this case");
    return verdict;
  }

  bool any_open = false;
  std::vector<std::string> reasons;
  for (FixtureOutcome const &outcome : outcomes) {
    switch (outcome.kind) {
    case CaseVerdict::Kind::constructed:
      verdict.kind = CaseVerdict::Kind::constructed;
      return verdict;
    case CaseVerdict::Kind::data_required:
      any_open = true;
      break;
    case CaseVerdict::Kind::eliminated:
      if (std::find(reasons.begin(), reasons.end(), outcome.reason) ==
          reasons.end())
        reasons.push_back(outcome.reason);
      break;
    }
  }

  // every candidate stabilizer must be ruled out before the case is
  if (!any_open && !reasons.empty()) {
    verdict.kind = CaseVerdict::Kind::eliminated;
    std::string joined;
    for (std::string const &reason : reasons)
      joined += (joined.empty() ? "" : ",") + reason;
    verdict.reason = joined;
  }

  return verdict;
}

} // namespace biplane
