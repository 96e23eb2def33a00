#include "biplane/cli.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "biplane/catalog.hpp"
#include "biplane/chain.hpp"
#include "biplane/design.hpp"
#include "biplane/error.hpp"
#include "biplane/gens_io.hpp"
#include "biplane/group.hpp"
#include "biplane/report.hpp"
#include "biplane/run_case.hpp"
#include "biplane/set_orbit.hpp"
#include "biplane/sieve.hpp"

namespace biplane {

namespace {

std::string format_lengths(std::vector<unsigned> const &lengths)
{
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0u; i < lengths.size();) {
    std::size_t j = i;
    while (j < lengths.size() && lengths[j] == lengths[i])
      ++j;
    if (i > 0u)
      out << ", ";
    out << lengths[i];
    if (j - i > 1u)
      out << " x " << j - i;
    i = j;
  }
  out << '}';
  return out.str();
}

void push_unique(std::vector<std::string> &warnings, std::string const &text)
{
  if (std::find(warnings.begin(), warnings.end(), text) == warnings.end())
    warnings.push_back(text);
}

std::string annotation_for_case(unsigned case_number)
{
  // two known misprints in the published table this report reproduces
  if (case_number == 21u)
    return "the published table prints b = 17711; "
           "the parameter identities give b = 1771";
  if (case_number == 61u)
    return "the published prose reads b = 147720; "
           "the published table and the parameter identities give b = 174420";
  return {};
}

} // namespace

int cmd_sieve(SieveOptions const &options, std::ostream &out, std::ostream &err)
{
  try {
    Catalog const catalog = load_catalog_file(options.catalog_path);
    std::vector<std::string> warnings;
    std::vector<CandidateCase> const cases = sieve_catalog(catalog, &warnings);

    Report report;
    if (!options.group_filter.empty()) {
      warnings.clear();
      CatalogEntry const *entry = catalog.find(options.group_filter);
      if (!entry)
        warnings.push_back("group " + options.group_filter +
                           " is not in the catalog");
      else if (!is_sieved_group(entry->name))
        warnings.push_back("group " + options.group_filter +
                           " is outside the sieved family");
      else if (!entry->complete_list)
        warnings.push_back("maximal subgroup list of " + entry->name +
                           " is incomplete; its rows are not a classification");
    }

    for (std::size_t i = 0u; i < cases.size(); ++i) {
      CandidateCase const &candidate = cases[i];
      if (!options.group_filter.empty() &&
          candidate.group != options.group_filter)
        continue;
      report.rows.push_back({static_cast<unsigned>(i + 1u), candidate.group,
                             candidate.point_stabilizer, candidate.params,
                             "Candidate", {}});
    }
    report.warnings = std::move(warnings);

    render_table(report, out);
    out << report.rows.size() << " candidate row"
        << (report.rows.size() == 1u ? "" : "s") << '\n';
    return exit_success;
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
}

int cmd_verify(VerifyOptions const &options, std::ostream &out,
               std::ostream &err)
{
  try {
    GeneratorSet const gens = load_generator_file(options.gens_path);
    BlockFixture const fixture = load_block_file(options.block_path);
    if (fixture.v != gens.degree)
      throw Error(ErrorKind::degree_mismatch,
                  "block fixture is on " + std::to_string(fixture.v) +
                  " points, group has degree " + std::to_string(gens.degree));

    StabilizerChain const chain = build_chain(gens);
    out << "group " << gens.name << " (degree " << gens.degree << ", order "
        << chain.order() << ")\n";

    out << "base block (1-based): {";
    for (std::size_t i = 0u; i < fixture.block.size(); ++i)
      out << (i ? ", " : "") << fixture.block[i] + 1u;
    out << "}\n";

    IncidenceStructure const structure =
      develop_block(gens, chain, fixture.block, options.lambda);
    out << "block orbit: " << structure.blocks.size() << " blocks\n";

    SetOrbitResult const orbit =
      set_orbit_and_stabilizer(gens, chain, fixture.block);
    out << "block stabilizer: order " << orbit.stabilizer_order
        << ", orbit lengths "
        << format_lengths(orbit_partition(orbit.stabilizer).lengths) << '\n';

    VerificationReport report = verify_two_design(structure);
    out << "pair coverage histogram: {";
    bool first = true;
    for (auto const &[count, pairs] : report.pair_coverage_histogram) {
      out << (first ? "" : ", ") << count << ": " << pairs;
      first = false;
    }
    out << "}\n";

    std::string const footer =
      "note: point labels above are 1-based; fixture files are 0-based";
    if (!report.is_two_design) {
      out << "not a 2-design: " << report.failure << '\n' << footer << '\n';
      return exit_verification_failed;
    }

    report.block_transitive = true; // by construction of develop_block
    std::ostringstream summary;
    summary << "2-(" << report.params->v << ',' << report.params->k << ','
            << report.params->lambda << "), b=" << report.params->b
            << ", r=" << report.params->r;
    if (options.check_flags) {
      report.flag_transitive = flag_transitivity(gens, chain, structure);
      report.antiflag_transitive = antiflag_transitivity(gens, chain, structure);
      summary << ", flag-transitive: "
              << (*report.flag_transitive ? "yes" : "no")
              << ", antiflag-transitive: "
              << (*report.antiflag_transitive ? "yes" : "no");
    }
    if (options.check_primitivity) {
      report.point_primitive = is_primitive(gens);
      summary << ", primitive: " << (*report.point_primitive ? "yes" : "no");
    }
    out << summary.str() << '\n' << footer << '\n';
    return exit_success;
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
}

int cmd_table1(TableOptions const &options, std::ostream &out,
               std::ostream &err)
{
  try {
    Catalog const catalog = load_catalog_file(options.catalog_path);
    std::vector<std::string> warnings;
    std::vector<CandidateCase> const cases = sieve_catalog(catalog, &warnings);

    FixtureStore store;
    if (!options.fixtures_dir.empty()) {
      store = FixtureStore(options.fixtures_dir);
      for (std::string const &warning : store.warnings())
        push_unique(warnings, warning);
    }

    Report report;
    for (std::size_t i = 0u; i < cases.size(); ++i) {
      CandidateCase const &candidate = cases[i];
      unsigned const case_number = static_cast<unsigned>(i + 1u);
      CatalogEntry const &entry = catalog.entries[candidate.entry_index];

      std::vector<std::string> filter_warnings;
      std::string verdict;
      if (!maximal_divisibility_filter(candidate.stabilizer_order, entry,
                                       catalog, 1u, &filter_warnings)) {
        verdict = "Eliminated(divisibility)";
      } else if (store.fixtures_for(case_number)) {
        verdict = to_string(run_case(candidate, case_number, store));
      } else {
        verdict = "DataRequired";
      }
      for (std::string const &warning : filter_warnings)
        push_unique(warnings, warning);

      report.rows.push_back({case_number, candidate.group,
                             candidate.point_stabilizer, candidate.params,
                             verdict, annotation_for_case(case_number)});
    }
    report.warnings = std::move(warnings);

    render_table(report, out);

    if (!options.tsv_path.empty()) {
      std::ofstream file(options.tsv_path);
      if (!file)
        throw Error(ErrorKind::io_error,
                    "cannot write to " + options.tsv_path);
      render_tsv(report, file);
    }
    return exit_success;
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
}

int cmd_stab(StabOptions const &options, std::ostream &out, std::ostream &err)
{
  try {
    GeneratorSet const gens = load_generator_file(options.gens_path);
    StabilizerChain const chain = build_chain(gens);
    SetOrbitResult const result =
      set_orbit_and_stabilizer(gens, chain, options.set_points);

    out << "set orbit size: " << result.orbit.size() << '\n';
    out << "stabilizer order: " << result.stabilizer_order << '\n';
    out << "stabilizer orbit lengths: "
        << format_lengths(orbit_partition(result.stabilizer).lengths) << '\n';
    return exit_success;
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
}

} // namespace biplane
