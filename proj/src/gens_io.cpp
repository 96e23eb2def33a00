#include "biplane/gens_io.hpp"

#include <fstream>
#include <sstream>

namespace biplane {

namespace {

// Lines of a fixture file with comments and blanks stripped, paired with
// their 1-based line numbers for diagnostics.
std::vector<std::pair<int, std::string>> content_lines(std::istream &in)
{
  std::vector<std::pair<int, std::string>> lines;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#')
      continue;
    lines.emplace_back(number, line);
  }
  return lines;
}

[[noreturn]] void fail(ErrorKind kind, int line, std::string const &what)
{
  throw Error(kind, "line " + std::to_string(line) + ": " + what);
}

std::ifstream open_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::io_error, "cannot open " + path);
  return in;
}

} // namespace

GeneratorSet parse_generator_file(std::istream &in)
{
  auto lines = content_lines(in);
  if (lines.size() < 3)
    throw Error(ErrorKind::syntax_error,
                "a .gens file needs degree, name and generator lines");

  unsigned degree = 0;
  std::string group_name;
  std::vector<Perm> generators;
  std::vector<std::string> names;

  for (size_t i = 0; i < lines.size(); ++i) {
    auto const &[number, line] = lines[i];
    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    if (i == 0) {
      if (keyword != "degree" || !(fields >> degree) || degree == 0)
        fail(ErrorKind::syntax_error, number, "expected 'degree <n>'");
    } else if (i == 1) {
      if (keyword != "name" || !(fields >> group_name))
        fail(ErrorKind::syntax_error, number, "expected 'name <identifier>'");
    } else {
      if (keyword != "gen")
        fail(ErrorKind::syntax_error, number,
             "expected 'gen <name> <images...>'");
      std::string gen_name;
      if (!(fields >> gen_name))
        fail(ErrorKind::syntax_error, number, "generator name missing");
      std::vector<unsigned> images;
      long long value;
      while (fields >> value) {
        if (value < 0)
          fail(ErrorKind::out_of_range, number, "negative image");
        images.push_back(static_cast<unsigned>(value));
      }
      if (!fields.eof())
        fail(ErrorKind::syntax_error, number, "malformed image list");
      if (images.size() != degree)
        fail(ErrorKind::degree_mismatch, number,
             "expected " + std::to_string(degree) + " images, got " +
             std::to_string(images.size()));
      try {
        generators.push_back(from_images(degree, images));
      } catch (Error const &e) {
        fail(ErrorKind::non_bijection, number, e.what());
      }
      names.push_back(gen_name);
    }
  }

  if (generators.empty())
    throw Error(ErrorKind::syntax_error, "no generator lines");
  return make_generator_set(degree, std::move(generators), std::move(names),
                            std::move(group_name));
}

GeneratorSet load_generator_file(std::string const &path)
{
  std::ifstream in = open_file(path);
  return parse_generator_file(in);
}

SubgroupFixture parse_sub_file(std::istream &in)
{
  auto lines = content_lines(in);
  if (lines.empty())
    throw Error(ErrorKind::syntax_error, "empty .sub file");

  SubgroupFixture fixture;
  {
    auto const &[number, line] = lines[0];
    std::istringstream fields(line);
    std::string keyword, of;
    if (!(fields >> keyword >> fixture.name >> of >> fixture.group_name) ||
        keyword != "subgroup" || of != "of")
      fail(ErrorKind::syntax_error, number,
           "expected 'subgroup <name> of <groupname>'");
  }
  for (size_t i = 1; i < lines.size(); ++i) {
    auto const &[number, line] = lines[i];
    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    if (keyword != "word")
      fail(ErrorKind::syntax_error, number, "expected 'word <word-text>'");
    std::string text;
    std::getline(fields, text);
    try {
      fixture.words.push_back(parse_word(text));
    } catch (Error const &e) {
      fail(ErrorKind::syntax_error, number, e.what());
    }
  }
  if (fixture.words.empty())
    throw Error(ErrorKind::syntax_error, "no word lines in .sub file");
  return fixture;
}

SubgroupFixture load_sub_file(std::string const &path)
{
  std::ifstream in = open_file(path);
  return parse_sub_file(in);
}

BlockFixture parse_block_file(std::istream &in)
{
  auto lines = content_lines(in);
  if (lines.size() != 2)
    throw Error(ErrorKind::syntax_error,
                "a .block file has exactly a 'v' line and a 'block' line");

  BlockFixture fixture;
  {
    auto const &[number, line] = lines[0];
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword >> fixture.v) || keyword != "v" || fixture.v == 0)
      fail(ErrorKind::syntax_error, number, "expected 'v <n>'");
  }
  {
    auto const &[number, line] = lines[1];
    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    if (keyword != "block")
      fail(ErrorKind::syntax_error, number, "expected 'block <points...>'");
    long long value;
    while (fields >> value) {
      if (value < 0 || value >= static_cast<long long>(fixture.v))
        fail(ErrorKind::out_of_range, number,
             "point " + std::to_string(value) + " outside 0.." +
             std::to_string(fixture.v - 1));
      fixture.block.push_back(static_cast<unsigned>(value));
    }
    if (!fields.eof())
      fail(ErrorKind::syntax_error, number, "malformed point list");
    for (size_t i = 1; i < fixture.block.size(); ++i)
      if (fixture.block[i - 1] >= fixture.block[i])
        fail(ErrorKind::syntax_error, number,
             "block points must be strictly ascending");
  }
  if (fixture.block.empty())
    throw Error(ErrorKind::syntax_error, "empty block");
  return fixture;
}

BlockFixture load_block_file(std::string const &path)
{
  std::ifstream in = open_file(path);
  return parse_block_file(in);
}

OrbitFixture parse_orbits_file(std::istream &in)
{
  auto lines = content_lines(in);
  OrbitFixture fixture;
  bool saw_case = false, saw_group = false, saw_subgroup = false,
       saw_order = false, saw_lengths = false, saw_complete = false;

  for (auto const &[number, line] : lines) {
    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    if (keyword == "case") {
      if (!(fields >> fixture.case_number))
        fail(ErrorKind::syntax_error, number, "expected 'case <n>'");
      saw_case = true;
    } else if (keyword == "group") {
      if (!(fields >> fixture.group_name))
        fail(ErrorKind::syntax_error, number, "expected 'group <name>'");
      saw_group = true;
    } else if (keyword == "subgroup") {
      if (!(fields >> fixture.subgroup_name))
        fail(ErrorKind::syntax_error, number, "expected 'subgroup <name>'");
      saw_subgroup = true;
    } else if (keyword == "order") {
      if (!(fields >> fixture.order) ||
          fixture.order.find_first_not_of("0123456789") != std::string::npos)
        fail(ErrorKind::syntax_error, number, "expected 'order <decimal>'");
      saw_order = true;
    } else if (keyword == "lengths") {
      long long value;
      while (fields >> value) {
        if (value <= 0)
          fail(ErrorKind::out_of_range, number, "orbit lengths are positive");
        fixture.lengths.push_back(static_cast<unsigned>(value));
      }
      if (!fields.eof() || fixture.lengths.empty())
        fail(ErrorKind::syntax_error, number, "expected 'lengths <l...>'");
      saw_lengths = true;
    } else if (keyword == "complete") {
      std::string flag;
      if (!(fields >> flag) || (flag != "yes" && flag != "no"))
        fail(ErrorKind::syntax_error, number, "expected 'complete <yes|no>'");
      fixture.complete = flag == "yes";
      saw_complete = true;
    } else {
      fail(ErrorKind::syntax_error, number, "unknown keyword '" + keyword + "'");
    }
  }

  if (!(saw_case && saw_group && saw_subgroup && saw_order && saw_lengths &&
        saw_complete))
    throw Error(ErrorKind::syntax_error,
                "a .orbits file needs case, group, subgroup, order, lengths "
                "and complete lines");
  return fixture;
}

OrbitFixture load_orbits_file(std::string const &path)
{
  std::ifstream in = open_file(path);
  return parse_orbits_file(in);
}

GeneratorSet subgroup_generators(SubgroupFixture const &fixture,
                                 GeneratorSet const &group)
{
  std::vector<Perm> generators;
  for (GroupWord const &word : fixture.words)
    generators.push_back(evaluate_word(word, group));
  return make_generator_set(group.degree, std::move(generators), {},
                            fixture.name);
}

} // namespace biplane
