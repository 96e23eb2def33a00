#include "biplane/catalog.hpp"

#include <fstream>
#include <sstream>

#include "biplane/error.hpp"

namespace biplane {

namespace {

[[noreturn]] void fail(ErrorKind kind, int line, std::string const &what)
{
  throw Error(kind, "line " + std::to_string(line) + ": " + what);
}

Bigint parse_order(std::string const &text, int line)
{
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorKind::syntax_error, line,
         "'" + text + "' is not a decimal order");
  Bigint value(text);
  if (value <= 0)
    fail(ErrorKind::out_of_range, line, "orders are positive");
  return value;
}

} // namespace

Catalog parse_catalog_file(std::istream &in)
{
  Catalog catalog;
  CatalogEntry *current = nullptr;

  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      current = nullptr;    // blank line separates records
      continue;
    }
    if (line[first] == '#')
      continue;

    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    if (keyword == "group") {
      CatalogEntry entry;
      std::string order_kw, order_text, out_kw, complete_kw, complete_flag;
      unsigned out = 0;
      if (!(fields >> entry.name >> order_kw >> order_text >> out_kw >> out
                   >> complete_kw >> complete_flag) ||
          order_kw != "order" || out_kw != "out" || complete_kw != "complete" ||
          (complete_flag != "yes" && complete_flag != "no"))
        fail(ErrorKind::syntax_error, number,
             "expected 'group <name> order <decimal> out <1|2> "
             "complete <yes|no>'");
      if (out != 1 && out != 2)
        fail(ErrorKind::syntax_error, number, "out must be 1 or 2");
      entry.order = parse_order(order_text, number);
      entry.out_order = out;
      entry.complete_list = complete_flag == "yes";
      if (catalog.by_name.count(entry.name))
        fail(ErrorKind::syntax_error, number,
             "duplicate entry '" + entry.name + "'");
      catalog.by_name.emplace(entry.name, catalog.entries.size());
      catalog.entries.push_back(std::move(entry));
      current = &catalog.entries.back();
    } else if (keyword == "max") {
      if (current == nullptr)
        fail(ErrorKind::syntax_error, number,
             "'max' line outside a group record");
      MaximalRecord record;
      std::string order_kw, order_text;
      if (!(fields >> record.name >> order_kw >> order_text) ||
          order_kw != "order")
        fail(ErrorKind::syntax_error, number,
             "expected 'max <name> order <decimal>'");
      record.order = parse_order(order_text, number);
      if (current->order % record.order != 0)
        throw Error(ErrorKind::non_dividing_maximal,
                    "line " + std::to_string(number) + ": order of " +
                    record.name + " does not divide the order of " +
                    current->name);
      record.index = current->order / record.order;
      current->maximal_subgroups.push_back(std::move(record));
    } else {
      fail(ErrorKind::syntax_error, number,
           "unknown keyword '" + keyword + "'");
    }
  }

  if (catalog.entries.empty())
    throw Error(ErrorKind::syntax_error, "catalog has no entries");
  return catalog;
}

Catalog load_catalog_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::io_error, "cannot open " + path);
  return parse_catalog_file(in);
}

} // namespace biplane
