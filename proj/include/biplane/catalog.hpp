#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "biplane/bigint.hpp"

namespace biplane {

struct MaximalRecord {
  std::string name;
  Bigint order;
  Bigint index;   // parent order / order, always exact
};

struct CatalogEntry {
  std::string name;
  Bigint order;
  unsigned out_order = 1;          // 1 or 2
  bool complete_list = true;       // false when maximal subgroups are only
                                   // partially known (the Monster)
  std::vector<MaximalRecord> maximal_subgroups;
};

// Parsed `.atlas` catalog with positional and by-name access.
struct Catalog {
  std::vector<CatalogEntry> entries;
  std::map<std::string, size_t> by_name;

  CatalogEntry const *find(std::string const &name) const
  {
    auto it = by_name.find(name);
    return it == by_name.end() ? nullptr : &entries[it->second];
  }
};

// `.atlas` file: records separated by blank lines; record =
//   group <name> order <decimal> out <1|2> complete <yes|no>
// followed by zero or more
//   max <name> order <decimal>
// lines.  Every maximal order must divide the entry order.
Catalog parse_catalog_file(std::istream &in);
Catalog load_catalog_file(std::string const &path);

} // namespace biplane
