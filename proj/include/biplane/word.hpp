#pragma once

#include <memory>
#include <string>
#include <vector>

#include "biplane/perm.hpp"

namespace biplane {

// Abstract syntax for words in named generators:
//   word := term { "*" term }
//   term := atom [ "^" signed-integer ]
//   atom := name | "(" word ")"
// Names match [a-z][a-z0-9]*; whitespace is insignificant.
struct GroupWord;

struct WordTerm {
  std::string name;                  // set iff the atom is a generator name
  std::shared_ptr<GroupWord> group;  // set iff the atom is parenthesized
  long long exponent = 1;
};

struct GroupWord {
  std::vector<WordTerm> terms;
};

bool operator==(GroupWord const &a, GroupWord const &b);
bool operator==(WordTerm const &a, WordTerm const &b);

// Throws SyntaxError with the offending character position (0-based).
GroupWord parse_word(std::string const &text);

// Canonical form: exponent 1 omitted, "*" separators, no whitespace.
// parse_word(print_word(w)) == w.
std::string print_word(GroupWord const &word);

// Left-to-right product of factor powers; names resolve through
// gens.names.  Throws UnboundName for unknown generator names.
Perm evaluate_word(GroupWord const &word, GeneratorSet const &gens);

} // namespace biplane
