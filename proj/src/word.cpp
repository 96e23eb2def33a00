#include "biplane/word.hpp"

#include <cctype>
#include <cstdlib>

namespace biplane {

bool operator==(WordTerm const &a, WordTerm const &b)
{
  if (a.name != b.name || a.exponent != b.exponent)
    return false;
  if (static_cast<bool>(a.group) != static_cast<bool>(b.group))
    return false;
  return !a.group || *a.group == *b.group;
}

bool operator==(GroupWord const &a, GroupWord const &b)
{
  return a.terms == b.terms;
}

namespace {

class WordParser {
public:
  explicit WordParser(std::string const &text) : _text(text) {}

  GroupWord parse()
  {
    GroupWord word = parse_word();
    skip_space();
    if (_pos != _text.size())
      fail("unexpected trailing input");
    return word;
  }

private:
  [[noreturn]] void fail(std::string const &what) const
  {
    throw Error(ErrorKind::syntax_error,
                what + " at position " + std::to_string(_pos));
  }

  void skip_space()
  {
    while (_pos < _text.size() &&
           std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  bool eat(char c)
  {
    skip_space();
    if (_pos < _text.size() && _text[_pos] == c) {
      ++_pos;
      return true;
    }
    return false;
  }

  GroupWord parse_word()
  {
    GroupWord word;
    word.terms.push_back(parse_term());
    while (eat('*'))
      word.terms.push_back(parse_term());
    return word;
  }

  WordTerm parse_term()
  {
    WordTerm term;
    skip_space();
    if (_pos >= _text.size())
      fail("expected a generator name or '('");
    char c = _text[_pos];
    if (c == '(') {
      ++_pos;
      term.group = std::make_shared<GroupWord>(parse_word());
      if (!eat(')'))
        fail("expected ')'");
    } else if (c >= 'a' && c <= 'z') {
      size_t start = _pos;
      ++_pos;
      while (_pos < _text.size() &&
             ((_text[_pos] >= 'a' && _text[_pos] <= 'z') ||
              (_text[_pos] >= '0' && _text[_pos] <= '9')))
        ++_pos;
      term.name = _text.substr(start, _pos - start);
    } else {
      fail("expected a generator name or '('");
    }
    if (eat('^'))
      term.exponent = parse_exponent();
    return term;
  }

  long long parse_exponent()
  {
    skip_space();
    size_t start = _pos;
    if (_pos < _text.size() && (_text[_pos] == '-' || _text[_pos] == '+'))
      ++_pos;
    size_t digits = _pos;
    while (_pos < _text.size() &&
           std::isdigit(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
    if (_pos == digits)
      fail("expected an integer exponent");
    return std::stoll(_text.substr(start, _pos - start));
  }

  std::string const &_text;
  size_t _pos = 0;
};

void print_into(GroupWord const &word, std::string &out)
{
  for (size_t i = 0; i < word.terms.size(); ++i) {
    if (i > 0)
      out += '*';
    WordTerm const &term = word.terms[i];
    if (term.group) {
      out += '(';
      print_into(*term.group, out);
      out += ')';
    } else {
      out += term.name;
    }
    if (term.exponent != 1) {
      out += '^';
      out += std::to_string(term.exponent);
    }
  }
}

Perm power(Perm base, long long exponent)
{
  unsigned degree = base.degree();
  if (exponent < 0) {
    base = inverse(base);
    exponent = -exponent;
  }
  Perm result(degree);
  while (exponent > 0) {
    if (exponent & 1)
      result = compose(result, base);
    base = compose(base, base);
    exponent >>= 1;
  }
  return result;
}

} // namespace

GroupWord parse_word(std::string const &text)
{
  return WordParser(text).parse();
}

std::string print_word(GroupWord const &word)
{
  std::string out;
  print_into(word, out);
  return out;
}

Perm evaluate_word(GroupWord const &word, GeneratorSet const &gens)
{
  Perm result(gens.degree);
  for (WordTerm const &term : word.terms) {
    Perm factor(gens.degree);
    if (term.group) {
      factor = evaluate_word(*term.group, gens);
    } else {
      bool found = false;
      for (size_t i = 0; i < gens.names.size(); ++i) {
        if (gens.names[i] == term.name) {
          factor = gens.generators[i];
          found = true;
          break;
        }
      }
      if (!found)
        throw Error(ErrorKind::unbound_name,
                    "generator '" + term.name + "' is not declared");
    }
    result = compose(result, power(factor, term.exponent));
  }
  return result;
}

} // namespace biplane
