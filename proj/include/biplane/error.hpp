#pragma once

#include <stdexcept>
#include <string>

namespace biplane {

enum class ErrorKind {
  duplicate_image,
  out_of_range,
  length_mismatch,
  degree_mismatch,
  not_transitive,
  degree_overflow,
  bound_exceeded,
  orbit_limit_exceeded,
  syntax_error,
  non_bijection,
  non_dividing_maximal,
  unbound_name,
  domain_error,
  size_limit_exceeded,
  malformed_structure,
  not_developed,
  fixture_missing,
  io_error,
};

char const *to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string const &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      _kind(kind)
  {}

  ErrorKind kind() const { return _kind; }

private:
  ErrorKind _kind;
};

} // namespace biplane
