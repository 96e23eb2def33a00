#include "biplane/error.hpp"

namespace biplane {

char const *to_string(ErrorKind kind)
{
  switch (kind) {
    case ErrorKind::duplicate_image: return "DuplicateImage";
    case ErrorKind::out_of_range: return "OutOfRange";
    case ErrorKind::length_mismatch: return "LengthMismatch";
    case ErrorKind::degree_mismatch: return "DegreeMismatch";
    case ErrorKind::not_transitive: return "NotTransitive";
    case ErrorKind::degree_overflow: return "DegreeOverflow";
    case ErrorKind::bound_exceeded: return "BoundExceeded";
    case ErrorKind::orbit_limit_exceeded: return "OrbitLimitExceeded";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::non_bijection: return "NonBijection";
    case ErrorKind::non_dividing_maximal: return "NonDividingMaximal";
    case ErrorKind::unbound_name: return "UnboundName";
    case ErrorKind::domain_error: return "DomainError";
    case ErrorKind::size_limit_exceeded: return "SizeLimitExceeded";
    case ErrorKind::malformed_structure: return "MalformedStructure";
    case ErrorKind::not_developed: return "NotDeveloped";
    case ErrorKind::fixture_missing: return "FixtureMissing";
    case ErrorKind::io_error: return "IoError";
  }
  return "UnknownError";
}

} // namespace biplane
