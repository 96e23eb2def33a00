#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace biplane {

// Group orders reach Monster scale (~8*10^53); all order arithmetic is
// exact arbitrary precision.  Degrees stay machine integers.
using Bigint = boost::multiprecision::cpp_int;

} // namespace biplane
