#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace burn {

// Volumes and word counts are kept exact end to end; floating point only
// appears where a bound is stated over the reals.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace burn
