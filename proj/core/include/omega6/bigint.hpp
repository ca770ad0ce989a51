#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace omega6 {

// All committed arithmetic is exact. Int for matrix entries, determinants
// and invariant values; Rat only inside the signature diagonalization.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace omega6
