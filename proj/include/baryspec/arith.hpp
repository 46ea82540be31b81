#ifndef BARYSPEC_ARITH_HPP
#define BARYSPEC_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace baryspec {

// Arbitrary-precision integers and rationals.  Subdivision counts grow like
// ((d+1)!)^m and overflow 64-bit machine words within a handful of steps;
// curvature and inductive dimension are rationals by definition.
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace baryspec

#endif
