#ifndef LDIAG_BIGINT_HPP
#define LDIAG_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace ldiag {

// Exact scalars.  Diagram multiplicities grow like squared Bell numbers,
// so fixed-width integers are not an option anywhere in the core.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace ldiag

#endif
