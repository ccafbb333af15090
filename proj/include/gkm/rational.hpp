#ifndef GKM_RATIONAL_HPP
#define GKM_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gkm {

// Exact arithmetic scalars. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& r);

// Accepts "p" or "p/q" with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view s);

}  // namespace gkm

#endif
