#ifndef CCX_RATIONAL_HPP
#define CCX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ccx {

// Exact scalars. cpp_rational keeps gcd(num, den) = 1 and den >= 1, which is
// exactly the canonical form the rest of the code relies on. No floating
// point appears anywhere in the project.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational rational(long long num, long long den = 1) {
    return Rational(Integer(num)) / Rational(Integer(den));
}

} // namespace ccx

#endif
